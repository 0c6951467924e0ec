use serde::Serialize;

/// Counters gathered during one solve.
#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct SolverStats {
    pub conflicts: u64,
    pub decisions: u64,
    pub propagations: u64,
    pub restarts: u64,
    /// Conflicts on which the DIP search ran.
    pub dip_checks: u64,
    /// Conflicts whose top-level graph had at least one DIP.
    pub conflicts_with_dip: u64,
    /// Conflicts learned through a DIP instead of the 1UIP lemma.
    pub dip_learned: u64,
    /// Fresh extension variables introduced.
    pub dips_introduced: u64,
    /// DIP conflicts that fell back to 1UIP because the existing `z` was false.
    pub dip_fallbacks: u64,
    pub ext_vars_live: u64,
    pub ext_vars_deleted: u64,
    pub ext_deletion_rounds: u64,
    pub ext_decisions: u64,
    pub replaced_lemmas: u64,
    pub learnt_clauses: u64,
    pub deleted_clauses: u64,
    pub proof_adds: u64,
    pub proof_deletes: u64,
    pub dip_disabled_at: Option<u64>,
    pub dip_time_secs: f64,
    pub solve_time_secs: f64,
    pub dip_time_fraction: f64,
}

impl SolverStats {
    /// Share of checked conflicts that had at least one DIP.
    pub fn dip_conflict_fraction(&self) -> f64 {
        if self.dip_checks == 0 {
            0.0
        } else {
            self.conflicts_with_dip as f64 / self.dip_checks as f64
        }
    }

    /// Percentage of decisions made on extension variables.
    pub fn ext_decision_percent(&self) -> f64 {
        if self.decisions == 0 {
            0.0
        } else {
            100.0 * self.ext_decisions as f64 / self.decisions as f64
        }
    }
}
