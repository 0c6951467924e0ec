//! Extended-resolution clause learning from dual implication points.
//!
//! For a DIP `{a, b}` of the conflict graph between the first UIP `f` and the
//! conflict, a fresh `z <-> a & b` is defined and two lemmas are learned:
//! the pre-DIP clause `!f | !C | z` and the post-DIP clause `!z | !D`, where
//! `C` and `D` are the earlier-level literals feeding the graph before and
//! after the pair.

mod replace;
mod select;
mod store;

use std::time::Instant;

pub use replace::{try_replace_in_lemma, ReplaceLimits};
pub use select::{filter_dip, select_dip, ActivityWindow, DipOccurrenceTable, DipQuality};
pub use store::{canonical_pair, ExtDef, ExtDefStore};

use crate::analyze::{ConflictGraph, LearnedClause};
use crate::formula::{Lit, Var};
use crate::search::{ClauseKind, ClauseRef, ConflictTrace, DipTrace, Solver};
use crate::stats::SolverStats;
use crate::tvd::{enumerate_pairs, find_all_tvds_into, TvdResult, TvdWorkspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DipChoice {
    Closest,
    Middle,
    Random,
    Heuristic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DipFilter {
    Occ,
    Glue,
    Act,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DipClauses {
    /// Post-DIP clause only.
    One,
    /// Pre- and post-DIP clauses.
    Two,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DipConfig {
    pub enabled: bool,
    pub choice: DipChoice,
    pub filter: DipFilter,
    pub min_occ: u32,
    pub clauses: DipClauses,
    /// Conflicts between extension-variable deletion rounds.
    pub ext_delete_interval: u64,
    /// Percentage of deletable extension variables removed per round.
    pub ext_delete_fraction: u32,
    /// Conflict count at which the extension-decision share is checked.
    pub disable_window: u64,
    /// Percent of decisions on extension variables below which DIP learning stops.
    pub disable_threshold: f64,
    pub seed: u64,
    /// Rewrite 1UIP lemmas with existing extension variables.
    pub replace: bool,
    pub replace_limits: ReplaceLimits,
    /// Also learn `!a | !b` when the post-DIP clause is the unit `!z`.
    pub learn_binary: bool,
}

impl Default for DipConfig {
    fn default() -> Self {
        DipConfig::baseline()
    }
}

impl DipConfig {
    /// Middle choice, occurrence filter with threshold 20, both lemmas.
    pub fn baseline() -> Self {
        DipConfig {
            enabled: true,
            choice: DipChoice::Middle,
            filter: DipFilter::Occ,
            min_occ: 20,
            clauses: DipClauses::Two,
            ext_delete_interval: 1000,
            ext_delete_fraction: 50,
            disable_window: 100_000,
            disable_threshold: 3.0,
            seed: 0,
            replace: true,
            replace_limits: ReplaceLimits::default(),
            learn_binary: false,
        }
    }

    pub fn off() -> Self {
        DipConfig {
            enabled: false,
            ..DipConfig::baseline()
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.min_occ == 0 {
            return Err("min_occ must be positive".into());
        }
        if self.ext_delete_interval == 0 || self.disable_window == 0 {
            return Err("deletion interval and disable window must be positive".into());
        }
        if self.ext_delete_fraction == 0 || self.ext_delete_fraction > 100 {
            return Err("deletion fraction must lie in (0,100]".into());
        }
        if !(self.disable_threshold > 0.0 && self.disable_threshold <= 100.0) {
            return Err("disable threshold must lie in (0,100]".into());
        }
        Ok(())
    }
}

/// Per-solver state of the extension layer.
#[derive(Clone, Debug)]
pub(crate) struct ErclState {
    pub enabled: bool,
    pub store: ExtDefStore,
    pub occ: DipOccurrenceTable,
    pub window: ActivityWindow,
    pub next_delete: u64,
    pub delete_pending: bool,
    pub graph: ConflictGraph,
    pub tvd_ws: TvdWorkspace,
    pub tvds: TvdResult,
}

impl ErclState {
    pub fn new(cfg: &DipConfig) -> Self {
        ErclState {
            enabled: cfg.enabled,
            store: ExtDefStore::default(),
            occ: DipOccurrenceTable::default(),
            window: ActivityWindow::default(),
            next_delete: cfg.ext_delete_interval,
            delete_pending: false,
            graph: ConflictGraph::default(),
            tvd_ws: TvdWorkspace::default(),
            tvds: TvdResult::default(),
        }
    }
}

/// The split of the conflict graph induced by one DIP.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DipAnalysis {
    pub f: Lit,
    /// DIP literals in trail order.
    pub dip: (Lit, Lit),
    pub nodes: (usize, usize),
    /// Earlier-level literals feeding the graph up to the pair, in trail order.
    pub c: Vec<Lit>,
    /// Earlier-level literals feeding the graph after the pair, in trail order.
    pub d: Vec<Lit>,
    pub level_c: u32,
    pub level_d: u32,
}

impl DipAnalysis {
    /// `level(l)` gives the decision level of an earlier-level literal and
    /// `pos(l)` its trail position.
    pub fn compute(
        g: &ConflictGraph,
        a: usize,
        b: usize,
        level: impl Fn(Lit) -> u32,
        pos: impl Fn(Lit) -> usize,
    ) -> Self {
        let p = &g.problem;
        let n = g.num_nodes();
        let s = p.s();
        let topo = p.topo_order();
        // Ancestors of the pair, excluding s.
        let mut before = vec![false; n];
        before[a] = true;
        before[b] = true;
        for &v in topo.iter().rev() {
            if v != s && !before[v] && p.successors(v).any(|w| before[w]) {
                before[v] = true;
            }
        }
        // Everything reachable from s while avoiding the pair.
        let mut reach = vec![false; n];
        reach[s] = true;
        for &u in topo {
            if reach[u] {
                for v in p.successors(u) {
                    if v != a && v != b {
                        reach[v] = true;
                    }
                }
            }
        }
        let collect = |pick: &dyn Fn(usize) -> bool| -> Vec<Lit> {
            let mut out: Vec<Lit> = (0..n)
                .filter(|&v| pick(v))
                .flat_map(|v| g.side_inputs(v).iter().copied())
                .collect();
            out.sort_unstable_by_key(|&l| pos(l));
            out.dedup();
            out
        };
        let c = collect(&|v| before[v]);
        let d = collect(&|v| !reach[v] && v != a && v != b);
        let level_c = c.iter().map(|&l| level(l)).max().unwrap_or(0);
        let level_d = d.iter().map(|&l| level(l)).max().unwrap_or(0);
        let (la, lb) = (g.lits[a].expect("internal node"), g.lits[b].expect("internal node"));
        let dip = if g.trail_pos[a] <= g.trail_pos[b] {
            (la, lb)
        } else {
            (lb, la)
        };
        DipAnalysis {
            f: g.lits[s].expect("source literal"),
            dip,
            nodes: (a.min(b), a.max(b)),
            c,
            d,
            level_c,
            level_d,
        }
    }

    pub fn pair(&self) -> (Lit, Lit) {
        canonical_pair(self.dip.0, self.dip.1)
    }
}

/// `!f | !C | z`.
pub fn build_pre_dip_clause(an: &DipAnalysis, z: Var) -> Vec<Lit> {
    let mut out = Vec::with_capacity(an.c.len() + 2);
    out.push(!an.f);
    out.extend(an.c.iter().map(|&l| !l));
    out.push(z.pos());
    out
}

/// `!z | !D`.
pub fn build_post_dip_clause(an: &DipAnalysis, z: Var) -> Vec<Lit> {
    let mut out = Vec::with_capacity(an.d.len() + 1);
    out.push(!z.pos());
    out.extend(an.d.iter().map(|&l| !l));
    out
}

/// Level the solver returns to after DIP learning: the highest level in `D`.
pub fn dip_backjump(an: &DipAnalysis) -> u32 {
    an.level_d
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredefinedZ {
    Proceed,
    Fallback1Uip,
}

/// Whether learning may go ahead with an already defined `z`.
pub fn handle_predefined_z(solver: &Solver, z: Var) -> PredefinedZ {
    match solver.value(z.pos()) {
        None => PredefinedZ::Proceed,
        Some(_) if solver.level_of(z) == solver.decision_level() => PredefinedZ::Proceed,
        Some(false) => PredefinedZ::Fallback1Uip,
        Some(true) => {
            debug_assert!(false, "extension variable true below the conflict level");
            PredefinedZ::Fallback1Uip
        }
    }
}

/// Disables DIP learning for good once the window is reached with too few
/// extension decisions. Returns whether learning stays enabled.
pub fn update_disable_monitor(stats: &SolverStats, cfg: &DipConfig) -> bool {
    !(stats.conflicts == cfg.disable_window && stats.ext_decision_percent() < cfg.disable_threshold)
}

fn distinct_levels(lits: &[Lit], level: impl Fn(Lit) -> u32) -> u32 {
    let mut v: Vec<u32> = lits.iter().map(|&l| level(l)).collect();
    v.sort_unstable();
    v.dedup();
    v.len() as u32
}

impl Solver {
    /// Returns the variable defined as `l1 & l2`, creating it (with its
    /// definition clauses and proof lines) if needed.
    pub fn get_or_create_extvar(&mut self, l1: Lit, l2: Lit) -> (Var, bool) {
        let (l1, l2) = canonical_pair(l1, l2);
        if let Some(z) = self.ext.store.lookup(l1, l2) {
            return (z, false);
        }
        let z = self.new_var(true);
        self.log_extension(z, l1, l2);
        let zp = z.pos();
        let c1 = self.add_clause_internal(vec![!zp, l1], ClauseKind::Definition, 2);
        let c2 = self.add_clause_internal(vec![!zp, l2], ClauseKind::Definition, 2);
        let c3 = self.add_clause_internal(vec![zp, !l1, !l2], ClauseKind::Definition, 3);
        self.ext.store.insert(ExtDef {
            z,
            l1,
            l2,
            def_clauses: [c1, c2, c3],
        });
        self.stats.dips_introduced += 1;
        (z, true)
    }

    pub fn ext_store(&self) -> &ExtDefStore {
        &self.ext.store
    }

    /// Runs the DIP pipeline on a conflict. Returns false when the 1UIP lemma
    /// should be learned instead.
    pub(crate) fn try_dip_learning(
        &mut self,
        confl: ClauseRef,
        learned: &LearnedClause,
        trace: Option<&mut ConflictTrace>,
    ) -> bool {
        let t0 = Instant::now();
        let done = self.dip_attempt(confl, learned, trace);
        self.dip_time += t0.elapsed();
        done
    }

    fn dip_attempt(&mut self, confl: ClauseRef, learned: &LearnedClause, trace: Option<&mut ConflictTrace>) -> bool {
        let mut g = std::mem::take(&mut self.ext.graph);
        let mut res = std::mem::take(&mut self.ext.tvds);
        self.extract_graph_into(confl, learned, &mut g);
        find_all_tvds_into(&g.problem, &mut self.ext.tvd_ws, &mut res);
        let done = self.dip_learn(&g, &res, trace);
        self.ext.graph = g;
        self.ext.tvds = res;
        done
    }

    fn dip_learn(&mut self, g: &ConflictGraph, res: &TvdResult, trace: Option<&mut ConflictTrace>) -> bool {
        self.stats.dip_checks += 1;
        let mut trace = trace;
        if let Some(tr) = trace.as_deref_mut() {
            tr.dips = enumerate_pairs(res)
                .into_iter()
                .map(|(u, v)| (g.lits[u].unwrap(), g.lits[v].unwrap()))
                .collect();
        }
        if res.is_empty() {
            return false;
        }
        self.stats.conflicts_with_dip += 1;
        let choice = self.cfg.dip.choice;
        let Some((u, v)) = select_dip(res, choice, g, &self.activity, &mut self.rng) else {
            return false;
        };
        let analyse = |solver: &Self| {
            DipAnalysis::compute(
                g,
                u,
                v,
                |l| solver.level[l.var().index()],
                |l| solver.trail_pos[l.var().index()],
            )
        };
        let (a, b) = canonical_pair(g.lits[u].unwrap(), g.lits[v].unwrap());
        // Only the glue filter looks at the clauses, so the split is
        // otherwise computed for accepted pairs alone.
        let early = (self.cfg.dip.filter == DipFilter::Glue).then(|| analyse(self));
        let lvl = |l: Lit| self.level[l.var().index()];
        let quality = DipQuality {
            post_lbd: early.as_ref().map_or(0, |an| distinct_levels(&an.d, lvl) + 1),
            activity: self.activity[a.var().index()] + self.activity[b.var().index()],
        };
        if !filter_dip((a, b), &mut self.ext.occ, &mut self.ext.window, quality, &self.cfg.dip) {
            return false;
        }
        let an = early.unwrap_or_else(|| analyse(self));
        let lvl = |l: Lit| self.level[l.var().index()];
        let post_lbd = distinct_levels(&an.d, lvl) + 1;
        let pre_lbd = distinct_levels(&an.c, lvl) + 1;
        if let Some(z) = self.ext.store.lookup(a, b) {
            if handle_predefined_z(self, z) == PredefinedZ::Fallback1Uip {
                self.stats.dip_fallbacks += 1;
                return false;
            }
        }
        self.stats.dip_learned += 1;
        let bt = dip_backjump(&an);
        self.cancel_until(bt);
        let (z, fresh) = self.get_or_create_extvar(a, b);
        let post = build_post_dip_clause(&an, z);
        let pre = (self.cfg.dip.clauses == DipClauses::Two).then(|| build_pre_dip_clause(&an, z));
        self.log_add(&post);
        if let Some(pre) = &pre {
            self.log_add(pre);
        }
        if post.len() == 1 {
            self.enqueue_level0(post[0]);
        } else {
            let cr = self.add_clause_internal(post.clone(), ClauseKind::Learnt, post_lbd);
            self.bump_clause(cr);
        }
        debug_assert_eq!(self.value(z.pos()), Some(false));
        if let Some(pre) = &pre {
            let cr = self.add_clause_internal(pre.clone(), ClauseKind::Learnt, pre_lbd);
            self.bump_clause(cr);
        }
        if self.cfg.dip.learn_binary && an.d.is_empty() {
            let bin = vec![!a, !b];
            self.log_add(&bin);
            self.add_clause_internal(bin, ClauseKind::Learnt, 2);
        }
        if let Some(tr) = trace {
            tr.backjump = bt;
            tr.dip = Some(DipTrace {
                pair: an.dip,
                z,
                fresh,
                pre,
                post,
                level_c: an.level_c,
                level_d: an.level_d,
            });
        }
        true
    }

    /// Learns the 1UIP lemma, rewritten with extension variables where
    /// possible. Returns the backjump level.
    pub(crate) fn learn_1uip(&mut self, learned: LearnedClause) -> u32 {
        let LearnedClause {
            lits,
            lbd,
            backjump_level,
            ..
        } = learned;
        if self.cfg.dip.replace {
            let limits = self.cfg.dip.replace_limits;
            if let Some(new) = try_replace_in_lemma(&lits, lbd, &self.ext.store, limits) {
                if let Some((new, bt)) = self.order_asserting(new) {
                    self.log_add(&lits);
                    self.log_add(&new);
                    self.log_delete(&lits);
                    self.stats.replaced_lemmas += 1;
                    let lbd = self.compute_lbd(&new);
                    self.learn_asserting(new, lbd, bt);
                    return bt;
                }
            }
        }
        self.log_add(&lits);
        self.learn_asserting(lits, lbd, backjump_level);
        backjump_level
    }

    /// Puts the only current-level literal first and a highest remaining
    /// level second. `None` unless the clause is asserting in that sense.
    fn order_asserting(&self, mut lits: Vec<Lit>) -> Option<(Vec<Lit>, u32)> {
        let dl = self.decision_level();
        if lits.iter().any(|&l| self.value(l) != Some(false)) {
            return None;
        }
        let cur: Vec<usize> = (0..lits.len())
            .filter(|&i| self.level_of(lits[i].var()) == dl)
            .collect();
        if cur.len() != 1 {
            return None;
        }
        lits.swap(0, cur[0]);
        let mut bt = 0;
        if lits.len() > 1 {
            let best = (1..lits.len()).max_by_key(|&i| (self.level_of(lits[i].var()), std::cmp::Reverse(i)))?;
            lits.swap(1, best);
            bt = self.level_of(lits[1].var());
        }
        Some((lits, bt))
    }

    /// Per-conflict bookkeeping: the disabling monitor and the deletion
    /// schedule.
    pub(crate) fn after_conflict(&mut self) {
        if !self.ext.enabled {
            return;
        }
        if !update_disable_monitor(&self.stats, &self.cfg.dip) {
            self.ext.enabled = false;
            self.ext.delete_pending = false;
            self.stats.dip_disabled_at = Some(self.stats.conflicts);
            log::info!("DIP learning disabled at conflict {}", self.stats.conflicts);
            return;
        }
        if self.stats.conflicts >= self.ext.next_delete {
            self.ext.next_delete += self.cfg.dip.ext_delete_interval;
            if !self.ext.store.is_empty() {
                self.ext.delete_pending = true;
            }
        }
    }

    /// Removes the least active deletable extension variables together with
    /// every clause mentioning them. Must run at decision level 0.
    pub fn delete_ext_vars(&mut self) {
        assert_eq!(self.decision_level(), 0);
        let mut cands: Vec<Var> = self
            .ext
            .store
            .iter()
            .map(|d| d.z)
            .filter(|&z| self.ext.store.participation(z) == 0)
            .collect();
        let k = cands.len() * self.cfg.dip.ext_delete_fraction as usize / 100;
        if k == 0 {
            return;
        }
        cands.sort_by(|x, y| {
            self.activity[x.index()]
                .partial_cmp(&self.activity[y.index()])
                .unwrap()
                .then(x.cmp(y))
        });
        let mut victim = vec![false; self.num_vars()];
        for z in &cands[..k] {
            victim[z.index()] = true;
        }
        self.stats.ext_deletion_rounds += 1;
        // Level-0 literals may rest on clauses about to go.
        self.log_level0_units();
        let doomed: Vec<ClauseRef> = self
            .db
            .iter_live()
            .filter(|(_, c)| c.lits.iter().any(|l| victim[l.var().index()]))
            .map(|(cr, _)| cr)
            .collect();
        for cr in doomed {
            self.delete_clause(cr);
        }
        for i in 0..self.trail.len() {
            let v = self.trail[i].var().index();
            if self.reason[v].is_some_and(|r| self.db.get(r).deleted) {
                self.reason[v] = None;
            }
        }
        let mut order = cands[..k].to_vec();
        order.sort();
        for z in order {
            self.ext.store.remove(z);
            self.removed[z.index()] = true;
            self.stats.ext_vars_deleted += 1;
        }
        self.db.purge_learnt_list();
        self.purge_watches();
    }
}
