//! MiniSat-style CDCL engine.

mod clause_db;
mod heap;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use clause_db::{ClauseData, ClauseDb, ClauseKind, ClauseRef};
use heap::VarHeap;

use crate::ercl::{DipConfig, ErclState};
use crate::formula::{CnfFormula, Lit, Var};
use crate::proof::ProofLog;
use crate::stats::SolverStats;

pub(crate) const UNDEF: u8 = 2;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub var_decay: f64,
    pub clause_decay: f64,
    /// Conflicts per Luby unit.
    pub restart_base: u64,
    pub reduce_base: u64,
    pub reduce_inc: u64,
    pub dip: DipConfig,
    /// Forced decisions, consumed before the heuristic is consulted.
    pub decision_script: Vec<Lit>,
    pub conflict_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Record a `ConflictTrace` per conflict.
    pub trace: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            var_decay: 0.95,
            clause_decay: 0.999,
            restart_base: 100,
            reduce_base: 2000,
            reduce_inc: 300,
            dip: DipConfig::default(),
            decision_script: Vec::new(),
            conflict_limit: None,
            time_limit: None,
            trace: false,
        }
    }
}

impl SolverConfig {
    pub fn with_dip(dip: DipConfig) -> Self {
        SolverConfig {
            dip,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), SolveError> {
        let bad = |m: &str| Err(SolveError::InvalidConfig(m.to_string()));
        if !(self.var_decay > 0.0 && self.var_decay < 1.0) {
            return bad("var decay must lie in (0,1)");
        }
        if !(self.clause_decay > 0.0 && self.clause_decay < 1.0) {
            return bad("clause decay must lie in (0,1)");
        }
        if self.restart_base == 0 || self.reduce_base == 0 {
            return bad("restart and reduce intervals must be positive");
        }
        self.dip.validate().map_err(SolveError::InvalidConfig)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Sat,
    Unsat,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub status: Status,
    /// Values of the original variables, index 0 = variable 1.
    pub model: Option<Vec<bool>>,
    pub stats: SolverStats,
}

#[derive(Error, Debug)]
pub enum SolveError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("scripted decision {0} is already assigned")]
    ScriptedLiteralAssigned(i32),
    #[error("scripted decision {0} refers to an unknown variable")]
    ScriptedLiteralUnknown(i32),
    #[error("model does not satisfy clause {0}")]
    ModelInvalid(usize),
    #[error("proof output failed: {0}")]
    Proof(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug)]
struct Watcher {
    cref: ClauseRef,
    blocker: Lit,
}

/// What happened at one conflict, for replays and tests.
#[derive(Clone, Debug, Default)]
pub struct ConflictTrace {
    pub level: u32,
    pub first_uip: Option<Lit>,
    pub lemma_1uip: Vec<Lit>,
    pub lbd: u32,
    /// Every DIP of the top-level graph, each pair in trail order.
    pub dips: Vec<(Lit, Lit)>,
    pub dip: Option<DipTrace>,
    pub backjump: u32,
}

#[derive(Clone, Debug)]
pub struct DipTrace {
    pub pair: (Lit, Lit),
    pub z: Var,
    pub fresh: bool,
    pub pre: Option<Vec<Lit>>,
    pub post: Vec<Lit>,
    pub level_c: u32,
    pub level_d: u32,
}

/// `i`-th element (1-based) of the Luby sequence.
pub fn luby(i: u64) -> u64 {
    assert!(i >= 1);
    let mut i = i;
    loop {
        let mut k = 1u32;
        while (1u64 << k) - 1 < i {
            k += 1;
        }
        if i == (1u64 << k) - 1 {
            return 1u64 << (k - 1);
        }
        i -= (1u64 << (k - 1)) - 1;
    }
}

pub struct Solver {
    pub(crate) cfg: SolverConfig,
    original: CnfFormula,
    num_orig: usize,
    assigns: Vec<u8>,
    pub(crate) level: Vec<u32>,
    pub(crate) reason: Vec<Option<ClauseRef>>,
    pub(crate) trail_pos: Vec<usize>,
    phase: Vec<bool>,
    pub(crate) activity: Vec<f64>,
    pub(crate) is_ext: Vec<bool>,
    pub(crate) removed: Vec<bool>,
    pub(crate) seen: Vec<bool>,
    order: VarHeap,
    pub(crate) trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    pub(crate) db: ClauseDb,
    watches: Vec<Vec<Watcher>>,
    var_inc: f64,
    cla_inc: f64,
    pub(crate) ext: ErclState,
    pub(crate) proof: Option<ProofLog>,
    proof_error: Option<std::io::Error>,
    pub(crate) stats: SolverStats,
    pub(crate) traces: Vec<ConflictTrace>,
    script_pos: usize,
    pub(crate) rng: ChaCha8Rng,
    ok: bool,
    empty_logged: bool,
    /// Level-0 trail prefix already written to the proof as unit clauses.
    pub(crate) units_logged: usize,
    conflicts_since_restart: u64,
    luby_index: u64,
    next_reduce: u64,
    reductions: u64,
    pub(crate) dip_time: Duration,
}

#[inline]
fn lit_val(assigns: &[u8], l: Lit) -> u8 {
    let a = assigns[l.var().index()];
    if a == UNDEF {
        UNDEF
    } else {
        a ^ (!l.is_positive()) as u8
    }
}

impl Solver {
    pub fn new(formula: &CnfFormula, config: SolverConfig) -> Result<Self, SolveError> {
        config.validate()?;
        let seed = config.dip.seed;
        let next_reduce = config.reduce_base;
        let ext = ErclState::new(&config.dip);
        let mut s = Solver {
            cfg: config,
            original: formula.clone(),
            num_orig: formula.num_vars(),
            assigns: Vec::new(),
            level: Vec::new(),
            reason: Vec::new(),
            trail_pos: Vec::new(),
            phase: Vec::new(),
            activity: Vec::new(),
            is_ext: Vec::new(),
            removed: Vec::new(),
            seen: Vec::new(),
            order: VarHeap::default(),
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            db: ClauseDb::default(),
            watches: Vec::new(),
            var_inc: 1.0,
            cla_inc: 1.0,
            ext,
            proof: None,
            proof_error: None,
            stats: SolverStats::default(),
            traces: Vec::new(),
            script_pos: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
            ok: true,
            empty_logged: false,
            units_logged: 0,
            conflicts_since_restart: 0,
            luby_index: 1,
            next_reduce,
            reductions: 0,
            dip_time: Duration::ZERO,
        };
        for _ in 0..formula.num_vars() {
            s.new_var(false);
        }
        for c in formula.clauses() {
            if !s.ok {
                break;
            }
            match c.lits() {
                [] => s.ok = false,
                [l] => s.enqueue_level0(*l),
                lits => {
                    s.add_clause_internal(lits.to_vec(), ClauseKind::Original, 0);
                }
            }
        }
        Ok(s)
    }

    /// Attaches a proof sink; every later clause addition and deletion is logged.
    pub fn set_proof(&mut self, log: ProofLog) {
        let mut log = log;
        log.reserve_vars(self.num_orig);
        self.proof = Some(log);
    }

    pub fn take_proof(&mut self) -> Option<ProofLog> {
        self.proof.take()
    }

    pub fn proof(&self) -> Option<&ProofLog> {
        self.proof.as_ref()
    }

    pub fn traces(&self) -> &[ConflictTrace] {
        &self.traces
    }

    pub fn stats(&self) -> &SolverStats {
        &self.stats
    }

    pub fn config(&self) -> &SolverConfig {
        &self.cfg
    }

    pub fn num_vars(&self) -> usize {
        self.assigns.len()
    }

    pub fn num_original_vars(&self) -> usize {
        self.num_orig
    }

    pub fn clause_db(&self) -> &ClauseDb {
        &self.db
    }

    pub fn is_extension(&self, v: Var) -> bool {
        self.is_ext[v.index()]
    }

    pub fn is_removed(&self, v: Var) -> bool {
        self.removed[v.index()]
    }

    pub fn var_activity(&self, v: Var) -> f64 {
        self.activity[v.index()]
    }

    pub fn dip_enabled(&self) -> bool {
        self.ext.enabled
    }

    pub(crate) fn new_var(&mut self, ext: bool) -> Var {
        let v = Var::new(self.assigns.len());
        self.assigns.push(UNDEF);
        self.level.push(0);
        self.reason.push(None);
        self.trail_pos.push(0);
        self.phase.push(false);
        self.activity.push(0.0);
        self.is_ext.push(ext);
        self.removed.push(false);
        self.seen.push(false);
        self.watches.push(Vec::new());
        self.watches.push(Vec::new());
        self.order.insert(v, &self.activity);
        v
    }

    #[inline]
    pub(crate) fn val(&self, l: Lit) -> u8 {
        lit_val(&self.assigns, l)
    }

    /// Current value of `l`, if assigned.
    pub fn value(&self, l: Lit) -> Option<bool> {
        match self.val(l) {
            UNDEF => None,
            v => Some(v == 1),
        }
    }

    pub fn level_of(&self, v: Var) -> u32 {
        self.level[v.index()]
    }

    pub fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    pub fn trail(&self) -> &[Lit] {
        &self.trail
    }

    pub(crate) fn enqueue(&mut self, l: Lit, reason: Option<ClauseRef>) {
        let v = l.var().index();
        debug_assert_eq!(self.assigns[v], UNDEF);
        self.assigns[v] = l.is_positive() as u8;
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail_pos[v] = self.trail.len();
        self.trail.push(l);
    }

    pub(crate) fn enqueue_level0(&mut self, l: Lit) {
        debug_assert_eq!(self.decision_level(), 0);
        match self.val(l) {
            1 => {}
            0 => self.ok = false,
            _ => self.enqueue(l, None),
        }
    }

    /// Opens a new decision level with `l` as its decision.
    pub fn decide(&mut self, l: Lit) {
        self.trail_lim.push(self.trail.len());
        self.enqueue(l, None);
    }

    pub(crate) fn cancel_until(&mut self, lvl: u32) {
        if self.decision_level() <= lvl {
            return;
        }
        let lim = self.trail_lim[lvl as usize];
        for i in (lim..self.trail.len()).rev() {
            let l = self.trail[i];
            let v = l.var();
            self.assigns[v.index()] = UNDEF;
            self.reason[v.index()] = None;
            self.phase[v.index()] = l.is_positive();
            if !self.removed[v.index()] {
                self.order.insert(v, &self.activity);
            }
        }
        self.trail.truncate(lim);
        self.trail_lim.truncate(lvl as usize);
        self.qhead = self.qhead.min(lim);
    }

    fn attach(&mut self, cr: ClauseRef) {
        let lits = self.db.lits(cr);
        let (l0, l1) = (lits[0], lits[1]);
        self.watches[l0.code()].push(Watcher { cref: cr, blocker: l1 });
        self.watches[l1.code()].push(Watcher { cref: cr, blocker: l0 });
    }

    /// Adds a clause of length >= 2 under the current assignment, choosing
    /// watches so the invariant holds, and propagates it if unit. Returns the
    /// clause reference.
    pub(crate) fn add_clause_internal(&mut self, mut lits: Vec<Lit>, kind: ClauseKind, lbd: u32) -> ClauseRef {
        debug_assert!(lits.len() >= 2);
        let rank = |s: &Solver, l: Lit| -> (u8, u32) {
            match s.val(l) {
                1 => (2, u32::MAX - s.level[l.var().index()]),
                UNDEF => (1, 0),
                _ => (0, s.level[l.var().index()]),
            }
        };
        for k in 0..2 {
            let mut best = k;
            for i in k + 1..lits.len() {
                if rank(self, lits[i]) > rank(self, lits[best]) {
                    best = i;
                }
            }
            lits.swap(k, best);
        }
        let (v0, v1) = (self.val(lits[0]), self.val(lits[1]));
        let first = lits[0];
        let cr = self.db.add(lits, kind, lbd);
        self.attach(cr);
        if kind == ClauseKind::Learnt {
            self.stats.learnt_clauses += 1;
        }
        if v0 == UNDEF && v1 == 0 {
            self.enqueue(first, Some(cr));
        } else if v0 == 0 {
            // Every literal false: only possible at level 0 for input clauses.
            debug_assert_eq!(self.decision_level(), 0);
            self.ok = false;
        }
        cr
    }

    /// Exhaustive unit propagation; returns the first falsified clause.
    pub fn propagate(&mut self) -> Option<ClauseRef> {
        let mut confl = None;
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.stats.propagations += 1;
            let false_lit = !p;
            let mut ws = std::mem::take(&mut self.watches[false_lit.code()]);
            let (mut i, mut j) = (0, 0);
            while i < ws.len() {
                let w = ws[i];
                i += 1;
                if lit_val(&self.assigns, w.blocker) == 1 {
                    ws[j] = w;
                    j += 1;
                    continue;
                }
                let c = self.db.get_mut(w.cref);
                if c.deleted {
                    continue;
                }
                let lits = &mut c.lits;
                if lits[0] == false_lit {
                    lits.swap(0, 1);
                }
                let first = lits[0];
                let nw = Watcher {
                    cref: w.cref,
                    blocker: first,
                };
                if first != w.blocker && lit_val(&self.assigns, first) == 1 {
                    ws[j] = nw;
                    j += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..lits.len() {
                    if lit_val(&self.assigns, lits[k]) != 0 {
                        lits.swap(1, k);
                        self.watches[lits[1].code()].push(nw);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                ws[j] = nw;
                j += 1;
                if lit_val(&self.assigns, first) == 0 {
                    confl = Some(w.cref);
                    self.qhead = self.trail.len();
                    while i < ws.len() {
                        ws[j] = ws[i];
                        j += 1;
                        i += 1;
                    }
                } else {
                    self.enqueue(first, Some(w.cref));
                }
            }
            ws.truncate(j);
            self.watches[false_lit.code()] = ws;
            if confl.is_some() {
                break;
            }
        }
        confl
    }

    /// Next decision: the scripted literal if any remain, otherwise the most
    /// active unassigned variable with its saved phase. `None` when all
    /// variables are assigned.
    pub fn pick_branch_literal(&mut self) -> Result<Option<Lit>, SolveError> {
        if let Some(&l) = self.cfg.decision_script.get(self.script_pos) {
            self.script_pos += 1;
            if l.var().index() >= self.num_vars() {
                return Err(SolveError::ScriptedLiteralUnknown(l.to_dimacs()));
            }
            if self.val(l) != UNDEF {
                return Err(SolveError::ScriptedLiteralAssigned(l.to_dimacs()));
            }
            return Ok(Some(l));
        }
        while let Some(v) = self.order.pop(&self.activity) {
            if self.assigns[v.index()] == UNDEF && !self.removed[v.index()] {
                return Ok(Some(v.lit(self.phase[v.index()])));
            }
        }
        Ok(None)
    }

    pub(crate) fn bump_var(&mut self, v: Var) {
        let a = &mut self.activity[v.index()];
        *a += self.var_inc;
        if *a > 1e100 {
            for x in self.activity.iter_mut() {
                *x *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        self.order.increased(v, &self.activity);
    }

    pub(crate) fn bump_clause(&mut self, cr: ClauseRef) {
        let c = self.db.get_mut(cr);
        if c.kind != ClauseKind::Learnt {
            return;
        }
        c.activity += self.cla_inc;
        if c.activity > 1e20 {
            let learnts: Vec<ClauseRef> = self.db.learnts().to_vec();
            for l in learnts {
                self.db.get_mut(l).activity *= 1e-20;
            }
            self.cla_inc *= 1e-20;
        }
    }

    fn decay_activities(&mut self) {
        self.var_inc /= self.cfg.var_decay;
        self.cla_inc /= self.cfg.clause_decay;
    }

    fn is_locked(&self, cr: ClauseRef) -> bool {
        let c = self.db.get(cr);
        if c.deleted || c.lits.is_empty() {
            return false;
        }
        let l = c.lits[0];
        self.val(l) == 1 && self.reason[l.var().index()] == Some(cr)
    }

    /// Drops the worse half of the learnt clauses, ranked by LBD then activity.
    /// Reasons and binary clauses are kept.
    pub fn reduce_db(&mut self) {
        self.db.purge_learnt_list();
        let total = self.db.num_learnts();
        let mut cands: Vec<ClauseRef> = self
            .db
            .learnts()
            .iter()
            .copied()
            .filter(|&cr| self.db.get(cr).lits.len() > 2 && !self.is_locked(cr))
            .collect();
        cands.sort_by(|&x, &y| {
            let (cx, cy) = (self.db.get(x), self.db.get(y));
            cy.lbd
                .cmp(&cx.lbd)
                .then(cx.activity.partial_cmp(&cy.activity).unwrap())
                .then(x.cmp(&y))
        });
        for &cr in cands.iter().take(total / 2) {
            self.delete_clause(cr);
        }
        self.db.purge_learnt_list();
        self.purge_watches();
    }

    pub(crate) fn delete_clause(&mut self, cr: ClauseRef) {
        let lits = self.db.delete(cr);
        self.stats.deleted_clauses += 1;
        self.log_delete(&lits);
    }

    pub(crate) fn purge_watches(&mut self) {
        let db = &self.db;
        for ws in self.watches.iter_mut() {
            ws.retain(|w| !db.get(w.cref).deleted);
        }
    }

    pub(crate) fn log_add(&mut self, lits: &[Lit]) {
        if let Some(p) = self.proof.as_mut() {
            if let Err(e) = p.add(lits) {
                self.proof_error.get_or_insert(e);
            }
        }
    }

    pub(crate) fn log_delete(&mut self, lits: &[Lit]) {
        if let Some(p) = self.proof.as_mut() {
            if let Err(e) = p.delete(lits) {
                self.proof_error.get_or_insert(e);
            }
        }
    }

    pub(crate) fn log_extension(&mut self, z: Var, l1: Lit, l2: Lit) {
        if let Some(p) = self.proof.as_mut() {
            if let Err(e) = p.extension(z, l1, l2) {
                self.proof_error.get_or_insert(e);
            }
        }
    }

    /// Writes level-0 literals not yet in the proof as unit clauses.
    pub(crate) fn log_level0_units(&mut self) {
        let end = self.trail_lim.first().copied().unwrap_or(self.trail.len());
        while self.units_logged < end {
            let l = self.trail[self.units_logged];
            self.units_logged += 1;
            self.log_add(&[l]);
        }
    }

    fn log_empty(&mut self) {
        if !self.empty_logged {
            self.empty_logged = true;
            self.log_add(&[]);
        }
    }

    /// Learns a lemma whose first literal is asserting after backjumping to
    /// `bt`.
    pub(crate) fn learn_asserting(&mut self, lits: Vec<Lit>, lbd: u32, bt: u32) {
        self.cancel_until(bt);
        if lits.len() == 1 {
            self.enqueue_level0(lits[0]);
        } else {
            let l0 = lits[0];
            let cr = self.add_clause_internal(lits, ClauseKind::Learnt, lbd);
            debug_assert_eq!(self.value(l0), Some(true));
            self.bump_clause(cr);
        }
    }

    fn handle_conflict(&mut self, confl: ClauseRef) {
        let learned = self.analyze_1uip(confl);
        let mut trace = self.cfg.trace.then(|| ConflictTrace {
            level: self.decision_level(),
            first_uip: Some(learned.first_uip),
            lemma_1uip: learned.lits.clone(),
            lbd: learned.lbd,
            ..Default::default()
        });
        let dip = self.ext.enabled && self.try_dip_learning(confl, &learned, trace.as_mut());
        if !dip {
            let bt = self.learn_1uip(learned);
            if let Some(t) = trace.as_mut() {
                t.backjump = bt;
            }
        }
        if let Some(t) = trace {
            self.traces.push(t);
        }
    }

    pub fn solve(&mut self) -> Result<SolveResult, SolveError> {
        let start = Instant::now();
        let status = self.search(start);
        self.stats.solve_time_secs = start.elapsed().as_secs_f64();
        self.stats.dip_time_secs = self.dip_time.as_secs_f64();
        self.stats.dip_time_fraction = if self.stats.solve_time_secs > 0.0 {
            self.stats.dip_time_secs / self.stats.solve_time_secs
        } else {
            0.0
        };
        self.stats.ext_vars_live = self.ext.store.len() as u64;
        if let Some(p) = self.proof.as_mut() {
            if let Err(e) = p.flush() {
                self.proof_error.get_or_insert(e);
            }
            self.stats.proof_adds = p.num_adds();
            self.stats.proof_deletes = p.num_deletes();
        }
        let status = status?;
        if let Some(e) = self.proof_error.take() {
            return Err(SolveError::Proof(e));
        }
        let model = if status == Status::Sat {
            let m: Vec<bool> = (0..self.num_orig).map(|v| self.assigns[v] == 1).collect();
            for (i, c) in self.original.clauses().iter().enumerate() {
                if !c.lits().iter().any(|l| m[l.var().index()] == l.is_positive()) {
                    return Err(SolveError::ModelInvalid(i));
                }
            }
            Some(m)
        } else {
            None
        };
        Ok(SolveResult {
            status,
            model,
            stats: self.stats.clone(),
        })
    }

    fn search(&mut self, start: Instant) -> Result<Status, SolveError> {
        if !self.ok {
            self.log_empty();
            return Ok(Status::Unsat);
        }
        loop {
            if let Some(confl) = self.propagate() {
                self.stats.conflicts += 1;
                self.conflicts_since_restart += 1;
                if self.decision_level() == 0 {
                    self.ok = false;
                    self.log_empty();
                    return Ok(Status::Unsat);
                }
                self.handle_conflict(confl);
                if !self.ok {
                    self.log_empty();
                    return Ok(Status::Unsat);
                }
                self.decay_activities();
                self.after_conflict();
                if self.cfg.conflict_limit.is_some_and(|l| self.stats.conflicts >= l)
                    || self.cfg.time_limit.is_some_and(|t| start.elapsed() >= t)
                {
                    return Ok(Status::Unknown);
                }
                continue;
            }
            if self.conflicts_since_restart >= self.cfg.restart_base * luby(self.luby_index) {
                self.luby_index += 1;
                self.conflicts_since_restart = 0;
                self.stats.restarts += 1;
                self.cancel_until(0);
            }
            if self.ext.delete_pending {
                if self.decision_level() > 0 {
                    self.stats.restarts += 1;
                    self.conflicts_since_restart = 0;
                    self.cancel_until(0);
                    continue;
                }
                self.ext.delete_pending = false;
                self.delete_ext_vars();
                continue;
            }
            if self.stats.conflicts >= self.next_reduce {
                self.reductions += 1;
                self.next_reduce = self.stats.conflicts + self.cfg.reduce_base + self.cfg.reduce_inc * self.reductions;
                self.reduce_db();
            }
            match self.pick_branch_literal()? {
                None => return Ok(Status::Sat),
                Some(l) => {
                    self.stats.decisions += 1;
                    if self.is_ext[l.var().index()] {
                        self.stats.ext_decisions += 1;
                    }
                    self.decide(l);
                }
            }
        }
    }

    /// Checks internal consistency after a run: no live clause mentions a
    /// deleted variable, the definition store agrees with the clause database,
    /// and participation counters match a recount.
    pub fn audit(&self) -> Result<(), String> {
        for (cr, c) in self.db.iter_live() {
            if let Some(l) = c.lits.iter().find(|l| self.removed[l.var().index()]) {
                return Err(format!("clause {:?} mentions deleted variable {}", cr, l.var()));
            }
        }
        self.ext.store.audit(&self.db, self.num_vars())
    }
}

/// Solves `formula` under `config`.
pub fn solve(formula: &CnfFormula, config: SolverConfig) -> Result<SolveResult, SolveError> {
    Solver::new(formula, config)?.solve()
}
