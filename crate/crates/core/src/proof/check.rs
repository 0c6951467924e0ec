//! Forward DRAT checker with backward core marking.

use rustc_hash::FxHashMap;

use thiserror::Error;

use super::ProofEvent;
use crate::formula::{CnfFormula, Lit};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("proof line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("step {step}: clause {clause:?} is neither RUP nor RAT")]
    NotImplied { step: usize, clause: Vec<i32> },
    #[error("step {step}: deleted clause {clause:?} is not present")]
    UnknownDeletion { step: usize, clause: Vec<i32> },
    #[error("proof never derives the empty clause")]
    NoEmptyClause,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub adds: usize,
    pub deletes: usize,
    /// Additions that needed the RAT check.
    pub rat_steps: usize,
    /// Added clauses the empty clause depends on.
    pub core_adds: usize,
    /// Resolution steps to replay the core: antecedents minus one, summed.
    pub resolution_steps: usize,
}

const NONE: usize = usize::MAX;

struct Checker {
    clauses: Vec<Vec<Lit>>,
    alive: Vec<bool>,
    deps: Vec<Vec<usize>>,
    lemma: Vec<bool>,
    watches: Vec<Vec<usize>>,
    units: Vec<usize>,
    index: FxHashMap<Vec<Lit>, Vec<usize>>,
    vals: Vec<u8>,
    reason: Vec<usize>,
    trail: Vec<Lit>,
    empty: Option<usize>,
}

fn key(c: &[Lit]) -> Vec<Lit> {
    let mut k = c.to_vec();
    k.sort();
    k.dedup();
    k
}

impl Checker {
    fn new() -> Self {
        Checker {
            clauses: Vec::new(),
            alive: Vec::new(),
            deps: Vec::new(),
            lemma: Vec::new(),
            watches: Vec::new(),
            units: Vec::new(),
            index: FxHashMap::default(),
            vals: Vec::new(),
            reason: Vec::new(),
            trail: Vec::new(),
            empty: None,
        }
    }

    fn grow(&mut self, l: Lit) {
        let n = l.var().index() + 1;
        if self.vals.len() < n {
            self.vals.resize(n, 2);
            self.reason.resize(n, NONE);
            self.watches.resize(2 * n, Vec::new());
        }
    }

    #[inline]
    fn val(&self, l: Lit) -> u8 {
        let a = self.vals[l.var().index()];
        if a == 2 {
            2
        } else {
            a ^ (!l.is_positive()) as u8
        }
    }

    fn add(&mut self, lits: Vec<Lit>, is_lemma: bool, deps: Vec<usize>) -> usize {
        let lits = key(&lits);
        for &l in &lits {
            self.grow(l);
        }
        let id = self.clauses.len();
        match lits.len() {
            0 => {
                self.empty.get_or_insert(id);
            }
            1 => self.units.push(id),
            _ => {
                self.watches[lits[0].code()].push(id);
                self.watches[lits[1].code()].push(id);
            }
        }
        self.index.entry(lits.clone()).or_default().push(id);
        self.clauses.push(lits);
        self.alive.push(true);
        self.deps.push(deps);
        self.lemma.push(is_lemma);
        id
    }

    fn delete(&mut self, lits: &[Lit]) -> bool {
        let k = key(lits);
        let Some(ids) = self.index.get_mut(&k) else {
            return false;
        };
        let Some(id) = ids.pop() else { return false };
        if ids.is_empty() {
            self.index.remove(&k);
        }
        self.alive[id] = false;
        if self.empty == Some(id) {
            self.empty = None;
        }
        true
    }

    fn assign(&mut self, l: Lit, r: usize) {
        self.vals[l.var().index()] = l.is_positive() as u8;
        self.reason[l.var().index()] = r;
        self.trail.push(l);
    }

    fn reset(&mut self) {
        for l in self.trail.drain(..) {
            self.vals[l.var().index()] = 2;
            self.reason[l.var().index()] = NONE;
        }
    }

    /// Propagates from the current trail; returns a falsified clause.
    fn propagate(&mut self) -> Option<usize> {
        let mut head = 0;
        while head < self.trail.len() {
            let p = self.trail[head];
            head += 1;
            let fl = !p;
            let mut ws = std::mem::take(&mut self.watches[fl.code()]);
            let mut i = 0;
            let mut confl = None;
            while i < ws.len() {
                let id = ws[i];
                if !self.alive[id] {
                    ws.swap_remove(i);
                    continue;
                }
                let c = &mut self.clauses[id];
                if c[0] == fl {
                    c.swap(0, 1);
                }
                let first = c[0];
                if self.val_of(first) == 1 {
                    i += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..self.clauses[id].len() {
                    let q = self.clauses[id][k];
                    if self.val(q) != 0 {
                        self.clauses[id].swap(1, k);
                        self.watches[q.code()].push(id);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    ws.swap_remove(i);
                    continue;
                }
                i += 1;
                match self.val(first) {
                    0 => {
                        confl = Some(id);
                        break;
                    }
                    2 => self.assign(first, id),
                    _ => {}
                }
            }
            self.watches[fl.code()].append(&mut ws);
            if confl.is_some() {
                return confl;
            }
        }
        None
    }

    #[inline]
    fn val_of(&self, l: Lit) -> u8 {
        self.val(l)
    }

    /// Clauses used to derive the falsity of `lits`.
    fn explain(&self, start: &[usize], lits: &[Lit]) -> Vec<usize> {
        let mut out: Vec<usize> = start.to_vec();
        let mut seen = vec![false; self.vals.len()];
        let mut stack: Vec<Lit> = lits.to_vec();
        for &id in start {
            stack.extend(self.clauses[id].iter().copied());
        }
        while let Some(l) = stack.pop() {
            let v = l.var().index();
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let r = self.reason[v];
            if r != NONE {
                out.push(r);
                stack.extend(self.clauses[r].iter().copied());
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Reverse unit propagation; on success returns the antecedents.
    fn rup(&mut self, lemma: &[Lit]) -> Option<Vec<usize>> {
        if let Some(e) = self.empty {
            return Some(vec![e]);
        }
        for &l in lemma {
            self.grow(l);
        }
        let mut confl: Option<Vec<usize>> = None;
        for i in 0..self.units.len() {
            let id = self.units[i];
            if !self.alive[id] {
                continue;
            }
            let l = self.clauses[id][0];
            match self.val(l) {
                2 => self.assign(l, id),
                0 => {
                    confl = Some(self.explain(&[id], &[]));
                    break;
                }
                _ => {}
            }
        }
        if confl.is_none() {
            for &l in lemma {
                match self.val(l) {
                    2 => self.assign(!l, NONE),
                    1 => {
                        confl = Some(self.explain(&[], &[l]));
                        break;
                    }
                    _ => {}
                }
            }
        }
        if confl.is_none() {
            if let Some(id) = self.propagate() {
                confl = Some(self.explain(&[id], &[]));
            }
        }
        self.reset();
        confl
    }

    /// RUP, or else RAT on the first literal.
    fn implied(&mut self, lemma: &[Lit]) -> Option<(Vec<usize>, bool)> {
        if let Some(d) = self.rup(lemma) {
            return Some((d, false));
        }
        let &p = lemma.first()?;
        let mut deps = Vec::new();
        let cands: Vec<usize> = (0..self.clauses.len())
            .filter(|&id| self.alive[id] && self.clauses[id].contains(&!p))
            .collect();
        for id in cands {
            let mut res: Vec<Lit> = lemma.to_vec();
            let mut taut = false;
            for &q in &self.clauses[id] {
                if q == !p {
                    continue;
                }
                if res.contains(&!q) {
                    taut = true;
                    break;
                }
                if !res.contains(&q) {
                    res.push(q);
                }
            }
            if taut {
                continue;
            }
            let d = self.rup(&res)?;
            deps.push(id);
            deps.extend(d);
        }
        deps.sort_unstable();
        deps.dedup();
        Some((deps, true))
    }
}

fn run(formula: &CnfFormula, proof: &[ProofEvent]) -> Result<(CheckReport, Checker), CheckError> {
    let mut ck = Checker::new();
    for c in formula.clauses() {
        ck.add(c.lits().to_vec(), false, Vec::new());
    }
    let mut rep = CheckReport::default();
    for (step, ev) in proof.iter().enumerate() {
        let lits: Vec<Lit> = ev.lits().iter().map(|&d| Lit::from_dimacs(d)).collect();
        match ev {
            ProofEvent::Add(c) => {
                rep.adds += 1;
                let (deps, rat) = ck.implied(&lits).ok_or_else(|| CheckError::NotImplied {
                    step: step + 1,
                    clause: c.clone(),
                })?;
                if rat {
                    rep.rat_steps += 1;
                }
                ck.add(lits, true, deps);
            }
            ProofEvent::Delete(c) => {
                rep.deletes += 1;
                if !ck.delete(&lits) {
                    return Err(CheckError::UnknownDeletion {
                        step: step + 1,
                        clause: c.clone(),
                    });
                }
            }
        }
    }
    Ok((rep, ck))
}

/// Checks that every addition is RUP or RAT, without requiring a refutation.
pub fn verify_steps(formula: &CnfFormula, proof: &[ProofEvent]) -> Result<CheckReport, CheckError> {
    run(formula, proof).map(|(r, _)| r)
}

/// Checks a refutation of `formula` and measures its core.
pub fn check_proof(formula: &CnfFormula, proof: &[ProofEvent]) -> Result<CheckReport, CheckError> {
    let (mut rep, ck) = run(formula, proof)?;
    let root = (0..ck.clauses.len())
        .find(|&id| ck.clauses[id].is_empty() && ck.lemma[id])
        .or_else(|| (0..ck.clauses.len()).find(|&id| ck.clauses[id].is_empty()))
        .ok_or(CheckError::NoEmptyClause)?;
    let mut mark = vec![false; ck.clauses.len()];
    let mut stack = vec![root];
    mark[root] = true;
    while let Some(id) = stack.pop() {
        if ck.lemma[id] {
            rep.core_adds += 1;
            rep.resolution_steps += ck.deps[id].len().saturating_sub(1);
        }
        for &d in &ck.deps[id] {
            if !mark[d] {
                mark[d] = true;
                stack.push(d);
            }
        }
    }
    Ok(rep)
}
