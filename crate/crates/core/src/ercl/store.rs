use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::formula::{Lit, Var};
use crate::search::{ClauseDb, ClauseRef};

/// `z <-> l1 & l2` together with its three defining clauses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtDef {
    pub z: Var,
    pub l1: Lit,
    pub l2: Lit,
    /// `!z | l1`, `!z | l2`, `z | !l1 | !l2`.
    pub def_clauses: [ClauseRef; 3],
}

impl ExtDef {
    pub fn clause_lits(&self) -> [Vec<Lit>; 3] {
        let z = self.z.pos();
        [vec![!z, self.l1], vec![!z, self.l2], vec![z, !self.l1, !self.l2]]
    }
}

/// Orders a literal pair by code.
pub fn canonical_pair(a: Lit, b: Lit) -> (Lit, Lit) {
    if a.code() <= b.code() {
        (a, b)
    } else {
        (b, a)
    }
}

/// Live extension definitions with a reverse index by right-hand side.
#[derive(Clone, Debug, Default)]
pub struct ExtDefStore {
    defs: BTreeMap<Var, ExtDef>,
    by_pair: FxHashMap<(Lit, Lit), Var>,
    by_lit: FxHashMap<Lit, Vec<Var>>,
    participation: Vec<u32>,
}

impl ExtDefStore {
    pub fn len(&self) -> usize {
        self.defs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }

    pub fn get(&self, z: Var) -> Option<&ExtDef> {
        self.defs.get(&z)
    }

    pub fn lookup(&self, l1: Lit, l2: Lit) -> Option<Var> {
        self.by_pair.get(&canonical_pair(l1, l2)).copied()
    }

    /// Definitions with `l` on the right-hand side.
    pub fn defs_with_lit(&self, l: Lit) -> &[Var] {
        self.by_lit.get(&l).map_or(&[], Vec::as_slice)
    }

    /// Number of live definitions whose right-hand side mentions `v`.
    pub fn participation(&self, v: Var) -> u32 {
        self.participation.get(v.index()).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExtDef> {
        self.defs.values()
    }

    pub fn insert(&mut self, def: ExtDef) {
        let key = canonical_pair(def.l1, def.l2);
        assert!(def.l1 != def.l2 && def.l1 != !def.l2);
        assert!(self.by_pair.insert(key, def.z).is_none(), "pair already defined");
        for l in [def.l1, def.l2] {
            self.by_lit.entry(l).or_default().push(def.z);
            let i = l.var().index();
            if self.participation.len() <= i {
                self.participation.resize(i + 1, 0);
            }
            self.participation[i] += 1;
        }
        self.defs.insert(def.z, def);
    }

    pub fn remove(&mut self, z: Var) -> Option<ExtDef> {
        let def = self.defs.remove(&z)?;
        self.by_pair.remove(&canonical_pair(def.l1, def.l2));
        for l in [def.l1, def.l2] {
            if let Some(list) = self.by_lit.get_mut(&l) {
                list.retain(|&x| x != z);
                if list.is_empty() {
                    self.by_lit.remove(&l);
                }
            }
            self.participation[l.var().index()] -= 1;
        }
        Some(def)
    }

    /// Cross-checks the indexes, the counters and the defining clauses.
    pub fn audit(&self, db: &ClauseDb, num_vars: usize) -> Result<(), String> {
        if self.by_pair.len() != self.defs.len() {
            return Err("pair index and definitions differ in size".into());
        }
        let mut count = vec![0u32; num_vars.max(self.participation.len())];
        for def in self.defs.values() {
            if self.lookup(def.l1, def.l2) != Some(def.z) {
                return Err(format!("pair index misses {}", def.z));
            }
            for l in [def.l1, def.l2] {
                count[l.var().index()] += 1;
                if !self.defs_with_lit(l).contains(&def.z) {
                    return Err(format!("literal index misses {}", def.z));
                }
            }
            for (cr, want) in def.def_clauses.iter().zip(def.clause_lits()) {
                let c = db.get(*cr);
                let mut got = c.lits.clone();
                let mut want = want;
                got.sort();
                want.sort();
                if c.deleted || got != want {
                    return Err(format!("definition clause of {} missing", def.z));
                }
            }
        }
        for (i, &c) in count.iter().enumerate() {
            if c != self.participation.get(i).copied().unwrap_or(0) {
                return Err(format!("participation counter of x{} is off", i + 1));
            }
        }
        Ok(())
    }
}
