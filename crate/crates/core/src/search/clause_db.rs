use crate::formula::Lit;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ClauseRef(u32);

impl ClauseRef {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClauseKind {
    Original,
    Learnt,
    /// One of the three clauses defining an extension variable.
    Definition,
}

#[derive(Clone, Debug)]
pub struct ClauseData {
    pub lits: Vec<Lit>,
    pub kind: ClauseKind,
    pub lbd: u32,
    pub activity: f64,
    pub deleted: bool,
}

/// Clause arena. Slots are never reused; deleted clauses keep their index and
/// drop their literals.
#[derive(Clone, Debug, Default)]
pub struct ClauseDb {
    clauses: Vec<ClauseData>,
    learnts: Vec<ClauseRef>,
}

impl ClauseDb {
    pub fn add(&mut self, lits: Vec<Lit>, kind: ClauseKind, lbd: u32) -> ClauseRef {
        let cr = ClauseRef(self.clauses.len() as u32);
        self.clauses.push(ClauseData {
            lits,
            kind,
            lbd,
            activity: 0.0,
            deleted: false,
        });
        if kind == ClauseKind::Learnt {
            self.learnts.push(cr);
        }
        cr
    }

    #[inline]
    pub fn get(&self, cr: ClauseRef) -> &ClauseData {
        &self.clauses[cr.index()]
    }

    #[inline]
    pub fn get_mut(&mut self, cr: ClauseRef) -> &mut ClauseData {
        &mut self.clauses[cr.index()]
    }

    #[inline]
    pub fn lits(&self, cr: ClauseRef) -> &[Lit] {
        &self.clauses[cr.index()].lits
    }

    pub fn delete(&mut self, cr: ClauseRef) -> Vec<Lit> {
        let c = &mut self.clauses[cr.index()];
        c.deleted = true;
        std::mem::take(&mut c.lits)
    }

    pub fn learnts(&self) -> &[ClauseRef] {
        &self.learnts
    }

    pub fn purge_learnt_list(&mut self) {
        let clauses = &self.clauses;
        self.learnts.retain(|cr| !clauses[cr.index()].deleted);
    }

    pub fn num_learnts(&self) -> usize {
        self.learnts.len()
    }

    /// Live clauses with their references.
    pub fn iter_live(&self) -> impl Iterator<Item = (ClauseRef, &ClauseData)> {
        self.clauses
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.deleted)
            .map(|(i, c)| (ClauseRef(i as u32), c))
    }
}
