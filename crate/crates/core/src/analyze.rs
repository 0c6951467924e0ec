//! Conflict analysis: 1UIP lemmas, LBD, and the top-level conflict graph.

use crate::formula::Lit;
use crate::search::{ClauseRef, Solver};
use crate::tvd::TvdProblem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LearnedClause {
    /// Asserting literal first, then a literal of the backjump level.
    pub lits: Vec<Lit>,
    pub lbd: u32,
    pub asserting: Lit,
    pub backjump_level: u32,
    /// The first UIP, i.e. `!asserting`.
    pub first_uip: Lit,
    /// Current-level literals resolved away, latest first.
    pub resolved: Vec<Lit>,
}

/// The conflict graph restricted to the current level, from the first UIP
/// (node 0) to the conflict node (last node). Node ids follow trail order.
#[derive(Clone, Debug, Default)]
pub struct ConflictGraph {
    pub problem: TvdProblem,
    /// True literal of each node; `None` for the conflict node.
    pub lits: Vec<Option<Lit>>,
    /// Earlier-level literals (level > 0) feeding node `v`, as true literals,
    /// are `side_lits[side_off[v]..side_off[v + 1]]`.
    pub side_off: Vec<u32>,
    pub side_lits: Vec<Lit>,
    pub trail_pos: Vec<usize>,
    edges: Vec<(usize, usize)>,
    at: Vec<usize>,
}

impl ConflictGraph {
    pub fn new(
        problem: TvdProblem,
        lits: Vec<Option<Lit>>,
        side_off: Vec<u32>,
        side_lits: Vec<Lit>,
        trail_pos: Vec<usize>,
    ) -> Self {
        ConflictGraph {
            problem,
            lits,
            side_off,
            side_lits,
            trail_pos,
            ..Default::default()
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.lits.len()
    }

    pub fn side_inputs(&self, v: usize) -> &[Lit] {
        &self.side_lits[self.side_off[v] as usize..self.side_off[v + 1] as usize]
    }

    pub fn node_of(&self, l: Lit) -> Option<usize> {
        self.lits.iter().position(|&x| x == Some(l))
    }
}

impl Solver {
    /// Standard 1UIP analysis by resolving reasons in reverse trail order.
    /// Bumps the activity of every variable and learnt clause involved.
    pub fn analyze_1uip(&mut self, confl: ClauseRef) -> LearnedClause {
        let dl = self.decision_level();
        assert!(dl > 0, "conflict at level 0");
        let mut out: Vec<Lit> = vec![Lit::from_code(0)];
        let mut resolved = Vec::new();
        let mut path_c = 0usize;
        let mut idx = self.trail.len();
        let mut cr = confl;
        let mut pivot: Option<Lit> = None;
        let first_uip = loop {
            self.bump_clause(cr);
            for k in 0..self.db.lits(cr).len() {
                let q = self.db.lits(cr)[k];
                if Some(q) == pivot {
                    continue;
                }
                let v = q.var();
                if !self.seen[v.index()] && self.level[v.index()] > 0 {
                    self.seen[v.index()] = true;
                    self.bump_var(v);
                    if self.level[v.index()] == dl {
                        path_c += 1;
                    } else {
                        out.push(q);
                    }
                }
            }
            loop {
                idx -= 1;
                if self.seen[self.trail[idx].var().index()] {
                    break;
                }
            }
            let p = self.trail[idx];
            self.seen[p.var().index()] = false;
            path_c -= 1;
            if path_c == 0 {
                break p;
            }
            resolved.push(p);
            cr = self.reason[p.var().index()].expect("propagated literal without reason");
            pivot = Some(p);
        };
        out[0] = !first_uip;
        for l in &out[1..] {
            self.seen[l.var().index()] = false;
        }
        let mut bt = 0;
        if out.len() > 1 {
            let mut best = 1;
            for i in 2..out.len() {
                if self.level[out[i].var().index()] > self.level[out[best].var().index()] {
                    best = i;
                }
            }
            out.swap(1, best);
            bt = self.level[out[1].var().index()];
        }
        let lbd = self.compute_lbd(&out);
        LearnedClause {
            lbd,
            asserting: out[0],
            backjump_level: bt,
            first_uip,
            lits: out,
            resolved,
        }
    }

    /// Number of distinct decision levels among `lits`, all of which must be
    /// assigned.
    pub fn compute_lbd(&self, lits: &[Lit]) -> u32 {
        let mut levels: Vec<u32> = lits
            .iter()
            .map(|l| {
                assert!(self.value(*l).is_some(), "LBD of unassigned literal {l}");
                self.level[l.var().index()]
            })
            .collect();
        levels.sort_unstable();
        levels.dedup();
        levels.len() as u32
    }

    /// Builds the conflict graph between the first UIP and the conflict.
    pub fn extract_top_level_graph(&self, confl: ClauseRef, learned: &LearnedClause) -> ConflictGraph {
        let mut g = ConflictGraph::default();
        self.extract_graph_into(confl, learned, &mut g);
        g
    }

    /// In-place form of [`Solver::extract_top_level_graph`].
    pub fn extract_graph_into(&self, confl: ClauseRef, learned: &LearnedClause, g: &mut ConflictGraph) {
        let dl = self.decision_level();
        g.lits.clear();
        g.lits.push(Some(learned.first_uip));
        g.lits.extend(learned.resolved.iter().rev().map(|&l| Some(l)));
        let n = g.lits.len() + 1;
        let t = n - 1;
        // Node lookup by variable; entries are reset before returning.
        if g.at.len() < self.level.len() {
            g.at.resize(self.level.len(), usize::MAX);
        }
        g.trail_pos.clear();
        for (i, l) in g.lits.iter().enumerate() {
            let v = l.unwrap().var().index();
            g.at[v] = i;
            g.trail_pos.push(self.trail_pos[v]);
        }
        g.trail_pos.push(self.trail.len());
        g.edges.clear();
        g.side_lits.clear();
        g.side_off.clear();
        g.side_off.push(0);
        g.side_off.push(0);
        for i in 1..=t {
            let (clause, skip) = if i < t {
                let l = g.lits[i].unwrap();
                let r = self.reason[l.var().index()].expect("propagated literal without reason");
                (self.db.lits(r), Some(l))
            } else {
                (self.db.lits(confl), None)
            };
            for &q in clause {
                if Some(q) == skip {
                    continue;
                }
                let v = q.var().index();
                let lv = self.level[v];
                if lv == dl {
                    debug_assert!(g.at[v] != usize::MAX);
                    g.edges.push((g.at[v], i));
                } else if lv > 0 {
                    g.side_lits.push(!q);
                }
            }
            g.side_off.push(g.side_lits.len() as u32);
        }
        for l in &g.lits {
            g.at[l.unwrap().var().index()] = usize::MAX;
        }
        g.lits.push(None);
        g.problem.rebuild_ordered(n, &g.edges, 0, t);
    }

    /// The 2-literal stopping rule: resolve in reverse trail order and report
    /// the first intermediate clause with exactly two current-level literals.
    /// Incomplete for DIP detection; kept as a comparison oracle.
    pub fn naive_two_literal_cut(&self, confl: ClauseRef) -> Option<(Lit, Lit)> {
        let dl = self.decision_level();
        let mut clause: Vec<Lit> = self.db.lits(confl).to_vec();
        let cur = |c: &[Lit]| -> Vec<Lit> {
            c.iter()
                .copied()
                .filter(|l| self.level[l.var().index()] == dl)
                .collect()
        };
        let mut idx = self.trail.len();
        loop {
            let c = cur(&clause);
            if c.len() == 2 {
                return Some((!c[0], !c[1]));
            }
            if c.len() < 2 {
                return None;
            }
            // Resolve on the latest current-level literal in the clause.
            let p = loop {
                idx -= 1;
                let p = self.trail[idx];
                if clause.contains(&!p) {
                    break p;
                }
            };
            let r = self.reason[p.var().index()]?;
            clause.retain(|&l| l != !p);
            for &q in self.db.lits(r) {
                if q != p && !clause.contains(&q) {
                    clause.push(q);
                }
            }
        }
    }
}
