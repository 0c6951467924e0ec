use super::store::ExtDefStore;
use crate::formula::Lit;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReplaceLimits {
    pub max_len: usize,
    pub max_lbd: u32,
}

impl Default for ReplaceLimits {
    fn default() -> Self {
        ReplaceLimits {
            max_len: 30,
            max_lbd: 6,
        }
    }
}

/// Rewrites `!l1 | !l2 | C` to `!z | C` for every stored `z <-> l1 & l2`,
/// until no pair matches. Returns `None` when nothing changed or the lemma is
/// outside the limits.
pub fn try_replace_in_lemma(lemma: &[Lit], lbd: u32, store: &ExtDefStore, limits: ReplaceLimits) -> Option<Vec<Lit>> {
    if lemma.len() > limits.max_len || lbd > limits.max_lbd || store.is_empty() {
        return None;
    }
    let mut cur = lemma.to_vec();
    let mut changed = false;
    loop {
        let hit = cur.iter().find_map(|&l| {
            store.defs_with_lit(!l).iter().find_map(|&z| {
                let def = store.get(z).expect("indexed definition");
                let (n1, n2) = (!def.l1, !def.l2);
                (cur.contains(&n1) && cur.contains(&n2) && !cur.contains(&z.pos())).then_some((z, n1, n2))
            })
        });
        let Some((z, n1, n2)) = hit else { break };
        let at = cur.iter().position(|&x| x == n1 || x == n2).unwrap();
        cur.retain(|&x| x != n1 && x != n2);
        let nz = !z.pos();
        if !cur.contains(&nz) {
            cur.insert(at.min(cur.len()), nz);
        }
        changed = true;
    }
    changed.then_some(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ercl::store::ExtDef;
    use crate::formula::Var;
    use crate::search::{ClauseDb, ClauseKind};

    fn l(d: i32) -> Lit {
        Lit::from_dimacs(d)
    }

    fn store_with(defs: &[(i32, i32, i32)]) -> ExtDefStore {
        let mut db = ClauseDb::default();
        let mut st = ExtDefStore::default();
        for &(z, a, b) in defs {
            let cr = db.add(vec![l(z), l(a)], ClauseKind::Definition, 0);
            st.insert(ExtDef {
                z: Var::from_dimacs(z as u32),
                l1: l(a),
                l2: l(b),
                def_clauses: [cr; 3],
            });
        }
        st
    }

    #[test]
    fn replaces_matching_pair() {
        let st = store_with(&[(20, 10, -11)]);
        let out = try_replace_in_lemma(&[l(-10), l(11), l(3)], 2, &st, ReplaceLimits::default()).unwrap();
        assert_eq!(out, vec![l(-20), l(3)]);
    }

    #[test]
    fn no_match_is_unchanged() {
        let st = store_with(&[(20, 10, -11)]);
        assert_eq!(
            try_replace_in_lemma(&[l(-10), l(-11), l(3)], 2, &st, ReplaceLimits::default()),
            None
        );
    }

    #[test]
    fn long_lemma_skipped() {
        let st = store_with(&[(50, 1, 2)]);
        let lemma: Vec<Lit> = (1..=40).map(|d| l(-d)).collect();
        assert_eq!(try_replace_in_lemma(&lemma, 3, &st, ReplaceLimits::default()), None);
    }

    #[test]
    fn reaches_fixpoint_through_nested_defs() {
        // z20 <-> 1 & 2, z21 <-> z20 & 3
        let st = store_with(&[(20, 1, 2), (21, 20, 3)]);
        let out = try_replace_in_lemma(&[l(-1), l(-2), l(-3), l(4)], 3, &st, ReplaceLimits::default()).unwrap();
        assert_eq!(out, vec![l(-21), l(4)]);
    }
}
