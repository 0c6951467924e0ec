//! Scripted runs over the worked examples; each function panics on a mismatch.

use std::collections::BTreeSet;

use super::*;
use dipsat::analyze::ConflictGraph;
use dipsat::ercl::{build_post_dip_clause, build_pre_dip_clause, DipAnalysis};
use dipsat::search::ClauseRef;
use dipsat::tvd::{enumerate_pairs, find_all_tvds};
use dipsat::{DipChoice, DipConfig, DipFilter, Lit, Solver, SolverConfig, Var};

/// Decides the script literal by literal, propagating after each; the last
/// decision must produce the conflict.
fn drive(s: &mut Solver, script: &[Lit]) -> ClauseRef {
    for (i, &l) in script.iter().enumerate() {
        assert_eq!(s.value(l), None, "script literal {l:?} already assigned");
        s.decide(l);
        let confl = s.propagate();
        if i + 1 == script.len() {
            return confl.expect("no conflict at the end of the script");
        }
        assert!(confl.is_none(), "early conflict");
    }
    unreachable!()
}

fn pos_fn(s: &Solver) -> impl Fn(Lit) -> usize + '_ {
    move |l| s.trail().iter().position(|&t| t == l).unwrap()
}

/// Every DIP of the conflict with its pre- and post-DIP clauses over `z`.
fn all_dip_clauses(s: &Solver, g: &ConflictGraph, z: Var) -> Vec<(BTreeSet<i32>, Vec<i32>, Vec<i32>)> {
    let r = find_all_tvds(&g.problem);
    enumerate_pairs(&r)
        .into_iter()
        .map(|(a, b)| {
            let an = DipAnalysis::compute(g, a, b, |l| s.level_of(l.var()), pos_fn(s));
            let pair = [an.dip.0.to_dimacs(), an.dip.1.to_dimacs()].into_iter().collect();
            (
                pair,
                sorted(build_pre_dip_clause(&an, z)),
                sorted(build_post_dip_clause(&an, z)),
            )
        })
        .collect()
}

fn pair(a: i32, b: i32) -> BTreeSet<i32> {
    [a, b].into_iter().collect()
}

fn traced(dip: DipConfig, script: Vec<Lit>) -> SolverConfig {
    SolverConfig {
        decision_script: script,
        trace: true,
        ..SolverConfig::with_dip(dip)
    }
}

pub fn conflict_example_first_uip_lemma() {
    let (f, script) = example_conflict();
    let mut s = Solver::new(&f, traced(DipConfig::off(), script)).unwrap();
    let _ = s.solve().unwrap();
    let t = &s.traces()[0];
    assert_eq!(t.level, 5);
    assert_eq!(t.first_uip, Some(lit(x(5))));
    assert_eq!(
        sorted(t.lemma_1uip.clone()),
        sorted_dimacs(&[y(1), -y(3), -y(4), -y(5), y(6), -x(5)])
    );
    assert_eq!(t.lbd, 3);
    assert_eq!(t.backjump, 4);
}

pub fn conflict_example_all_dips_and_clauses() {
    let (f, script) = example_conflict();
    let mut s = Solver::new(&f, traced(DipConfig::off(), vec![])).unwrap();
    let confl = drive(&mut s, &script);
    let learned = s.analyze_1uip(confl);
    let g = s.extract_top_level_graph(confl, &learned);
    let z = Var::from_dimacs(21);
    let zl = 21;
    let pre_full = sorted_dimacs(&[-x(5), y(1), -y(3), -y(4), -y(5), y(6), zl]);
    let mut expected = vec![
        (pair(-x(12), x(13)), pre_full.clone(), sorted_dimacs(&[-zl])),
        (pair(x(11), x(13)), pre_full.clone(), sorted_dimacs(&[-zl])),
        (pair(-x(10), x(11)), pre_full.clone(), sorted_dimacs(&[-zl])),
        (pair(-x(9), x(11)), pre_full.clone(), sorted_dimacs(&[-zl, -y(4)])),
        (
            pair(x(8), -x(9)),
            sorted_dimacs(&[-x(5), y(1), -y(3), -y(4), zl]),
            sorted_dimacs(&[-zl, -y(4), -y(5), y(6)]),
        ),
    ];
    let mut got = all_dip_clauses(&s, &g, z);
    expected.sort();
    got.sort();
    assert_eq!(got, expected);
}

pub fn naive_rule_misses_the_only_dip() {
    let (f, script) = example_naive_miss();
    let mut s = Solver::new(&f, traced(DipConfig::off(), vec![])).unwrap();
    let confl = drive(&mut s, &script);
    let naive = s.naive_two_literal_cut(confl);
    let learned = s.analyze_1uip(confl);
    assert_eq!(learned.first_uip, lit(1));
    let g = s.extract_top_level_graph(confl, &learned);
    let dips: Vec<BTreeSet<i32>> = all_dip_clauses(&s, &g, Var::from_dimacs(8))
        .into_iter()
        .map(|d| d.0)
        .collect();
    assert_eq!(dips, vec![pair(2, 5)]);
    let found = naive.map(|(a, b)| pair(a.to_dimacs(), b.to_dimacs()));
    assert_ne!(found, Some(pair(2, 5)));
}

pub fn grid_example_two_conflicts() {
    let (f, script) = grid_example();
    let dip = DipConfig {
        choice: DipChoice::Middle,
        filter: DipFilter::Occ,
        min_occ: 1,
        ..DipConfig::baseline()
    };
    let mut cfg = traced(dip, script);
    cfg.conflict_limit = Some(2);
    let mut s = Solver::new(&f, cfg).unwrap();
    let _ = s.solve().unwrap();
    let t = s.traces();
    assert!(t.len() >= 2);
    let (xv, yv) = (13, 14);

    let first = &t[0];
    assert_eq!(first.level, 4);
    assert_eq!(first.first_uip, Some(lit(7)));
    let dips: BTreeSet<BTreeSet<i32>> = first
        .dips
        .iter()
        .map(|&(a, b)| pair(a.to_dimacs(), b.to_dimacs()))
        .collect();
    assert_eq!(dips, [pair(-9, -10), pair(-10, 12)].into_iter().collect());
    let d = first.dip.as_ref().expect("DIP learned at first conflict");
    assert_eq!(pair(d.pair.0.to_dimacs(), d.pair.1.to_dimacs()), pair(-9, -10));
    assert_eq!(d.z, Var::from_dimacs(xv));
    assert_eq!(
        sorted(d.pre.clone().unwrap()),
        sorted_dimacs(&[4, -5, -6, -7, xv as i32])
    );
    assert_eq!(sorted(d.post.clone()), sorted_dimacs(&[-(xv as i32), -11]));
    assert_eq!(first.backjump, 3);

    let second = &t[1];
    assert_eq!(second.level, 3);
    assert_eq!(second.first_uip, Some(lit(6)));
    let dips: BTreeSet<BTreeSet<i32>> = second
        .dips
        .iter()
        .map(|&(a, b)| pair(a.to_dimacs(), b.to_dimacs()))
        .collect();
    assert_eq!(dips, [pair(-7, -12), pair(10, -12)].into_iter().collect());
    let d = second.dip.as_ref().expect("DIP learned at second conflict");
    assert_eq!(pair(d.pair.0.to_dimacs(), d.pair.1.to_dimacs()), pair(-7, -12));
    assert_eq!(d.z, Var::from_dimacs(yv));
    assert_eq!(
        sorted(d.pre.clone().unwrap()),
        sorted_dimacs(&[3, 4, -5, -6, yv as i32])
    );
    assert_eq!(sorted(d.post.clone()), sorted_dimacs(&[-5, -(yv as i32)]));
}
