mod common;

use common::replay;

#[test]
fn conflict_example_first_uip_lemma() {
    replay::conflict_example_first_uip_lemma();
}

#[test]
fn conflict_example_all_dips_and_clauses() {
    replay::conflict_example_all_dips_and_clauses();
}

#[test]
fn naive_rule_misses_the_only_dip() {
    replay::naive_rule_misses_the_only_dip();
}

#[test]
fn grid_example_two_conflicts() {
    replay::grid_example_two_conflicts();
}
