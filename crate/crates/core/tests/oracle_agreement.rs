//! Every checker and enumerator against the bitmask oracle.

use aicrepair_oracle::suites::{
    self, aic_cases, lp_cases, normal_aic_cases, rev_cases, Outcome, RevShape,
};

const SEED: u64 = 0x0_a61e;

fn assert_passed(o: Outcome) {
    assert!(o.passed(), "{}", o.report());
}

#[test]
fn repairs_match_oracle() {
    let cases = aic_cases(SEED, 250, 4, 4);
    assert_passed(suites::run("repairs", &cases, suites::aic_matches_oracle));
}

#[test]
fn normal_repairs_match_oracle() {
    let cases = normal_aic_cases(SEED + 1, 150, 4, 4);
    assert_passed(suites::run(
        "normal repairs",
        &cases,
        suites::aic_matches_oracle,
    ));
}

#[test]
fn revisions_match_oracle() {
    for (i, shape) in [RevShape::Any, RevShape::Proper, RevShape::Normal]
        .into_iter()
        .enumerate()
    {
        let cases = rev_cases(SEED + 2 + i as u64, 150, 4, 4, shape);
        assert_passed(suites::run("revisions", &cases, suites::rev_matches_oracle));
    }
}

#[test]
fn answer_sets_match_oracle() {
    let cases = lp_cases(SEED + 5, 250, 4, 4, false);
    assert_passed(suites::run(
        "answer sets",
        &cases,
        suites::lp_matches_oracle,
    ));
}

#[test]
fn five_atom_instances_match_oracle() {
    let cases = aic_cases(SEED + 6, 40, 5, 5);
    assert_passed(suites::run(
        "five atoms",
        &cases,
        suites::aic_matches_oracle,
    ));
    let cases = rev_cases(SEED + 7, 40, 5, 5, RevShape::Any);
    assert_passed(suites::run(
        "five atoms",
        &cases,
        suites::rev_matches_oracle,
    ));
}
