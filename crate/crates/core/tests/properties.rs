//! Semantic properties on seeded random instances of up to four atoms.

use aicrepair_oracle::suites::{
    self, aic_cases, closure_cases, lp_cases, normal_aic_cases, rev_cases, Outcome, RevShape,
};

const SEED: u64 = 0x5eed_0001;

fn assert_all(outcomes: Vec<Outcome>) {
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(Outcome::report)
        .collect();
    assert!(failed.is_empty(), "{}", failed.join("\n"));
}

#[test]
fn repair_semantics() {
    let cases = aic_cases(SEED, 300, 4, 4);
    assert_all(suites::run_all(&cases, &suites::AIC_PROPERTIES));
}

#[test]
fn repair_semantics_on_normal_programs() {
    let cases = normal_aic_cases(SEED + 1, 200, 4, 4);
    assert_all(suites::run_all(&cases, &suites::AIC_PROPERTIES));
}

#[test]
fn revision_semantics() {
    let cases = rev_cases(SEED + 2, 300, 4, 4, RevShape::Any);
    assert_all(suites::run_all(&cases, &suites::REVISION_PROPERTIES));
}

#[test]
fn revision_semantics_on_normal_programs() {
    let cases = rev_cases(SEED + 3, 200, 4, 4, RevShape::Normal);
    assert_all(suites::run_all(&cases, &suites::REVISION_PROPERTIES));
}

#[test]
fn proper_programs_and_constraints_agree() {
    let cases = rev_cases(SEED + 4, 300, 4, 4, RevShape::Proper);
    assert_all(suites::run_all(&cases, &suites::CROSS_PROPERTIES));
}

#[test]
fn shifting_transports_repairs() {
    let cases = aic_cases(SEED + 5, 200, 4, 4);
    assert_all(suites::run_all(&cases, &suites::SHIFT_AIC_PROPERTIES));
}

#[test]
fn shifting_transports_revisions() {
    let cases = rev_cases(SEED + 6, 200, 4, 4, RevShape::Any);
    assert_all(suites::run_all(&cases, &suites::SHIFT_REV_PROPERTIES));
}

#[test]
fn logic_programs() {
    let mut cases = lp_cases(SEED + 7, 200, 4, 4, false);
    cases.extend(lp_cases(SEED + 8, 100, 4, 4, true));
    assert_all(suites::run_all(&cases, &suites::LP_PROPERTIES));
}

#[test]
fn least_closure() {
    let cases = closure_cases(SEED + 9, 300, 4, 6);
    assert_all(vec![suites::run(
        "least closure",
        &cases,
        suites::least_closure_is_minimum,
    )]);
}
