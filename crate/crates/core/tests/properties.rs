//! Randomized laws for the algebra engine, 1000 cases each.

mod laws;

use laws::CASES;

fn check(law: laws::Law) {
    if let Err(e) = law(CASES) {
        panic!("{e}");
    }
}

#[test]
fn ring_axioms() {
    check(laws::ring_axioms);
}

#[test]
fn printed_polynomials_parse_back() {
    check(laws::printed_polynomials_parse_back);
}

#[test]
fn leibniz_rule() {
    check(laws::leibniz_rule);
}

#[test]
fn frobenius_matches_repeated_multiplication() {
    check(laws::frobenius_matches_repeated_multiplication);
}

#[test]
fn reduction_is_idempotent() {
    check(laws::reduction_is_idempotent);
}

#[test]
fn buchberger_output_passes_the_criterion() {
    check(laws::buchberger_output_passes_the_criterion);
}

#[test]
fn kernels_are_closed_under_sums_and_products() {
    check(laws::kernels_are_closed_under_sums_and_products);
}

#[test]
fn chart_derivation_matches_homogeneous_one() {
    check(laws::chart_derivation_matches_homogeneous_one);
}

#[test]
fn invariants_stay_invariant_on_every_chart() {
    check(laws::invariants_stay_invariant_on_every_chart);
}

const _: () = assert!(laws::CASES >= 1000);

#[test]
fn every_law_has_a_test() {
    assert_eq!(laws::LAWS.len(), 9);
}
