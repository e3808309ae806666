use mwg_core::catalog;
use mwg_core::drazin::drazin;
use mwg_core::inverse::{mwg_check, mwg_check_symmetric};
use mwg_testkit::{gen, props, Case};
use proptest::prelude::*;

fn run(suite: fn(&Case) -> props::Outcome, c: &Case) -> Result<(), TestCaseError> {
    suite(c).map_err(|e| TestCaseError::fail(format!("[{}] a = {}: {e}", c.domain, c.a)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn power_and_idempotent_identities(c in gen::case()) {
        run(props::power_pair_identities, &c)?;
    }

    #[test]
    fn weighted_and_hermitian_forms_agree(c in gen::case()) {
        run(props::symmetric_form_equivalence, &c)?;
    }

    #[test]
    fn lifts_reach_higher_orders(c in gen::case()) {
        run(props::lift_identity, &c)?;
    }

    #[test]
    fn powers_round_trip(c in gen::case()) {
        run(props::power_round_trip, &c)?;
    }
}

#[test]
fn forms_agree_on_every_candidate_in_m2_f3() {
    let ring = catalog::m2_f3();
    let all: Vec<_> = ring.elements().unwrap().collect();
    for a in &all {
        let k = drazin(&ring, a).unwrap().index;
        for x in &all {
            for m in 0..=2 {
                assert_eq!(
                    mwg_check(&ring, a, x, m, k).unwrap(),
                    mwg_check_symmetric(&ring, a, x, m, k).unwrap(),
                    "a = {a}, x = {x}, m = {m}"
                );
            }
        }
    }
}

#[test]
fn forms_agree_on_every_candidate_in_klein() {
    let ring = catalog::z3_klein();
    let all: Vec<_> = ring.elements().unwrap().collect();
    for a in &all {
        let k = drazin(&ring, a).unwrap().index;
        for x in &all {
            for m in 0..=2 {
                assert_eq!(
                    mwg_check(&ring, a, x, m, k).unwrap(),
                    mwg_check_symmetric(&ring, a, x, m, k).unwrap(),
                    "a = {a}, x = {x}, m = {m}"
                );
            }
        }
    }
}
