//! Built-in regression fixtures. Each one recomputes a published example
//! from scratch and compares it with the published value. A corrupted run
//! compares against a deliberately wrong expectation instead, so the harness
//! itself can be shown to fail.

use mwg_core::catalog;
use mwg_core::classify::{weak_proper_witness_check, Witness, WitnessKind};
use mwg_core::drazin::{drazin, drazin_matrix};
use mwg_core::inverse::{mwg_check, mwg_solve, uniqueness_test};
use mwg_core::ring::parse_element;

use crate::analyze::{analyze, AnalyzeOptions, SizeReport};
use crate::classify::classify;

type Check = Result<(), String>;

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    run: fn(bool) -> Check,
}

impl Fixture {
    pub fn run(&self, corrupt: bool) -> Check {
        (self.run)(corrupt)
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn stable(orders: &[u32]) -> AnalyzeOptions {
    AnalyzeOptions {
        orders: orders.to_vec(),
        stable: true,
        ..AnalyzeOptions::default()
    }
}

fn two_inverse(corrupt: bool) -> Check {
    let (r, a) = catalog::two_inverse_ring_and_a();
    let rep = analyze(&r, &a, &stable(&[1])).map_err(err)?;
    let o = rep.order(1).ok_or("missing order 1")?;
    expect("exists", o.exists, true)?;
    expect("unique", o.unique, false)?;
    let dim = if corrupt { 2 } else { 1 };
    expect("size", o.size.clone(), SizeReport { kind: "dimension", value: dim })?;
    let family = mwg_solve(&r, &a, 1).map_err(err)?;
    for x in [catalog::two_inverse_x1(&r), catalog::two_inverse_x2(&r)] {
        expect(&format!("{x} verifies"), mwg_check(&r, &a, &x, 1, 1).map_err(err)?, true)?;
        expect(&format!("{x} in family"), family.contains(&r, &x).map_err(err)?, true)?;
    }
    Ok(())
}

fn m4_drazin(corrupt: bool) -> Check {
    let (r, a) = catalog::four_by_four_ring_and_a();
    let d = drazin_matrix(&r, &a).map_err(err)?;
    expect("A^D", d.inverse.to_string(), catalog::four_by_four_drazin(&r).to_string())?;
    expect("index of A", d.index, if corrupt { 4 } else { 3 })?;
    let a2 = r.pow(&a, 2).map_err(err)?;
    expect("A²", a2.to_string(), catalog::four_by_four_a_squared(&r).to_string())?;
    expect("index of A²", drazin(&r, &a2).map_err(err)?.index, 2)
}

fn m4_weak_order(corrupt: bool) -> Check {
    let (r, a) = catalog::four_by_four_ring_and_a();
    let rep = analyze(&r, &a, &stable(&[1, 2])).map_err(err)?;
    expect("index", rep.drazin.index, Some(3))?;
    expect("order 1 exists", rep.order(1).ok_or("missing order 1")?.exists, corrupt)?;
    expect("order 2 exists", rep.order(2).ok_or("missing order 2")?.exists, true)
}

fn z4(corrupt: bool) -> Check {
    let rep = classify(&catalog::z4(), false).map_err(err)?;
    expect("proper", rep.proper, corrupt)?;
    expect("proper witness", rep.witness("proper").map(|w| w.element.as_str()), Some("2"))?;
    expect("weak proper", rep.weak_proper, true)?;
    expect("idempotents cancellable", rep.idempotents_left_cancellable, true)
}

fn z3_klein(corrupt: bool) -> Check {
    let r = catalog::z3_klein();
    let rep = classify(&r, false).map_err(err)?;
    expect("proper", rep.proper, false)?;
    let want = if corrupt { "e+a" } else { "2e+a" };
    expect("proper witness", rep.witness("proper").map(|w| w.element.as_str()), Some(want))?;
    expect("weak proper", rep.weak_proper, true)?;
    let published = Witness {
        kind: WitnessKind::LeftCancellation,
        element: parse_element(&r, "2e+a").map_err(err)?,
        partner: parse_element(&r, "2e+2b").map_err(err)?,
    };
    expect("(2e+a)*(2e+a)(2e+2b) = 0 with (2e+a)(2e+2b) ≠ 0", published.reverify(&r).map_err(err)?, true)
}

fn f5_squared(corrupt: bool) -> Check {
    let rep = classify(&catalog::f5_squared_swap(), false).map_err(err)?;
    expect("weak proper", rep.weak_proper, true)?;
    expect("idempotents cancellable", rep.idempotents_left_cancellable, corrupt)?;
    expect(
        "cancellation witness",
        rep.witness("idempotents_left_cancellable").map(|w| w.element.as_str()),
        Some("(1,0)"),
    )
}

fn witness_pair(corrupt: bool) -> Check {
    let (r, a) = catalog::two_inverse_ring_and_a();
    let b = catalog::two_inverse_b(&r);
    expect("(A, B) witnesses weak improperness", weak_proper_witness_check(&r, &a, &b).map_err(err)?, !corrupt)?;
    expect("A has several weak group inverses", uniqueness_test(&r, &a).map_err(err)?.holds(), false)
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture { name: "two-inverse", description: "[[1,0],[i,0]] has a line of weak group inverses", run: two_inverse },
        Fixture { name: "m4-drazin", description: "Drazin inverse and indices of the 4×4 integer matrix", run: m4_drazin },
        Fixture { name: "m4-weak-order", description: "the 4×4 matrix is 2-weak but not 1-weak invertible", run: m4_weak_order },
        Fixture { name: "z4", description: "ℤ₄ is weak proper but not proper", run: z4 },
        Fixture { name: "z3-klein", description: "ℤ₃[Klein] is weak proper but not proper", run: z3_klein },
        Fixture { name: "f5xf5-swap", description: "𝔽₅×𝔽₅ has a non-cancellable idempotent", run: f5_squared },
        Fixture { name: "witness-pair", description: "(A, B) refutes weak properness of M₂(ℚ(i))", run: witness_pair },
    ]
}

/// One line per fixture whose name contains `filter`, and whether all passed.
pub fn run_examples(filter: Option<&str>, corrupt: Option<&str>) -> (Vec<String>, bool) {
    let mut lines = Vec::new();
    let mut ok = true;
    for f in fixtures() {
        if filter.is_some_and(|p| !f.name.contains(p)) {
            continue;
        }
        match f.run(corrupt == Some(f.name)) {
            Ok(()) => lines.push(format!("PASS  {:<14} {}", f.name, f.description)),
            Err(why) => {
                ok = false;
                lines.push(format!("FAIL  {:<14} {why}", f.name));
            }
        }
    }
    (lines, ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        let (lines, ok) = run_examples(None, None);
        assert!(ok, "{lines:#?}");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn every_fixture_detects_corruption() {
        for f in fixtures() {
            assert!(f.run(true).is_err(), "{}", f.name);
        }
    }

    #[test]
    fn filters() {
        assert_eq!(run_examples(Some("m4"), None).0.len(), 2);
        assert!(run_examples(Some("nothing"), None).0.is_empty());
    }
}
