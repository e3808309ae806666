//! Ring-level properties of finite ∗-rings: proper, weak proper, and
//! left ∗-cancellability of idempotents, each with counterexamples.
//!
//! Weak properness has four equivalent formulations; all four are exposed
//! separately so they can be evaluated against each other.

use crate::drazin::drazin;
use crate::error::{Error, Result};
use crate::inverse::{mwg_solve, mwg_solve_exhaustive};
use crate::ring::{left_star_cancellable, right_star_cancellable, Element, Ring};
use crate::Verdict;

/// What a witness refutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `a*ax = 0` and `ax ≠ 0`.
    LeftCancellation,
    /// `xaa* = 0` and `xa ≠ 0`.
    RightCancellation,
    /// Idempotent `e` with `e*ex(1−e) = 0` and `ex(1−e) ≠ 0`.
    WeakProper,
    /// Idempotent `e` with `e*ex = 0` and `ex ≠ 0`.
    IdempotentCancellation,
}

impl WitnessKind {
    /// The classification flag this witness falsifies.
    pub fn property(self) -> &'static str {
        match self {
            WitnessKind::LeftCancellation | WitnessKind::RightCancellation => "proper",
            WitnessKind::WeakProper => "weak_proper",
            WitnessKind::IdempotentCancellation => "idempotents_left_cancellable",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            WitnessKind::LeftCancellation => "left_cancellation",
            WitnessKind::RightCancellation => "right_cancellation",
            WitnessKind::WeakProper => "weak_proper",
            WitnessKind::IdempotentCancellation => "idempotent_cancellation",
        }
    }
}

/// A counterexample: `element` is the offending `a` or `e`, `partner` the
/// `x` exhibiting the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub element: Element,
    pub partner: Element,
}

impl Witness {
    /// Re-checks the defining failure from scratch.
    pub fn reverify(&self, ring: &Ring) -> Result<bool> {
        let (a, x) = (&self.element, &self.partner);
        match self.kind {
            WitnessKind::LeftCancellation => left_failure(ring, a, x),
            WitnessKind::RightCancellation => {
                let gram = ring.mul(a, &ring.star(a)?)?;
                Ok(ring.mul(x, &gram)?.is_zero() && !ring.mul(x, a)?.is_zero())
            }
            WitnessKind::WeakProper => weak_proper_witness_check(ring, a, x),
            WitnessKind::IdempotentCancellation => Ok(ring.is_idempotent(a)? && left_failure(ring, a, x)?),
        }
    }
}

fn left_failure(ring: &Ring, a: &Element, x: &Element) -> Result<bool> {
    let gram = ring.mul(&ring.star(a)?, a)?;
    Ok(ring.mul(&gram, x)?.is_zero() && !ring.mul(a, x)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingClassification {
    pub proper: bool,
    pub weak_proper: bool,
    pub idempotents_left_cancellable: bool,
    pub witnesses: Vec<Witness>,
}

impl RingClassification {
    /// First witness recorded against `property`.
    pub fn witness_for(&self, property: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.kind.property() == property)
    }
}

/// Idempotents first, then every other element, each in enumeration order.
fn idempotents_then_rest(ring: &Ring) -> Result<Vec<Element>> {
    let (mut idem, mut rest) = (Vec::new(), Vec::new());
    for x in ring.elements()? {
        if ring.is_idempotent(&x)? {
            idem.push(x);
        } else {
            rest.push(x);
        }
    }
    idem.extend(rest);
    Ok(idem)
}

/// Exhaustive classification. Without `verbose` at most one witness per
/// failed property is kept.
pub fn classify_finite(ring: &Ring, verbose: bool) -> Result<RingClassification> {
    if !ring.is_finite() {
        return Err(Error::NotEnumerable);
    }
    let mut witnesses = Vec::new();

    let mut proper = true;
    for a in idempotents_then_rest(ring)? {
        for (kind, verdict) in [
            (WitnessKind::LeftCancellation, left_star_cancellable(ring, &a)?),
            (WitnessKind::RightCancellation, right_star_cancellable(ring, &a)?),
        ] {
            if let Verdict::Fails(x) = verdict {
                if proper || verbose {
                    witnesses.push(Witness { kind, element: a.clone(), partner: x });
                }
                proper = false;
            }
        }
        if !proper && !verbose {
            break;
        }
    }

    let mut weak_proper = true;
    for (e, x) in weak_proper_violations(ring, verbose)? {
        weak_proper = false;
        witnesses.push(Witness { kind: WitnessKind::WeakProper, element: e, partner: x });
    }

    let mut idempotents_left_cancellable = true;
    for e in ring.idempotents()? {
        if let Verdict::Fails(x) = left_star_cancellable(ring, &e)? {
            if idempotents_left_cancellable || verbose {
                witnesses.push(Witness {
                    kind: WitnessKind::IdempotentCancellation,
                    element: e,
                    partner: x,
                });
            }
            idempotents_left_cancellable = false;
            if !verbose {
                break;
            }
        }
    }

    Ok(RingClassification {
        proper,
        weak_proper,
        idempotents_left_cancellable,
        witnesses,
    })
}

/// Pairs `(e, x)` violating the corner condition; the first only unless
/// `all`.
fn weak_proper_violations(ring: &Ring, all: bool) -> Result<Vec<(Element, Element)>> {
    let one = ring.one();
    let mut out = Vec::new();
    for e in ring.idempotents()? {
        let f = ring.sub(&one, &e)?;
        let gram = ring.mul(&ring.star(&e)?, &e)?;
        for x in ring.elements()? {
            let corner = ring.product(&[&e, &x, &f])?;
            if !corner.is_zero() && ring.product(&[&gram, &x, &f])?.is_zero() {
                out.push((e.clone(), x));
                if !all {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// Whether `(e, x)` certifies that the ring is not weak proper:
/// `e*ex(1−e) = 0` while `ex(1−e) ≠ 0`. Works in any ring.
pub fn weak_proper_witness_check(ring: &Ring, e: &Element, x: &Element) -> Result<bool> {
    if !ring.is_idempotent(e)? {
        return Err(Error::InvalidWitness(format!("{e} is not idempotent")));
    }
    let f = ring.sub(&ring.one(), e)?;
    let corner = ring.product(&[e, x, &f])?;
    let weighted = ring.product(&[&ring.star(e)?, e, x, &f])?;
    Ok(weighted.is_zero() && !corner.is_zero())
}

/// The corner condition over every idempotent and element.
pub fn corner_condition(ring: &Ring) -> Result<Verdict<(Element, Element)>> {
    if !ring.is_finite() {
        return Err(Error::NotEnumerable);
    }
    Ok(match weak_proper_violations(ring, false)?.pop() {
        Some(pair) => Verdict::Fails(pair),
        None => Verdict::Holds,
    })
}

/// For idempotents with `eR = fR` (`ef = f`, `fe = e`) and `e*f = e*e`,
/// forces `e = f`; a violating pair otherwise.
pub fn idempotent_pair_condition(ring: &Ring) -> Result<Verdict<(Element, Element)>> {
    let idem = ring.idempotents()?;
    for e in &idem {
        let e_star = ring.star(e)?;
        let e_star_e = ring.mul(&e_star, e)?;
        for f in &idem {
            if e == f {
                continue;
            }
            let same_ideal = ring.mul(e, f)? == *f && ring.mul(f, e)? == *e;
            if same_ideal && ring.mul(&e_star, f)? == e_star_e {
                return Ok(Verdict::Fails((e.clone(), f.clone())));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Every idempotent has exactly one weak group inverse, counted by
/// exhaustive search; the first offender otherwise.
pub fn idempotent_wg_unique(ring: &Ring) -> Result<Verdict<Element>> {
    for e in ring.idempotents()? {
        let d = drazin(ring, &e)?;
        let family = mwg_solve_exhaustive(ring, &e, 1, &d)?;
        if family.size().value() != 1 {
            return Ok(Verdict::Fails(e));
        }
    }
    Ok(Verdict::Holds)
}

/// Every element has at most one weak group inverse.
pub fn all_elements_wg_unique(ring: &Ring) -> Result<Verdict<Element>> {
    for a in ring.elements()? {
        let family = mwg_solve(ring, &a, 1)?;
        if family.exists() && !family.is_unique() {
            return Ok(Verdict::Fails(a));
        }
    }
    Ok(Verdict::Holds)
}

/// The four equivalent formulations of weak properness, evaluated
/// independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeakProperConditions {
    pub all_elements_unique: bool,
    pub idempotents_unique: bool,
    pub idempotent_pairs: bool,
    pub corner: bool,
}

impl WeakProperConditions {
    pub fn as_array(&self) -> [bool; 4] {
        [self.all_elements_unique, self.idempotents_unique, self.idempotent_pairs, self.corner]
    }

    pub fn agree(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|&b| b == v[0])
    }
}

pub fn weak_proper_conditions(ring: &Ring) -> Result<WeakProperConditions> {
    Ok(WeakProperConditions {
        all_elements_unique: all_elements_wg_unique(ring)?.holds(),
        idempotents_unique: idempotent_wg_unique(ring)?.holds(),
        idempotent_pairs: idempotent_pair_condition(ring)?.holds(),
        corner: corner_condition(ring)?.holds(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ring::parse_element;

    #[test]
    fn z4_classification() {
        let r = catalog::z4();
        let c = classify_finite(&r, false).unwrap();
        assert!(!c.proper);
        assert!(c.weak_proper);
        assert!(c.idempotents_left_cancellable);
        assert_eq!(c.witness_for("proper").unwrap().element, r.from_i64(2));
        assert_eq!(c.witnesses.len(), 1);
    }

    #[test]
    fn klein_classification() {
        let r = catalog::z3_klein();
        let c = classify_finite(&r, false).unwrap();
        assert!(!c.proper);
        assert!(c.weak_proper);
        let w = c.witness_for("proper").unwrap();
        assert_eq!(w.element, parse_element(&r, "2e+a").unwrap());
        assert!(w.reverify(&r).unwrap());
    }

    #[test]
    fn swapped_square_classification() {
        let r = catalog::f5_squared_swap();
        let c = classify_finite(&r, false).unwrap();
        assert!(c.weak_proper);
        assert!(!c.idempotents_left_cancellable);
        let w = c.witness_for("idempotents_left_cancellable").unwrap();
        assert_eq!(w.element, parse_element(&r, "(1,0)").unwrap());
        assert!(w.reverify(&r).unwrap());
    }

    #[test]
    fn verbose_lifts_the_cap() {
        let r = catalog::z3_klein();
        let terse = classify_finite(&r, false).unwrap();
        let full = classify_finite(&r, true).unwrap();
        assert!(full.witnesses.len() > terse.witnesses.len());
        for w in &full.witnesses {
            assert!(w.reverify(&r).unwrap(), "{w:?}");
        }
    }

    #[test]
    fn witness_pair_in_gaussian_matrices() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        assert!(weak_proper_witness_check(&r, &a, &catalog::two_inverse_b(&r)).unwrap());
        assert!(!weak_proper_witness_check(&r, &r.one(), &catalog::two_inverse_b(&r)).unwrap());
        assert!(!weak_proper_witness_check(&r, &a, &a).unwrap());
        let b = catalog::two_inverse_b(&r);
        assert!(matches!(weak_proper_witness_check(&r, &b, &a), Err(Error::InvalidWitness(_))));
    }

    #[test]
    fn infinite_rings_are_not_classified() {
        let (r, _) = catalog::two_inverse_ring_and_a();
        assert_eq!(classify_finite(&r, false), Err(Error::NotEnumerable));
    }

    #[test]
    fn conditions_agree_on_small_rings() {
        for r in [catalog::z4(), catalog::z3_klein()] {
            let c = weak_proper_conditions(&r).unwrap();
            assert_eq!(c.as_array(), [true; 4]);
        }
    }
}
