use super::family::{mwg_solve_given, uniqueness_test_given};
use crate::drazin::drazin;
use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

/// `a = a₁ + a₂` with `a₁` group invertible, `a₂` nilpotent and
/// `a₁*a₂ = a₂a₁ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupEpDecomposition {
    pub a1: Element,
    pub a2: Element,
    /// Least `t ≥ 1` with `a₂ᵗ = 0`.
    pub nilpotency_index: u32,
}

/// Splits `a` through its unique weak group inverse `x`: `a₁ = a²x`.
pub fn group_ep_decompose(ring: &Ring, a: &Element) -> Result<GroupEpDecomposition> {
    let d = drazin(ring, a)?;
    if let Some(w) = uniqueness_test_given(ring, a, &d)?.witness() {
        return Err(Error::NotApplicable(format!("weak group inverse is not unique (perturbation {w})")));
    }
    let family = mwg_solve_given(ring, a, 1, &d)?;
    let x = family
        .canonical
        .ok_or_else(|| Error::NotApplicable(format!("{a} has no weak group inverse")))?;
    let a1 = ring.product(&[a, a, &x])?;
    let a2 = ring.sub(a, &a1)?;

    let mut power = a2.clone();
    let mut t = 1;
    while !power.is_zero() {
        if t >= d.index {
            return Err(Error::Internal(format!("a₂ = {a2} is not nilpotent by index {}", d.index)));
        }
        power = ring.mul(&power, &a2)?;
        t += 1;
    }
    let out = GroupEpDecomposition { a1, a2, nilpotency_index: t };
    if !group_ep_check(ring, a, &out.a1, &out.a2)? {
        return Err(Error::Internal(format!("({}, {}) fails the decomposition axioms", out.a1, out.a2)));
    }
    Ok(out)
}

/// Whether `(a₁, a₂)` is a group-EP decomposition of `a`.
pub fn group_ep_check(ring: &Ring, a: &Element, a1: &Element, a2: &Element) -> Result<bool> {
    if ring.add(a1, a2)? != *a {
        return Ok(false);
    }
    if !ring.mul(&ring.star(a1)?, a2)?.is_zero() || !ring.mul(a2, a1)?.is_zero() {
        return Ok(false);
    }
    // Nilpotent exactly when the Drazin inverse vanishes.
    if !drazin(ring, a2)?.inverse.is_zero() {
        return Ok(false);
    }
    Ok(a1.is_zero() || drazin(ring, a1)?.index == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ring::{parse_element, BaseKind, Involution, RingDescriptor};

    #[test]
    fn residue_two_is_nilpotent_part() {
        let r = catalog::z4();
        let two = r.from_i64(2);
        let g = group_ep_decompose(&r, &two).unwrap();
        assert!(g.a1.is_zero());
        assert_eq!(g.a2, two);
        assert_eq!(g.nilpotency_index, 2);
        assert!(!group_ep_check(&r, &two, &two, &r.zero()).unwrap());
    }

    #[test]
    fn group_invertible_and_nilpotent_extremes() {
        let r = Ring::new(RingDescriptor::matrix(2, BaseKind::Rational, Involution::Transpose)).unwrap();
        let u = parse_element(&r, "[[1,2],[0,3]]").unwrap();
        let g = group_ep_decompose(&r, &u).unwrap();
        assert_eq!((g.a1.clone(), g.a2.is_zero()), (u.clone(), true));
        assert!(group_ep_check(&r, &u, &u, &r.zero()).unwrap());

        let n = parse_element(&r, "[[0,1],[0,0]]").unwrap();
        let g = group_ep_decompose(&r, &n).unwrap();
        assert!(g.a1.is_zero());
        assert_eq!(g.a2, n);
        assert_eq!(g.nilpotency_index, 2);

        let z = group_ep_decompose(&r, &r.zero()).unwrap();
        assert!(z.a1.is_zero() && z.a2.is_zero());
        assert_eq!(z.nilpotency_index, 1);
    }

    #[test]
    fn four_by_four_square() {
        let (r, a) = catalog::four_by_four_ring_and_a();
        let a2 = catalog::four_by_four_a_squared(&r);
        let g = group_ep_decompose(&r, &a2).unwrap();
        assert!(group_ep_check(&r, &a2, &g.a1, &g.a2).unwrap());
        assert!(matches!(group_ep_decompose(&r, &a), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn non_unique_is_not_applicable() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        assert!(matches!(group_ep_decompose(&r, &a), Err(Error::NotApplicable(_))));
    }
}
