use super::family::mwg_solve;
use crate::drazin::drazin;
use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

/// For `a` with a unique m-weak group inverse `w`, evaluates
/// (1) `wa = aw`, (2) `(aⁿ)^W = wⁿ`, (3) `w` is the n-weak group inverse,
/// (4) `w = a^D`.
pub fn t4_harness(ring: &Ring, a: &Element, m: u32, n: u32) -> Result<[bool; 4]> {
    if m >= n {
        return Err(Error::Precondition(format!("need m < n, got m = {m}, n = {n}")));
    }
    let fam_m = mwg_solve(ring, a, m)?;
    if !fam_m.is_unique() {
        return Err(Error::NotApplicable(format!("{a} has no unique {m}-weak group inverse")));
    }
    let w = fam_m.canonical.expect("unique family has a member");

    let commutes = ring.mul(&w, a)? == ring.mul(a, &w)?;

    let a_n = ring.pow(a, n)?;
    let fam_power = mwg_solve(ring, &a_n, 1)?;
    let fam_n = mwg_solve(ring, a, n)?;
    if m >= 1 && !(fam_power.is_unique() && fam_n.is_unique()) {
        return Err(Error::Internal(format!("uniqueness of order {m} did not transfer to order {n}")));
    }
    let power = fam_power.is_unique() && fam_power.canonical == Some(ring.pow(&w, n)?);
    let coincide = fam_n.is_unique() && fam_n.canonical.as_ref() == Some(&w);
    let drazin_equal = drazin(ring, a)?.inverse == w;
    Ok([commutes, power, coincide, drazin_equal])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ring::{parse_element, BaseKind, Involution, RingDescriptor};

    #[test]
    fn trivial_cases() {
        let r = Ring::new(RingDescriptor::matrix(2, BaseKind::Rational, Involution::Transpose)).unwrap();
        let u = parse_element(&r, "[[1,1],[0,2]]").unwrap();
        assert_eq!(t4_harness(&r, &u, 1, 2).unwrap(), [true; 4]);
        let n = parse_element(&r, "[[0,1],[0,0]]").unwrap();
        assert_eq!(t4_harness(&r, &n, 1, 2).unwrap(), [true; 4]);
    }

    #[test]
    fn non_unique_is_rejected() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        assert!(matches!(t4_harness(&r, &a, 1, 2), Err(Error::NotApplicable(_))));
        assert!(matches!(t4_harness(&r, &a, 2, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn klein_sweep_is_all_or_nothing() {
        let r = catalog::z3_klein();
        for a in r.elements().unwrap() {
            let v = t4_harness(&r, &a, 1, 2).unwrap();
            assert!(v.iter().all(|&b| b == v[0]), "{a}: {v:?}");
        }
    }
}
