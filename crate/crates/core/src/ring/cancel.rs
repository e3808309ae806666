use super::{Element, Ring};
use crate::error::Result;
use crate::Verdict;

/// Exhaustive test of `a*ax = a*ay ⇒ ax = ay`, in difference form: a
/// failure is an `x` with `a*ax = 0` and `ax ≠ 0`.
pub fn left_star_cancellable(ring: &Ring, a: &Element) -> Result<Verdict<Element>> {
    let gram = ring.mul(&ring.star(a)?, a)?;
    for x in ring.elements()? {
        if ring.mul(&gram, &x)?.is_zero() && !ring.mul(a, &x)?.is_zero() {
            return Ok(Verdict::Fails(x));
        }
    }
    Ok(Verdict::Holds)
}

/// Exhaustive test of `xaa* = yaa* ⇒ xa = ya`; a failure is an `x` with
/// `xaa* = 0` and `xa ≠ 0`.
pub fn right_star_cancellable(ring: &Ring, a: &Element) -> Result<Verdict<Element>> {
    let gram = ring.mul(a, &ring.star(a)?)?;
    for x in ring.elements()? {
        if ring.mul(&x, &gram)?.is_zero() && !ring.mul(&x, a)?.is_zero() {
            return Ok(Verdict::Fails(x));
        }
    }
    Ok(Verdict::Holds)
}
