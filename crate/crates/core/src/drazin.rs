//! Drazin inverse and index.
//!
//! Matrices over a field go through the core-nilpotent decomposition; any
//! other finite ring is handled by walking the power sequence of `a` and
//! searching the ring for the inverse.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{Element, Ring};
use crate::scalar::{Scalar, ScalarKind};

/// `a^D` together with the Drazin index `i(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrazinResult {
    pub inverse: Element,
    pub index: u32,
}

/// Drazin inverse by whichever exact route the ring supports.
pub fn drazin(ring: &Ring, a: &Element) -> Result<DrazinResult> {
    drazin_with_cap(ring, a, None)
}

/// As [`drazin`], with an upper bound on the index accepted by the
/// finite-ring search.
pub fn drazin_with_cap(ring: &Ring, a: &Element, cap: Option<u32>) -> Result<DrazinResult> {
    if ring.linear_shape().is_some() {
        drazin_matrix(ring, a)
    } else if ring.is_finite() {
        match cap {
            Some(cap) => drazin_finite_capped(ring, a, cap),
            None => drazin_finite(ring, a),
        }
    } else {
        Err(Error::unsupported(
            "drazin",
            "neither a matrix ring over a field or ℤ nor a finite ring",
        ))
    }
}

/// Core-nilpotent decomposition `a = P·diag(C, N)·P⁻¹`, giving
/// `a^D = P·diag(C⁻¹, 0)·P⁻¹`. Over ℤ the rational result must be integral,
/// otherwise `a` has no Drazin inverse in the ring.
pub fn drazin_matrix(ring: &Ring, a: &Element) -> Result<DrazinResult> {
    let Some((n, kind)) = ring.linear_shape() else {
        return Err(Error::unsupported("drazin_matrix", "not a matrix ring over a field or ℤ"));
    };
    ring.check(a)?;
    let m = a.as_matrix().expect("checked matrix payload");

    // rank(aᵗ) strictly decreases until it stalls, so t ≤ n.
    let mut power = m.clone();
    let mut rank = power.rank()?;
    let mut index = None;
    for t in 1..=n {
        let next = power.mul(m)?;
        let next_rank = next.rank()?;
        if next_rank == rank {
            index = Some(t as u32);
            break;
        }
        power = next;
        rank = next_rank;
    }
    let index = index.ok_or_else(|| Error::Internal(format!("rank did not stabilise by {n}")))?;

    let inverse = if rank == 0 {
        Matrix::zeros(kind, n, n)
    } else {
        let (_, pivots) = power.rref()?;
        let mut columns: Vec<Vec<_>> = pivots.iter().map(|&c| power.column(c)).collect();
        columns.extend(power.kernel_basis()?);
        let p = columns_to_matrix(kind, n, &columns)?;
        let p_inv = p
            .inverse()?
            .ok_or_else(|| Error::Internal("core-nilpotent basis is singular".into()))?;
        let b = p_inv.mul(m)?.mul(&p)?;
        let core = b.submatrix(0..rank, 0..rank);
        if !b.submatrix(0..rank, rank..n).is_zero() || !b.submatrix(rank..n, 0..rank).is_zero() {
            return Err(Error::Internal("similarity is not block diagonal".into()));
        }
        let core_inv = core
            .inverse()?
            .ok_or_else(|| Error::Internal("core block is singular".into()))?;
        let padded = Matrix::block_diagonal(&core_inv, &Matrix::zeros(kind, n - rank, n - rank))?;
        p.mul(&padded)?.mul(&p_inv)?
    };
    if ring.is_integral() && !inverse.entries().iter().all(|s| s.is_integer()) {
        return Err(Error::NotDrazinInvertible(a.to_string()));
    }

    let result = DrazinResult {
        inverse: Element::Matrix(inverse),
        index,
    };
    verify(ring, a, &result)?;
    Ok(result)
}

fn columns_to_matrix(kind: ScalarKind, n: usize, cols: &[Vec<Scalar>]) -> Result<Matrix> {
    let mut p = Matrix::zeros(kind, n, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            p.set(r, c, v.clone());
        }
    }
    if p.cols() != n {
        return Err(Error::Internal(format!("basis has {} columns, expected {n}", p.cols())));
    }
    Ok(p)
}

/// Exhaustive Drazin inverse in a finite ring, accepting any index up to
/// the ring's cardinality.
pub fn drazin_finite(ring: &Ring, a: &Element) -> Result<DrazinResult> {
    drazin_finite_capped(ring, a, u32::MAX)
}

/// Exhaustive Drazin inverse, failing with [`Error::IndexCap`] when the
/// power-sequence preperiod exceeds `cap`.
pub fn drazin_finite_capped(ring: &Ring, a: &Element, cap: u32) -> Result<DrazinResult> {
    ring.check(a)?;
    let card = ring.cardinality().ok_or(Error::NotEnumerable)?;

    // First repeat aˢ = aᵗ, s < t; at most `card` distinct powers exist.
    let mut seen: HashMap<Element, u32> = HashMap::new();
    let mut current = a.clone();
    let mut t: u32 = 1;
    let preperiod = loop {
        if let Some(&s) = seen.get(&current) {
            break s;
        }
        if u128::from(t) > card {
            return Err(Error::Internal("power sequence longer than the ring".into()));
        }
        seen.insert(current.clone(), t);
        current = ring.mul(&current, a)?;
        t += 1;
    };
    if preperiod > cap {
        return Err(Error::IndexCap(cap));
    }

    let a_s = ring.pow(a, preperiod)?;
    let a_s1 = ring.mul(&a_s, a)?;
    let mut found = None;
    for x in ring.elements()? {
        if ring.mul(&x, &a_s1)? == a_s && drazin_core(ring, a, &x)? {
            found = Some(x);
            break;
        }
    }
    let inverse = found.ok_or_else(|| {
        Error::Internal(format!("no Drazin inverse found for {a} at index {preperiod}"))
    })?;

    // Validity at k is inherited by k+1, so descend while it holds.
    let mut index = preperiod;
    while index > 1 && drazin_check(ring, a, &inverse, index - 1)? {
        index -= 1;
    }
    let result = DrazinResult {
        inverse,
        index,
    };
    verify(ring, a, &result)?;
    Ok(result)
}

/// `xax = x` and `xa = ax`.
fn drazin_core(ring: &Ring, a: &Element, x: &Element) -> Result<bool> {
    let xa = ring.mul(x, a)?;
    Ok(xa == ring.mul(a, x)? && ring.mul(&xa, x)? == *x)
}

fn verify(ring: &Ring, a: &Element, r: &DrazinResult) -> Result<()> {
    if !drazin_check(ring, a, &r.inverse, r.index)? {
        return Err(Error::Internal(format!("{} fails the Drazin equations", r.inverse)));
    }
    if r.index > 1 && drazin_check(ring, a, &r.inverse, r.index - 1)? {
        return Err(Error::Internal(format!("index {} is not minimal", r.index)));
    }
    Ok(())
}

/// `xa^{k+1} = aᵏ`, `xax = x`, `xa = ax`.
pub fn drazin_check(ring: &Ring, a: &Element, x: &Element, k: u32) -> Result<bool> {
    ring.check(x)?;
    let a_k = ring.pow(a, k)?;
    let a_k1 = ring.mul(&a_k, a)?;
    Ok(ring.mul(x, &a_k1)? == a_k && drazin_core(ring, a, x)?)
}

/// `x^{k+1}aᵏ`, the Drazin inverse built from any `x` with
/// `xa^{k+1} = aᵏ` and `ax² = x`.
pub fn drazin_from_pair(ring: &Ring, a: &Element, x: &Element, k: u32) -> Result<Element> {
    let a_k = ring.pow(a, k)?;
    if ring.mul(x, &ring.mul(&a_k, a)?)? != a_k {
        return Err(Error::InvalidPair(format!("x·a^{} ≠ a^{k}", k + 1)));
    }
    if ring.product(&[a, x, x])? != *x {
        return Err(Error::InvalidPair("a·x² ≠ x".into()));
    }
    let d = ring.mul(&ring.pow(x, k + 1)?, &a_k)?;
    if !drazin_check(ring, a, &d, k)? {
        return Err(Error::Internal(format!("x^{}a^{k} fails the Drazin equations", k + 1)));
    }
    Ok(d)
}

/// Returns `x` when `xa^{k+1} = aᵏ`, `ax² = x` and `aᵐxⁿ = xⁿaᵐ`; such an
/// `x` is then `a^D`.
pub fn drazin_by_commuting_powers(
    ring: &Ring,
    a: &Element,
    x: &Element,
    m: u32,
    n: u32,
    k: u32,
) -> Result<Option<Element>> {
    ring.check(x)?;
    let a_k = ring.pow(a, k)?;
    if ring.mul(x, &ring.mul(&a_k, a)?)? != a_k || ring.product(&[a, x, x])? != *x {
        return Ok(None);
    }
    let a_m = ring.pow(a, m)?;
    let x_n = ring.pow(x, n)?;
    if ring.mul(&a_m, &x_n)? != ring.mul(&x_n, &a_m)? {
        return Ok(None);
    }
    Ok(Some(x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_element, BaseKind, Involution, RingDescriptor};

    fn ring(desc: RingDescriptor) -> Ring {
        Ring::new(desc).unwrap()
    }

    fn z4x4() -> Ring {
        ring(RingDescriptor::matrix(4, BaseKind::Integer, Involution::Transpose))
    }

    fn el(r: &Ring, text: &str) -> Element {
        parse_element(r, text).unwrap()
    }

    const A4: &str = "[[1,0,0,0],[1,0,1,0],[0,0,0,2],[0,0,0,0]]";
    const A4_D: &str = "[[1,0,0,0],[1,0,0,0],[0,0,0,0],[0,0,0,0]]";

    #[test]
    fn four_by_four_example() {
        let r = z4x4();
        let a = el(&r, A4);
        let d = drazin_matrix(&r, &a).unwrap();
        assert_eq!(d.inverse, el(&r, A4_D));
        assert_eq!(d.index, 3);
        assert!(!drazin_check(&r, &a, &d.inverse, 2).unwrap());

        let a2 = r.pow(&a, 2).unwrap();
        let d2 = drazin_matrix(&r, &a2).unwrap();
        assert_eq!(d2.inverse, el(&r, A4_D));
        assert_eq!(d2.index, 2);
    }

    #[test]
    fn nilpotent_and_zero() {
        let r = ring(RingDescriptor::matrix(2, BaseKind::Rational, Involution::Transpose));
        let d = drazin(&r, &el(&r, "[[0,1],[0,0]]")).unwrap();
        assert!(d.inverse.is_zero());
        assert_eq!(d.index, 2);
        let z = drazin(&r, &r.zero()).unwrap();
        assert!(z.inverse.is_zero());
        assert_eq!(z.index, 1);
    }

    #[test]
    fn invertible_matrix() {
        let r = ring(RingDescriptor::matrix(2, BaseKind::Rational, Involution::Transpose));
        let a = el(&r, "[[2,1],[0,1]]");
        let d = drazin(&r, &a).unwrap();
        assert_eq!(d.index, 1);
        assert_eq!(r.mul(&a, &d.inverse).unwrap(), r.one());
    }

    #[test]
    fn integer_matrices_need_integral_inverse() {
        let r = ring(RingDescriptor::matrix(1, BaseKind::Integer, Involution::Identity));
        assert_eq!(drazin(&r, &el(&r, "[[2]]")), Err(Error::NotDrazinInvertible("[[2]]".into())));
        assert_eq!(drazin(&r, &el(&r, "[[-1]]")).unwrap().inverse, el(&r, "[[-1]]"));
        let q = ring(RingDescriptor::matrix(1, BaseKind::Rational, Involution::Identity));
        assert_eq!(drazin(&q, &el(&q, "[[2]]")).unwrap().inverse, el(&q, "[[1/2]]"));
    }

    #[test]
    fn residues_mod_four() {
        let r = ring(RingDescriptor::modular(4));
        let d = drazin(&r, &r.from_i64(2)).unwrap();
        assert!(d.inverse.is_zero());
        assert_eq!(d.index, 2);
        let d = drazin(&r, &r.from_i64(3)).unwrap();
        assert_eq!(d.inverse, r.from_i64(3));
        assert_eq!(d.index, 1);
    }

    #[test]
    fn klein_idempotent_is_its_own_inverse() {
        let r = ring(RingDescriptor::klein(3, Involution::SwapAb));
        let a = el(&r, "2e+a");
        let d = drazin(&r, &a).unwrap();
        assert_eq!(d.inverse, a);
        assert_eq!(d.index, 1);
    }

    #[test]
    fn cap_is_enforced() {
        let r = ring(RingDescriptor::modular(8));
        assert_eq!(drazin_finite_capped(&r, &r.from_i64(2), 2), Err(Error::IndexCap(2)));
        assert_eq!(drazin_finite_capped(&r, &r.from_i64(2), 3).unwrap().index, 3);
    }

    #[test]
    fn matrix_and_finite_paths_agree_on_m2_f3() {
        let r = ring(RingDescriptor::matrix_mod(2, 3, Involution::Transpose));
        for a in r.elements().unwrap() {
            assert_eq!(drazin_matrix(&r, &a).unwrap(), drazin_finite(&r, &a).unwrap(), "{a}");
        }
    }

    #[test]
    fn infinite_non_matrix_is_unsupported() {
        let r = ring(RingDescriptor::product(
            RingDescriptor::matrix(1, BaseKind::Rational, Involution::Identity),
            Involution::Swap,
        ));
        assert!(matches!(drazin(&r, &r.one()), Err(Error::UnsupportedRing { .. })));
    }

    #[test]
    fn from_pair_and_commuting_powers() {
        let r = ring(RingDescriptor::matrix(2, BaseKind::GaussianRational, Involution::Transpose));
        let a = el(&r, "[[1,0],[i,0]]");
        let x2 = el(&r, "[[0,-i],[0,1]]");
        let d = drazin_from_pair(&r, &a, &x2, 1).unwrap();
        assert_eq!(d, r.product(&[&x2, &x2, &a]).unwrap());
        assert!(drazin_check(&r, &a, &d, 1).unwrap());
        assert_eq!(drazin_by_commuting_powers(&r, &a, &x2, 1, 1, 1).unwrap(), None);
        assert_eq!(drazin_by_commuting_powers(&r, &a, &a, 2, 3, 1).unwrap(), Some(a.clone()));

        let b = el(&r, "[[0,1],[0,0]]");
        assert!(matches!(drazin_from_pair(&r, &a, &b, 1), Err(Error::InvalidPair(_))));
    }

    #[test]
    fn idempotent_check() {
        let r = ring(RingDescriptor::matrix(2, BaseKind::GaussianRational, Involution::Transpose));
        let e = el(&r, "[[1,0],[i,0]]");
        assert!(drazin_check(&r, &e, &e, 1).unwrap());
    }
}
