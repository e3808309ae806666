use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

/// Truth value of each defining equation for a candidate `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquationReport {
    /// (i) `xa^{k+1} = aᵏ`
    pub power: bool,
    /// (ii) `ax² = x`
    pub idempotent: bool,
    /// (iii) `(aᵏ)*a^{m+1}x = (aᵏ)*aᵐ`
    pub weighted: bool,
    /// (iv) `(aᵐ)*a^{m+1}x` is self-adjoint
    pub hermitian: bool,
}

impl EquationReport {
    /// (i), (ii) and (iii).
    pub fn definition_holds(&self) -> bool {
        self.power && self.idempotent && self.weighted
    }

    /// (i), (ii) and (iv).
    pub fn symmetric_holds(&self) -> bool {
        self.power && self.idempotent && self.hermitian
    }
}

/// The powers and products every check against a fixed `(a, m, k)` needs,
/// computed once so exhaustive scans only pay for the `x`-dependent part.
pub(crate) struct Prepared<'r> {
    ring: &'r Ring,
    a: Element,
    a_k: Element,
    a_k1: Element,
    weight_lhs: Element,
    weight_rhs: Element,
    gram: Element,
}

impl<'r> Prepared<'r> {
    pub(crate) fn new(ring: &'r Ring, a: &Element, m: u32, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("index k must be positive".into()));
        }
        let a_k = ring.pow(a, k)?;
        let a_k1 = ring.mul(&a_k, a)?;
        let a_m = ring.pow(a, m)?;
        let a_m1 = ring.mul(&a_m, a)?;
        let a_k_star = ring.star(&a_k)?;
        Ok(Prepared {
            ring,
            a: a.clone(),
            weight_lhs: ring.mul(&a_k_star, &a_m1)?,
            weight_rhs: ring.mul(&a_k_star, &a_m)?,
            gram: ring.mul(&ring.star(&a_m)?, &a_m1)?,
            a_k,
            a_k1,
        })
    }

    pub(crate) fn report(&self, x: &Element) -> Result<EquationReport> {
        let r = self.ring;
        r.check(x)?;
        let g = r.mul(&self.gram, x)?;
        Ok(EquationReport {
            power: r.mul(x, &self.a_k1)? == self.a_k,
            idempotent: r.product(&[&self.a, x, x])? == *x,
            weighted: r.mul(&self.weight_lhs, x)? == self.weight_rhs,
            hermitian: r.star(&g)? == g,
        })
    }

    /// Short-circuiting (i) ∧ (ii) ∧ (iii).
    pub(crate) fn holds(&self, x: &Element) -> Result<bool> {
        let r = self.ring;
        Ok(r.mul(x, &self.a_k1)? == self.a_k
            && r.product(&[&self.a, x, x])? == *x
            && r.mul(&self.weight_lhs, x)? == self.weight_rhs)
    }
}

pub fn mwg_equations(ring: &Ring, a: &Element, x: &Element, m: u32, k: u32) -> Result<EquationReport> {
    Prepared::new(ring, a, m, k)?.report(x)
}

/// Whether `x` is an m-weak group inverse of `a` at index `k`.
pub fn mwg_check(ring: &Ring, a: &Element, x: &Element, m: u32, k: u32) -> Result<bool> {
    ring.check(x)?;
    Prepared::new(ring, a, m, k)?.holds(x)
}

/// As [`mwg_check`] with the third equation replaced by self-adjointness
/// of `(aᵐ)*a^{m+1}x`.
pub fn mwg_check_symmetric(ring: &Ring, a: &Element, x: &Element, m: u32, k: u32) -> Result<bool> {
    Ok(mwg_equations(ring, a, x, m, k)?.symmetric_holds())
}

/// Least `k ≤ max_k` at which `x` satisfies the definition.
pub fn mwg_index(ring: &Ring, a: &Element, x: &Element, m: u32, max_k: u32) -> Result<Option<u32>> {
    for k in 1..=max_k {
        if mwg_check(ring, a, x, m, k)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// A claimed m-weak group inverse together with the outcome of checking it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseCertificate {
    pub element: Element,
    pub witness: Element,
    pub order: u32,
    pub index: u32,
    pub verified: bool,
}

impl InverseCertificate {
    pub fn new(ring: &Ring, a: &Element, x: &Element, m: u32, k: u32) -> Result<Self> {
        Ok(InverseCertificate {
            element: a.clone(),
            witness: x.clone(),
            order: m,
            index: k,
            verified: mwg_check(ring, a, x, m, k)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn two_by_two_witnesses() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        assert!(mwg_check(&r, &a, &catalog::two_inverse_x1(&r), 1, 1).unwrap());
        assert!(mwg_check(&r, &a, &catalog::two_inverse_x2(&r), 1, 1).unwrap());
        let b = catalog::two_inverse_b(&r);
        let report = mwg_equations(&r, &a, &b, 1, 1).unwrap();
        assert!(!report.power);
        assert!(!report.definition_holds());
    }

    #[test]
    fn symmetric_form_on_examples() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        assert!(mwg_check_symmetric(&r, &a, &catalog::two_inverse_x2(&r), 1, 1).unwrap());
        assert!(mwg_check_symmetric(&r, &r.one(), &r.one(), 0, 1).unwrap());
    }

    #[test]
    fn drazin_inverse_of_four_by_four_is_a_three_weak_witness() {
        let (r, a) = catalog::four_by_four_ring_and_a();
        let d = catalog::four_by_four_drazin(&r);
        assert!(mwg_check(&r, &a, &d, 3, 3).unwrap());
        assert_eq!(mwg_index(&r, &a, &d, 3, 8).unwrap(), Some(3));
    }

    #[test]
    fn zero_index_is_rejected() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        assert!(matches!(mwg_check(&r, &a, &a, 1, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn certificate_records_outcome() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        let c = InverseCertificate::new(&r, &a, &catalog::two_inverse_b(&r), 1, 1).unwrap();
        assert!(!c.verified);
        assert_eq!(c.order, 1);
    }
}
