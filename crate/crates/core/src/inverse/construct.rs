use super::check::mwg_check;
use super::family::{mwg_solve, solve_in_ring, Members, Projectors, SolutionFamily};
use crate::drazin::drazin;
use crate::error::{Error, Result};
use crate::ring::{left_star_cancellable, Element, Ring};

/// `a^D·f` for an idempotent `f` with `fR = aa^DR` and
/// `(a^D)*af = (a^D)*a`; the result is a weak group inverse of `a`.
pub fn wg_from_idempotent(ring: &Ring, a: &Element, f: &Element) -> Result<Element> {
    let d = drazin(ring, a)?;
    let e = ring.mul(a, &d.inverse)?;
    let bad = |why: &str| Err(Error::InvalidIdempotent(format!("{f}: {why}")));
    if !ring.is_idempotent(f)? {
        return bad("not idempotent");
    }
    if ring.mul(f, &e)? != e || ring.mul(&e, f)? != *f {
        return bad("fR differs from aa^DR");
    }
    let d_star_a = ring.mul(&ring.star(&d.inverse)?, a)?;
    if ring.mul(&d_star_a, f)? != d_star_a {
        return bad("(a^D)*af differs from (a^D)*a");
    }
    let x = ring.mul(&d.inverse, f)?;
    if !mwg_check(ring, a, &x, 1, d.index)? {
        return Err(Error::Internal(format!("a^D·f = {x} is not a weak group inverse")));
    }
    Ok(x)
}

/// `f = g + (1−g)e` for idempotents with `eg = g`; then `fR = eR` and
/// `gf = g`.
pub fn idempotent_align(ring: &Ring, g: &Element, e: &Element) -> Result<Element> {
    if !ring.is_idempotent(g)? || !ring.is_idempotent(e)? {
        return Err(Error::InvalidIdempotent("g and e must be idempotent".into()));
    }
    if ring.mul(e, g)? != *g {
        return Err(Error::InvalidIdempotent("gR is not contained in eR".into()));
    }
    let one_minus_g = ring.sub(&ring.one(), g)?;
    let f = ring.add(g, &ring.mul(&one_minus_g, e)?)?;
    let ok = ring.is_idempotent(&f)?
        && ring.mul(&f, e)? == *e
        && ring.mul(e, &f)? == f
        && ring.mul(g, &f)? == *g;
    if !ok {
        return Err(Error::Internal(format!("aligned idempotent {f} fails its identities")));
    }
    Ok(f)
}

/// Solves `(a^D)*a = (a^D)*a^D·x` and returns `(a^D)³x`, or `None` when the
/// equation has no solution. Sound when every idempotent of the ring is left
/// ∗-cancellable; finite rings are audited for that first, matrix rings rely
/// on the caller. A candidate that fails the definition is reported as a
/// precondition error.
pub fn wg_via_cancellable(ring: &Ring, a: &Element) -> Result<Option<Element>> {
    let d = drazin(ring, a)?;
    if ring.is_finite() {
        for e in ring.idempotents()? {
            if !left_star_cancellable(ring, &e)?.holds() {
                return Err(Error::Precondition(format!("idempotent {e} is not left ∗-cancellable")));
            }
        }
    }
    let d_star = ring.star(&d.inverse)?;
    let rhs = ring.mul(&d_star, a)?;
    let coeff = ring.mul(&d_star, &d.inverse)?;

    let x = if ring.linear_shape().is_some() {
        let proj = Projectors::new(ring, a, &d)?;
        let system = proj.left_multiplication(coeff.as_matrix().expect("matrix ring"))?;
        let rhs = rhs.as_matrix().expect("matrix ring");
        match solve_in_ring(ring, &system, rhs.entries())?.particular {
            Some(v) => proj.unflatten(v)?,
            None => return Ok(None),
        }
    } else {
        let mut found = None;
        for x in ring.elements()? {
            if ring.mul(&coeff, &x)? == rhs {
                found = Some(x);
                break;
            }
        }
        match found {
            Some(x) => x,
            None => return Ok(None),
        }
    };
    let w = ring.mul(&ring.pow(&d.inverse, 3)?, &x)?;
    if !mwg_check(ring, a, &w, 1, d.index)? {
        return Err(Error::Precondition(format!(
            "(a^D)³x = {w} is not a weak group inverse; idempotents are not all left ∗-cancellable"
        )));
    }
    Ok(Some(w))
}

/// `{a^{m−1}y : y a weak group inverse of aᵐ}`, each a member of the
/// m-weak family of `a`. Completeness is not claimed.
pub fn mwg_from_power(ring: &Ring, a: &Element, m: u32) -> Result<SolutionFamily> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let d = drazin(ring, a)?;
    let a_m = ring.pow(a, m)?;
    let shift = ring.pow(a, m - 1)?;
    let inner = mwg_solve(ring, &a_m, 1)?;
    let canonical = match &inner.canonical {
        Some(y) => Some(ring.mul(&shift, y)?),
        None => None,
    };
    // a^{m−1}(a^m)^D z = a^D z, so perturbations carry over unchanged.
    let members = match inner.members {
        Members::Perturbations(z) => Members::Perturbations(z),
        Members::Listed(ys) => {
            let mut xs = ys.iter().map(|y| ring.mul(&shift, y)).collect::<Result<Vec<_>>>()?;
            xs.sort();
            xs.dedup();
            Members::Listed(xs)
        }
    };
    let family = SolutionFamily {
        order: m,
        index: d.index,
        drazin: d.inverse,
        canonical,
        members,
    };
    let dims = family.size().value();
    for x in family.samples(ring, dims + 1)? {
        if !mwg_check(ring, a, &x, m, family.index)? {
            return Err(Error::Internal(format!("{x} from the power correspondence fails order {m}")));
        }
    }
    Ok(family)
}

/// `xᵐ`, a weak group inverse of `aᵐ` whenever `x` is an m-weak group
/// inverse of `a`.
pub fn wg_of_power(ring: &Ring, a: &Element, x: &Element, m: u32, k: u32) -> Result<Element> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    if !mwg_check(ring, a, x, m, k)? {
        return Err(Error::Precondition(format!("{x} is not an {m}-weak group inverse at index {k}")));
    }
    let a_m = ring.pow(a, m)?;
    let y = ring.pow(x, m)?;
    let k_m = drazin(ring, &a_m)?.index;
    if !mwg_check(ring, &a_m, &y, 1, k_m)? {
        return Err(Error::Internal(format!("x^{m} = {y} is not a weak group inverse of a^{m}")));
    }
    Ok(y)
}

/// `x^{s+1}aˢ`, an (m+s)-weak group inverse whenever `x` is an m-weak one.
pub fn mwg_lift(ring: &Ring, a: &Element, x: &Element, m: u32, s: u32, k: u32) -> Result<Element> {
    if !mwg_check(ring, a, x, m, k)? {
        return Err(Error::Precondition(format!("{x} is not an {m}-weak group inverse at index {k}")));
    }
    let y = ring.mul(&ring.pow(x, s + 1)?, &ring.pow(a, s)?)?;
    if !mwg_check(ring, a, &y, m + s, k)? {
        return Err(Error::Internal(format!("lift {y} fails order {}", m + s)));
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ring::{parse_element, BaseKind, Involution, RingDescriptor};

    #[test]
    fn idempotent_route_recovers_both_witnesses() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        for x in [catalog::two_inverse_x1(&r), catalog::two_inverse_x2(&r)] {
            let f = r.mul(&a, &x).unwrap();
            assert_eq!(wg_from_idempotent(&r, &a, &f).unwrap(), x);
        }
        let b = catalog::two_inverse_b(&r);
        assert!(matches!(wg_from_idempotent(&r, &a, &b), Err(Error::InvalidIdempotent(_))));
    }

    #[test]
    fn alignment_examples() {
        let r = Ring::new(RingDescriptor::matrix(2, BaseKind::Rational, Involution::Transpose)).unwrap();
        let e = r.one();
        let g = parse_element(&r, "[[1,0],[0,0]]").unwrap();
        assert_eq!(idempotent_align(&r, &g, &e).unwrap(), e);
        assert_eq!(idempotent_align(&r, &e, &e).unwrap(), e);
        assert_eq!(idempotent_align(&r, &r.zero(), &g).unwrap(), g);
        let h = parse_element(&r, "[[0,0],[0,1]]").unwrap();
        assert!(idempotent_align(&r, &g, &h).is_err());
    }

    #[test]
    fn cancellable_route_on_four_by_four() {
        let (r, a) = catalog::four_by_four_ring_and_a();
        assert_eq!(wg_via_cancellable(&r, &a).unwrap(), None);
        let a2 = catalog::four_by_four_a_squared(&r);
        let w = wg_via_cancellable(&r, &a2).unwrap().expect("A² is weak group invertible");
        assert!(mwg_check(&r, &a2, &w, 1, 2).unwrap());
        let u = parse_element(&r, "[[1,2,0,0],[0,1,0,0],[0,0,1,0],[1,0,0,1]]").unwrap();
        let w = wg_via_cancellable(&r, &u).unwrap().unwrap();
        assert_eq!(r.mul(&w, &u).unwrap(), r.one());
    }

    #[test]
    fn cancellable_route_rejects_bad_finite_ring() {
        let r = catalog::z3_klein();
        let a = parse_element(&r, "2e+a").unwrap();
        assert!(matches!(wg_via_cancellable(&r, &a), Err(Error::Precondition(_))));
        let z4 = catalog::z4();
        assert_eq!(wg_via_cancellable(&z4, &z4.from_i64(3)).unwrap(), Some(z4.from_i64(3)));
    }

    #[test]
    fn power_correspondence_on_four_by_four() {
        let (r, a) = catalog::four_by_four_ring_and_a();
        assert!(!mwg_from_power(&r, &a, 1).unwrap().exists());
        let fam = mwg_from_power(&r, &a, 2).unwrap();
        assert!(fam.exists());
        let x = fam.canonical.clone().unwrap();
        let y = wg_of_power(&r, &a, &x, 2, 3).unwrap();
        assert_eq!(y, r.pow(&x, 2).unwrap());
        let d = crate::drazin::drazin(&r, &a).unwrap().inverse;
        assert_eq!(crate::drazin::drazin_from_pair(&r, &a, &x, 3).unwrap(), d);
    }

    #[test]
    fn power_correspondence_m1_is_the_family() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        assert_eq!(mwg_from_power(&r, &a, 1).unwrap(), mwg_solve(&r, &a, 1).unwrap());
        let x2 = catalog::two_inverse_x2(&r);
        assert_eq!(wg_of_power(&r, &a, &x2, 1, 1).unwrap(), x2);
    }

    #[test]
    fn lift_examples() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        let x2 = catalog::two_inverse_x2(&r);
        let y = mwg_lift(&r, &a, &x2, 1, 1, 1).unwrap();
        assert_eq!(y, r.product(&[&x2, &x2, &a]).unwrap());
        assert!(mwg_check(&r, &a, &y, 2, 1).unwrap());
        assert!(matches!(mwg_lift(&r, &a, &a, 0, 3, 1), Err(Error::Precondition(_))));

        let q = Ring::new(RingDescriptor::matrix(2, BaseKind::Rational, Involution::Transpose)).unwrap();
        let e = parse_element(&q, "[[1,0],[0,0]]").unwrap();
        assert_eq!(mwg_lift(&q, &e, &e, 0, 3, 1).unwrap(), e);
    }
}
