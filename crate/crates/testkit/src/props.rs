//! One function per identity family. Each takes a generated [`Case`] and
//! returns a description of the first violated identity.

use mwg_core::drazin::drazin;
use mwg_core::inverse::{mwg_check, mwg_check_symmetric, mwg_lift, mwg_solve, Members, SolutionFamily};
use mwg_core::{Element, Result as CoreResult, Ring};

use crate::gen::Case;

pub type Outcome = Result<(), String>;
pub type Suite = fn(&Case) -> Outcome;

fn core<T>(r: CoreResult<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// `a^D + a^D·e·r·(1−e)` with `e = aa^D`. It satisfies the power and
/// idempotent equations of every order at the Drazin index.
pub fn weak_partner(ring: &Ring, a: &Element, d: &Element, r: &Element) -> CoreResult<Element> {
    let e = ring.mul(a, d)?;
    let f = ring.sub(&ring.one(), &e)?;
    let z = ring.product(&[&e, r, &f])?;
    ring.add(d, &ring.mul(d, &z)?)
}

/// A family member chosen by the case's coefficients.
pub fn pick_member(ring: &Ring, family: &SolutionFamily, coeffs: &[i64]) -> CoreResult<Option<Element>> {
    if !family.exists() {
        return Ok(None);
    }
    match &family.members {
        Members::Listed(xs) => {
            let i = coeffs.first().map_or(0, |c| c.unsigned_abs() as usize) % xs.len();
            Ok(Some(xs[i].clone()))
        }
        Members::Perturbations(z) => {
            let kind = ring.matrix_shape().expect("linear families live in matrix rings").1;
            let c: Vec<_> = (0..z.len()).map(|i| kind.from_i64(coeffs[i % coeffs.len()])).collect();
            family.member(ring, &c).map(Some)
        }
    }
}

/// `ax = aʲxʲ`, `xax = x`, `a^D = x^{k+1}aᵏ` and `aa^Dx = x`, `(ax)² = ax`,
/// `axa^D = a^D` for `x` satisfying the power and idempotent equations.
pub fn power_pair_identities(c: &Case) -> Outcome {
    let r = &c.ring;
    let d = core(drazin(r, &c.a))?;
    let k = d.index;
    let x = core(weak_partner(r, &c.a, &d.inverse, &c.r))?;
    let a = &c.a;
    let ak = core(r.pow(a, k))?;
    ensure(core(r.product(&[&x, &ak, a]))? == ak, || format!("xa^(k+1) != a^k for x = {x}"))?;
    ensure(core(r.product(&[a, &x, &x]))? == x, || format!("ax^2 != x for x = {x}"))?;

    let ax = core(r.mul(a, &x))?;
    for j in 2..=4 {
        let rhs = core(r.mul(&core(r.pow(a, j))?, &core(r.pow(&x, j))?))?;
        ensure(rhs == ax, || format!("ax != a^{j}x^{j} for x = {x}"))?;
    }
    ensure(core(r.product(&[&x, a, &x]))? == x, || format!("xax != x for x = {x}"))?;
    let recovered = core(r.mul(&core(r.pow(&x, k + 1))?, &ak))?;
    ensure(recovered == d.inverse, || format!("x^(k+1)a^k = {recovered} differs from a^D"))?;

    ensure(core(r.product(&[a, &d.inverse, &x]))? == x, || format!("aa^Dx != x for x = {x}"))?;
    ensure(core(r.is_idempotent(&ax))?, || format!("ax = {ax} is not idempotent"))?;
    ensure(core(r.product(&[a, &x, &d.inverse]))? == d.inverse, || format!("axa^D != a^D for x = {x}"))
}

/// The weighted equation and the Hermitian form select the same candidates,
/// for orders 0 to 2, on perturbed, arbitrary and family candidates.
pub fn symmetric_form_equivalence(c: &Case) -> Outcome {
    let r = &c.ring;
    let d = core(drazin(r, &c.a))?;
    let k = d.index;
    let mut candidates = vec![
        core(weak_partner(r, &c.a, &d.inverse, &c.r))?,
        core(weak_partner(r, &c.a, &d.inverse, &c.s))?,
        c.r.clone(),
        d.inverse.clone(),
    ];
    for m in 0..=2 {
        let family = core(mwg_solve(r, &c.a, m))?;
        if let Some(x) = core(pick_member(r, &family, &c.coeffs))? {
            candidates.push(x);
        }
        for x in &candidates {
            let def = core(mwg_check(r, &c.a, x, m, k))?;
            let sym = core(mwg_check_symmetric(r, &c.a, x, m, k))?;
            ensure(def == sym, || format!("order {m}: weighted {def}, Hermitian {sym} for x = {x}"))?;
        }
    }
    Ok(())
}

/// `x^{s+1}aˢ` is an (m+s)-weak group inverse and lies in that family.
pub fn lift_identity(c: &Case) -> Outcome {
    let r = &c.ring;
    let k = core(drazin(r, &c.a))?.index;
    for m in 0..=2 {
        let family = core(mwg_solve(r, &c.a, m))?;
        let Some(x) = core(pick_member(r, &family, &c.coeffs))? else {
            continue;
        };
        for s in 1..=2 {
            let y = core(mwg_lift(r, &c.a, &x, m, s, k))?;
            let expected = core(r.mul(&core(r.pow(&x, s + 1))?, &core(r.pow(&c.a, s))?))?;
            ensure(y == expected, || format!("lift returned {y}, expected {expected}"))?;
            ensure(core(mwg_check(r, &c.a, &y, m + s, k))?, || format!("lift {y} fails order {}", m + s))?;
            let target = core(mwg_solve(r, &c.a, m + s))?;
            ensure(core(target.contains(r, &y))?, || format!("lift {y} missing from order {} family", m + s))?;
        }
    }
    Ok(())
}

/// `x ↦ xᵐ` sends m-weak group inverses of `a` to weak group inverses of
/// `aᵐ`, `y ↦ a^{m−1}y` maps back, and `a^{m−1}xᵐ = x`.
pub fn power_round_trip(c: &Case) -> Outcome {
    let r = &c.ring;
    let k = core(drazin(r, &c.a))?.index;
    for m in 1..=3 {
        let a_m = core(r.pow(&c.a, m))?;
        let shift = core(r.pow(&c.a, m - 1))?;
        let k_m = core(drazin(r, &a_m))?.index;

        let family = core(mwg_solve(r, &c.a, m))?;
        if let Some(x) = core(pick_member(r, &family, &c.coeffs))? {
            let y = core(r.pow(&x, m))?;
            ensure(core(mwg_check(r, &a_m, &y, 1, k_m))?, || format!("x^{m} = {y} fails for a^{m}"))?;
            ensure(core(r.mul(&shift, &y))? == x, || format!("a^(m-1)x^m differs from x = {x}"))?;
        }

        let inner = core(mwg_solve(r, &a_m, 1))?;
        ensure(inner.exists() == family.exists(), || {
            format!("order {m} existence {} but a^{m} weak existence {}", family.exists(), inner.exists())
        })?;
        if let Some(y) = core(pick_member(r, &inner, &c.coeffs))? {
            let x = core(r.mul(&shift, &y))?;
            ensure(core(mwg_check(r, &c.a, &x, m, k))?, || format!("a^(m-1)y = {x} fails order {m}"))?;
        }
    }
    Ok(())
}

/// Every identity suite, in a fixed order.
pub const SUITES: [(&str, Suite); 4] = [
    ("power and idempotent identities", power_pair_identities),
    ("weighted vs Hermitian form", symmetric_form_equivalence),
    ("lift to higher order", lift_identity),
    ("power round trip", power_round_trip),
];

/// Runs every suite on one case.
pub fn all_identities(c: &Case) -> Outcome {
    for (name, suite) in SUITES {
        suite(c).map_err(|e| format!("{name} [{}]: {e}", c.domain))?;
    }
    Ok(())
}
