//! Brute-force references written directly against ring arithmetic. They
//! share no code with the solvers beyond `Ring` itself.

use std::collections::BTreeSet;

use mwg_core::{Element, Ring};

fn mul(r: &Ring, x: &Element, y: &Element) -> Element {
    r.mul(x, y).expect("same ring")
}

fn pow(r: &Ring, x: &Element, t: u32) -> Element {
    (0..t).fold(r.one(), |acc, _| mul(r, &acc, x))
}

/// Smallest `k ≥ 1` and the unique `x` with `xa^{k+1} = aᵏ`, `xax = x`,
/// `ax = xa`, found by scanning every element for growing `k`.
pub fn brute_drazin(r: &Ring, a: &Element) -> (Element, u32) {
    let card = r.cardinality().expect("finite ring") as u32;
    for k in 1..=card.max(1) {
        let ak = pow(r, a, k);
        let ak1 = mul(r, &ak, a);
        for x in r.elements().expect("enumerable") {
            if mul(r, &x, &ak1) == ak && mul(r, &mul(r, &x, a), &x) == x && mul(r, a, &x) == mul(r, &x, a) {
                return (x, k);
            }
        }
    }
    panic!("element of a finite ring without a Drazin inverse");
}

/// The defining equations of an m-weak group inverse at index `k`.
pub fn defining_equations(r: &Ring, a: &Element, x: &Element, m: u32, k: u32) -> bool {
    let ak = pow(r, a, k);
    let am = pow(r, a, m);
    let ak_star = r.star(&ak).expect("same ring");
    let lhs_w = mul(r, &mul(r, &ak_star, &mul(r, &am, a)), x);
    mul(r, x, &mul(r, &ak, a)) == ak
        && mul(r, a, &mul(r, x, x)) == *x
        && lhs_w == mul(r, &ak_star, &am)
}

/// Every element satisfying the defining equations.
pub fn brute_family(r: &Ring, a: &Element, m: u32) -> BTreeSet<Element> {
    let (_, k) = brute_drazin(r, a);
    r.elements()
        .expect("enumerable")
        .filter(|x| defining_equations(r, a, x, m, k))
        .collect()
}

/// `{a^D + a^D·e·t·(1−e) : t ∈ R}` filtered by the weighted equation, with
/// `e = aa^D`.
pub fn parametrized_family(r: &Ring, a: &Element, m: u32) -> BTreeSet<Element> {
    let (d, k) = brute_drazin(r, a);
    let e = mul(r, a, &d);
    let f = r.sub(&r.one(), &e).expect("same ring");
    let corners: BTreeSet<Element> = r
        .elements()
        .expect("enumerable")
        .map(|t| mul(r, &mul(r, &e, &t), &f))
        .collect();
    corners
        .into_iter()
        .map(|z| r.add(&d, &mul(r, &d, &z)).expect("same ring"))
        .filter(|x| defining_equations(r, a, x, m, k))
        .collect()
}
