//! Named rings and elements used by the regression fixtures, the CLI
//! `examples` command and the test suites.

use crate::ring::{parse_element, BaseKind, Element, Involution, Ring, RingDescriptor};

fn build(desc: RingDescriptor) -> Ring {
    Ring::new(desc).expect("catalog descriptors are valid")
}

fn el(ring: &Ring, text: &str) -> Element {
    parse_element(ring, text).expect("catalog elements parse")
}

/// M₂(ℚ(i)) under plain transpose.
pub fn gaussian_2x2() -> Ring {
    build(RingDescriptor::matrix(2, BaseKind::GaussianRational, Involution::Transpose))
}

/// The idempotent `[[1,0],[i,0]]`, which has a one-parameter family of
/// weak group inverses under transpose.
pub fn two_inverse_ring_and_a() -> (Ring, Element) {
    let r = gaussian_2x2();
    let a = el(&r, "[[1,0],[i,0]]");
    (r, a)
}

pub fn two_inverse_x1(r: &Ring) -> Element {
    el(r, "[[1,0],[i,0]]")
}

pub fn two_inverse_x2(r: &Ring) -> Element {
    el(r, "[[0,-i],[0,1]]")
}

/// Partner of the idempotent in the weak-proper failure witness.
pub fn two_inverse_b(r: &Ring) -> Element {
    el(r, "[[0,1],[0,0]]")
}

/// M₄(ℤ) under transpose.
pub fn integer_4x4() -> Ring {
    build(RingDescriptor::matrix(4, BaseKind::Integer, Involution::Transpose))
}

/// M₄(ℚ) under transpose.
pub fn rational_4x4() -> Ring {
    build(RingDescriptor::matrix(4, BaseKind::Rational, Involution::Transpose))
}

/// Index-3 matrix over ℤ that is 2-weak but not 1-weak group invertible.
/// Over ℚ its unique weak group inverse has entries 1/2.
pub fn four_by_four_ring_and_a() -> (Ring, Element) {
    let r = integer_4x4();
    let a = el(&r, "[[1,0,0,0],[1,0,1,0],[0,0,0,2],[0,0,0,0]]");
    (r, a)
}

pub fn four_by_four_a_squared(r: &Ring) -> Element {
    el(r, "[[1,0,0,0],[1,0,0,2],[0,0,0,0],[0,0,0,0]]")
}

pub fn four_by_four_drazin(r: &Ring) -> Element {
    el(r, "[[1,0,0,0],[1,0,0,0],[0,0,0,0],[0,0,0,0]]")
}

/// ℤ₄ with the identity involution.
pub fn z4() -> Ring {
    build(RingDescriptor::modular(4))
}

/// 𝔽₃ of the Klein four-group with a ↔ b.
pub fn z3_klein() -> Ring {
    build(RingDescriptor::klein(3, Involution::SwapAb))
}

/// 𝔽₅ × 𝔽₅ with `(x, y)* = (y, x)`.
pub fn f5_squared_swap() -> Ring {
    build(RingDescriptor::product(RingDescriptor::modular(5), Involution::Swap))
}

/// ℚ × ℚ with `(x, y)* = (y, x)`.
pub fn q_squared_swap() -> Ring {
    build(RingDescriptor::product(
        RingDescriptor::matrix(1, BaseKind::Rational, Involution::Identity),
        Involution::Swap,
    ))
}

/// M₂(𝔽₃) under transpose.
pub fn m2_f3() -> Ring {
    build(RingDescriptor::matrix_mod(2, 3, Involution::Transpose))
}

/// Every finite ring the suites sweep exhaustively.
pub fn finite_rings() -> Vec<(&'static str, Ring)> {
    vec![
        ("z4", z4()),
        ("z3-klein", z3_klein()),
        ("f5xf5-swap", f5_squared_swap()),
        ("m2-f3", m2_f3()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_stated_shapes() {
        let (r, a) = two_inverse_ring_and_a();
        assert!(r.is_idempotent(&a).unwrap());
        let (r, a) = four_by_four_ring_and_a();
        assert_eq!(r.pow(&a, 2).unwrap(), four_by_four_a_squared(&r));
        assert_eq!(finite_rings().len(), 4);
        assert_eq!(q_squared_swap().cardinality(), None);
    }
}
