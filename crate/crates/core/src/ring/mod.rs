//! Rings with involution: matrix rings, residue rings, the Klein four-group
//! ring over 𝔽_p, and products of two copies of a ring.

mod cancel;
mod codec;
mod descriptor;
mod element;

pub use cancel::{left_star_cancellable, right_star_cancellable};
pub use codec::{element_from_json, element_to_json, parse_element};
pub use descriptor::{BaseKind, GroupName, Involution, RingDescriptor};
pub use element::{Element, KleinElement, KLEIN_LABELS};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{is_prime, ModularInt, ScalarKind};

/// Largest ring that exhaustive operations will walk.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Structure {
    /// `integral` restricts rational entries to ℤ.
    Matrix { n: usize, base: ScalarKind, integral: bool },
    Modular { modulus: u64 },
    Klein { p: u64 },
    Product { factor: Box<Ring> },
}

/// A validated ring context. Elements are plain values; every operation
/// checks that its operands have the shape this ring expects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    descriptor: RingDescriptor,
    structure: Structure,
}

impl Ring {
    pub fn new(descriptor: RingDescriptor) -> Result<Ring> {
        use Involution::*;
        let bad = |msg: String| Err(Error::Descriptor(msg));
        let structure = match &descriptor {
            RingDescriptor::Matrix {
                size,
                base,
                modulus,
                involution,
            } => {
                if *size == 0 {
                    return bad("matrix size must be at least 1".into());
                }
                let (kind, integral) = match (base, modulus) {
                    (BaseKind::Integer, None) => (ScalarKind::Rational, true),
                    (BaseKind::Rational, None) => (ScalarKind::Rational, false),
                    (BaseKind::GaussianRational, None) => (ScalarKind::Gaussian, false),
                    (BaseKind::Modular, Some(m)) if *m >= 2 => (ScalarKind::Modular(*m), false),
                    (BaseKind::Modular, Some(m)) => return bad(format!("modulus {m} is below 2")),
                    (BaseKind::Modular, None) => return bad("modular base needs a modulus".into()),
                    (_, Some(_)) => return bad("modulus is only valid for a modular base".into()),
                };
                match involution {
                    Transpose => {}
                    ConjugateTranspose if kind == ScalarKind::Gaussian => {}
                    ConjugateTranspose => {
                        return bad("conjugate_transpose needs a gaussian_rational base".into())
                    }
                    Identity if *size == 1 => {}
                    other => return bad(format!("{other:?} is not an involution of M_{size}")),
                }
                Structure::Matrix {
                    n: *size,
                    base: kind,
                    integral,
                }
            }
            RingDescriptor::Modular {
                modulus,
                involution,
            } => {
                if *modulus < 2 {
                    return bad(format!("modulus {modulus} is below 2"));
                }
                if *involution != Identity {
                    return bad(format!("{involution:?} is not valid for a residue ring"));
                }
                Structure::Modular { modulus: *modulus }
            }
            RingDescriptor::GroupRing { p, involution, .. } => {
                if !is_prime(*p) {
                    return bad(format!("group ring coefficients need a prime, got {p}"));
                }
                if !matches!(involution, SwapAb | Identity) {
                    return bad(format!("{involution:?} is not valid for a group ring"));
                }
                Structure::Klein { p: *p }
            }
            RingDescriptor::Product { factor, involution } => {
                let factor = Ring::new((**factor).clone())?;
                match involution {
                    Swap => {}
                    Identity if factor.is_commutative() => {}
                    other => return bad(format!("{other:?} is not valid for a product ring")),
                }
                Structure::Product {
                    factor: Box::new(factor),
                }
            }
        };
        Ok(Ring {
            descriptor,
            structure,
        })
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn involution(&self) -> Involution {
        self.descriptor.involution()
    }

    pub fn is_commutative(&self) -> bool {
        match &self.structure {
            Structure::Matrix { n, .. } => *n == 1,
            Structure::Modular { .. } | Structure::Klein { .. } => true,
            Structure::Product { factor } => factor.is_commutative(),
        }
    }

    /// `Some(n, base)` for a matrix ring, whatever the base.
    pub fn matrix_shape(&self) -> Option<(usize, ScalarKind)> {
        match &self.structure {
            Structure::Matrix { n, base, .. } => Some((*n, *base)),
            _ => None,
        }
    }

    /// Matrices over ℤ, held as integral rationals.
    pub fn is_integral(&self) -> bool {
        matches!(self.structure, Structure::Matrix { integral: true, .. })
    }

    /// `Some(n, base)` for matrix rings over a field or over ℤ: the rings
    /// handled by exact linear algebra rather than enumeration.
    pub fn linear_shape(&self) -> Option<(usize, ScalarKind)> {
        self.matrix_shape()
            .filter(|(_, base)| base.is_field() || self.is_integral())
    }

    /// `Some(n, base)` when this is a matrix ring over a field, where the
    /// linear-algebra paths apply.
    pub fn matrix_over_field(&self) -> Option<(usize, ScalarKind)> {
        self.matrix_shape()
            .filter(|(_, base)| base.is_field() && !self.is_integral())
    }

    /// Number of elements, or `None` for an infinite ring.
    pub fn cardinality(&self) -> Option<u128> {
        match &self.structure {
            Structure::Matrix { n, base, .. } => {
                let q = base.cardinality()? as u128;
                q.checked_pow((n * n) as u32)
            }
            Structure::Modular { modulus } => Some(*modulus as u128),
            Structure::Klein { p } => Some((*p as u128).pow(4)),
            Structure::Product { factor } => {
                let c = factor.cardinality()?;
                c.checked_mul(c)
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }

    pub fn zero(&self) -> Element {
        match &self.structure {
            Structure::Matrix { n, base, .. } => Element::Matrix(Matrix::zeros(*base, *n, *n)),
            Structure::Modular { modulus } => Element::Residue(ModularInt::new(0, *modulus)),
            Structure::Klein { p } => Element::GroupRing(KleinElement::new([0; 4], *p)),
            Structure::Product { factor } => Element::pair(factor.zero(), factor.zero()),
        }
    }

    pub fn one(&self) -> Element {
        match &self.structure {
            Structure::Matrix { n, base, .. } => Element::Matrix(Matrix::identity(*base, *n)),
            Structure::Modular { modulus } => Element::Residue(ModularInt::new(1, *modulus)),
            Structure::Klein { p } => Element::GroupRing(KleinElement::new([1, 0, 0, 0], *p)),
            Structure::Product { factor } => Element::pair(factor.one(), factor.one()),
        }
    }

    /// Integer multiple of the identity.
    pub fn from_i64(&self, n: i64) -> Element {
        match &self.structure {
            Structure::Matrix { n: size, base, .. } => {
                let mut m = Matrix::zeros(*base, *size, *size);
                for i in 0..*size {
                    m.set(i, i, base.from_i64(n));
                }
                Element::Matrix(m)
            }
            Structure::Modular { modulus } => Element::Residue(ModularInt::from_signed(n, *modulus)),
            Structure::Klein { p } => Element::GroupRing(KleinElement::new([n, 0, 0, 0], *p)),
            Structure::Product { factor } => Element::pair(factor.from_i64(n), factor.from_i64(n)),
        }
    }

    /// Verifies that `x` has the payload shape of this ring.
    pub fn check(&self, x: &Element) -> Result<()> {
        let ok = match (&self.structure, x) {
            (Structure::Matrix { n, base, integral }, Element::Matrix(m)) => {
                m.rows() == *n
                    && m.cols() == *n
                    && m.kind() == *base
                    && (!integral || m.entries().iter().all(|s| s.is_integer()))
            }
            (Structure::Modular { modulus }, Element::Residue(r)) => r.modulus() == *modulus,
            (Structure::Klein { p }, Element::GroupRing(g)) => g.p() == *p,
            (Structure::Product { factor }, Element::Pair(a, b)) => {
                return factor.check(a).and_then(|_| factor.check(b));
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{x}")))
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        self.add_unchecked(x, y)
    }

    fn add_unchecked(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(match (&self.structure, x, y) {
            (_, Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a.add(b)?),
            (_, Element::Residue(a), Element::Residue(b)) => Element::Residue(a.add(*b)?),
            (_, Element::GroupRing(a), Element::GroupRing(b)) => Element::GroupRing(a.add(b)),
            (Structure::Product { factor }, Element::Pair(a1, a2), Element::Pair(b1, b2)) => {
                Element::pair(factor.add_unchecked(a1, b1)?, factor.add_unchecked(a2, b2)?)
            }
            _ => return Err(Error::RingMismatch(format!("{x} + {y}"))),
        })
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(neg_payload(x))
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element> {
        self.add(x, &self.neg(y)?)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        self.mul_unchecked(x, y)
    }

    fn mul_unchecked(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(match (&self.structure, x, y) {
            (_, Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a.mul(b)?),
            (_, Element::Residue(a), Element::Residue(b)) => Element::Residue(a.mul(*b)?),
            (_, Element::GroupRing(a), Element::GroupRing(b)) => Element::GroupRing(a.mul(b)),
            (Structure::Product { factor }, Element::Pair(a1, a2), Element::Pair(b1, b2)) => {
                Element::pair(factor.mul_unchecked(a1, b1)?, factor.mul_unchecked(a2, b2)?)
            }
            _ => return Err(Error::RingMismatch(format!("{x} * {y}"))),
        })
    }

    /// Left-to-right product of all factors; the empty product is one.
    pub fn product(&self, factors: &[&Element]) -> Result<Element> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// The involution `x ↦ x*`.
    pub fn star(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(self.star_unchecked(x))
    }

    fn star_unchecked(&self, x: &Element) -> Element {
        match (&self.structure, x) {
            (Structure::Matrix { .. }, Element::Matrix(m)) => match self.involution() {
                Involution::ConjugateTranspose => Element::Matrix(m.conjugate_transpose()),
                Involution::Transpose => Element::Matrix(m.transpose()),
                _ => x.clone(),
            },
            (Structure::Klein { .. }, Element::GroupRing(g)) => match self.involution() {
                Involution::SwapAb => Element::GroupRing(g.swap_ab()),
                _ => x.clone(),
            },
            (Structure::Product { factor }, Element::Pair(a, b)) => match self.involution() {
                Involution::Swap => {
                    Element::pair(factor.star_unchecked(b), factor.star_unchecked(a))
                }
                _ => Element::pair(factor.star_unchecked(a), factor.star_unchecked(b)),
            },
            _ => x.clone(),
        }
    }

    /// `x^t` by repeated squaring, with `x^0 = 1`.
    pub fn pow(&self, x: &Element, t: u32) -> Result<Element> {
        self.check(x)?;
        let mut result = self.one();
        let mut base = x.clone();
        let mut e = t;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_unchecked(&result, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_unchecked(&base, &base)?;
            }
        }
        Ok(result)
    }

    pub fn is_idempotent(&self, x: &Element) -> Result<bool> {
        Ok(self.mul(x, x)? == *x)
    }

    /// Element number `index` in enumeration order: the payload read as a
    /// mixed-radix number whose first coordinate is least significant.
    pub fn element_at(&self, index: u128) -> Result<Element> {
        let card = self.cardinality().ok_or(Error::NotEnumerable)?;
        if index >= card {
            return Err(Error::Dimension(format!("index {index} out of range {card}")));
        }
        Ok(self.decode(index))
    }

    fn decode(&self, mut index: u128) -> Element {
        match &self.structure {
            Structure::Matrix { n, base, .. } => {
                let ScalarKind::Modular(q) = *base else {
                    unreachable!("only finite matrix rings are enumerated")
                };
                let data = (0..n * n)
                    .map(|_| {
                        let digit = (index % q as u128) as u64;
                        index /= q as u128;
                        crate::scalar::Scalar::Modular(ModularInt::new(digit, q))
                    })
                    .collect();
                Element::Matrix(Matrix::from_vec(*base, *n, *n, data).expect("shape is consistent"))
            }
            Structure::Modular { modulus } => Element::Residue(ModularInt::new(index as u64, *modulus)),
            Structure::Klein { p } => {
                let q = *p as u128;
                let mut coeffs = [0u64; 4];
                for c in &mut coeffs {
                    *c = (index % q) as u64;
                    index /= q;
                }
                Element::GroupRing(KleinElement::from_reduced(coeffs, *p))
            }
            Structure::Product { factor } => {
                let c = factor.cardinality().expect("finite factor");
                Element::pair(factor.decode(index % c), factor.decode(index / c))
            }
        }
    }

    /// All elements, each exactly once, in a fixed order.
    pub fn elements(&self) -> Result<impl Iterator<Item = Element> + '_> {
        let card = self.cardinality().ok_or(Error::NotEnumerable)?;
        if card > ENUMERATION_LIMIT {
            return Err(Error::TooLarge(card));
        }
        Ok((0..card).map(move |i| self.decode(i)))
    }

    pub fn idempotents(&self) -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for x in self.elements()? {
            if self.mul_unchecked(&x, &x)? == x {
                out.push(x);
            }
        }
        Ok(out)
    }
}

fn neg_payload(x: &Element) -> Element {
    match x {
        Element::Matrix(m) => Element::Matrix(m.neg()),
        Element::Residue(r) => Element::Residue(r.neg()),
        Element::GroupRing(g) => Element::GroupRing(g.neg()),
        Element::Pair(a, b) => Element::pair(neg_payload(a), neg_payload(b)),
    }
}
