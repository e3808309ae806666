use std::fmt;

use crate::linalg::Matrix;
use crate::scalar::ModularInt;

/// Group labels in coefficient order.
pub const KLEIN_LABELS: [char; 4] = ['e', 'a', 'b', 'c'];

/// `x₁e + x₂a + x₃b + x₄c` over 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KleinElement {
    coeffs: [u64; 4],
    p: u64,
}

impl KleinElement {
    pub fn new(coeffs: [i64; 4], p: u64) -> Self {
        let c = coeffs.map(|x| ModularInt::from_signed(x, p).value());
        KleinElement { coeffs: c, p }
    }

    pub(crate) fn from_reduced(coeffs: [u64; 4], p: u64) -> Self {
        KleinElement { coeffs, p }
    }

    pub fn coeffs(&self) -> [u64; 4] {
        self.coeffs
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let mut out = [0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (self.coeffs[i] + other.coeffs[i]) % self.p;
        }
        Self::from_reduced(out, self.p)
    }

    pub(crate) fn neg(&self) -> Self {
        Self::from_reduced(self.coeffs.map(|x| (self.p - x) % self.p), self.p)
    }

    /// Encoding e=00, a=01, b=10, c=11 turns the group law into XOR:
    /// a² = b² = c² = e, ab = c, ac = b, bc = a.
    pub(crate) fn mul(&self, other: &Self) -> Self {
        let p = self.p as u128;
        let mut acc = [0u128; 4];
        for g in 0..4 {
            for h in 0..4 {
                acc[g ^ h] += self.coeffs[g] as u128 * other.coeffs[h] as u128;
            }
        }
        Self::from_reduced(acc.map(|x| (x % p) as u64), self.p)
    }

    pub(crate) fn swap_ab(&self) -> Self {
        let [e, a, b, c] = self.coeffs;
        Self::from_reduced([e, b, a, c], self.p)
    }
}

impl fmt::Display for KleinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coef, label) in self.coeffs.iter().zip(KLEIN_LABELS) {
            if *coef == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if *coef != 1 {
                write!(f, "{coef}")?;
            }
            write!(f, "{label}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A ring element payload. Which ring it belongs to is carried by the
/// [`Ring`](super::Ring) handle that operates on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Matrix(Matrix),
    Residue(ModularInt),
    GroupRing(KleinElement),
    Pair(Box<Element>, Box<Element>),
}

impl Element {
    pub fn pair(x: Element, y: Element) -> Self {
        Element::Pair(Box::new(x), Box::new(y))
    }

    pub fn as_matrix(&self) -> Option<&Matrix> {
        match self {
            Element::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Matrix(m) => m.is_zero(),
            Element::Residue(r) => r.value() == 0,
            Element::GroupRing(g) => g.coeffs().iter().all(|&c| c == 0),
            Element::Pair(x, y) => x.is_zero() && y.is_zero(),
        }
    }
}

impl From<Matrix> for Element {
    fn from(m: Matrix) -> Self {
        Element::Matrix(m)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Matrix(m) => write!(f, "{m}"),
            Element::Residue(r) => write!(f, "{r}"),
            Element::GroupRing(g) => write!(f, "{g}"),
            Element::Pair(x, y) => write!(f, "({x},{y})"),
        }
    }
}
