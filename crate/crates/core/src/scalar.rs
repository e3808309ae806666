//! Exact scalars: arbitrary-precision rationals, Gaussian rationals and
//! residues modulo an integer.
//!
//! Every value is kept in canonical form (reduced fraction, residue in
//! `0..modulus`), so structural equality is mathematical equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An element of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `(a + bi)^-1 = (a - bi) / (a² + b²)`.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Self::new(&self.re / &norm, -&self.im / &norm))
    }
}

/// A residue class `value mod modulus` with `0 <= value < modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModularInt {
    value: u64,
    modulus: u64,
}

// Fallible arithmetic mirrors `Scalar`; the operator traits cannot report a modulus mismatch.
#[allow(clippy::should_implement_trait)]
impl ModularInt {
    /// Panics if `modulus < 2`; callers validate moduli when building rings.
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        ModularInt {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_signed(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        Self::new((value as i128).rem_euclid(m) as u64, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn same_modulus(self, other: Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::IncompatibleScalars(
                ScalarKind::Modular(self.modulus),
                ScalarKind::Modular(other.modulus),
            ))
        }
    }

    pub fn add(self, other: Self) -> Result<Self> {
        self.same_modulus(other)?;
        let sum = (self.value as u128 + other.value as u128) % self.modulus as u128;
        Ok(Self::new(sum as u64, self.modulus))
    }

    pub fn sub(self, other: Self) -> Result<Self> {
        self.add(other.neg())
    }

    pub fn neg(self) -> Self {
        Self::new(self.modulus - self.value, self.modulus)
    }

    pub fn mul(self, other: Self) -> Result<Self> {
        self.same_modulus(other)?;
        let prod = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Ok(Self::new(prod as u64, self.modulus))
    }

    /// Inverse when `gcd(value, modulus) = 1`.
    pub fn inverse(self) -> Option<Self> {
        let e = (self.value as i128).extended_gcd(&(self.modulus as i128));
        if e.gcd != 1 {
            return None;
        }
        Some(Self::new(
            e.x.rem_euclid(self.modulus as i128) as u64,
            self.modulus,
        ))
    }
}

impl fmt::Display for ModularInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarKind {
    Rational,
    Gaussian,
    Modular(u64),
}

impl ScalarKind {
    pub fn zero(self) -> Scalar {
        match self {
            ScalarKind::Rational => Scalar::Rational(Rational::zero()),
            ScalarKind::Gaussian => Scalar::Gaussian(GaussianRational::zero()),
            ScalarKind::Modular(m) => Scalar::Modular(ModularInt::new(0, m)),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            ScalarKind::Rational => Scalar::Rational(Rational::one()),
            ScalarKind::Gaussian => Scalar::Gaussian(GaussianRational::one()),
            ScalarKind::Modular(m) => Scalar::Modular(ModularInt::new(1, m)),
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            ScalarKind::Rational => Scalar::Rational(integer(n)),
            ScalarKind::Gaussian => {
                Scalar::Gaussian(GaussianRational::new(integer(n), Rational::zero()))
            }
            ScalarKind::Modular(m) => Scalar::Modular(ModularInt::from_signed(n, m)),
        }
    }

    /// Residue rings count as fields only for prime moduli.
    pub fn is_field(self) -> bool {
        match self {
            ScalarKind::Rational | ScalarKind::Gaussian => true,
            ScalarKind::Modular(m) => is_prime(m),
        }
    }

    pub fn cardinality(self) -> Option<u64> {
        match self {
            ScalarKind::Modular(m) => Some(m),
            _ => None,
        }
    }

    /// Parses scalar text of this kind.
    ///
    /// Rationals are `p/q` or `p`; Gaussian rationals are `a+bi`, `a-bi`,
    /// `bi` or `a` with rational `a`, `b`; residues are decimal digits
    /// reduced modulo the modulus.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        match self {
            ScalarKind::Rational => parse_rational(text).map(Scalar::Rational),
            ScalarKind::Gaussian => parse_gaussian(text).map(Scalar::Gaussian),
            ScalarKind::Modular(m) => parse_residue(text, m).map(Scalar::Modular),
        }
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarKind::Rational => f.write_str("rational"),
            ScalarKind::Gaussian => f.write_str("gaussian_rational"),
            ScalarKind::Modular(m) => write!(f, "modular({m})"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(Rational),
    Gaussian(GaussianRational),
    Modular(ModularInt),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rational(_) => ScalarKind::Rational,
            Scalar::Gaussian(_) => ScalarKind::Gaussian,
            Scalar::Modular(m) => ScalarKind::Modular(m.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian(g) => g.is_zero(),
            Scalar::Modular(m) => m.value() == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.kind().one()
    }

    /// Rational with denominator 1; residues count as integers.
    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_integer(),
            Scalar::Gaussian(g) => g.re.is_integer() && g.im.is_integer(),
            Scalar::Modular(_) => true,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::IncompatibleScalars(self.kind(), other.kind())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(x + y)),
            (Scalar::Gaussian(x), Scalar::Gaussian(y)) => Ok(Scalar::Gaussian(x.add(y))),
            (Scalar::Modular(x), Scalar::Modular(y)) => x.add(*y).map(Scalar::Modular),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Gaussian(x) => Scalar::Gaussian(x.neg()),
            Scalar::Modular(x) => Scalar::Modular(x.neg()),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(x * y)),
            (Scalar::Gaussian(x), Scalar::Gaussian(y)) => Ok(Scalar::Gaussian(x.mul(y))),
            (Scalar::Modular(x), Scalar::Modular(y)) => x.mul(*y).map(Scalar::Modular),
            _ => Err(self.mismatch(other)),
        }
    }

    /// Multiplicative inverse, or `None` for zero and zero divisors.
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(x) if x.is_zero() => None,
            Scalar::Rational(x) => Some(Scalar::Rational(x.recip())),
            Scalar::Gaussian(x) => x.inverse().map(Scalar::Gaussian),
            Scalar::Modular(x) => x.inverse().map(Scalar::Modular),
        }
    }

    /// Complex conjugation; the identity on rationals and residues.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Gaussian(x) => Scalar::Gaussian(x.conj()),
            other => other.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular(m) => write!(f, "{m}"),
            Scalar::Gaussian(g) => {
                if g.im.is_zero() {
                    return write!(f, "{}", g.re);
                }
                let mag = g.im.abs();
                let imag = if mag.is_one() {
                    "i".to_string()
                } else {
                    format!("{mag}i")
                };
                if g.re.is_zero() {
                    if g.im.is_negative() {
                        write!(f, "-{imag}")
                    } else {
                        write!(f, "{imag}")
                    }
                } else {
                    let sign = if g.im.is_negative() { '-' } else { '+' };
                    write!(f, "{}{sign}{imag}", g.re)
                }
            }
        }
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }

    fn sign(&mut self) -> i8 {
        if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).ok()?;
        s.parse().ok()
    }

    /// Unsigned `p` or `p/q`.
    fn magnitude(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if !self.eat(b'/') {
            return Ok(Some(Rational::from_integer(num)));
        }
        let den_pos = self.pos;
        let den = self
            .digits()
            .ok_or_else(|| Error::parse(den_pos, "expected denominator digits"))?;
        if den.is_zero() {
            return Err(Error::parse(den_pos, "zero denominator"));
        }
        Ok(Some(Rational::new(num, den)))
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    let sign = c.sign();
    let pos = c.pos;
    let value = c
        .magnitude()?
        .ok_or_else(|| Error::parse(pos, "expected digits"))?;
    c.skip_ws();
    if !c.at_end() {
        return Err(Error::parse(c.pos, "unexpected trailing characters"));
    }
    Ok(if sign < 0 { -value } else { value })
}

pub fn parse_gaussian(text: &str) -> Result<GaussianRational> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    if c.at_end() {
        return Err(Error::parse(0, "empty scalar"));
    }
    let mut re = Rational::zero();
    let mut im = Rational::zero();
    let mut seen_imag = false;
    let mut terms = 0;
    while !c.at_end() {
        let term_pos = c.pos;
        let sign = if terms == 0 {
            c.sign()
        } else if c.eat(b'+') {
            1
        } else if c.eat(b'-') {
            -1
        } else {
            return Err(Error::parse(c.pos, "expected '+' or '-' between terms"));
        };
        c.skip_ws();
        let mag = c.magnitude()?;
        let imag = c.eat(b'i');
        let value = match (mag, imag) {
            (Some(v), _) => v,
            (None, true) => Rational::one(),
            (None, false) => return Err(Error::parse(c.pos, "expected digits or 'i'")),
        };
        let value = if sign < 0 { -value } else { value };
        if imag {
            if seen_imag {
                return Err(Error::parse(term_pos, "repeated imaginary part"));
            }
            seen_imag = true;
            im = value;
        } else {
            if terms > 0 {
                return Err(Error::parse(term_pos, "real part must come first"));
            }
            re = value;
        }
        terms += 1;
        if terms > 2 {
            return Err(Error::parse(term_pos, "too many terms"));
        }
        c.skip_ws();
    }
    Ok(GaussianRational::new(re, im))
}

pub fn parse_residue(text: &str, modulus: u64) -> Result<ModularInt> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    if trimmed.is_empty() {
        return Err(Error::parse(offset, "empty residue"));
    }
    if let Some(bad) = trimmed.bytes().position(|b| !b.is_ascii_digit()) {
        return Err(Error::parse(offset + bad, "residues are decimal digits"));
    }
    let value: BigInt = trimmed
        .parse()
        .map_err(|_| Error::parse(offset, "invalid digits"))?;
    let reduced = value.mod_floor(&BigInt::from(modulus));
    let reduced: u64 = reduced
        .try_into()
        .map_err(|_| Error::parse(offset, "residue out of range"))?;
    Ok(ModularInt::new(reduced, modulus))
}
