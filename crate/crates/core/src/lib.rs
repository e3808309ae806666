//! Exact computation and verification of Drazin, pseudo core, weak group and
//! m-weak group inverses in unital rings with involution.
//!
//! Matrix rings over ℚ, ℚ(i) and 𝔽_p are handled by exact linear algebra;
//! finite rings (residue rings, the Klein four-group ring over 𝔽_p, products
//! and small matrix rings over 𝔽_p) can also be searched exhaustively, and
//! the two routes are cross-checked in the test suite.

pub mod catalog;
pub mod classify;
pub mod drazin;
pub mod error;
pub mod inverse;
pub mod linalg;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::{AffineSolution, Matrix};
pub use ring::{Element, Ring, RingDescriptor};
pub use scalar::{GaussianRational, ModularInt, Rational, Scalar, ScalarKind};

/// Outcome of a property check: it holds, or here is a counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}
