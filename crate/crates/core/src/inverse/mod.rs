//! m-weak group inverses: checking, the complete solution family, the
//! constructive formulas relating them to Drazin inverses and idempotents,
//! and the group-EP decomposition.
//!
//! Order `m = 0` is the pseudo core inverse and `m = 1` the weak group
//! inverse. Every m-weak group inverse of `a` has the form `a^D + a^D·z`
//! with `z ∈ aa^D·R·(1−aa^D)`, which turns the linear path into a single
//! affine system over the scalar field.

mod check;
mod construct;
mod family;
mod group_ep;
mod harness;

pub use check::{mwg_check, mwg_check_symmetric, mwg_equations, mwg_index, EquationReport, InverseCertificate};
pub use construct::{idempotent_align, mwg_from_power, mwg_lift, wg_from_idempotent, wg_of_power, wg_via_cancellable};
pub use family::{
    mwg_solve, mwg_solve_exhaustive, mwg_solve_given, mwg_solve_linear, pseudo_core, uniqueness_test,
    uniqueness_test_given, FamilySize, Members, SolutionFamily,
};
pub use group_ep::{group_ep_check, group_ep_decompose, GroupEpDecomposition};
pub use harness::t4_harness;
