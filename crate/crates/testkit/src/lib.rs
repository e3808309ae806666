//! Generators, oracles and property checks shared by the integration suites
//! of `mwg-core` and the acceptance target of `mwg-cli`.

pub mod gen;
pub mod oracle;
pub mod props;

pub use gen::{case, Case};
