use mwg_core::inverse::mwg_equations;
use mwg_core::{Element, Ring};
use serde::Serialize;

use crate::exit::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationsReport {
    pub power: bool,
    pub idempotent: bool,
    pub weighted: bool,
    pub hermitian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub element: String,
    pub candidate: String,
    pub m: u32,
    pub k: u32,
    pub equations: EquationsReport,
    /// (i), (ii) and (iii).
    pub holds: bool,
    /// (i), (ii) and (iv).
    pub symmetric_holds: bool,
}

pub fn check(ring: &Ring, a: &Element, x: &Element, m: u32, k: u32) -> Result<CheckReport, CliError> {
    let eq = mwg_equations(ring, a, x, m, k)?;
    Ok(CheckReport {
        element: a.to_string(),
        candidate: x.to_string(),
        m,
        k,
        equations: EquationsReport {
            power: eq.power,
            idempotent: eq.idempotent,
            weighted: eq.weighted,
            hermitian: eq.hermitian,
        },
        holds: eq.definition_holds(),
        symmetric_holds: eq.symmetric_holds(),
    })
}

pub fn render_plain(r: &CheckReport) -> String {
    let e = &r.equations;
    let mark = |b: bool| if b { "holds" } else { "FAILS" };
    format!(
        "(i)   xa^(k+1) = a^k            {}\n\
         (ii)  ax^2 = x                  {}\n\
         (iii) (a^k)*a^(m+1)x = (a^k)*a^m {}\n\
         (iv)  (a^m)*a^(m+1)x Hermitian  {}\n\
         verdict m = {}, k = {}: {}\n",
        mark(e.power),
        mark(e.idempotent),
        mark(e.weighted),
        mark(e.hermitian),
        r.m,
        r.k,
        if r.holds { "verified" } else { "rejected" }
    )
}
