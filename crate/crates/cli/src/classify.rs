use mwg_core::classify::{classify_finite, weak_proper_conditions};
use mwg_core::{Error, Ring, RingDescriptor};
use serde::Serialize;

use crate::exit::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub property: &'static str,
    pub kind: &'static str,
    pub element: String,
    pub partner: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionsReport {
    pub all_elements_unique: bool,
    pub idempotents_unique: bool,
    pub idempotent_pairs: bool,
    pub corner: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub ring: RingDescriptor,
    pub cardinality: u128,
    pub proper: bool,
    pub weak_proper: bool,
    pub idempotents_left_cancellable: bool,
    pub witnesses: Vec<WitnessReport>,
    pub conditions: ConditionsReport,
}

impl ClassificationReport {
    pub fn witness(&self, property: &str) -> Option<&WitnessReport> {
        self.witnesses.iter().find(|w| w.property == property)
    }
}

pub fn classify(ring: &Ring, verbose: bool) -> Result<ClassificationReport, CliError> {
    let cardinality = ring.cardinality().ok_or(Error::NotEnumerable)?;
    let c = classify_finite(ring, verbose)?;
    let mut witnesses = Vec::with_capacity(c.witnesses.len());
    for w in &c.witnesses {
        if !w.reverify(ring)? {
            return Err(CliError::internal(format!("refusing to report witness {} / {}", w.element, w.partner)));
        }
        witnesses.push(WitnessReport {
            property: w.kind.property(),
            kind: w.kind.label(),
            element: w.element.to_string(),
            partner: w.partner.to_string(),
        });
    }
    let cond = weak_proper_conditions(ring)?;
    Ok(ClassificationReport {
        ring: ring.descriptor().clone(),
        cardinality,
        proper: c.proper,
        weak_proper: c.weak_proper,
        idempotents_left_cancellable: c.idempotents_left_cancellable,
        witnesses,
        conditions: ConditionsReport {
            all_elements_unique: cond.all_elements_unique,
            idempotents_unique: cond.idempotents_unique,
            idempotent_pairs: cond.idempotent_pairs,
            corner: cond.corner,
            agree: cond.agree(),
        },
    })
}

pub fn render_plain(r: &ClassificationReport) -> String {
    let mut out = format!("elements                      {}\n", r.cardinality);
    for (name, flag) in [
        ("proper", r.proper),
        ("weak_proper", r.weak_proper),
        ("idempotents_left_cancellable", r.idempotents_left_cancellable),
    ] {
        out += &format!("{name:<29} {flag}\n");
        for w in r.witnesses.iter().filter(|w| w.property == name) {
            out += &format!("  {} witness {} with {}\n", w.kind, w.element, w.partner);
        }
    }
    let c = &r.conditions;
    out += &format!(
        "conditions                    {} {} {} {} ({})\n",
        c.all_elements_unique,
        c.idempotents_unique,
        c.idempotent_pairs,
        c.corner,
        if c.agree { "agree" } else { "DISAGREE" }
    );
    out
}
