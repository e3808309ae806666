use std::time::Instant;

use mwg_core::drazin::{drazin_check, drazin_with_cap, DrazinResult};
use mwg_core::inverse::{group_ep_check, group_ep_decompose, mwg_check, mwg_solve_given, FamilySize};
use mwg_core::{Element, Error, Ring, RingDescriptor};
use serde::Serialize;

use crate::exit::CliError;

/// Members listed per order.
pub const SAMPLE_LIMIT: usize = 3;

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub orders: Vec<u32>,
    pub group_ep: bool,
    pub stable: bool,
    pub max_k: u32,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            orders: vec![0, 1, 2],
            group_ep: false,
            stable: false,
            max_k: 16,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DrazinReport {
    pub exists: bool,
    pub index: Option<u32>,
    pub inverse: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeReport {
    /// `dimension` of the perturbation space, or `count` of listed members.
    pub kind: &'static str,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub m: u32,
    pub exists: bool,
    pub unique: bool,
    pub canonical: Option<String>,
    pub size: SizeReport,
    pub samples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupEpReport {
    pub applicable: bool,
    pub a1: Option<String>,
    pub a2: Option<String>,
    pub nilpotency_index: Option<u32>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub drazin_ms: f64,
    pub orders_ms: f64,
    pub group_ep_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub ring: RingDescriptor,
    pub element: String,
    pub drazin: DrazinReport,
    pub orders: Vec<OrderReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_ep: Option<GroupEpReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl AnalysisReport {
    pub fn order(&self, m: u32) -> Option<&OrderReport> {
        self.orders.iter().find(|o| o.m == m)
    }
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

fn absent(m: u32) -> OrderReport {
    OrderReport {
        m,
        exists: false,
        unique: false,
        canonical: None,
        size: SizeReport { kind: "count", value: 0 },
        samples: Vec::new(),
    }
}

fn order_report(ring: &Ring, a: &Element, m: u32, d: &DrazinResult) -> Result<OrderReport, CliError> {
    let family = mwg_solve_given(ring, a, m, d)?;
    let samples = family.samples(ring, SAMPLE_LIMIT)?;
    for x in &samples {
        if !mwg_check(ring, a, x, m, d.index)? {
            return Err(CliError::internal(format!("refusing to report {x}: it fails order {m}")));
        }
    }
    let size = match family.size() {
        FamilySize::Dimension(d) => SizeReport { kind: "dimension", value: d },
        FamilySize::Count(c) => SizeReport { kind: "count", value: c },
    };
    Ok(OrderReport {
        m,
        exists: family.exists(),
        unique: family.is_unique(),
        canonical: family.canonical.as_ref().map(Element::to_string),
        size,
        samples: samples.iter().map(Element::to_string).collect(),
    })
}

fn group_ep_report(ring: &Ring, a: &Element) -> Result<GroupEpReport, CliError> {
    let declined = |reason: String| GroupEpReport {
        applicable: false,
        a1: None,
        a2: None,
        nilpotency_index: None,
        reason: Some(reason),
    };
    match group_ep_decompose(ring, a) {
        Ok(g) => {
            if !group_ep_check(ring, a, &g.a1, &g.a2)? {
                return Err(CliError::internal(format!("refusing to report ({}, {})", g.a1, g.a2)));
            }
            Ok(GroupEpReport {
                applicable: true,
                a1: Some(g.a1.to_string()),
                a2: Some(g.a2.to_string()),
                nilpotency_index: Some(g.nilpotency_index),
                reason: None,
            })
        }
        Err(e @ (Error::NotApplicable(_) | Error::NotDrazinInvertible(_))) => Ok(declined(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

pub fn analyze(ring: &Ring, a: &Element, opts: &AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    let start = Instant::now();
    let drazin = match drazin_with_cap(ring, a, Some(opts.max_k)) {
        Ok(d) => Some(d),
        Err(Error::NotDrazinInvertible(_)) => None,
        Err(e) => return Err(e.into()),
    };
    if let Some(d) = &drazin {
        if !drazin_check(ring, a, &d.inverse, d.index)? {
            return Err(CliError::internal(format!("refusing to report Drazin inverse {}", d.inverse)));
        }
    }
    let drazin_ms = ms(start);

    let start = Instant::now();
    let mut orders = Vec::with_capacity(opts.orders.len());
    for &m in &opts.orders {
        orders.push(match &drazin {
            Some(d) => order_report(ring, a, m, d)?,
            None => absent(m),
        });
    }
    let orders_ms = ms(start);

    let start = Instant::now();
    let group_ep = if opts.group_ep { Some(group_ep_report(ring, a)?) } else { None };
    let group_ep_ms = ms(start);

    Ok(AnalysisReport {
        ring: ring.descriptor().clone(),
        element: a.to_string(),
        drazin: DrazinReport {
            exists: drazin.is_some(),
            index: drazin.as_ref().map(|d| d.index),
            inverse: drazin.as_ref().map(|d| d.inverse.to_string()),
        },
        orders,
        group_ep,
        timings: (!opts.stable).then_some(Timings {
            drazin_ms,
            orders_ms,
            group_ep_ms,
        }),
    })
}

pub fn render_plain(r: &AnalysisReport) -> String {
    let mut out = format!("element  {}\n", r.element);
    match (&r.drazin.inverse, r.drazin.index) {
        (Some(inv), Some(k)) => out += &format!("drazin   index {k}, inverse {inv}\n"),
        _ => out += "drazin   none\n",
    }
    out += "m  exists  unique  size          canonical\n";
    for o in &r.orders {
        out += &format!(
            "{:<2} {:<7} {:<7} {:<13} {}\n",
            o.m,
            o.exists,
            o.unique,
            format!("{} {}", o.size.kind, o.size.value),
            o.canonical.as_deref().unwrap_or("-")
        );
    }
    if let Some(g) = &r.group_ep {
        match (&g.a1, &g.a2) {
            (Some(a1), Some(a2)) => out += &format!("group-ep a1 = {a1}, a2 = {a2}\n"),
            _ => out += &format!("group-ep n/a: {}\n", g.reason.as_deref().unwrap_or("")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mwg_core::catalog;

    fn stable(orders: &[u32]) -> AnalyzeOptions {
        AnalyzeOptions {
            orders: orders.to_vec(),
            stable: true,
            ..AnalyzeOptions::default()
        }
    }

    #[test]
    fn two_inverse_report() {
        let (r, a) = catalog::two_inverse_ring_and_a();
        let rep = analyze(&r, &a, &stable(&[1])).unwrap();
        let o = rep.order(1).unwrap();
        assert!(o.exists && !o.unique);
        assert_eq!(o.size, SizeReport { kind: "dimension", value: 1 });
        assert_eq!(o.samples.len(), 2);
        assert!(rep.timings.is_none());
    }

    #[test]
    fn four_by_four_report() {
        let (r, a) = catalog::four_by_four_ring_and_a();
        let rep = analyze(&r, &a, &stable(&[1, 2])).unwrap();
        assert_eq!(rep.drazin.index, Some(3));
        assert!(!rep.order(1).unwrap().exists);
        assert!(rep.order(2).unwrap().exists);
    }

    #[test]
    fn not_drazin_invertible_over_integers() {
        let r = catalog::integer_4x4();
        let a = mwg_core::ring::parse_element(&r, "[[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]").unwrap();
        let rep = analyze(&r, &a, &AnalyzeOptions { group_ep: true, ..stable(&[0, 1]) }).unwrap();
        assert!(!rep.drazin.exists);
        assert!(rep.orders.iter().all(|o| !o.exists));
        assert!(!rep.group_ep.unwrap().applicable);
    }

    #[test]
    fn group_ep_section() {
        let r = catalog::z4();
        let rep = analyze(&r, &r.from_i64(2), &AnalyzeOptions { group_ep: true, ..stable(&[1]) }).unwrap();
        let g = rep.group_ep.clone().unwrap();
        assert!(g.applicable);
        assert_eq!(g.a2.as_deref(), Some("2"));
        let plain = render_plain(&rep);
        assert!(plain.contains("group-ep a1 = 0, a2 = 2"), "{plain}");
    }
}
