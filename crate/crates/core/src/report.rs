//! Serializable classification reports and their table rendering.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::GroupSpec;
use crate::modcat::RankBreakdown;
use crate::session::{DoubleClassification, Session};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub group: GroupSpec,
    pub omega_k: u64,
    pub modulus: u64,
    pub admissible: Vec<ClassReport>,
    pub totals: Totals,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub class: String,
    pub order: usize,
    pub h2_cstar: Vec<u64>,
    pub pairs: Vec<PairReport>,
}

/// One module category. `orbit_count` is the number of orbits of `H` on
/// `G`, i.e. the number of terms in the rank sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub psi: Vec<u64>,
    pub orbit_count: usize,
    pub rank: usize,
    pub breakdown: Vec<BreakdownEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakdownEntry {
    pub rep: usize,
    pub stab_order: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pairs: usize,
    pub fiber_functors: usize,
}

pub fn breakdown_entries(r: &RankBreakdown) -> Vec<BreakdownEntry> {
    r.orbit_reps
        .iter()
        .zip(&r.stabilizers)
        .zip(&r.local_counts)
        .map(|((&rep, s), &m)| BreakdownEntry { rep, stab_order: s.order(), m })
        .collect()
}

pub fn build_report(session: &Session, dc: &DoubleClassification) -> Result<ClassificationReport> {
    let mut ranks = dc.ranks.iter();
    let mut admissible = Vec::new();
    for class in &dc.classification.admissible {
        let data = &session.classifier.classes[class.index];
        let pairs = class
            .orbits
            .iter()
            .map(|orbit| {
                let r = ranks.next().expect("one rank per pair");
                PairReport {
                    psi: orbit.coords.clone(),
                    orbit_count: r.orbit_reps.len(),
                    rank: r.total_rank,
                    breakdown: breakdown_entries(r),
                }
            })
            .collect();
        admissible.push(ClassReport {
            class: session.labels[class.index].clone(),
            order: data.class.representative.order(),
            h2_cstar: data.h2.invariant_factors.clone(),
            pairs,
        });
    }
    let fiber_functors = session.fiber_functors(dc)?.len();
    Ok(ClassificationReport {
        group: session.spec.clone(),
        omega_k: dc.k,
        modulus: session.modulus,
        admissible,
        totals: Totals { pairs: dc.classification.pair_count(), fiber_functors },
    })
}

fn coords(c: &[u64]) -> String {
    let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("[{}]", body.join(","))
}

/// Plain-text table, one row per pair.
pub fn render_table(r: &ClassificationReport) -> String {
    let mut rows = vec![[
        "class".to_string(),
        "|H|".to_string(),
        "H2".to_string(),
        "psi".to_string(),
        "orbits".to_string(),
        "rank".to_string(),
    ]];
    for c in &r.admissible {
        for p in &c.pairs {
            rows.push([
                c.class.clone(),
                c.order.to_string(),
                coords(&c.h2_cstar),
                coords(&p.psi),
                p.orbit_count.to_string(),
                p.rank.to_string(),
            ]);
        }
    }
    let widths: Vec<usize> = (0..6).map(|j| rows.iter().map(|row| row[j].chars().count()).max().unwrap_or(0)).collect();
    let mut out = format!("omega = {}·omega0, modulus {}\n", r.omega_k, r.modulus);
    for row in &rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out.push_str(&format!("pairs: {}, fiber functors: {}\n", r.totals.pairs, r.totals.fiber_functors));
    out
}
