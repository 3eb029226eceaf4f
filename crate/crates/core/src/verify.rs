//! Regression check of the S3 tables embedded in `data/s3_golden.json`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::session::{DoubleClassification, Limits, Session};

pub const S3_GOLDEN: &str = include_str!("../data/s3_golden.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Golden {
    pub group: String,
    pub h3_cstar: Vec<u64>,
    pub classes: Vec<GoldenClass>,
    pub admissible: Vec<GoldenAdmissible>,
    pub dual_ranks: Vec<GoldenDual>,
    pub fiber_functors: Vec<GoldenFiber>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenClass {
    pub label: String,
    pub order: usize,
    pub h2_cstar: Vec<u64>,
    pub double_cosets: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenAdmissible {
    pub omega_k: u64,
    pub pairs: usize,
    pub classes: Vec<String>,
}

/// `pair` is a class label, suffixed `tw` for the twisted pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenDual {
    pub pair: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenFiber {
    pub omega_k: u64,
    pub count: usize,
    pub classes: Vec<String>,
}

impl Golden {
    pub fn embedded() -> Self {
        serde_json::from_str(S3_GOLDEN).expect("embedded golden data parses")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub item: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub lines: Vec<CheckLine>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.ok)
    }

    fn check<T: PartialEq + std::fmt::Debug>(&mut self, item: String, expected: T, found: T) {
        let ok = expected == found;
        let detail = if ok { format!("{found:?}") } else { format!("expected {expected:?}, found {found:?}") };
        self.lines.push(CheckLine { item, ok, detail });
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            let _ = writeln!(out, "{} {}: {}", if l.ok { "ok  " } else { "FAIL" }, l.item, l.detail);
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.lines.len(), failed);
        out
    }
}

/// Recomputes every table and compares it with `golden`.
pub fn verify_paper(golden: &Golden) -> Result<VerifyOutcome> {
    let session = Session::new(GroupSpec::builtin(&golden.group), Limits::default())?;
    let mut out = VerifyOutcome::default();

    out.check("H3(G, C*)".into(), golden.h3_cstar.clone(), session.h3.invariant_factors.clone());
    out.check("subgroup classes".into(), golden.classes.len(), session.labels.len());

    let mut by_k: BTreeMap<u64, DoubleClassification> = BTreeMap::new();
    let ks: Vec<u64> = golden
        .admissible
        .iter()
        .map(|a| a.omega_k)
        .chain(golden.fiber_functors.iter().map(|f| f.omega_k))
        .chain([0])
        .collect();
    for k in ks {
        if let std::collections::btree_map::Entry::Vacant(e) = by_k.entry(k) {
            e.insert(session.classify(k)?);
        }
    }
    let untwisted = &by_k[&0];

    for gc in &golden.classes {
        let Some(index) = session.class_index(&gc.label) else {
            out.check(format!("class {}", gc.label), "present", "missing");
            continue;
        };
        let data = &session.classifier.classes[index];
        out.check(format!("order {}", gc.label), gc.order, data.class.representative.order());
        out.check(format!("H2 {}", gc.label), gc.h2_cstar.clone(), data.h2.invariant_factors.clone());
        // the untwisted pair of this class at ω = 0
        let rank = untwisted
            .classification
            .pairs()
            .zip(&untwisted.ranks)
            .find(|((i, o), _)| *i == index && o.coords.iter().all(|&c| c == 0));
        match rank {
            Some((_, r)) => {
                out.check(format!("double cosets {}", gc.label), gc.double_cosets, r.orbit_reps.len());
                out.check(format!("rank {}", gc.label), gc.rank, r.total_rank);
            }
            None => out.check(format!("rank {}", gc.label), "admissible at omega = 0", "not admissible"),
        }
    }

    for ga in &golden.admissible {
        let dc = &by_k[&ga.omega_k];
        let classes: Vec<String> =
            dc.classification.admissible.iter().map(|c| session.labels[c.index].clone()).collect();
        out.check(format!("admissible k={}", ga.omega_k), ga.classes.clone(), classes);
        out.check(format!("pairs k={}", ga.omega_k), ga.pairs, dc.classification.pair_count());
        // ranks do not depend on ω
        for ((index, orbit), r) in dc.classification.pairs().zip(&dc.ranks) {
            let label = &session.labels[index];
            if let Some(gc) = golden.classes.iter().find(|c| &c.label == label) {
                let suffix = if orbit.coords.iter().all(|&c| c == 0) { String::new() } else { format!("{:?}", orbit.coords) };
                out.check(format!("rank {label}{suffix} k={}", ga.omega_k), gc.rank, r.total_rank);
            }
        }
    }

    for gd in &golden.dual_ranks {
        let (label, twisted) = match gd.pair.strip_suffix("tw") {
            Some(l) => (l, true),
            None => (gd.pair.as_str(), false),
        };
        let found = untwisted.classification.pairs().find(|(i, o)| {
            session.labels[*i] == label && o.coords.iter().any(|&c| c != 0) == twisted
        });
        match found {
            Some((_, orbit)) => {
                let r = session.dual_rank(&untwisted.context, &orbit.pair)?;
                out.check(format!("dual rank {}", gd.pair), gd.rank, r);
            }
            None => out.check(format!("dual rank {}", gd.pair), "pair exists", "no such pair"),
        }
    }

    for gf in &golden.fiber_functors {
        let dc = &by_k[&gf.omega_k];
        let ff = session.fiber_functors(dc)?;
        let classes: Vec<String> = ff.iter().map(|(i, _)| session.labels[*i].clone()).collect();
        out.check(format!("fiber functors k={}", gf.omega_k), gf.count, ff.len());
        out.check(format!("fiber functor classes k={}", gf.omega_k), gf.classes.clone(), classes);
    }
    Ok(out)
}

/// [`verify_paper`] on the embedded tables.
pub fn verify_embedded() -> Result<VerifyOutcome> {
    verify_paper(&Golden::embedded())
}

/// Parses golden data from text.
pub fn parse_golden(text: &str) -> Result<Golden> {
    serde_json::from_str(text).map_err(|e| Error::BadSpec(e.to_string()))
}
