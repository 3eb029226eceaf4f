#![allow(dead_code)]

use std::sync::OnceLock;

use tdmc_core::cochain::{coboundary, Cochain};
use tdmc_core::group::{group_from_spec, FiniteGroup, GroupSpec};
use tdmc_core::modcat::PairHPsi;
use tdmc_core::session::{DoubleClassification, Limits, Session};

pub fn builtin(name: &str) -> FiniteGroup {
    group_from_spec(&GroupSpec::builtin(name)).unwrap()
}

pub fn s3() -> &'static Session {
    static S: OnceLock<Session> = OnceLock::new();
    S.get_or_init(|| Session::new(GroupSpec::builtin("S3"), Limits::default()).unwrap())
}

/// Classifications of `D^ω(S3)` for `k = 0..6`.
pub fn s3_doubles() -> &'static [DoubleClassification] {
    static D: OnceLock<Vec<DoubleClassification>> = OnceLock::new();
    D.get_or_init(|| (0..6).map(|k| s3().classify(k).unwrap()).collect())
}

/// A normalized 1-cochain on the local group of `pair`, determined by `seed`.
pub fn one_cochain(order: usize, modulus: u64, seed: u64) -> Cochain {
    Cochain::from_fn(order, 1, modulus, |x| {
        if x[0] == 0 {
            0
        } else {
            let v = (x[0] as u64 + 1).wrapping_mul(seed.wrapping_mul(2_654_435_761).wrapping_add(97));
            (v % modulus) as i64
        }
    })
}

/// `(H, ψ + dχ)`.
pub fn shift_by_coboundary(ctx: &tdmc_core::modcat::Context, pair: &PairHPsi, chi: &Cochain) -> PairHPsi {
    let d = coboundary(&pair.local, chi).unwrap();
    PairHPsi::new(ctx, pair.subgroup.clone(), pair.psi.add(&d).unwrap()).unwrap()
}

/// `Σ_c #conjugacy classes of C_G(c)` over class representatives `c`.
pub fn centralizer_class_sum(g: &FiniteGroup) -> usize {
    use tdmc_core::subgroup::{centralizer, conjugacy_classes};
    conjugacy_classes(g)
        .iter()
        .map(|c| conjugacy_classes(&g.restrict_to(&centralizer(g, c[0]).unwrap())).len())
        .sum()
}
