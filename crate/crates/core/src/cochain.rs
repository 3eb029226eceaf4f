//! Normalized cochains `Gⁿ → Z/M` in additive notation.
//!
//! A value `v` stands for `exp(2πi v / M)`. Tables are flat and row-major,
//! the first argument being the most significant digit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{group_from_spec, FiniteGroup, GroupSpec};
use crate::orbit::{DirectSquare, Projection};
use crate::subgroup::Subgroup;

/// Highest degree a coboundary may land in.
pub const MAX_DEGREE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    order: usize,
    degree: usize,
    modulus: u64,
    values: Vec<u64>,
}

impl Cochain {
    pub fn zero(order: usize, degree: usize, modulus: u64) -> Self {
        Cochain { order, degree, modulus, values: vec![0; order.pow(degree as u32)] }
    }

    pub fn from_fn(order: usize, degree: usize, modulus: u64, f: impl Fn(&[usize]) -> i64) -> Self {
        let mut c = Self::zero(order, degree, modulus);
        let mut args = vec![0; degree];
        for idx in 0..c.values.len() {
            c.decode_into(idx, &mut args);
            c.values[idx] = f(&args).rem_euclid(modulus as i64) as u64;
        }
        c
    }

    pub fn from_values(order: usize, degree: usize, modulus: u64, values: Vec<u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        let expected = order.pow(degree as u32);
        if values.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "a degree-{degree} cochain on a group of order {order} has {expected} values, got {}",
                values.len()
            )));
        }
        let values = values.into_iter().map(|v| v % modulus).collect();
        Ok(Cochain { order, degree, modulus, values })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    #[inline]
    pub fn index(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.degree);
        args.iter().fold(0, |acc, &a| acc * self.order + a)
    }

    pub fn decode_into(&self, mut idx: usize, args: &mut [usize]) {
        for slot in args.iter_mut().rev() {
            *slot = idx % self.order;
            idx /= self.order;
        }
    }

    #[inline]
    pub fn get(&self, args: &[usize]) -> u64 {
        self.values[self.index(args)]
    }

    #[inline]
    pub fn set(&mut self, args: &[usize], v: u64) {
        let i = self.index(args);
        self.values[i] = v % self.modulus;
    }

    #[inline]
    pub fn at(&self, idx: usize) -> u64 {
        self.values[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Zero whenever some argument is the identity.
    pub fn is_normalized(&self) -> bool {
        let mut args = vec![0; self.degree];
        (0..self.values.len()).all(|i| {
            self.decode_into(i, &mut args);
            !args.contains(&0) || self.values[i] == 0
        })
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { expected: self.modulus, found: other.modulus });
        }
        if self.order != other.order || self.degree != other.degree {
            return Err(Error::InvalidArgument("cochains live on different tables".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % m).collect();
        Ok(self.with_values(values))
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| (a + m - b) % m).collect();
        Ok(self.with_values(values))
    }

    pub fn neg(&self) -> Cochain {
        let m = self.modulus;
        self.with_values(self.values.iter().map(|&a| (m - a) % m).collect())
    }

    pub fn scale(&self, c: u64) -> Cochain {
        let m = self.modulus;
        let values = self
            .values
            .iter()
            .map(|&a| ((a as u128 * c as u128) % m as u128) as u64)
            .collect();
        self.with_values(values)
    }

    /// The same roots of unity written over `Z/new` (`M` must divide `new`).
    pub fn lift_modulus(&self, new: u64) -> Result<Cochain> {
        if !new.is_multiple_of(self.modulus) {
            return Err(Error::ModulusMismatch { expected: new, found: self.modulus });
        }
        let f = new / self.modulus;
        Ok(Cochain {
            order: self.order,
            degree: self.degree,
            modulus: new,
            values: self.values.iter().map(|&a| a * f).collect(),
        })
    }

    /// Inverse of [`Self::lift_modulus`]; fails unless every value lies in `μ_new`.
    pub fn lower_modulus(&self, new: u64) -> Result<Cochain> {
        if new == 0 || !self.modulus.is_multiple_of(new) {
            return Err(Error::ModulusMismatch { expected: self.modulus, found: new });
        }
        let f = self.modulus / new;
        if self.values.iter().any(|&a| a % f != 0) {
            return Err(Error::ModulusMismatch { expected: new, found: self.modulus });
        }
        Ok(Cochain {
            order: self.order,
            degree: self.degree,
            modulus: new,
            values: self.values.iter().map(|&a| a / f).collect(),
        })
    }

    fn with_values(&self, values: Vec<u64>) -> Cochain {
        Cochain { order: self.order, degree: self.degree, modulus: self.modulus, values }
    }
}

/// Visits the terms of `df(t)` as `(sign, index into f)`, skipping terms
/// with an identity argument (they vanish for normalized `f`).
#[inline]
pub(crate) fn for_each_coboundary_term(
    g: &FiniteGroup,
    t: &[usize],
    mut visit: impl FnMut(bool, usize),
) {
    let n1 = t.len();
    let n = g.order();
    let mut emit = |positive: bool, args: &mut dyn Iterator<Item = usize>| {
        let mut idx = 0;
        for a in args {
            if a == 0 {
                return;
            }
            idx = idx * n + a;
        }
        visit(positive, idx);
    };
    emit(true, &mut t[1..].iter().copied());
    for i in 1..n1 {
        let merged = g.mul(t[i - 1], t[i]);
        let mut it = t[..i - 1].iter().copied().chain(std::iter::once(merged)).chain(t[i + 1..].iter().copied());
        emit(i % 2 == 0, &mut it);
    }
    emit(n1.is_multiple_of(2), &mut t[..n1 - 1].iter().copied());
}

/// Bar-resolution differential with trivial action:
/// `df(g₁…gₙ₊₁) = f(g₂…) + Σᵢ (−1)ⁱ f(…gᵢgᵢ₊₁…) + (−1)ⁿ⁺¹ f(g₁…gₙ)`.
pub fn coboundary(g: &FiniteGroup, f: &Cochain) -> Result<Cochain> {
    if f.order != g.order() {
        return Err(Error::WrongAmbient(format!(
            "cochain on a group of order {} applied to a group of order {}",
            f.order,
            g.order()
        )));
    }
    let degree = f.degree + 1;
    if degree > MAX_DEGREE {
        return Err(Error::DegreeOverflow(degree));
    }
    let m = f.modulus;
    let mut out = Cochain::zero(g.order(), degree, m);
    let mut args = vec![0; degree];
    for idx in 0..out.values.len() {
        out.decode_into(idx, &mut args);
        if args.contains(&0) {
            continue;
        }
        let mut acc = 0u64;
        for_each_coboundary_term(g, &args, |positive, j| {
            let v = f.values[j];
            acc = if positive { (acc + v) % m } else { (acc + m - v) % m };
        });
        out.values[idx] = acc;
    }
    Ok(out)
}

/// `true` iff `f` is normalized and `df = 0`.
pub fn is_cocycle(g: &FiniteGroup, f: &Cochain) -> Result<bool> {
    Ok(f.is_normalized() && coboundary(g, f)?.is_zero())
}

pub(crate) fn require_cocycle(g: &FiniteGroup, f: &Cochain) -> Result<()> {
    if !f.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if !coboundary(g, f)?.is_zero() {
        return Err(Error::NotACocycle);
    }
    Ok(())
}

/// `f` composed with the inclusion `H → G`, indexed by local indices of `H`.
pub fn restrict(g: &FiniteGroup, f: &Cochain, h: &Subgroup) -> Result<Cochain> {
    if f.order != g.order() {
        return Err(Error::WrongAmbient("cochain and group disagree in order".into()));
    }
    if let Some(&x) = h.elements().last() {
        g.check_element(x).map_err(|_| Error::WrongAmbient(format!("subgroup element {x} outside the group")))?;
    }
    let els = h.elements();
    let k = els.len();
    let mut out = Cochain::zero(k, f.degree, f.modulus);
    let mut args = vec![0; f.degree];
    let mut outer = vec![0; f.degree];
    for idx in 0..out.values.len() {
        out.decode_into(idx, &mut args);
        for (o, &a) in outer.iter_mut().zip(&args) {
            *o = els[a];
        }
        out.values[idx] = f.get(&outer);
    }
    Ok(out)
}

/// `f ∘ pⁿ` for a projection `p: G × G → G`.
pub fn pullback(sq: &DirectSquare, f: &Cochain, p: Projection) -> Result<Cochain> {
    if f.order != sq.base.order() {
        return Err(Error::WrongAmbient("cochain is not on the base of the square".into()));
    }
    let mut out = Cochain::zero(sq.square.order(), f.degree, f.modulus);
    let mut args = vec![0; f.degree];
    let mut base = vec![0; f.degree];
    for idx in 0..out.values.len() {
        out.decode_into(idx, &mut args);
        for (b, &x) in base.iter_mut().zip(&args) {
            *b = sq.project(p, x);
        }
        out.values[idx] = f.get(&base);
    }
    Ok(out)
}

/// `p₁*ω − p₂*ω` on `G × G`.
pub fn build_tilde_omega(sq: &DirectSquare, omega: &Cochain) -> Result<Cochain> {
    if omega.degree != 3 {
        return Err(Error::InvalidArgument(format!("expected a 3-cocycle, got degree {}", omega.degree)));
    }
    require_cocycle(&sq.base, omega)?;
    pullback(sq, omega, Projection::First)?.sub(&pullback(sq, omega, Projection::Second)?)
}

/// Exchange format for cochains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainFile {
    pub group: GroupSpec,
    pub degree: usize,
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl CochainFile {
    pub fn new(group: GroupSpec, c: &Cochain) -> Self {
        CochainFile { group, degree: c.degree, modulus: c.modulus, values: c.values.clone() }
    }

    pub fn load(&self) -> Result<(FiniteGroup, Cochain)> {
        let g = group_from_spec(&self.group)?;
        let c = Cochain::from_values(g.order(), self.degree, self.modulus, self.values.clone())?;
        Ok((g, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn builtin(name: &str) -> FiniteGroup {
        group_from_spec(&GroupSpec::builtin(name)).unwrap()
    }

    /// Direct transcription of the differential, kept separate from the
    /// index-based implementation.
    fn naive_d(g: &FiniteGroup, f: &Cochain, t: &[usize]) -> i64 {
        let n = t.len() - 1;
        let val = |args: Vec<usize>| f.get(&args) as i64;
        let mut acc = val(t[1..].to_vec());
        for i in 1..=n {
            let mut args = t[..i - 1].to_vec();
            args.push(g.mul(t[i - 1], t[i]));
            args.extend_from_slice(&t[i + 1..]);
            acc += if i % 2 == 0 { val(args) } else { -val(args) };
        }
        let last = val(t[..n].to_vec());
        acc += if (n + 1).is_multiple_of(2) { last } else { -last };
        acc.rem_euclid(f.modulus as i64)
    }

    fn normalized_random(order: usize, degree: usize, m: u64, seed: &[u64]) -> Cochain {
        Cochain::from_fn(order, degree, m, |args| {
            if args.contains(&0) {
                0
            } else {
                let idx = args.iter().fold(0, |acc, &a| acc * order + a);
                seed[idx % seed.len()] as i64 * (idx as i64 + 1)
            }
        })
    }

    #[test]
    fn degree_one_on_z2() {
        let g = builtin("Z2");
        let c = 5;
        let f = Cochain::from_fn(2, 1, 12, |a| if a[0] == 1 { c } else { 0 });
        let df = coboundary(&g, &f).unwrap();
        assert_eq!(df.get(&[1, 1]), (2 * c as u64) % 12);
        assert_eq!(df.get(&[0, 1]), 0);
    }

    #[test]
    fn zero_cochains_have_zero_coboundary() {
        let g = builtin("S3");
        for n in 0..=3 {
            assert!(coboundary(&g, &Cochain::zero(6, n, 36)).unwrap().is_zero());
        }
        assert_eq!(coboundary(&g, &Cochain::zero(6, 4, 36)), Err(Error::DegreeOverflow(5)));
    }

    #[test]
    fn bilinear_form_on_z3_is_a_cocycle() {
        let g = builtin("Z3");
        let lambda = 81;
        let psi = Cochain::from_fn(3, 2, lambda, |a| (a[0] * a[1]) as i64 * (lambda as i64 / 3));
        let dpsi = coboundary(&g, &psi).unwrap();
        let mut triples = 0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    assert_eq!(dpsi.get(&[a, b, c]), 0);
                    triples += 1;
                }
            }
        }
        assert_eq!(triples, 27);
    }

    #[test]
    fn coboundary_matches_naive_expansion() {
        let g = builtin("S3");
        for degree in 1..=2 {
            let f = normalized_random(6, degree, 12, &[3, 7, 1, 10, 4]);
            let df = coboundary(&g, &f).unwrap();
            let mut t = vec![0; degree + 1];
            for idx in 0..df.values().len() {
                df.decode_into(idx, &mut t);
                assert_eq!(df.at(idx) as i64, naive_d(&g, &f, &t), "{t:?}");
            }
        }
    }

    #[test]
    fn pullback_and_tilde_omega() {
        let g = builtin("Z2");
        let sq = DirectSquare::new(&g);
        let omega = Cochain::from_fn(2, 3, 4, |a| if a == [1, 1, 1] { 2 } else { 0 });
        let p1 = pullback(&sq, &omega, Projection::First).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let (x, y, z) = (sq.encode(a, 1 - a), sq.encode(b, 0), sq.encode(c, 1));
                    assert_eq!(p1.get(&[x, y, z]), omega.get(&[a, b, c]));
                }
            }
        }
        let tilde = build_tilde_omega(&sq, &omega).unwrap();
        assert!(restrict(&sq.square, &tilde, &sq.diagonal).unwrap().is_zero());
        assert!(is_cocycle(&sq.square, &tilde).unwrap());
        assert!(build_tilde_omega(&sq, &Cochain::zero(2, 3, 4)).unwrap().is_zero());
        let bad = Cochain::from_fn(2, 3, 4, |a| if a == [1, 1, 1] { 1 } else { 0 });
        assert_eq!(build_tilde_omega(&sq, &bad), Err(Error::NotACocycle));
    }

    #[test]
    fn modulus_changes() {
        let f = Cochain::from_values(2, 1, 4, vec![0, 3]).unwrap();
        let big = f.lift_modulus(12).unwrap();
        assert_eq!(big.values(), &[0, 9]);
        assert_eq!(big.lower_modulus(4).unwrap(), f);
        assert!(big.lower_modulus(2).is_err());
        assert!(f.lift_modulus(6).is_err());
        assert!(Cochain::from_values(2, 2, 4, vec![0; 3]).is_err());
    }

    #[test]
    fn file_round_trip() {
        let f = Cochain::from_values(2, 1, 4, vec![0, 3]).unwrap();
        let file = CochainFile::new(GroupSpec::builtin("Z2"), &f);
        let text = serde_json::to_string(&file).unwrap();
        assert!(text.contains("\"values\":[0,3]"));
        let back: CochainFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.load().unwrap().1, f);
    }

    fn any_builtin() -> impl Strategy<Value = &'static str> {
        prop::sample::select(vec!["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"])
    }

    proptest! {
        #[test]
        fn d_squared_vanishes(
            name in any_builtin(),
            degree in 1usize..=2,
            seed in prop::collection::vec(0u64..1000, 1..20),
            m in prop::sample::select(vec![2u64, 6, 12, 36]),
        ) {
            let g = builtin(name);
            let f = normalized_random(g.order(), degree, m, &seed);
            let ddf = coboundary(&g, &coboundary(&g, &f).unwrap()).unwrap();
            prop_assert!(ddf.is_zero());
        }

        #[test]
        fn restriction_commutes_with_d(
            seed in prop::collection::vec(0u64..1000, 1..20),
            pick in 0usize..16,
            degree in 1usize..=2,
        ) {
            let g = builtin("S3");
            let subs = crate::subgroup::all_subgroups(&g, 100).unwrap();
            let h = &subs[pick % subs.len()];
            let hg = g.restrict_to(h);
            let f = normalized_random(6, degree, 12, &seed);
            let lhs = coboundary(&hg, &restrict(&g, &f, h).unwrap()).unwrap();
            let rhs = restrict(&g, &coboundary(&g, &f).unwrap(), h).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pullback_commutes_with_d(
            seed in prop::collection::vec(0u64..1000, 1..20),
            first in any::<bool>(),
        ) {
            let g = builtin("Z3");
            let sq = DirectSquare::new(&g);
            let p = if first { Projection::First } else { Projection::Second };
            let f = normalized_random(3, 2, 9, &seed);
            let lhs = coboundary(&sq.square, &pullback(&sq, &f, p).unwrap()).unwrap();
            let rhs = pullback(&sq, &coboundary(&g, &f).unwrap(), p).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
