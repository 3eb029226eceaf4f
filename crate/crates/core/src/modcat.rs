//! Module categories over `Vec_G^ω` and over the twisted double, described
//! by pairs `(H, ψ)` with `dψ = ω|_H`.
//!
//! Conventions: `dψ = ω|_H` with the differential of [`crate::cochain`];
//! `H^g = H₁ ∩ g H₂ g⁻¹`; orbits of `H ⊂ G × G` on `G` come from
//! `(h₁, h₂)·g = h₁ g h₂⁻¹`.

use crate::cochain::{coboundary, require_cocycle, restrict, Cochain};
use crate::cohomology::{cohomology_cstar_at, solve_trivialization_local, CohomologyGroup};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::oracle::monomial_center_dimension;
use crate::orbit::{double_cosets, orbit_decomposition, stabilizer_of, DirectSquare};
use crate::solver::DEFAULT_SOLVER_BOUND;
use crate::subgroup::{subgroups_up_to_conjugacy, Subgroup, SubgroupClass};
use crate::twisted::{is_nondegenerate, projective_irrep_count, TwistedAlgebra};

/// A group with a normalized 3-cocycle.
#[derive(Clone, Debug)]
pub struct Context {
    pub ambient: FiniteGroup,
    pub omega: Cochain,
}

impl Context {
    pub fn new(ambient: FiniteGroup, omega: Cochain) -> Result<Self> {
        if omega.degree() != 3 || omega.order() != ambient.order() {
            return Err(Error::InvalidArgument("ω must be a 3-cochain on the ambient group".into()));
        }
        require_cocycle(&ambient, &omega)?;
        Ok(Context { ambient, omega })
    }

    pub fn modulus(&self) -> u64 {
        self.omega.modulus()
    }

    #[inline]
    fn w(&self, a: usize, b: usize, c: usize) -> u64 {
        self.omega.get(&[a, b, c])
    }
}

/// `G`, `ω` on `G`, and the induced context `(G × G, p₁*ω − p₂*ω)`.
#[derive(Clone, Debug)]
pub struct DoubleContext {
    pub square: DirectSquare,
    pub omega: Cochain,
    pub doubled: Context,
}

impl DoubleContext {
    pub fn new(base: &FiniteGroup, omega: Cochain) -> Result<Self> {
        let square = DirectSquare::new(base);
        let tilde = crate::cochain::build_tilde_omega(&square, &omega)?;
        let doubled = Context { ambient: square.square.clone(), omega: tilde };
        Ok(DoubleContext { square, omega, doubled })
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.square.base
    }

    pub fn modulus(&self) -> u64 {
        self.omega.modulus()
    }

    /// `(Δ(G), 0)`.
    pub fn diagonal_pair(&self) -> Result<PairHPsi> {
        PairHPsi::untwisted(&self.doubled, self.square.diagonal.clone())
    }
}

/// A subgroup `H` of the ambient group with `ψ` on `H` (local indices)
/// satisfying `dψ = ω|_H`.
#[derive(Clone, Debug)]
pub struct PairHPsi {
    pub subgroup: Subgroup,
    pub local: FiniteGroup,
    pub psi: Cochain,
}

impl PairHPsi {
    pub fn new(ctx: &Context, subgroup: Subgroup, psi: Cochain) -> Result<Self> {
        if let Some(&x) = subgroup.elements().last() {
            ctx.ambient.check_element(x)?;
        }
        let local = ctx.ambient.restrict_to(&subgroup);
        if psi.degree() != 2 || psi.order() != local.order() {
            return Err(Error::InvalidArgument("ψ must be a 2-cochain on the subgroup".into()));
        }
        if psi.modulus() != ctx.modulus() {
            return Err(Error::ModulusMismatch { expected: ctx.modulus(), found: psi.modulus() });
        }
        if !psi.is_normalized() {
            return Err(Error::NotNormalized);
        }
        let target = restrict(&ctx.ambient, &ctx.omega, &subgroup)?;
        if coboundary(&local, &psi)? != target {
            return Err(Error::NotTrivializing);
        }
        Ok(PairHPsi { subgroup, local, psi })
    }

    pub fn untwisted(ctx: &Context, subgroup: Subgroup) -> Result<Self> {
        let zero = Cochain::zero(subgroup.order(), 2, ctx.modulus());
        Self::new(ctx, subgroup, zero)
    }

    /// `ψ` at ambient elements of `H`.
    #[inline]
    pub fn psi_at(&self, x: usize, y: usize) -> u64 {
        let i = self.subgroup.local_index(x).expect("argument lies in H");
        let j = self.subgroup.local_index(y).expect("argument lies in H");
        self.psi.get(&[i, j])
    }
}

/// Local data of a rank computation: one entry per orbit (or double coset).
#[derive(Clone, Debug)]
pub struct RankBreakdown {
    pub orbit_reps: Vec<usize>,
    pub stabilizers: Vec<Subgroup>,
    pub local_cocycles: Vec<Cochain>,
    pub local_counts: Vec<usize>,
    pub total_rank: usize,
}

impl RankBreakdown {
    fn push(&mut self, rep: usize, stab: Subgroup, local: FiniteGroup, psi: Cochain) -> Result<()> {
        let m = projective_irrep_count(&TwistedAlgebra::new(local, psi.clone())?);
        self.orbit_reps.push(rep);
        self.stabilizers.push(stab);
        self.local_cocycles.push(psi);
        self.local_counts.push(m);
        self.total_rank += m;
        Ok(())
    }

    fn empty() -> Self {
        RankBreakdown {
            orbit_reps: vec![],
            stabilizers: vec![],
            local_cocycles: vec![],
            local_counts: vec![],
            total_rank: 0,
        }
    }
}

fn assert_closed(local: &FiniteGroup, psi: &Cochain) -> Result<()> {
    let d = coboundary(local, psi)?;
    if let Some(idx) = d.values().iter().position(|&v| v != 0) {
        let mut t = vec![0; 3];
        d.decode_into(idx, &mut t);
        return Err(Error::FormulaNotClosed(t));
    }
    Ok(())
}

/// `H^g = H₁ ∩ g H₂ g⁻¹` with
/// `ψ^g(h, h′) = ψ₁(h, h′) + ψ₂(k′, k) − ω(hh′g, k′, k) + ω(h, h′, g) + ω(h, h′g, k′)`,
/// where `k = g⁻¹h⁻¹g`, `k′ = g⁻¹h′⁻¹g`.
pub fn psi_g_general(ctx: &Context, p1: &PairHPsi, p2: &PairHPsi, g: usize) -> Result<(Subgroup, Cochain)> {
    let a = &ctx.ambient;
    a.check_element(g)?;
    let hg = p1.subgroup.intersection(&p2.subgroup.conjugate(a, g));
    let local = a.restrict_to(&hg);
    let els = hg.elements();
    let gi = a.inv(g);
    let k = |h: usize| a.mul(a.mul(gi, a.inv(h)), g);
    let m = ctx.modulus() as i64;
    let psi = Cochain::from_fn(els.len(), 2, ctx.modulus(), |x| {
        let (h, h2) = (els[x[0]], els[x[1]]);
        let (kh, kh2) = (k(h), k(h2));
        let hh2g = a.mul(a.mul(h, h2), g);
        let h2g = a.mul(h2, g);
        let v = p1.psi_at(h, h2) as i64 + p2.psi_at(kh2, kh) as i64 - ctx.w(hh2g, kh2, kh) as i64
            + ctx.w(h, h2, g) as i64
            + ctx.w(h, h2g, kh2) as i64;
        v.rem_euclid(m)
    });
    assert_closed(&local, &psi)?;
    Ok((hg, psi))
}

/// `H^g = {h : (h, g⁻¹hg) ∈ H}` for `H ⊂ G × G` with
/// `ψ^g(h, h′) = ψ((h′⁻¹, k′), (h⁻¹, k)) − ω(hh′, h′⁻¹, h⁻¹) + ω(hh′g, k′, k)
///  − ω(h, h′, g) + ω(h, h′, h′⁻¹) − ω(h, h′g, k′)`,
/// where `k = g⁻¹h⁻¹g`, `k′ = g⁻¹h′⁻¹g`. This is the general formula for
/// `H₁ = Δ(G)`, `ψ₁ = 0`, `H₂ = H` at the element `(e, g)`.
pub fn psi_g_double(dctx: &DoubleContext, pair: &PairHPsi, g: usize) -> Result<(Subgroup, Cochain)> {
    let sq = &dctx.square;
    let b = &sq.base;
    b.check_element(g)?;
    let hg = stabilizer_of(sq, &pair.subgroup, g);
    let local = b.restrict_to(&hg);
    let els = hg.elements();
    let gi = b.inv(g);
    let k = |h: usize| b.mul(b.mul(gi, b.inv(h)), g);
    let w = |x: usize, y: usize, z: usize| dctx.omega.get(&[x, y, z]) as i64;
    let m = dctx.modulus() as i64;
    let psi = Cochain::from_fn(els.len(), 2, dctx.modulus(), |x| {
        let (h, h2) = (els[x[0]], els[x[1]]);
        let (kh, kh2) = (k(h), k(h2));
        let (hi, h2i) = (b.inv(h), b.inv(h2));
        let hh2 = b.mul(h, h2);
        let hh2g = b.mul(hh2, g);
        let h2g = b.mul(h2, g);
        let v = pair.psi_at(sq.encode(h2i, kh2), sq.encode(hi, kh)) as i64 - w(hh2, h2i, hi)
            + w(hh2g, kh2, kh)
            - w(h, h2, g)
            + w(h, h2, h2i)
            - w(h, h2g, kh2);
        v.rem_euclid(m)
    });
    assert_closed(&local, &psi)?;
    Ok((hg, psi))
}

/// Rank of the category of `(A(H₁,ψ₁), A(H₂,ψ₂))`-bimodules: a sum over
/// `H₁\G/H₂` of irreducible `ψ^g`-projective counts of `H^g`.
pub fn bimodule_rank(ctx: &Context, p1: &PairHPsi, p2: &PairHPsi) -> Result<RankBreakdown> {
    let reps: Vec<usize> = double_cosets(&ctx.ambient, &p1.subgroup, &p2.subgroup)
        .into_iter()
        .map(|c| c[0])
        .collect();
    bimodule_rank_at(ctx, p1, p2, &reps)
}

/// [`bimodule_rank`] with caller-chosen coset representatives.
pub fn bimodule_rank_at(ctx: &Context, p1: &PairHPsi, p2: &PairHPsi, reps: &[usize]) -> Result<RankBreakdown> {
    let mut out = RankBreakdown::empty();
    for &g in reps {
        let (hg, psi) = psi_g_general(ctx, p1, p2, g)?;
        let local = ctx.ambient.restrict_to(&hg);
        out.push(g, hg, local, psi)?;
    }
    Ok(out)
}

/// Rank of the module category `M(H, ψ)` over the double: a sum over the
/// orbits of `H` on `G`.
pub fn module_rank_double(dctx: &DoubleContext, pair: &PairHPsi) -> Result<RankBreakdown> {
    let orbits = orbit_decomposition(&dctx.square, &pair.subgroup)?;
    module_rank_double_at(dctx, pair, &orbits.representatives)
}

/// [`module_rank_double`] with caller-chosen orbit representatives.
pub fn module_rank_double_at(dctx: &DoubleContext, pair: &PairHPsi, reps: &[usize]) -> Result<RankBreakdown> {
    let mut out = RankBreakdown::empty();
    for &g in reps {
        let (hg, psi) = psi_g_double(dctx, pair, g)?;
        let local = dctx.base().restrict_to(&hg);
        out.push(g, hg, local, psi)?;
    }
    Ok(out)
}

/// Carries `(H, ψ)` to `(nHn⁻¹, ψⁿ)` with
/// `ψⁿ(x, y) = ψ(n⁻¹xn, n⁻¹yn) − ω(x, y, n) + ω(x, n, n⁻¹yn) − ω(n, n⁻¹xn, n⁻¹yn)`.
/// The result is validated against `d ψⁿ = ω|_{nHn⁻¹}`.
pub fn transport(ctx: &Context, pair: &PairHPsi, n: usize) -> Result<PairHPsi> {
    let a = &ctx.ambient;
    a.check_element(n)?;
    let target = pair.subgroup.conjugate(a, n);
    let els = target.elements();
    let ni = a.inv(n);
    let back = |x: usize| a.mul(a.mul(ni, x), n);
    let m = ctx.modulus() as i64;
    let psi = Cochain::from_fn(els.len(), 2, ctx.modulus(), |t| {
        let (x, y) = (els[t[0]], els[t[1]]);
        let (bx, by) = (back(x), back(y));
        let v = pair.psi_at(bx, by) as i64 - ctx.w(x, y, n) as i64 + ctx.w(x, n, by) as i64
            - ctx.w(n, bx, by) as i64;
        v.rem_euclid(m)
    });
    PairHPsi::new(ctx, target, psi)
}

/// Precomputed per-class data for classifying pairs in a fixed ambient
/// group at a fixed modulus. Independent of `ω`.
#[derive(Clone, Debug)]
pub struct PairClassifier {
    pub ambient: FiniteGroup,
    pub modulus: u64,
    pub classes: Vec<ClassData>,
}

#[derive(Clone, Debug)]
pub struct ClassData {
    pub class: SubgroupClass,
    pub local: FiniteGroup,
    /// `H²(H, ℂ*)` computed inside `H²(H, μ_M)`.
    pub h2: CohomologyGroup,
    normalizer_gens: Vec<usize>,
}

/// One normalizer orbit of trivializations.
#[derive(Clone, Debug)]
pub struct PsiOrbit {
    /// Least `H²` coordinate vector in the orbit, relative to the base
    /// trivialization.
    pub coords: Vec<u64>,
    pub members: Vec<Vec<u64>>,
    pub pair: PairHPsi,
}

#[derive(Clone, Debug)]
pub struct AdmissibleClass {
    /// Position in [`PairClassifier::classes`].
    pub index: usize,
    pub base: PairHPsi,
    pub orbits: Vec<PsiOrbit>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub admissible: Vec<AdmissibleClass>,
}

impl Classification {
    pub fn pair_count(&self) -> usize {
        self.admissible.iter().map(|c| c.orbits.len()).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, &PsiOrbit)> {
        self.admissible.iter().flat_map(|c| c.orbits.iter().map(move |o| (c.index, o)))
    }
}

impl PairClassifier {
    pub fn new(ambient: &FiniteGroup, modulus: u64, max_order: usize) -> Result<Self> {
        let classes = subgroups_up_to_conjugacy(ambient, max_order)?
            .into_iter()
            .map(|class| {
                let local = ambient.restrict_to(&class.representative);
                let h2 = cohomology_cstar_at(&local, 2, modulus, DEFAULT_SOLVER_BOUND)?;
                let normalizer_gens = ambient.generating_set(&class.normalizer);
                Ok(ClassData { class, local, h2, normalizer_gens })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PairClassifier { ambient: ambient.clone(), modulus, classes })
    }

    /// Base trivialization on class `i`, or `None` when `ω|_H` is nontrivial.
    pub fn base_pair(&self, ctx: &Context, i: usize) -> Result<Option<PairHPsi>> {
        let data = &self.classes[i];
        let h = &data.class.representative;
        let r = restrict(&ctx.ambient, &ctx.omega, h)?;
        match solve_trivialization_local(&data.local, &r)? {
            Some(psi) => PairHPsi::new(ctx, h.clone(), psi).map(Some),
            None => Ok(None),
        }
    }

    /// The pair `(H, ψ₀ + β)` where `β` has the given `H²` coordinates.
    pub fn pair_with(&self, ctx: &Context, i: usize, coords: &[u64]) -> Result<Option<PairHPsi>> {
        let data = &self.classes[i];
        if coords.len() != data.h2.invariant_factors.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} ψ coordinates, got {}",
                data.h2.invariant_factors.len(),
                coords.len()
            )));
        }
        let Some(base) = self.base_pair(ctx, i)? else { return Ok(None) };
        let psi = base.psi.add(&data.h2.element(coords))?;
        PairHPsi::new(ctx, base.subgroup, psi).map(Some)
    }

    pub fn classify(&self, ctx: &Context) -> Result<Classification> {
        if ctx.modulus() != self.modulus {
            return Err(Error::ModulusMismatch { expected: self.modulus, found: ctx.modulus() });
        }
        let mut admissible = Vec::new();
        for i in 0..self.classes.len() {
            if let Some(base) = self.base_pair(ctx, i)? {
                let orbits = self.psi_orbits(ctx, i, &base)?;
                admissible.push(AdmissibleClass { index: i, base, orbits });
            }
        }
        Ok(Classification { admissible })
    }

    /// Orbits of the normalizer on the `H²(H, ℂ*)`-torsor of trivializations.
    fn psi_orbits(&self, ctx: &Context, i: usize, base: &PairHPsi) -> Result<Vec<PsiOrbit>> {
        let data = &self.classes[i];
        let h2 = &data.h2;
        let elements = h2.elements();
        let index_of = |c: &[u64]| {
            c.iter().zip(&h2.invariant_factors).fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize)
        };
        let mut parent: Vec<usize> = (0..elements.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let pairs: Vec<PairHPsi> = elements
            .iter()
            .map(|(_, beta)| PairHPsi::new(ctx, base.subgroup.clone(), base.psi.add(beta)?))
            .collect::<Result<_>>()?;
        if elements.len() > 1 {
            for &n in &data.normalizer_gens {
                for (j, pair) in pairs.iter().enumerate() {
                    let moved = transport(ctx, pair, n)?;
                    debug_assert_eq!(moved.subgroup, base.subgroup);
                    let diff = moved.psi.sub(&base.psi)?;
                    let target = index_of(&h2.lookup_unchecked(&diff));
                    let (ra, rb) = (find(&mut parent, j), find(&mut parent, target));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        let mut orbits: Vec<PsiOrbit> = Vec::new();
        let mut slot = vec![usize::MAX; elements.len()];
        for j in 0..elements.len() {
            let r = find(&mut parent, j);
            if slot[r] == usize::MAX {
                slot[r] = orbits.len();
                orbits.push(PsiOrbit { coords: elements[j].0.clone(), members: vec![], pair: pairs[j].clone() });
            }
            orbits[slot[r]].members.push(elements[j].0.clone());
        }
        Ok(orbits)
    }
}

/// Classification of pairs `(H, ψ)` in `ctx` up to conjugacy in the ambient group.
pub fn classify_pairs(ctx: &Context, max_order: usize) -> Result<Classification> {
    PairClassifier::new(&ctx.ambient, ctx.modulus(), max_order)?.classify(ctx)
}

/// Candidates `(H₁, ψ₁)` with a single `H\G/H₁` double coset and a
/// nondegenerate `ψ^g`: the rank-one module categories. Each survivor is
/// checked to have bimodule rank one.
pub fn fiber_functors(ctx: &Context, base: &PairHPsi, candidates: &[PairHPsi]) -> Result<Vec<PairHPsi>> {
    let mut out = Vec::new();
    for c in candidates {
        let cosets = double_cosets(&ctx.ambient, &base.subgroup, &c.subgroup);
        if cosets.len() != 1 {
            continue;
        }
        let (hg, psi) = psi_g_general(ctx, base, c, cosets[0][0])?;
        let algebra = TwistedAlgebra::new(ctx.ambient.restrict_to(&hg), psi)?;
        if !is_nondegenerate(&algebra) {
            continue;
        }
        let rank = bimodule_rank(ctx, base, c)?.total_rank;
        if rank != 1 {
            return Err(Error::ReportIncomplete(format!("fiber functor candidate has rank {rank}")));
        }
        out.push(c.clone());
    }
    Ok(out)
}

/// Number of simple bimodules supported on `H₁ g H₂`, computed from the
/// operator relations `j_h ∘ j_{h′} = C(h, h′) j_{h′h}` on `H^g` with
/// `C(h, h′) = −ω(h′, hg, k) − ω(h′, h, g) − ψ₁(h′, h) + ω(h′hg, k, k′) − ψ₂(k, k′)`,
/// `k = g⁻¹h⁻¹g`, `k′ = g⁻¹h′⁻¹g`, by a numerical center computation.
pub fn oracle_simple_bimodules(ctx: &Context, p1: &PairHPsi, p2: &PairHPsi, g: usize) -> Result<usize> {
    let a = &ctx.ambient;
    a.check_element(g)?;
    let hg = p1.subgroup.intersection(&p2.subgroup.conjugate(a, g));
    let els = hg.elements();
    let gi = a.inv(g);
    let k = |h: usize| a.mul(a.mul(gi, a.inv(h)), g);
    let m = ctx.modulus() as i64;
    monomial_center_dimension(els.len(), ctx.modulus(), |x, y| {
        let (h, h2) = (els[x], els[y]);
        let (kh, kh2) = (k(h), k(h2));
        let c = -(ctx.w(h2, a.mul(h, g), kh) as i64) - ctx.w(h2, h, g) as i64 - p1.psi_at(h2, h) as i64
            + ctx.w(a.mul(a.mul(h2, h), g), kh, kh2) as i64
            - p2.psi_at(kh, kh2) as i64;
        let prod = hg.local_index(a.mul(h2, h)).expect("H^g is a group");
        (c.rem_euclid(m) as u64, prod)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cohomology_cstar;
    use crate::group::{group_from_spec, GroupSpec};
    use crate::subgroup::{centralizer, conjugacy_classes, DEFAULT_MAX_ORDER};

    fn builtin(name: &str) -> FiniteGroup {
        group_from_spec(&GroupSpec::builtin(name)).unwrap()
    }

    fn double(name: &str, k: u64) -> DoubleContext {
        let g = builtin(name);
        let n = g.order() as u64;
        let lambda = n.pow(4);
        let h3 = cohomology_cstar(&g, 3).unwrap();
        let omega = match h3.generators.first() {
            Some(w0) => w0.scale(k).lift_modulus(lambda).unwrap(),
            None => Cochain::zero(g.order(), 3, lambda),
        };
        DoubleContext::new(&g, omega).unwrap()
    }

    #[test]
    fn trivial_inputs_give_zero_cocycles() {
        let d = double("S3", 0);
        let diag = d.diagonal_pair().unwrap();
        for g in 0..6 {
            let (hg, psi) = psi_g_double(&d, &diag, g).unwrap();
            assert!(psi.is_zero());
            assert_eq!(hg, centralizer(d.base(), g).unwrap());
        }
    }

    #[test]
    fn untwisted_diagonal_identity() {
        for name in ["Z2", "Z3", "Z4", "Z2xZ2", "S3"] {
            let d = double(name, 0);
            let g = d.base();
            let expect: usize = conjugacy_classes(g)
                .iter()
                .map(|c| {
                    let cg = g.restrict_to(&centralizer(g, c[0]).unwrap());
                    crate::subgroup::conjugacy_classes(&cg).len()
                })
                .sum();
            let rank = module_rank_double(&d, &d.diagonal_pair().unwrap()).unwrap();
            assert_eq!(rank.total_rank, expect, "{name}");
        }
    }

    #[test]
    fn doubled_z2_has_six_pairs() {
        let d = double("Z2", 0);
        let c = classify_pairs(&d.doubled, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(c.pair_count(), 6);
    }

    #[test]
    fn trivial_group_has_one_pair() {
        let d = double("trivial", 0);
        let c = classify_pairs(&d.doubled, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(c.pair_count(), 1);
    }

    #[test]
    fn exact_factorization_gives_fiber_functor() {
        let d = double("S3", 0);
        let sq = &d.square;
        let right = sq.product_subgroup(&Subgroup::trivial(), &Subgroup::whole(&sq.base));
        let cand = PairHPsi::untwisted(&d.doubled, right).unwrap();
        let base = d.diagonal_pair().unwrap();
        let ff = fiber_functors(&d.doubled, &base, &[cand]).unwrap();
        assert_eq!(ff.len(), 1);
    }

    #[test]
    fn non_trivializing_psi_is_rejected() {
        let d = double("S3", 1);
        // ω̃ is nontrivial on (a Z/2) × e, so ψ = 0 cannot trivialize it
        let sq = &d.square;
        let z2 = d.base().generate(&[1]);
        let h = sq.product_subgroup(&z2, &Subgroup::trivial());
        assert_eq!(PairHPsi::untwisted(&d.doubled, h).unwrap_err(), Error::NotTrivializing);
    }
}
