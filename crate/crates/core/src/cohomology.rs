//! Cohomology with coefficients in `μ_M` and in `ℂ*`, triviality tests and
//! trivializations.
//!
//! Over `ℂ*`: from `μ_M ↪ ℂ* → ℂ*` (the `M`-th power map), the kernel of
//! `Hⁿ(H, μ_M) → Hⁿ(H, ℂ*)` is the image of the connecting map. Classes in
//! `Hⁿ⁻¹(H, ℂ*)` have `μ_{|H|}`-valued representatives `z`; the connecting
//! map sends `z` to `d(ẑ)/|H|` where `ẑ` is the integer lift of `z`.

use crate::cochain::{coboundary, require_cocycle, Cochain};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{FiniteAbelian, LinearSolution};
use crate::solver::{CochainSolver, DEFAULT_SOLVER_BOUND};
use crate::subgroup::Subgroup;

/// `Zⁿ / Bⁿ` (optionally further divided by the `ℂ*`-trivial classes), with
/// explicit generators and a coordinate map.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub modulus: u64,
    pub over_cstar: bool,
    /// `d₁ | d₂ | …`, all greater than 1.
    pub invariant_factors: Vec<u64>,
    /// Normalized cocycles; the `i`-th one has coordinates `eᵢ`.
    pub generators: Vec<Cochain>,
    solver: CochainSolver,
    cocycles: LinearSolution,
    quotient: FiniteAbelian,
}

impl CohomologyGroup {
    pub fn order(&self) -> u64 {
        self.quotient.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn group(&self) -> &FiniteGroup {
        self.solver.group()
    }

    /// Coordinates of the class of a cocycle, reduced by the invariant factors.
    pub fn lookup(&self, f: &Cochain) -> Result<Vec<u64>> {
        if f.modulus() != self.modulus {
            return Err(Error::ModulusMismatch { expected: self.modulus, found: f.modulus() });
        }
        if f.degree() != self.degree || f.order() != self.group().order() {
            return Err(Error::InvalidArgument("cocycle has the wrong shape".into()));
        }
        require_cocycle(self.group(), f)?;
        Ok(self.lookup_unchecked(f))
    }

    /// [`Self::lookup`] without the cocycle check.
    pub fn lookup_unchecked(&self, f: &Cochain) -> Vec<u64> {
        let kc = self.cocycles.kernel_coordinates(&self.solver.params_of(f));
        self.quotient.coordinates(&kc)
    }

    /// A representative cocycle with the given coordinates.
    pub fn element(&self, coords: &[u64]) -> Cochain {
        let kc = self.quotient.element(coords);
        self.cocycle_at_kernel_coordinates(&kc)
    }

    /// All classes in lexicographic coordinate order, with representatives.
    pub fn elements(&self) -> Vec<(Vec<u64>, Cochain)> {
        self.quotient
            .all_coordinates()
            .into_iter()
            .map(|c| {
                let e = self.element(&c);
                (c, e)
            })
            .collect()
    }

    fn cocycle_at_kernel_coordinates(&self, kc: &[u64]) -> Cochain {
        let m = self.modulus;
        let mut params = vec![0u64; self.solver.param_count()];
        for (c, k) in kc.iter().zip(&self.cocycles.kernel) {
            for (p, &v) in params.iter_mut().zip(&k.vector) {
                *p = ((*p as u128 + *c as u128 * v as u128) % m as u128) as u64;
            }
        }
        self.solver.cocycle_from_params(&params)
    }
}

fn check_degree(n: usize) -> Result<()> {
    if (1..=3).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("cohomology degree {n} is outside 1..=3")))
    }
}

fn build(g: &FiniteGroup, n: usize, m: u64, extra: Vec<Cochain>, over_cstar: bool, bound: usize) -> Result<CohomologyGroup> {
    let solver = CochainSolver::new(g, n, m, bound)?;
    let cocycles = solver.cocycle_space();
    let r = cocycles.kernel.len();
    let mut relations: Vec<Vec<u64>> = cocycles
        .kernel
        .iter()
        .enumerate()
        .map(|(j, k)| {
            let mut row = vec![0u64; r];
            row[j] = k.order % m;
            row
        })
        .collect();
    for b in solver.coboundary_relations() {
        relations.push(cocycles.kernel_coordinates(&b));
    }
    for c in &extra {
        relations.push(cocycles.kernel_coordinates(&solver.params_of(c)));
    }
    let quotient = FiniteAbelian::quotient(r, m, &relations);
    let mut out = CohomologyGroup {
        degree: n,
        modulus: m,
        over_cstar,
        invariant_factors: quotient.invariants.clone(),
        generators: vec![],
        solver,
        cocycles,
        quotient,
    };
    out.generators = out
        .quotient
        .generators
        .iter()
        .map(|kc| out.cocycle_at_kernel_coordinates(kc))
        .collect();
    Ok(out)
}

/// `Hⁿ(G, μ_M)` for `n ∈ {1, 2, 3}`.
pub fn cohomology_mod(g: &FiniteGroup, n: usize, m: u64) -> Result<CohomologyGroup> {
    cohomology_mod_bounded(g, n, m, DEFAULT_SOLVER_BOUND)
}

pub fn cohomology_mod_bounded(g: &FiniteGroup, n: usize, m: u64, bound: usize) -> Result<CohomologyGroup> {
    check_degree(n)?;
    build(g, n, m, vec![], false, bound)
}

/// `Hⁿ(G, ℂ*)` with `μ_{|G|}`-valued generators.
pub fn cohomology_cstar(g: &FiniteGroup, n: usize) -> Result<CohomologyGroup> {
    cohomology_cstar_at(g, n, g.order() as u64, DEFAULT_SOLVER_BOUND)
}

/// `Hⁿ(G, ℂ*)` computed inside `Hⁿ(G, μ_M)`; `|G|` must divide `M` so that
/// every class has a representative.
pub fn cohomology_cstar_at(g: &FiniteGroup, n: usize, m: u64, bound: usize) -> Result<CohomologyGroup> {
    check_degree(n)?;
    let order = g.order() as u64;
    if !m.is_multiple_of(order) {
        return Err(Error::InvalidArgument(format!("modulus {m} is not a multiple of |G| = {order}")));
    }
    let mut extra = Vec::new();
    if n >= 2 && order > 1 {
        let lower = CochainSolver::new(g, n - 1, order, bound)?;
        for k in &lower.cocycle_space().kernel {
            let z = lower.cocycle_from_params(&k.vector);
            extra.push(connecting_image(g, &z, m)?);
        }
    }
    build(g, n, m, extra, true, bound)
}

/// `d(ẑ)/|G|` over `Z/M` for `z ∈ Zⁿ⁻¹(G, Z/|G|)`.
fn connecting_image(g: &FiniteGroup, z: &Cochain, m: u64) -> Result<Cochain> {
    let order = g.order() as u64;
    let lifted = Cochain::from_values(z.order(), z.degree(), m * order, z.values().to_vec())?;
    let d = coboundary(g, &lifted)?;
    debug_assert!(d.values().iter().all(|v| v % order == 0));
    Cochain::from_values(d.order(), d.degree(), m, d.values().iter().map(|v| v / order).collect())
}

/// If the class of the cocycle `f ∈ Zⁿ(H, μ_M)` dies in `Hⁿ(H, ℂ*)`, returns
/// `φ` over `Z/(M·|H|)` with `dφ = ι(f)`, `ι` being multiplication by `|H|`.
pub fn is_trivial_over_cstar(h: &FiniteGroup, f: &Cochain) -> Result<Option<Cochain>> {
    require_cocycle(h, f)?;
    let n = f.degree();
    check_degree(n)?;
    let big = f.modulus() * h.order() as u64;
    if n == 1 {
        return Ok(f.is_zero().then(|| Cochain::zero(h.order(), 0, big)));
    }
    let solver = CochainSolver::new(h, n - 1, big, DEFAULT_SOLVER_BOUND)?;
    solver.solve(&f.lift_modulus(big)?)
}

/// A normalized `ψ₀` over the modulus of `f` with `dψ₀ = f|_H`, or `None`
/// when `f|_H` is nontrivial over `ℂ*`.
pub fn solve_trivialization(ambient: &FiniteGroup, f: &Cochain, h: &Subgroup) -> Result<Option<Cochain>> {
    let hg = ambient.restrict_to(h);
    let r = crate::cochain::restrict(ambient, f, h)?;
    solve_trivialization_local(&hg, &r)
}

/// [`solve_trivialization`] for a cocycle already restricted to `H`.
pub fn solve_trivialization_local(hg: &FiniteGroup, r: &Cochain) -> Result<Option<Cochain>> {
    if r.degree() != 3 {
        return Err(Error::InvalidArgument("trivializations are sought for 3-cocycles".into()));
    }
    if is_trivial_over_cstar(hg, r)?.is_none() {
        return Ok(None);
    }
    let solver = CochainSolver::new(hg, 2, r.modulus(), DEFAULT_SOLVER_BOUND)?;
    match solver.solve(r)? {
        Some(psi) => Ok(Some(psi)),
        None => Err(Error::InvalidArgument(format!(
            "modulus {} has too little headroom for a trivialization on a subgroup of order {}",
            r.modulus(),
            hg.order()
        ))),
    }
}
