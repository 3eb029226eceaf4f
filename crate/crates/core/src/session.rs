//! One group `G`, its square, the session modulus `Λ = |G × G|²`, and the
//! cocycles `ω = k·ω₀` addressed by an integer `k`.

use crate::cochain::Cochain;
use crate::cohomology::{cohomology_cstar, CohomologyGroup};
use crate::error::{Error, Result};
use crate::group::{group_from_spec, FiniteGroup, GroupSpec};
use crate::labels::class_labels;
use crate::modcat::{
    bimodule_rank, fiber_functors, module_rank_double, Classification, DoubleContext, PairClassifier, PairHPsi,
    RankBreakdown,
};
use crate::orbit::DirectSquare;
use crate::subgroup::DEFAULT_MAX_ORDER;

/// Resource limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ambient order for exhaustive subgroup enumeration.
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_order: DEFAULT_MAX_ORDER }
    }
}

#[derive(Clone, Debug)]
pub struct Session {
    pub spec: GroupSpec,
    pub group: FiniteGroup,
    pub square: DirectSquare,
    pub modulus: u64,
    /// `H³(G, ℂ*)` over `μ_{|G|}`.
    pub h3: CohomologyGroup,
    pub classifier: PairClassifier,
    pub labels: Vec<String>,
    /// Class indices in display order.
    pub display_order: Vec<usize>,
}

/// A classification together with the module rank of every pair.
#[derive(Clone, Debug)]
pub struct DoubleClassification {
    pub k: u64,
    pub context: DoubleContext,
    pub classification: Classification,
    /// Parallel to `classification.pairs()`.
    pub ranks: Vec<RankBreakdown>,
}

impl Session {
    pub fn new(spec: GroupSpec, limits: Limits) -> Result<Self> {
        let group = group_from_spec(&spec)?;
        let square = DirectSquare::new(&group);
        let ambient = square.square.order();
        if ambient > limits.max_order {
            return Err(Error::SizeBound { size: ambient, bound: limits.max_order });
        }
        let modulus = (ambient as u64).pow(2);
        let h3 = cohomology_cstar(&group, 3)?;
        let classifier = PairClassifier::new(&square.square, modulus, limits.max_order)?;
        let classes: Vec<_> = classifier.classes.iter().map(|c| c.class.clone()).collect();
        let (labels, display_order) = class_labels(&square, &classes);
        Ok(Session { spec, group, square, modulus, h3, classifier, labels, display_order })
    }

    /// Order of the cyclic group `⟨ω₀⟩`; `k` is read modulo this.
    pub fn omega_period(&self) -> u64 {
        self.h3.invariant_factors.first().copied().unwrap_or(1)
    }

    pub fn reduce_k(&self, k: i64) -> u64 {
        k.rem_euclid(self.omega_period() as i64) as u64
    }

    /// `k·ω₀` over `Z/Λ`, where `ω₀` is the first generator of `H³(G, ℂ*)`.
    pub fn omega(&self, k: u64) -> Result<Cochain> {
        let n = self.group.order();
        match self.h3.generators.first() {
            Some(w0) => w0.scale(k).lift_modulus(self.modulus),
            None => Ok(Cochain::zero(n, 3, self.modulus)),
        }
    }

    pub fn context(&self, k: u64) -> Result<DoubleContext> {
        DoubleContext::new(&self.group, self.omega(k)?)
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn classify(&self, k: u64) -> Result<DoubleClassification> {
        let context = self.context(k)?;
        let mut classification = self.classifier.classify(&context.doubled)?;
        classification.admissible.sort_by_key(|c| self.display_rank(c.index));
        let ranks = classification
            .pairs()
            .map(|(_, orbit)| module_rank_double(&context, &orbit.pair))
            .collect::<Result<Vec<_>>>()?;
        Ok(DoubleClassification { k, context, classification, ranks })
    }

    fn display_rank(&self, index: usize) -> usize {
        self.display_order.iter().position(|&i| i == index).expect("index is a class")
    }

    /// Fiber functors of the double: `(class index, ψ coordinates)`.
    pub fn fiber_functors(&self, dc: &DoubleClassification) -> Result<Vec<(usize, Vec<u64>)>> {
        let base = dc.context.diagonal_pair()?;
        let mut out = Vec::new();
        for (index, orbit) in dc.classification.pairs() {
            if !fiber_functors(&dc.context.doubled, &base, std::slice::from_ref(&orbit.pair))?.is_empty() {
                out.push((index, orbit.coords.clone()));
            }
        }
        Ok(out)
    }

    /// The pair `(H, ψ₀ + β)` of class `index` with `β` at `coords`.
    pub fn pair(&self, ctx: &DoubleContext, index: usize, coords: &[u64]) -> Result<PairHPsi> {
        self.classifier
            .pair_with(&ctx.doubled, index, coords)?
            .ok_or_else(|| Error::InvalidArgument(format!("{} is not admissible for this ω", self.labels[index])))
    }

    pub fn module_rank(&self, k: u64, index: usize, coords: &[u64]) -> Result<RankBreakdown> {
        let ctx = self.context(k)?;
        module_rank_double(&ctx, &self.pair(&ctx, index, coords)?)
    }

    /// Rank of the dual category: `A(H, ψ)`-bimodules over the double.
    pub fn dual_rank(&self, ctx: &DoubleContext, pair: &PairHPsi) -> Result<usize> {
        Ok(bimodule_rank(&ctx.doubled, pair, pair)?.total_rank)
    }
}
