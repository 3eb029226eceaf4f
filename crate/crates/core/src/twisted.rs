//! Twisted group algebras `ℂ_ψ[H]` and their irreducible count.

use crate::cochain::{require_cocycle, Cochain};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{centralizer, conjugacy_classes};

/// `ℂ_ψ[H]` for a normalized 2-cocycle `ψ` on `H`.
#[derive(Clone, Debug)]
pub struct TwistedAlgebra {
    group: FiniteGroup,
    psi: Cochain,
}

impl TwistedAlgebra {
    pub fn new(group: FiniteGroup, psi: Cochain) -> Result<Self> {
        if psi.degree() != 2 || psi.order() != group.order() {
            return Err(Error::InvalidArgument("twist must be a 2-cochain on the group".into()));
        }
        require_cocycle(&group, &psi)?;
        Ok(TwistedAlgebra { group, psi })
    }

    pub fn untwisted(group: FiniteGroup, modulus: u64) -> Self {
        let psi = Cochain::zero(group.order(), 2, modulus);
        TwistedAlgebra { group, psi }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn psi(&self) -> &Cochain {
        &self.psi
    }

    /// `ψ(h, x) = ψ(x, h)` for every `x` centralizing `h`.
    pub fn is_regular(&self, h: usize) -> bool {
        let c = centralizer(&self.group, h).expect("element of the group");
        c.elements().iter().all(|&x| self.psi.get(&[h, x]) == self.psi.get(&[x, h]))
    }
}

/// Number of irreducible `ψ`-projective representations, i.e. of `ψ`-regular
/// conjugacy classes.
pub fn projective_irrep_count(a: &TwistedAlgebra) -> usize {
    conjugacy_classes(&a.group).iter().filter(|class| a.is_regular(class[0])).count()
}

/// `ℂ_ψ[H]` is a full matrix algebra.
pub fn is_nondegenerate(a: &TwistedAlgebra) -> bool {
    projective_irrep_count(a) == 1
}
