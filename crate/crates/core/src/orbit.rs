//! The direct square `G × G`, two-sided actions on `G`, and double cosets.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// `G × G` with `(a, b)` encoded as `a * |G| + b`, its diagonal, and the
/// coordinate projections.
#[derive(Clone, Debug)]
pub struct DirectSquare {
    pub base: FiniteGroup,
    pub square: FiniteGroup,
    pub diagonal: Subgroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    First,
    Second,
}

impl DirectSquare {
    pub fn new(base: &FiniteGroup) -> Self {
        let square = base.direct_product(base);
        let n = base.order();
        let diagonal = Subgroup::from_sorted_unchecked((0..n).map(|a| a * n + a).collect());
        let sq = DirectSquare { base: base.clone(), square, diagonal };
        debug_assert!(sq.projections_are_homomorphisms());
        sq
    }

    #[inline]
    pub fn encode(&self, a: usize, b: usize) -> usize {
        a * self.base.order() + b
    }

    #[inline]
    pub fn p1(&self, x: usize) -> usize {
        x / self.base.order()
    }

    #[inline]
    pub fn p2(&self, x: usize) -> usize {
        x % self.base.order()
    }

    pub fn project(&self, p: Projection, x: usize) -> usize {
        match p {
            Projection::First => self.p1(x),
            Projection::Second => self.p2(x),
        }
    }

    /// Exhaustive check that both projections are surjective homomorphisms.
    pub fn projections_are_homomorphisms(&self) -> bool {
        let m = self.square.order();
        let n = self.base.order();
        let surjective = (0..n).all(|a| self.p1(self.encode(a, 0)) == a && self.p2(self.encode(0, a)) == a);
        surjective
            && (0..m).all(|x| {
                (0..m).all(|y| {
                    let xy = self.square.mul(x, y);
                    self.p1(xy) == self.base.mul(self.p1(x), self.p1(y))
                        && self.p2(xy) == self.base.mul(self.p2(x), self.p2(y))
                })
            })
    }

    /// `A × B` for subgroups of the base.
    pub fn product_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut els: Vec<usize> = a
            .elements()
            .iter()
            .flat_map(|&x| b.elements().iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.encode(x, y))
            .collect();
        els.sort_unstable();
        Subgroup::from_sorted_unchecked(els)
    }

    /// `{(a, a) : a ∈ A}`
    pub fn diagonal_of(&self, a: &Subgroup) -> Subgroup {
        Subgroup::from_sorted_unchecked(a.elements().iter().map(|&x| self.encode(x, x)).collect())
    }

    fn check_inside(&self, h: &Subgroup) -> Result<()> {
        match h.elements().last() {
            Some(&x) if x >= self.square.order() => Err(Error::WrongAmbient(format!(
                "element {x} is outside G × G of order {}",
                self.square.order()
            ))),
            _ => Ok(()),
        }
    }
}

pub fn direct_square_with_diagonal(g: &FiniteGroup) -> DirectSquare {
    DirectSquare::new(g)
}

/// Orbits of `H ⊂ G × G` on `G` under `(h₁, h₂)·g = h₁ g h₂⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub orbits: Vec<Vec<usize>>,
    /// Least element of each orbit.
    pub representatives: Vec<usize>,
    /// Stabilizer of each representative, carried to `G` by the first
    /// projection (the second coordinate is `g⁻¹ h₁ g`).
    pub stabilizers: Vec<Subgroup>,
}

impl OrbitDecomposition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

/// `{h₁ : (h₁, g⁻¹ h₁ g) ∈ H}`
pub fn stabilizer_of(sq: &DirectSquare, h: &Subgroup, g: usize) -> Subgroup {
    let base = &sq.base;
    let ginv = base.inv(g);
    let mut els: Vec<usize> = h
        .elements()
        .iter()
        .filter(|&&x| base.mul(base.mul(ginv, sq.p1(x)), g) == sq.p2(x))
        .map(|&x| sq.p1(x))
        .collect();
    els.sort_unstable();
    Subgroup::from_sorted_unchecked(els)
}

pub fn orbit_decomposition(sq: &DirectSquare, h: &Subgroup) -> Result<OrbitDecomposition> {
    sq.check_inside(h)?;
    let base = &sq.base;
    let n = base.order();
    let mut seen = vec![false; n];
    let mut out = OrbitDecomposition { orbits: vec![], representatives: vec![], stabilizers: vec![] };
    for g in 0..n {
        if seen[g] {
            continue;
        }
        let mut orbit: Vec<usize> = h
            .elements()
            .iter()
            .map(|&x| base.mul(base.mul(sq.p1(x), g), base.inv(sq.p2(x))))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            seen[y] = true;
        }
        let stab = stabilizer_of(sq, h, g);
        debug_assert_eq!(orbit.len() * stab.order(), h.order());
        out.orbits.push(orbit);
        out.representatives.push(g);
        out.stabilizers.push(stab);
    }
    Ok(out)
}

/// Two-sided cosets `H₁ x H₂`, each sorted, listed by least element.
pub fn double_cosets(g: &FiniteGroup, h1: &Subgroup, h2: &Subgroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut cosets = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut coset: Vec<usize> = h1
            .elements()
            .iter()
            .flat_map(|&a| h2.elements().iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(g.mul(a, x), b))
            .collect();
        coset.sort_unstable();
        coset.dedup();
        for &y in &coset {
            seen[y] = true;
        }
        cosets.push(coset);
    }
    cosets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{group_from_spec, GroupSpec};
    use crate::subgroup::{all_subgroups, conjugacy_classes};

    fn builtin(name: &str) -> FiniteGroup {
        group_from_spec(&GroupSpec::builtin(name)).unwrap()
    }

    #[test]
    fn squares() {
        let t = DirectSquare::new(&builtin("trivial"));
        assert_eq!(t.square.order(), 1);
        assert_eq!(t.diagonal.order(), 1);
        let s = DirectSquare::new(&builtin("S3"));
        assert_eq!(s.square.order(), 36);
        assert_eq!(s.diagonal.order(), 6);
        assert!(s.projections_are_homomorphisms());
        let z = DirectSquare::new(&builtin("Z2"));
        assert!(z.square.is_abelian());
        assert_eq!(z.square.order(), 4);
        assert!((1..4).all(|x| z.square.element_order(x) == 2));
        assert_eq!(z.diagonal.elements(), &[0, 3]);
    }

    #[test]
    fn s3_orbit_counts() {
        let sq = DirectSquare::new(&builtin("S3"));
        let diag = orbit_decomposition(&sq, &sq.diagonal).unwrap();
        assert_eq!(diag.len(), 3);
        let mut orbits = diag.orbits.clone();
        orbits.sort();
        let mut classes = conjugacy_classes(&sq.base);
        classes.sort();
        assert_eq!(orbits, classes);

        let trivial = orbit_decomposition(&sq, &Subgroup::trivial()).unwrap();
        assert_eq!(trivial.len(), 6);
        assert!(trivial.orbits.iter().all(|o| o.len() == 1));

        let whole = orbit_decomposition(&sq, &Subgroup::whole(&sq.square)).unwrap();
        assert_eq!(whole.len(), 1);
        assert_eq!(whole.stabilizers[0].order(), 6);
    }

    #[test]
    fn wrong_ambient() {
        let sq = DirectSquare::new(&builtin("Z2"));
        let bogus = Subgroup::from_sorted_unchecked(vec![0, 9]);
        assert!(matches!(orbit_decomposition(&sq, &bogus), Err(Error::WrongAmbient(_))));
    }

    #[test]
    fn orbits_match_double_cosets_of_diagonal() {
        for name in ["Z2", "Z3", "S3", "Z2xZ2"] {
            let sq = DirectSquare::new(&builtin(name));
            for h in all_subgroups(&sq.square, 100).unwrap() {
                let orbits = orbit_decomposition(&sq, &h).unwrap();
                let total: usize = orbits.orbits.iter().map(|o| o.len()).sum();
                assert_eq!(total, sq.base.order());
                for (o, s) in orbits.orbits.iter().zip(&orbits.stabilizers) {
                    assert_eq!(o.len() * s.order(), h.order());
                }
                let cosets = double_cosets(&sq.square, &sq.diagonal, &h);
                assert_eq!(orbits.len(), cosets.len(), "{name} {:?}", h.elements());
            }
        }
    }
}
