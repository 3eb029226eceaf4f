//! Subgroups, conjugacy, and enumeration of subgroup classes.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Default bound on the order of a group whose subgroup lattice is enumerated.
pub const DEFAULT_MAX_ORDER: usize = 100;

/// A subgroup, stored as the sorted list of its elements in the parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates closure under multiplication and inverses.
    pub fn new(g: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        for &x in &elements {
            g.check_element(x)?;
        }
        elements.sort_unstable();
        elements.dedup();
        let h = Subgroup { elements };
        if !h.contains(0) {
            return Err(Error::NotASubgroup);
        }
        for &a in h.elements() {
            if !h.contains(g.inv(a)) || h.elements().iter().any(|&b| !h.contains(g.mul(a, b))) {
                return Err(Error::NotASubgroup);
            }
        }
        debug_assert_eq!(g.order() % h.order(), 0, "Lagrange");
        Ok(h)
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<usize>) -> Self {
        Subgroup { elements }
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup { elements: (0..g.order()).collect() }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position of `x` in the sorted element list (its index in
    /// [`FiniteGroup::restrict_to`]).
    pub fn local_index(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            elements: self.elements.iter().copied().filter(|&x| other.contains(x)).collect(),
        }
    }

    /// `n H n⁻¹`
    pub fn conjugate(&self, g: &FiniteGroup, n: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.elements.iter().map(|&x| g.conj(n, x)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// The lexicographically least conjugate.
    pub fn canonical_conjugate(&self, g: &FiniteGroup) -> Subgroup {
        (0..g.order())
            .map(|n| self.conjugate(g, n))
            .min()
            .expect("group is nonempty")
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..g.order()).map(|n| g.conj(n, x)).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            seen[y] = true;
        }
        classes.push(class);
    }
    classes
}

pub fn centralizer(g: &FiniteGroup, x: usize) -> Result<Subgroup> {
    g.check_element(x)?;
    Ok(Subgroup {
        elements: (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)).collect(),
    })
}

pub fn normalizer(g: &FiniteGroup, h: &Subgroup) -> Result<Subgroup> {
    let h = Subgroup::new(g, h.elements.clone())?;
    Ok(Subgroup {
        elements: (0..g.order()).filter(|&n| h.conjugate(g, n) == h).collect(),
    })
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    /// Lexicographically least member of the class.
    pub representative: Subgroup,
    pub class_size: usize,
    pub normalizer: Subgroup,
}

/// Every subgroup of `g`: cyclic subgroups, then joins with cyclic subgroups
/// until nothing new appears. Sorted by (order, element list).
pub fn all_subgroups(g: &FiniteGroup, max_order: usize) -> Result<Vec<Subgroup>> {
    if g.order() > max_order {
        return Err(Error::SizeBound { size: g.order(), bound: max_order });
    }
    let mut cyclic: Vec<(usize, Subgroup)> = Vec::new();
    let mut cyclic_seen = HashSet::new();
    for x in 0..g.order() {
        let c = g.generate(&[x]);
        if cyclic_seen.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }
    let mut known: HashSet<Subgroup> = cyclic.iter().map(|(_, c)| c.clone()).collect();
    let mut frontier: Vec<Subgroup> = known.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            let gens = g.generating_set(h);
            for (x, c) in &cyclic {
                if c.is_subgroup_of(h) {
                    continue;
                }
                let mut join_gens = gens.clone();
                join_gens.push(*x);
                let join = g.generate(&join_gens);
                if known.insert(join.clone()) {
                    next.push(join);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Subgroup> = known.into_iter().collect();
    all.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(all)
}

/// Subgroups of `g` up to conjugacy, sorted by (order, element list) of the
/// canonical representative.
pub fn subgroups_up_to_conjugacy(g: &FiniteGroup, max_order: usize) -> Result<Vec<SubgroupClass>> {
    let all = all_subgroups(g, max_order)?;
    let mut classes: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    for h in &all {
        let rep = h.canonical_conjugate(g);
        *classes.entry((rep.order(), rep.elements)).or_default() += 1;
    }
    classes
        .into_iter()
        .map(|((_, elements), class_size)| {
            let representative = Subgroup { elements };
            let normalizer = normalizer(g, &representative)?;
            debug_assert_eq!(class_size * normalizer.order(), g.order());
            Ok(SubgroupClass { representative, class_size, normalizer })
        })
        .collect()
}

/// `G = H · H₁` with unique factorization.
pub fn is_exact_factorization(g: &FiniteGroup, h: &Subgroup, h1: &Subgroup) -> bool {
    h.order() * h1.order() == g.order() && h.intersection(h1).order() == 1
}
