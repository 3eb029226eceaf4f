//! Finite groups stored as dense Cayley tables.
//!
//! Elements are the indices `0..order`, and index 0 is always the identity.
//! Groups are built from a [`GroupSpec`]: a builtin name, a list of
//! permutation generators, or an explicit multiplication table.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subgroup::Subgroup;

/// Largest order for which group laws are re-verified exhaustively.
pub const EXHAUSTIVE_CHECK_ORDER: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Builds a group from a square multiplication table.
    ///
    /// The identity is moved to index 0 if the table has it elsewhere; the
    /// remaining labels keep their relative order.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for row in rows {
            if row.len() != n {
                return Err(Error::BadSpec("Cayley table is not square".into()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::ElementOutOfRange { element: x, order: n });
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        // relabel so that the identity sits at index 0
        let relabel: Vec<usize> = (0..n)
            .map(|x| match x {
                x if x == e => 0,
                x if x < e => x + 1,
                x => x,
            })
            .collect();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel[a] * n + relabel[b]] = relabel[rows[a][b]];
            }
        }
        Self::from_flat(n, table, None)
    }

    fn from_flat(order: usize, table: Vec<usize>, names: Option<Vec<String>>) -> Result<Self> {
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| table[a * order + b] == 0)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no right inverse")))?;
            if table[b * order + a] != 0 {
                return Err(Error::NotAGroup(format!("element {a} has no two-sided inverse")));
            }
            inv[a] = b;
        }
        let g = FiniteGroup { order, table, inv, names };
        if order <= EXHAUSTIVE_CHECK_ORDER {
            g.verify_axioms()?;
        }
        Ok(g)
    }

    /// Exhaustively checks associativity, the unit law and inverses.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::NotAGroup("index 0 is not the identity".into()));
            }
            if self.mul(a, self.inv[a]) != 0 || self.mul(self.inv[a], a) != 0 {
                return Err(Error::NotAGroup(format!("bad inverse for {a}")));
            }
            // each row of a group table is a permutation
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = self.mul(a, b);
                if std::mem::replace(&mut seen[c], true) {
                    return Err(Error::NotAGroup(format!("row {a} repeats {c}")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NonAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Closure of permutations under composition, breadth first from the
    /// identity in generator order. `(p * q)(x) = p(q(x))`.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for g in generators {
            if g.len() != degree {
                return Err(Error::BadSpec(format!(
                    "generator has {} images, expected {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::BadSpec("generator is not a permutation".into()));
                }
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p: Vec<usize> = (0..degree).map(|x| elements[i][g[x]]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let p: Vec<usize> = (0..degree).map(|x| elements[a][elements[b][x]]).collect();
                table[a * n + b] = index[&p];
            }
        }
        let names = elements.iter().map(|p| cycle_notation(p)).collect();
        Self::from_flat(n, table, Some(names))
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAGroup("cyclic group of order 0".into()));
        }
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let names = (0..n).map(|i| format!("{i}")).collect();
        Self::from_flat(n, table, Some(names))
    }

    /// Direct product with `(a, b)` encoded as `a * other.order() + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let order = n * m;
        let mut table = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                table[x * order + y] =
                    self.mul(x / m, y / m) * m + other.mul(x % m, y % m);
            }
        }
        let inv = (0..order).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        let names = (0..order)
            .map(|x| format!("({},{})", self.name(x / m), other.name(x % m)))
            .collect();
        FiniteGroup { order, table, inv, names: Some(names) }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Left-to-right product of a word.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv[g])
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn element_names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: x, order: self.order })
        }
    }

    /// Smallest subgroup containing `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elements = vec![0];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            i += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                }
            }
        }
        elements.sort_unstable();
        Subgroup::from_sorted_unchecked(elements)
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.generate(&[]);
        for &x in h.elements() {
            if !span.contains(x) {
                gens.push(x);
                span = self.generate(&gens);
                if span.order() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    /// The subgroup `h` as a group in its own right. Local index `i`
    /// corresponds to `h.elements()[i]`, so the identity stays at 0.
    pub fn restrict_to(&self, h: &Subgroup) -> FiniteGroup {
        let els = h.elements();
        let n = els.len();
        let mut table = vec![0; n * n];
        for (i, &a) in els.iter().enumerate() {
            for (j, &b) in els.iter().enumerate() {
                table[i * n + j] = h.local_index(self.mul(a, b)).expect("subgroup is closed");
            }
        }
        let inv = els
            .iter()
            .map(|&a| h.local_index(self.inv(a)).expect("subgroup is closed"))
            .collect();
        let names = Some(els.iter().map(|&a| self.name(a)).collect());
        FiniteGroup { order: n, table, inv, names }
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push('(');
        out.push_str(&body.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// Group description, as accepted on the command line and in files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupSpec {
    Builtin { name: String },
    Perm { degree: usize, generators: Vec<Vec<usize>> },
    Cayley { table: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn builtin(name: &str) -> Self {
        GroupSpec::Builtin { name: name.to_string() }
    }

    /// Accepts a bare builtin name or a JSON object.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::BadSpec(e.to_string()))
        } else if BUILTINS.contains(&text) {
            Ok(Self::builtin(text))
        } else {
            Err(Error::UnknownBuiltin(text.to_string()))
        }
    }
}

pub const BUILTINS: &[&str] = &["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "S3xS3", "D4", "Q8"];

/// Builds and validates the group described by `spec`.
///
/// Builtin element orders: cyclic groups `Zn` list `0..n` additively;
/// `S3` and `D4` are breadth-first closures of `[(1 2), (1 2 3)]` and
/// `[(1 2 3 4), (2 4)]`; products use `a * |B| + b`; `Q8` lists
/// `1, -1, i, -i, j, -j, k, -k`.
pub fn group_from_spec(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Builtin { name } => builtin(name),
        GroupSpec::Perm { degree, generators } => {
            let zero_based = generators
                .iter()
                .map(|g| {
                    g.iter()
                        .map(|&x| {
                            x.checked_sub(1)
                                .ok_or_else(|| Error::BadSpec("permutation images are one-based".into()))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_permutations(*degree, &zero_based)
        }
        GroupSpec::Cayley { table } => FiniteGroup::from_table(table),
    }
}

fn builtin(name: &str) -> Result<FiniteGroup> {
    match name {
        "trivial" => FiniteGroup::cyclic(1),
        "Z2" => FiniteGroup::cyclic(2),
        "Z3" => FiniteGroup::cyclic(3),
        "Z4" => FiniteGroup::cyclic(4),
        "Z2xZ2" => {
            let z2 = FiniteGroup::cyclic(2)?;
            Ok(z2.direct_product(&z2))
        }
        "S3" => s3(),
        "S3xS3" => {
            let s = s3()?;
            Ok(s.direct_product(&s))
        }
        "D4" => FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]),
        "Q8" => q8(),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

fn s3() -> Result<FiniteGroup> {
    FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

fn q8() -> Result<FiniteGroup> {
    // element 2u + s is (-1)^s * unit[u], units 1, i, j, k
    // unit products: (u, v) -> (sign, w)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = vec![0; 64];
    for a in 0..8 {
        for b in 0..8 {
            let (s, w) = UNIT[a / 2][b / 2];
            table[a * 8 + b] = 2 * w + (s + a % 2 + b % 2) % 2;
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    FiniteGroup::from_flat(8, table, Some(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_orders() {
        let expected = [
            ("trivial", 1),
            ("Z2", 2),
            ("Z3", 3),
            ("Z4", 4),
            ("Z2xZ2", 4),
            ("S3", 6),
            ("S3xS3", 36),
            ("D4", 8),
            ("Q8", 8),
        ];
        for (name, order) in expected {
            let g = group_from_spec(&GroupSpec::builtin(name)).unwrap();
            assert_eq!(g.order(), order, "{name}");
            g.verify_axioms().unwrap();
        }
    }

    #[test]
    fn q8_is_quaternion() {
        let q = builtin("Q8").unwrap();
        assert!(!q.is_abelian());
        // -1 is the unique involution and every other non-identity element has order 4
        let orders: Vec<usize> = (0..8).map(|x| q.element_order(x)).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 4, 4, 4]);
        // i j = k
        assert_eq!(q.mul(2, 4), 6);
    }

    #[test]
    fn z2_table() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn table_identity_moved_to_zero() {
        // Z/3 written with identity at label 2
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_table(&t).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn table_errors() {
        let not_assoc = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(matches!(
            FiniteGroup::from_table(&not_assoc),
            Err(Error::NotAGroup(_)) | Err(Error::NonAssociative(..))
        ));
        // loop of order 5 with identity and inverses but not associative
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&loop5), Err(Error::NonAssociative(..))));
        let no_identity = vec![vec![1, 0], vec![0, 0]];
        assert!(matches!(FiniteGroup::from_table(&no_identity), Err(Error::NotAGroup(_))));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1]]),
            Err(Error::BadSpec(_))
        ));
        assert!(matches!(
            group_from_spec(&GroupSpec::builtin("nope")),
            Err(Error::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn spec_json_forms() {
        let spec = GroupSpec::parse(r#"{"type":"perm","degree":3,"generators":[[2,1,3],[2,3,1]]}"#)
            .unwrap();
        let g = group_from_spec(&spec).unwrap();
        assert_eq!(g.order(), 6);
        let spec = GroupSpec::parse(r#"{"type":"cayley","table":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(group_from_spec(&spec).unwrap().order(), 2);
        assert_eq!(GroupSpec::parse("S3").unwrap(), GroupSpec::builtin("S3"));
        assert!(matches!(GroupSpec::parse("nope"), Err(Error::UnknownBuiltin(_))));
        assert!(matches!(GroupSpec::parse("{\"type\":1}"), Err(Error::BadSpec(_))));
        let round = serde_json::to_string(&GroupSpec::builtin("D4")).unwrap();
        assert_eq!(round, r#"{"type":"builtin","name":"D4"}"#);
    }

    #[test]
    fn perm_generators_match_builtin_s3_up_to_relabeling() {
        // same generators in the other order: a different labelling of S3
        let g = group_from_spec(&GroupSpec::Perm {
            degree: 3,
            generators: vec![vec![2, 3, 1], vec![2, 1, 3]],
        })
        .unwrap();
        let s3 = builtin("S3").unwrap();
        assert_eq!(g.order(), 6);
        // brute-force search for an isomorphism
        let found = permutations(6).into_iter().any(|p| {
            p[0] == 0
                && (0..6).all(|a| (0..6).all(|b| p[g.mul(a, b)] == s3.mul(p[a], p[b])))
        });
        assert!(found);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn cycle_names() {
        let s3 = builtin("S3").unwrap();
        assert_eq!(s3.name(0), "e");
        let names: Vec<String> = (0..6).map(|x| s3.name(x)).collect();
        assert!(names.contains(&"(1 2 3)".to_string()));
        assert!(names.contains(&"(1 2)".to_string()));
    }

    #[test]
    fn restrict_keeps_identity_first() {
        let s3 = builtin("S3").unwrap();
        let a3: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
        let h = Subgroup::new(&s3, a3).unwrap();
        let g = s3.restrict_to(&h);
        assert_eq!(g.order(), 3);
        g.verify_axioms().unwrap();
    }
}
