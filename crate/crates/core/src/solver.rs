//! Solving `dφ = f` for normalized `n`-cochains `φ` on a finite group.
//!
//! Fix a generating set `S`. A normalized `(n+1)`-cocycle vanishes as soon
//! as it vanishes on every tuple whose last entry lies in `S` (induct on
//! the word length of the last entry using the cocycle identity). So
//! `dφ = f` reduces to the rows `(a₁…aₙ₋₁, b, s)`, `s ∈ S`.
//!
//! The values `φ(a₁…aₙ₋₁, s)` are free parameters. Along a breadth-first
//! spanning tree of the Cayley graph (edges `b → bs`), the row
//! `(a₁…aₙ₋₁, b, s)` contains `φ(a₁…aₙ₋₁, bs)` with coefficient `±1` and
//! otherwise only parameters and `φ(a₁…aₙ₋₁, b)`; it determines that cell.
//! Rows off the tree become linear constraints on the parameters.

use crate::cochain::{for_each_coboundary_term, Cochain};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{solve, LinearSolution, ModMatrix};
use crate::subgroup::Subgroup;

/// Default cap on `cells · (parameters + 1)`.
pub const DEFAULT_SOLVER_BOUND: usize = 20_000_000;

const NO_PARAM: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct CochainSolver {
    group: FiniteGroup,
    degree: usize,
    modulus: u64,
    /// Cell (index into the degree-`n` table) of each parameter.
    params: Vec<usize>,
    /// Parameter index per cell, or `NO_PARAM`.
    param_of_cell: Vec<u32>,
    /// Linear part of each cell in the parameters, `cells × P`.
    forms: Vec<u64>,
    /// Tree cells in evaluation order, with the defining row (an index into
    /// the degree-`n+1` table).
    derivations: Vec<(usize, usize)>,
    constraints: Vec<usize>,
    matrix: ModMatrix,
}

fn tuples_without_identity(order: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..order).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out
}

fn encode(order: usize, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, &a| acc * order + a)
}

fn decode(order: usize, mut idx: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % order;
        idx /= order;
    }
    out
}

impl CochainSolver {
    pub fn new(group: &FiniteGroup, degree: usize, modulus: u64, bound: usize) -> Result<Self> {
        if degree == 0 || degree >= crate::cochain::MAX_DEGREE {
            return Err(Error::InvalidArgument(format!("solver degree {degree} unsupported")));
        }
        let n = group.order();
        let gens = group.generating_set(&Subgroup::whole(group));
        let cells = n.pow(degree as u32);
        let p_count = n.saturating_sub(1).pow(degree as u32 - 1) * gens.len();
        let size = cells.saturating_mul(p_count + 1);
        if size > bound {
            return Err(Error::SizeBound { size, bound });
        }
        let m = modulus;

        // breadth-first tree on right multiplication
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut bfs = vec![0];
        let mut i = 0;
        while i < bfs.len() {
            let b = bfs[i];
            i += 1;
            for &s in &gens {
                let x = group.mul(b, s);
                if !seen[x] {
                    seen[x] = true;
                    parent[x] = Some((b, s));
                    bfs.push(x);
                }
            }
        }
        debug_assert_eq!(bfs.len(), n);

        let prefixes = tuples_without_identity(n, degree - 1);
        let mut params = Vec::with_capacity(p_count);
        let mut param_of_cell = vec![NO_PARAM; cells];
        for prefix in &prefixes {
            for &s in &gens {
                let mut t = prefix.clone();
                t.push(s);
                let c = encode(n, &t);
                param_of_cell[c] = params.len() as u32;
                params.push(c);
            }
        }
        let p = params.len();
        let mut forms = vec![0u64; cells * p];
        for (k, &c) in params.iter().enumerate() {
            forms[c * p + k] = 1 % m;
        }

        let target_positive = degree.is_multiple_of(2);
        let mut derivations = Vec::new();
        let mut acc = vec![0u64; p];
        for &x in &bfs {
            let Some((b, s)) = parent[x] else { continue };
            if b == 0 {
                continue;
            }
            for prefix in &prefixes {
                let mut row = prefix.clone();
                row.extend([b, s]);
                let mut target_row = prefix.clone();
                target_row.push(x);
                let target = encode(n, &target_row);
                acc.iter_mut().for_each(|v| *v = 0);
                for_each_coboundary_term(group, &row, |positive, c| {
                    if c == target {
                        return;
                    }
                    let form = &forms[c * p..(c + 1) * p];
                    for (a, &v) in acc.iter_mut().zip(form) {
                        *a = if positive { (*a + v) % m } else { (*a + m - v) % m };
                    }
                });
                // target = ±(f(row) − others); linear part is ∓others
                let dst = &mut forms[target * p..(target + 1) * p];
                for (d, &a) in dst.iter_mut().zip(&acc) {
                    *d = if target_positive { (m - a) % m } else { a };
                }
                derivations.push((target, encode(n, &row)));
            }
        }

        let mut constraints = Vec::new();
        let mut rows = Vec::new();
        for prefix in &prefixes {
            for b in 1..n {
                for &s in &gens {
                    let x = group.mul(b, s);
                    if parent[x] == Some((b, s)) {
                        continue;
                    }
                    let mut row = prefix.clone();
                    row.extend([b, s]);
                    acc.iter_mut().for_each(|v| *v = 0);
                    for_each_coboundary_term(group, &row, |positive, c| {
                        let form = &forms[c * p..(c + 1) * p];
                        for (a, &v) in acc.iter_mut().zip(form) {
                            *a = if positive { (*a + v) % m } else { (*a + m - v) % m };
                        }
                    });
                    constraints.push(encode(n, &row));
                    rows.push(acc.clone());
                }
            }
        }
        let matrix = ModMatrix::from_rows(&rows, p, m);
        Ok(CochainSolver {
            group: group.clone(),
            degree,
            modulus,
            params,
            param_of_cell,
            forms,
            derivations,
            constraints,
            matrix,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn param_count(&self) -> usize {
        self.params.len()
    }

    fn check_target(&self, f: &Cochain) -> Result<()> {
        if f.modulus() != self.modulus {
            return Err(Error::ModulusMismatch { expected: self.modulus, found: f.modulus() });
        }
        if f.degree() != self.degree + 1 || f.order() != self.group.order() {
            return Err(Error::InvalidArgument("target cochain has the wrong shape".into()));
        }
        Ok(())
    }

    /// Tree solution with all parameters zero.
    fn base_solution(&self, f: &Cochain) -> Vec<u64> {
        let m = self.modulus;
        let n = self.group.order();
        let mut phi = vec![0u64; n.pow(self.degree as u32)];
        let target_positive = self.degree.is_multiple_of(2);
        for &(target, row_idx) in &self.derivations {
            let row = decode(n, row_idx, self.degree + 1);
            let mut others = 0u64;
            for_each_coboundary_term(&self.group, &row, |positive, c| {
                if c != target {
                    let v = phi[c];
                    others = if positive { (others + v) % m } else { (others + m - v) % m };
                }
            });
            let rest = (f.at(row_idx) + m - others) % m;
            phi[target] = if target_positive { rest } else { (m - rest) % m };
        }
        phi
    }

    fn assemble(&self, base: &[u64], params: &[u64]) -> Cochain {
        let m = self.modulus;
        let p = self.params.len();
        let values = base
            .iter()
            .enumerate()
            .map(|(c, &b)| {
                self.forms[c * p..(c + 1) * p]
                    .iter()
                    .zip(params)
                    .fold(b, |acc, (&a, &x)| ((acc as u128 + a as u128 * x as u128) % m as u128) as u64)
            })
            .collect();
        Cochain::from_values(self.group.order(), self.degree, m, values).expect("shape is consistent")
    }

    fn system(&self, f: &Cochain) -> (Vec<u64>, Vec<u64>) {
        let m = self.modulus;
        let n = self.group.order();
        let base = self.base_solution(f);
        let rhs = self
            .constraints
            .iter()
            .map(|&row_idx| {
                let row = decode(n, row_idx, self.degree + 1);
                let mut d = 0u64;
                for_each_coboundary_term(&self.group, &row, |positive, c| {
                    let v = base[c];
                    d = if positive { (d + v) % m } else { (d + m - v) % m };
                });
                (f.at(row_idx) + m - d) % m
            })
            .collect();
        (base, rhs)
    }

    /// A normalized `φ` with `dφ = f`, or `None`. `f` must be a normalized
    /// cocycle; the answer is deterministic.
    pub fn solve(&self, f: &Cochain) -> Result<Option<Cochain>> {
        self.check_target(f)?;
        let (base, rhs) = self.system(f);
        Ok(solve(self.matrix.clone(), &rhs).map(|sol| self.assemble(&base, &sol.particular)))
    }

    /// The normalized `n`-cocycles, as kernel generators in parameter space.
    pub fn cocycle_space(&self) -> LinearSolution {
        let zero = vec![0u64; self.constraints.len()];
        solve(self.matrix.clone(), &zero).expect("homogeneous system is consistent")
    }

    /// The cocycle with the given parameter values.
    pub fn cocycle_from_params(&self, params: &[u64]) -> Cochain {
        let base = vec![0u64; self.forms.len() / self.params.len().max(1)];
        if self.params.is_empty() {
            return Cochain::zero(self.group.order(), self.degree, self.modulus);
        }
        self.assemble(&base, params)
    }

    /// Parameter values of a cochain (its values on the parameter cells).
    pub fn params_of(&self, f: &Cochain) -> Vec<u64> {
        self.params.iter().map(|&c| f.at(c)).collect()
    }

    /// Parameter vectors of `dδ_t` for the normalized basis `(n−1)`-cochains `δ_t`.
    pub fn coboundary_relations(&self) -> Vec<Vec<u64>> {
        let n = self.group.order();
        let lower = n.pow(self.degree as u32 - 1);
        let m = self.modulus;
        let p = self.params.len();
        let mut rel = vec![vec![0u64; p]; lower];
        for (k, &c) in self.params.iter().enumerate() {
            let t = decode(n, c, self.degree);
            for_each_coboundary_term(&self.group, &t, |positive, j| {
                let r = &mut rel[j][k];
                *r = if positive { (*r + 1) % m } else { (*r + m - 1) % m };
            });
        }
        rel.retain(|r| r.iter().any(|&v| v != 0));
        rel
    }

    #[doc(hidden)]
    pub fn is_param_cell(&self, cell: usize) -> bool {
        self.param_of_cell[cell] != NO_PARAM
    }
}
