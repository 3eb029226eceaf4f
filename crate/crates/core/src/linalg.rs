//! Linear algebra over `Z/M` for arbitrary (non-prime) `M`.
//!
//! Everything reduces to a Smith form computed with unimodular row and
//! column operations; entries never leave `[0, M)`, so there is no
//! coefficient growth.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, s, t)` with `s a + t b = g = gcd(a, b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - (a / b) * t)
    }
}

pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, s, _) = ext_gcd(a as i128, m as i128);
    (g == 1).then(|| s.rem_euclid(m as i128) as u64)
}

#[inline]
fn mulm(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Unit `u` with `a u ≡ gcd(a, M) (mod M)`.
fn normalizing_unit(a: u64, m: u64) -> u64 {
    let g = gcd(a, m);
    if g == m {
        return 1;
    }
    let mg = m / g;
    let u0 = inv_mod((a / g) % mg, mg).expect("a/g is a unit mod M/g");
    let mut u = u0;
    while gcd(u, m) != 1 {
        u += mg;
    }
    u % m
}

/// Dense row-major matrix over `Z/M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    pub rows: usize,
    pub cols: usize,
    pub modulus: u64,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Self {
        ModMatrix { rows, cols, modulus, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut m = Self::zeros(n, n, modulus);
        for i in 0..n {
            m.set(i, i, 1 % modulus);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>], cols: usize, modulus: u64) -> Self {
        let mut m = Self::zeros(rows.len(), cols, modulus);
        for (i, r) in rows.iter().enumerate() {
            debug_assert_eq!(r.len(), cols);
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % modulus);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// `self · v` for a column vector.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + mulm(a, b, self.modulus)) % self.modulus)
            })
            .collect()
    }

    /// `v · self` for a row vector.
    pub fn vec_mul(&self, v: &[u64]) -> Vec<u64> {
        let m = self.modulus;
        let mut out = vec![0; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o = (*o + mulm(vi, a, m)) % m;
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Rows `(a, b) ← (s a + t b, u a + v b)`.
    fn combine_rows(&mut self, a: usize, b: usize, [s, t, u, v]: [u64; 4]) {
        let m = self.modulus;
        for j in 0..self.cols {
            let (x, y) = (self.get(a, j), self.get(b, j));
            if x == 0 && y == 0 {
                continue;
            }
            self.set(a, j, (mulm(s, x, m) + mulm(t, y, m)) % m);
            self.set(b, j, (mulm(u, x, m) + mulm(v, y, m)) % m);
        }
    }

    /// Columns `(a, b) ← (s a + t b, u a + v b)`.
    fn combine_cols(&mut self, a: usize, b: usize, [s, t, u, v]: [u64; 4]) {
        let m = self.modulus;
        for i in 0..self.rows {
            let (x, y) = (self.get(i, a), self.get(i, b));
            if x == 0 && y == 0 {
                continue;
            }
            self.set(i, a, (mulm(s, x, m) + mulm(t, y, m)) % m);
            self.set(i, b, (mulm(u, x, m) + mulm(v, y, m)) % m);
        }
    }

    fn scale_col(&mut self, j: usize, c: u64) {
        let m = self.modulus;
        for i in 0..self.rows {
            let x = self.get(i, j);
            self.set(i, j, mulm(x, c, m));
        }
    }

    fn scale_row(&mut self, i: usize, c: u64) {
        let m = self.modulus;
        for j in 0..self.cols {
            let x = self.get(i, j);
            self.set(i, j, mulm(x, c, m));
        }
    }
}

/// Unimodular 2×2 transform sending `(x, y)` to `(gcd, 0)`, with its inverse.
fn bezout_transform(x: u64, y: u64, m: u64) -> ([u64; 4], [u64; 4]) {
    let (g, s, t) = ext_gcd(x as i128, y as i128);
    let (xg, yg) = (x as i128 / g, y as i128 / g);
    let r = |v: i128| v.rem_euclid(m as i128) as u64;
    // [[s, t], [-y/g, x/g]] has determinant 1; inverse [[x/g, -t], [y/g, s]]
    ([r(s), r(t), r(-yg), r(xg)], [r(xg), r(-t), r(yg), r(s)])
}

/// `U A V = D` with `D` diagonal; only `V` and `V⁻¹` are kept. Row
/// operations are replayed on the augmented columns passed to [`smith`].
#[derive(Clone, Debug)]
pub struct Smith {
    pub modulus: u64,
    pub rows: usize,
    pub cols: usize,
    /// `d_i` for `i < min(rows, cols)`; each divides `M` (0 stands for `M`).
    pub diag: Vec<u64>,
    pub v: ModMatrix,
    pub v_inv: ModMatrix,
}

/// Smith form of `a` over `Z/M`. Each vector in `aug` (length `a.rows`)
/// receives the same row operations, i.e. becomes `U · aug`.
pub fn smith(mut a: ModMatrix, aug: &mut [Vec<u64>]) -> Smith {
    let m = a.modulus;
    let (rows, cols) = (a.rows, a.cols);
    let mut v = ModMatrix::identity(cols, m);
    let mut v_inv = ModMatrix::identity(cols, m);
    let mut diag = Vec::new();

    let row_op = |a: &mut ModMatrix, aug: &mut [Vec<u64>], i: usize, k: usize, op: [u64; 4]| {
        a.combine_rows(i, k, op);
        for col in aug.iter_mut() {
            let (x, y) = (col[i], col[k]);
            col[i] = (mulm(op[0], x, m) + mulm(op[1], y, m)) % m;
            col[k] = (mulm(op[2], x, m) + mulm(op[3], y, m)) % m;
        }
    };
    // column op on A is mirrored on V (same op) and on V⁻¹ (inverse op on rows)
    let col_op = |a: &mut ModMatrix,
                  v: &mut ModMatrix,
                  v_inv: &mut ModMatrix,
                  i: usize,
                  k: usize,
                  op: [u64; 4],
                  inv: [u64; 4]| {
        a.combine_cols(i, k, op);
        v.combine_cols(i, k, op);
        // V' = V E with E = [[s, u], [t, v]] on (i, k); V'⁻¹ = E⁻¹ V⁻¹
        v_inv.combine_rows(i, k, [inv[0], inv[2], inv[1], inv[3]]);
    };

    for t in 0..rows.min(cols) {
        // pivot: entry with the smallest gcd against M
        let mut best: Option<(u64, usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = a.get(i, j);
                if x != 0 {
                    let g = gcd(x, m);
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                        if g == 1 {
                            break;
                        }
                    }
                }
            }
            if matches!(best, Some((1, _, _))) {
                break;
            }
        }
        let Some((_, pi, pj)) = best else {
            break;
        };
        a.swap_rows(t, pi);
        for col in aug.iter_mut() {
            col.swap(t, pi);
        }
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        loop {
            // make the pivot equal to gcd(pivot, M)
            let u = normalizing_unit(a.get(t, t), m);
            if u != 1 {
                a.scale_col(t, u);
                v.scale_col(t, u);
                v_inv.scale_row(t, inv_mod(u, m).expect("unit"));
            }
            let p = a.get(t, t);
            let mut changed = false;
            for i in t + 1..rows {
                let x = a.get(i, t);
                if x == 0 {
                    continue;
                }
                if x.is_multiple_of(p) {
                    let q = (m - x / p % m) % m;
                    row_op(&mut a, aug, i, t, [1, q, 0, 1]);
                } else {
                    let (op, _) = bezout_transform(p, x, m);
                    row_op(&mut a, aug, t, i, op);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                let x = a.get(t, j);
                if x == 0 {
                    continue;
                }
                let p = a.get(t, t);
                if p != 0 && x.is_multiple_of(p) {
                    let q = (m - x / p % m) % m;
                    // col_j += q col_t ; inverse: row_t of V⁻¹ -= q row_j
                    col_op(&mut a, &mut v, &mut v_inv, j, t, [1, q, 0, 1], [1, (m - q) % m, 0, 1]);
                } else {
                    let (op, inv) = bezout_transform(p, x, m);
                    col_op(&mut a, &mut v, &mut v_inv, t, j, op, inv);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        diag.push(a.get(t, t));
    }
    while diag.len() < rows.min(cols) {
        diag.push(0);
    }
    Smith { modulus: m, rows, cols, diag, v, v_inv }
}

/// Solutions of `A x = b` over `Z/M`: a particular solution plus generators
/// (with their additive orders) of the kernel.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub particular: Vec<u64>,
    pub kernel: Vec<KernelGenerator>,
    pub smith: Smith,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGenerator {
    /// Index of the Smith column this generator comes from.
    pub column: usize,
    /// `V⁻¹ x` has entry `column` divisible by `step` for every kernel element `x`.
    pub step: u64,
    pub order: u64,
    pub vector: Vec<u64>,
}

/// Solves `A x = b`; `None` if inconsistent.
pub fn solve(a: ModMatrix, b: &[u64]) -> Option<LinearSolution> {
    let m = a.modulus;
    let mut aug = vec![b.iter().map(|x| x % m).collect::<Vec<u64>>()];
    let smith = smith(a, &mut aug);
    let rhs = &aug[0];
    let mut q = vec![0u64; smith.cols];
    for (i, &r) in rhs.iter().enumerate() {
        let d = if i < smith.diag.len() { smith.diag[i] } else { 0 };
        let g = gcd(d, m);
        if r % g != 0 {
            return None;
        }
        if i < smith.cols && d != 0 {
            let mg = m / g;
            let unit = inv_mod((d / g) % mg, mg).expect("unit");
            q[i] = mulm(r / g, unit, mg);
        }
    }
    let particular = smith.v.mul_vec(&q);
    let mut kernel = Vec::new();
    for i in 0..smith.cols {
        let d = if i < smith.diag.len() { smith.diag[i] } else { 0 };
        let order = gcd(d, m);
        if order == 1 {
            continue;
        }
        let step = m / order;
        let col: Vec<u64> = (0..smith.cols).map(|r| mulm(smith.v.get(r, i), step, m)).collect();
        kernel.push(KernelGenerator { column: i, step, order, vector: col });
    }
    Some(LinearSolution { particular, kernel, smith })
}

impl LinearSolution {
    /// Coordinates of a kernel element against [`Self::kernel`].
    pub fn kernel_coordinates(&self, x: &[u64]) -> Vec<u64> {
        let q = self.smith.v_inv.mul_vec(x);
        self.kernel
            .iter()
            .map(|k| {
                debug_assert_eq!(q[k.column] % k.step, 0);
                (q[k.column] / k.step) % k.order
            })
            .collect()
    }
}

/// `(pᵉ, coordinate column mod pᵉ, generator)` of a cyclic primary summand.
type PrimaryComponent = (u64, Vec<u64>, Vec<u64>);

/// A finite abelian group `⊕ Z/dᵢ`, `d₁ | d₂ | …`, presented as a quotient
/// of `(Z/M)^r` by a set of relation rows.
#[derive(Clone, Debug)]
pub struct FiniteAbelian {
    pub modulus: u64,
    pub rank_ambient: usize,
    pub invariants: Vec<u64>,
    /// `r × k`: coordinates are `x · coordinate_map` reduced by the invariants.
    coordinate_map: Vec<Vec<u64>>,
    /// Preimages in `(Z/M)^r` of the standard generators.
    pub generators: Vec<Vec<u64>>,
}

impl FiniteAbelian {
    /// `(Z/M)^r / ⟨relations⟩`.
    pub fn quotient(r: usize, modulus: u64, relations: &[Vec<u64>]) -> Self {
        let m = modulus;
        let rel = ModMatrix::from_rows(relations, r, m);
        let s = smith(rel, &mut []);
        // cyclic pieces: coordinate column i of V, generator row i of V⁻¹
        let mut pieces: Vec<(u64, Vec<u64>, Vec<u64>)> = Vec::new();
        for i in 0..r {
            let d = if i < s.diag.len() { s.diag[i] } else { 0 };
            let order = gcd(d, m);
            if order == 1 {
                continue;
            }
            let column: Vec<u64> = (0..r).map(|row| s.v.get(row, i)).collect();
            let generator = s.v_inv.row(i).to_vec();
            pieces.push((order, column, generator));
        }
        Self::from_cyclic_pieces(r, m, pieces)
    }

    /// Regroups cyclic pieces `(order, coordinate column, generator)` into
    /// invariant-factor form via their primary components.
    fn from_cyclic_pieces(r: usize, m: u64, pieces: Vec<(u64, Vec<u64>, Vec<u64>)>) -> Self {
        // primary components: (p, p^e, coordinate column mod p^e, generator)
        let mut primary: Vec<(u64, u64, Vec<u64>, Vec<u64>)> = Vec::new();
        for (order, column, generator) in pieces {
            for (p, q) in prime_power_factors(order) {
                let cofactor = order / q;
                // idempotent of the q-part in Z/order
                let e = mulm(cofactor, inv_mod(cofactor % q, q).expect("coprime"), order);
                // e · g has order q in (Z/M)^r
                let gen: Vec<u64> = generator.iter().map(|&x| mulm(x, e, m)).collect();
                let col: Vec<u64> = column.iter().map(|&x| x % q).collect();
                primary.push((p, q, col, gen));
            }
        }
        let mut primes: Vec<u64> = primary.iter().map(|x| x.0).collect();
        primes.sort_unstable();
        primes.dedup();
        // per prime, components sorted by decreasing size (stable)
        let per_prime: Vec<Vec<PrimaryComponent>> = primes
            .iter()
            .map(|&p| {
                let mut v: Vec<_> = primary
                    .iter()
                    .filter(|x| x.0 == p)
                    .map(|x| (x.1, x.2.clone(), x.3.clone()))
                    .collect();
                v.sort_by_key(|c| std::cmp::Reverse(c.0));
                v
            })
            .collect();
        let k = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
        // largest invariant first, then reversed into divisibility order
        let mut invariants = Vec::new();
        let mut coordinate_cols = Vec::new();
        let mut generators = Vec::new();
        for j in 0..k {
            let parts: Vec<(u64, Vec<u64>, Vec<u64>)> =
                per_prime.iter().filter_map(|v| v.get(j).cloned()).collect();
            let d: u64 = parts.iter().map(|x| x.0).product();
            let mut col = vec![0u64; r];
            let mut gen = vec![0u64; r];
            for (q, c, g) in &parts {
                let cof = d / q;
                let e = mulm(cof, inv_mod(cof % q, *q).expect("coprime"), d);
                for (o, &x) in col.iter_mut().zip(c) {
                    *o = (*o + mulm(x, e, d)) % d;
                }
                for (o, &x) in gen.iter_mut().zip(g) {
                    *o = (*o + x) % m;
                }
            }
            invariants.push(d);
            coordinate_cols.push(col);
            generators.push(gen);
        }
        invariants.reverse();
        coordinate_cols.reverse();
        generators.reverse();
        let coordinate_map = (0..r)
            .map(|row| coordinate_cols.iter().map(|c| c[row]).collect())
            .collect();
        FiniteAbelian { modulus: m, rank_ambient: r, invariants, coordinate_map, generators }
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Coordinates of the class of `x ∈ (Z/M)^r`.
    pub fn coordinates(&self, x: &[u64]) -> Vec<u64> {
        let m = self.modulus;
        self.invariants
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                x.iter()
                    .zip(&self.coordinate_map)
                    .fold(0, |acc, (&xi, row)| (acc + mulm(xi % m, row[j], d)) % d)
            })
            .collect()
    }

    /// Preimage of a coordinate vector.
    pub fn element(&self, coords: &[u64]) -> Vec<u64> {
        let m = self.modulus;
        let mut out = vec![0u64; self.rank_ambient];
        for (c, g) in coords.iter().zip(&self.generators) {
            for (o, &x) in out.iter_mut().zip(g) {
                *o = (*o + mulm(*c, x, m)) % m;
            }
        }
        out
    }

    /// All coordinate vectors in lexicographic order.
    pub fn all_coordinates(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &d in &self.invariants {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

fn prime_power_factors(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn units() {
        assert_eq!(inv_mod(5, 12), Some(5));
        assert_eq!(inv_mod(4, 12), None);
        for a in 0..36u64 {
            let u = normalizing_unit(a, 36);
            assert_eq!(gcd(u, 36), 1);
            assert_eq!(a * u % 36, gcd(a, 36) % 36);
        }
    }

    #[test]
    fn solve_small_system() {
        // 2x + 4y = 6 (mod 12), 3y = 3 (mod 12)
        let a = ModMatrix::from_rows(&[vec![2, 4], vec![0, 3]], 2, 12);
        let sol = solve(a.clone(), &[6, 3]).unwrap();
        assert_eq!(a.mul_vec(&sol.particular), vec![6, 3]);
        for k in &sol.kernel {
            assert_eq!(a.mul_vec(&k.vector), vec![0, 0]);
        }
        // kernel has 2 * 3 = 6 elements
        let size: u64 = sol.kernel.iter().map(|k| k.order).product();
        assert_eq!(size, 6);
        assert!(solve(a, &[1, 0]).is_none());
    }

    #[test]
    fn quotient_invariants() {
        // Z/12 ⊕ Z/12 modulo (4, 0), (0, 6) = Z/4 ⊕ Z/6 = Z/2 ⊕ Z/12
        let q = FiniteAbelian::quotient(2, 12, &[vec![4, 0], vec![0, 6]]);
        assert_eq!(q.invariants, vec![2, 12]);
        assert_eq!(q.coordinates(&[4, 6]), vec![0, 0]);
        for (j, g) in q.generators.iter().enumerate() {
            let mut unit = vec![0; 2];
            unit[j] = 1;
            assert_eq!(q.coordinates(g), unit);
        }
        let trivial = FiniteAbelian::quotient(1, 6, &[vec![1]]);
        assert!(trivial.is_trivial());
        assert_eq!(trivial.all_coordinates(), vec![Vec::<u64>::new()]);
    }

    fn brute_kernel_size(rows: &[Vec<u64>], cols: usize, m: u64) -> u64 {
        let mut count = 0;
        let total = m.pow(cols as u32);
        for code in 0..total {
            let x: Vec<u64> = (0..cols).map(|j| code / m.pow(j as u32) % m).collect();
            if rows.iter().all(|r| r.iter().zip(&x).map(|(a, b)| a * b).sum::<u64>() % m == 0) {
                count += 1;
            }
        }
        count
    }

    proptest! {
        #[test]
        fn kernel_matches_brute_force(
            m in prop::sample::select(vec![4u64, 6, 8, 9, 12]),
            entries in prop::collection::vec(0u64..100, 9),
        ) {
            let rows: Vec<Vec<u64>> = entries.chunks(3).map(|c| c.iter().map(|x| x % m).collect()).collect();
            let a = ModMatrix::from_rows(&rows, 3, m);
            let sol = solve(a.clone(), &[0, 0, 0]).unwrap();
            let size: u64 = sol.kernel.iter().map(|k| k.order).product();
            prop_assert_eq!(size, brute_kernel_size(&rows, 3, m));
            for k in &sol.kernel {
                prop_assert_eq!(a.mul_vec(&k.vector), vec![0, 0, 0]);
                let coords = sol.kernel_coordinates(&k.vector);
                let expect: Vec<u64> = sol.kernel.iter().map(|o| u64::from(o.column == k.column)).collect();
                prop_assert_eq!(coords, expect);
            }
        }

        #[test]
        fn quotient_order_and_coordinates(
            m in prop::sample::select(vec![4u64, 6, 12, 36]),
            entries in prop::collection::vec(0u64..100, 6),
        ) {
            let rels: Vec<Vec<u64>> = entries.chunks(3).map(|c| c.iter().map(|x| x % m).collect()).collect();
            let q = FiniteAbelian::quotient(3, m, &rels);
            for w in q.invariants.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            // relations vanish, coordinates are additive
            for r in &rels {
                prop_assert!(q.coordinates(r).iter().all(|&c| c == 0));
            }
            let x = vec![1, 2, 3];
            let y = vec![m - 1, 5 % m, 7 % m];
            let sum: Vec<u64> = x.iter().zip(&y).map(|(a, b)| (a + b) % m).collect();
            let cx = q.coordinates(&x);
            let cy = q.coordinates(&y);
            let cs = q.coordinates(&sum);
            for (j, &d) in q.invariants.iter().enumerate() {
                prop_assert_eq!((cx[j] + cy[j]) % d, cs[j]);
            }
            // order of the quotient times size of the relation span is M^3
            let span = brute_span_size(&rels, 3, m);
            prop_assert_eq!(q.order() * span, m.pow(3));
        }
    }

    fn brute_span_size(rels: &[Vec<u64>], r: usize, m: u64) -> u64 {
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![vec![0u64; r]];
        seen.insert(vec![0u64; r]);
        while let Some(x) = frontier.pop() {
            for rel in rels {
                let y: Vec<u64> = x.iter().zip(rel).map(|(a, b)| (a + b) % m).collect();
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.len() as u64
    }
}
