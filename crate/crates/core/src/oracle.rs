//! Floating-point cross-checks. Test-scale only; nothing in the exact
//! pipeline depends on this module.

use nalgebra::{Complex, DMatrix};

use crate::error::{Error, Result};
use crate::twisted::TwistedAlgebra;

pub const ORACLE_MAX_DIM: usize = 64;
pub const ORACLE_TOLERANCE: f64 = 1e-9;

/// Center dimension of the algebra with basis `e₀…eₙ₋₁` and products
/// `eₐ e_b = ζ^{phase} e_c`, where `mult(a, b) = (phase, c)` and `ζ = exp(2πi/M)`.
/// Associativity is checked exactly before anything numeric happens.
pub fn monomial_center_dimension(
    dim: usize,
    modulus: u64,
    mult: impl Fn(usize, usize) -> (u64, usize),
) -> Result<usize> {
    if dim > ORACLE_MAX_DIM {
        return Err(Error::SizeBound { size: dim, bound: ORACLE_MAX_DIM });
    }
    let table: Vec<(u64, usize)> = (0..dim * dim).map(|i| mult(i / dim, i % dim)).collect();
    let at = |a: usize, b: usize| table[a * dim + b];
    for a in 0..dim {
        for b in 0..dim {
            let (p_ab, ab) = at(a, b);
            for c in 0..dim {
                let (p_abc, abc) = at(ab, c);
                let (p_bc, bc) = at(b, c);
                let (p_a_bc, a_bc) = at(a, bc);
                if abc != a_bc || (p_ab + p_abc) % modulus != (p_bc + p_a_bc) % modulus {
                    return Err(Error::FormulaNotClosed(vec![a, b, c]));
                }
            }
        }
    }
    let zeta = |p: u64| Complex::from_polar(1.0, 2.0 * std::f64::consts::PI * p as f64 / modulus as f64);
    // z = Σ zₐ eₐ is central iff z e_b = e_b z; row (b, c) is the e_c coefficient
    let mut m = DMatrix::<Complex<f64>>::zeros(dim * dim, dim);
    for a in 0..dim {
        for b in 0..dim {
            let (p, c) = at(a, b);
            m[(b * dim + c, a)] += zeta(p);
            let (q, d) = at(b, a);
            m[(b * dim + d, a)] -= zeta(q);
        }
    }
    let rank = m.svd(false, false).singular_values.iter().filter(|&&s| s > ORACLE_TOLERANCE).count();
    Ok(dim - rank)
}

/// Center dimension of `ℂ_ψ[H]`, which equals its number of simple summands.
pub fn center_dimension_oracle(a: &TwistedAlgebra) -> Result<usize> {
    let g = a.group();
    let psi = a.psi();
    monomial_center_dimension(g.order(), psi.modulus(), |x, y| (psi.get(&[x, y]), g.mul(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::Cochain;
    use crate::group::{group_from_spec, FiniteGroup, GroupSpec};

    fn builtin(name: &str) -> FiniteGroup {
        group_from_spec(&GroupSpec::builtin(name)).unwrap()
    }

    #[test]
    fn untwisted_centers() {
        assert_eq!(center_dimension_oracle(&TwistedAlgebra::untwisted(builtin("Z4"), 4)).unwrap(), 4);
        assert_eq!(center_dimension_oracle(&TwistedAlgebra::untwisted(builtin("S3"), 6)).unwrap(), 3);
    }

    #[test]
    fn klein_four_twisted() {
        let g = builtin("Z2xZ2");
        let bits = |x: usize| (x / 2, x % 2);
        let psi = Cochain::from_fn(4, 2, 2, |a| (bits(a[0]).0 * bits(a[1]).1) as i64);
        let a = TwistedAlgebra::new(g, psi).unwrap();
        assert_eq!(center_dimension_oracle(&a).unwrap(), 1);
    }

    #[test]
    fn non_associative_input_is_rejected() {
        let r = monomial_center_dimension(2, 4, |a, b| (u64::from(a == 1 && b == 1), a ^ b));
        assert!(r.is_ok());
        let r = monomial_center_dimension(2, 4, |a, b| (u64::from(a == 1 && b == 0), a ^ b));
        assert!(matches!(r, Err(Error::FormulaNotClosed(_))));
        assert!(matches!(
            monomial_center_dimension(65, 2, |a, b| (0, (a + b) % 65)),
            Err(Error::SizeBound { .. })
        ));
    }
}
