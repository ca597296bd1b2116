//! Cyclotomic polynomials and trial-division factorization.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use dashmap::DashMap;

use super::qpoly::QPoly;
use super::rational::Rational;
use crate::error::AlgebraError;

fn memo() -> &'static DashMap<usize, QPoly> {
    static MEMO: OnceLock<DashMap<usize, QPoly>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// `Φ_d`, computed as `(q^d - 1) / Π_{e | d, e < d} Φ_e` and memoized.
///
/// # Panics
/// If `d == 0`.
pub fn cyclotomic(d: usize) -> QPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = memo().get(&d) {
        return p.clone();
    }
    let mut p = QPoly::q_pow_minus_one(d);
    for e in (1..d).filter(|&e| d.is_multiple_of(e)) {
        p = p.exact_div(&cyclotomic(e)).expect("Φ_e divides q^d - 1");
    }
    // insert-only; concurrent writers compute identical values
    memo().entry(d).or_insert(p).clone()
}

/// `p = unit · Π Φ_d^{m_d} · remainder` with `remainder` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub unit: Rational,
    pub factors: BTreeMap<usize, u32>,
    pub remainder: QPoly,
}

impl CyclotomicFactorization {
    pub fn expand(&self) -> QPoly {
        let mut acc = self.remainder.scale(&self.unit);
        for (&d, &m) in &self.factors {
            acc = acc.mul_ref(&cyclotomic(d).pow(m));
        }
        acc
    }

    /// True when `remainder` is 1 and every multiplicity is 1.
    pub fn is_squarefree_cyclotomic(&self) -> bool {
        self.remainder.is_one() && self.factors.values().all(|&m| m == 1)
    }
}

/// Trial division by `Φ_1, Φ_2, ...` in ascending order up to `2·deg p + 2`.
pub fn factor_cyclotomic(p: &QPoly) -> Result<CyclotomicFactorization, AlgebraError> {
    let bound = 2 * p.degree().unwrap_or(0) + 2;
    factor_cyclotomic_bounded(p, bound)
}

pub fn factor_cyclotomic_bounded(
    p: &QPoly,
    bound: usize,
) -> Result<CyclotomicFactorization, AlgebraError> {
    let (unit, mut rem) = p.monic().ok_or(AlgebraError::ZeroPolynomial)?;
    let mut factors = BTreeMap::new();
    for d in 1..=bound {
        let deg = rem.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        let phi = cyclotomic(d);
        if phi.degree().unwrap_or(0) > deg {
            continue;
        }
        loop {
            let (quot, r) = rem.div_rem(&phi)?;
            if !r.is_zero() {
                break;
            }
            rem = quot;
            *factors.entry(d).or_insert(0) += 1;
        }
    }
    Ok(CyclotomicFactorization {
        unit,
        factors,
        remainder: rem,
    })
}

/// Splits off the largest power of `q` dividing `p`.
pub fn split_q_power(p: &QPoly) -> (usize, QPoly) {
    match p.valuation() {
        None | Some(0) => (0, p.clone()),
        Some(k) => (k, QPoly::from_coeffs(p.coeffs()[k..].to_vec())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        // q^6 - 1 divided by Φ_1 Φ_2 Φ_3
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn divisor_products_give_q_pow_minus_one() {
        for n in 1..=30usize {
            let prod = (1..=n)
                .filter(|d| n % d == 0)
                .fold(QPoly::one(), |acc, d| acc.mul_ref(&cyclotomic(d)));
            assert_eq!(prod, QPoly::q_pow_minus_one(n), "n = {n}");
        }
    }

    #[test]
    fn factorization_examples() {
        let f = factor_cyclotomic(&QPoly::q_pow_minus_one(5)).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(1, 1), (5, 1)]));
        assert!(f.remainder.is_one());

        let g = p(&[1, 1]).pow(2).mul_ref(&p(&[1, 1, 1]));
        let f = factor_cyclotomic(&g).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(2, 2), (3, 1)]));
        assert!(f.remainder.is_one());

        let h = p(&[2, 0, 1]);
        let f = factor_cyclotomic(&h).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.remainder, h);
        assert_eq!(f.unit, rat(1));

        assert_eq!(factor_cyclotomic(&QPoly::zero()), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn q_power_split() {
        let (k, rest) = split_q_power(&p(&[0, 0, 3, 1]));
        assert_eq!(k, 2);
        assert_eq!(rest, p(&[3, 1]));
    }
}
