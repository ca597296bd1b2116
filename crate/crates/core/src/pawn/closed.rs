use std::sync::Mutex;

use crate::algebra::{
    factor_cyclotomic, rational::binomial, BivarIntPoly, CyclotomicFactorization, QPoly, QRat,
    QSeries, Rational, XPoly,
};
use crate::error::AlgebraError;
use crate::series::TreeSeries;

use super::{one_plus_qx, solve_pawn, twist};

/// `♟_{Lnr_n} = (1 + q x) Π_{i=2}^{n} ([i]_q + q^i x) / [i]_q`.
pub fn pawn_linear(n: usize) -> XPoly {
    assert!(n >= 1, "Lnr_n needs n >= 1");
    (2..=n).fold(one_plus_qx(), |acc, i| {
        let qi = QRat::q_integer(i as i64);
        let factor = XPoly::linear(qi.clone(), QRat::q_pow(i as i64));
        acc.mul_ref(&factor.scale(&qi.inv().expect("[i]_q is nonzero")))
    })
}

/// `♟_{Crl_n}` from the corolla recursion
/// `(q^{n+1} - 1) c_n = Σ_{k<n} (-1)^{n-k} C(n,k) c_k + q^{n+1} (1 + (q-1)x)(1 + qx)^n`.
pub fn pawn_corolla(n: usize) -> XPoly {
    static MEMO: Mutex<Vec<XPoly>> = Mutex::new(Vec::new());
    let mut memo = MEMO.lock().expect("corolla memo poisoned");
    while memo.len() <= n {
        let m = memo.len();
        let c = if m == 0 {
            one_plus_qx()
        } else {
            let mut acc = XPoly::zero();
            for (k, ck) in memo.iter().enumerate() {
                let mut b = Rational::from(binomial(m, k));
                if (m - k) % 2 == 1 {
                    b = -b;
                }
                acc = acc.add_ref(&ck.scale(&QRat::from_rational(b)));
            }
            let grafted = twist()
                .mul_ref(&one_plus_qx().pow(m as u32))
                .scale(&QRat::q_pow(m as i64 + 1));
            let inv = QRat::from_poly(QPoly::q_pow_minus_one(m + 1))
                .inv()
                .expect("nonzero");
            acc.add_ref(&grafted).scale(&inv)
        };
        memo.push(c);
    }
    memo[n].clone()
}

/// Leading `x^{#T}` coefficients of a pawn-like series.
pub fn x_infinity_part(pawn: &TreeSeries<XPoly>) -> TreeSeries<QRat> {
    pawn.map(|t, c| c.coeff(t.size()))
}

pub fn pawn_x_infinity(order: usize) -> TreeSeries<QRat> {
    x_infinity_part(&solve_pawn(order))
}

/// Sets `q = 1` in every coefficient after reduction; a surviving pole is an
/// error.
pub fn q1_limit_of(pawn: &TreeSeries<XPoly>) -> Result<TreeSeries<XPoly>, AlgebraError> {
    let one = Rational::from_integer(1.into());
    pawn.try_map(|_, c| {
        let coeffs = c
            .coeffs()
            .iter()
            .map(|a| a.eval(&one).map(QRat::from_rational))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(XPoly::from_coeffs(coeffs))
    })
}

pub fn pawn_q1_limit(order: usize) -> Result<TreeSeries<XPoly>, AlgebraError> {
    q1_limit_of(&solve_pawn(order))
}

/// `lim_{x → -1/q} A_T / (1 + q x)` for every coefficient.
pub fn limit_minus_one_over_q(a: &TreeSeries<XPoly>) -> Result<TreeSeries<QRat>, AlgebraError> {
    let at = QRat::q_pow(-1).neg_ref();
    a.try_map(|_, c| Ok(c.exact_div_one_plus_qx()?.eval(&at)))
}

/// `♟_{Crl_k}` at `x = 1/(1 - q)`, expanded in powers of `q` through `q^m`.
pub fn pawn_one_minus_q_inverse(k: usize, m: usize) -> Result<QSeries, AlgebraError> {
    let x = QRat::new(QPoly::one(), QPoly::from_ints(&[1, -1]))?;
    QSeries::from_qrat(&pawn_corolla(k).eval(&x), m)
}

/// A pawn coefficient split as `numerator(q, x) / denominator(q)`, with the
/// denominator factored into cyclotomic polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PawnCoefficient {
    pub value: XPoly,
    pub numerator: BivarIntPoly,
    pub denominator: QPoly,
    pub factors: CyclotomicFactorization,
}

impl PawnCoefficient {
    pub fn new(value: XPoly) -> Result<Self, AlgebraError> {
        let (numerator, denominator) = BivarIntPoly::numerator_of(&value);
        let factors = factor_cyclotomic(&denominator)?;
        Ok(PawnCoefficient {
            value,
            numerator,
            denominator,
            factors,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{frac, rat};
    use crate::trees::{canonicalize, q_factorial, Tree};

    #[test]
    fn closed_forms_match_solver() {
        let s = solve_pawn(6);
        for n in 1..=6 {
            assert_eq!(pawn_linear(n), s.coeff(Tree::linear(n)), "Lnr_{n}");
        }
        for n in 0..=5 {
            assert_eq!(pawn_corolla(n), s.coeff(Tree::corolla(n)), "Crl_{n}");
        }
    }

    #[test]
    fn x_infinity_is_inverse_q_factorial() {
        let inf = pawn_x_infinity(5);
        for (t, c) in inf.entries() {
            assert_eq!(c.mul_ref(&q_factorial(t)), QRat::one(), "{t}");
        }
        assert_eq!(inf.coeff(Tree::vertex()), QRat::q());
    }

    #[test]
    fn q1_limit_examples() {
        let lim = pawn_q1_limit(4).unwrap();
        // (1 + x)(2 + x)/2
        let expected = XPoly::from_coeffs(vec![
            QRat::from_i64(1),
            QRat::from_rational(frac(3, 2)),
            QRat::from_rational(frac(1, 2)),
        ]);
        assert_eq!(lim.coeff(Tree::linear(2)), expected);
        assert_eq!(lim.coeff(Tree::vertex()), XPoly::linear(QRat::one(), QRat::one()));
    }

    #[test]
    fn minus_one_over_q_limit() {
        let lim = limit_minus_one_over_q(&solve_pawn(5)).unwrap();
        assert_eq!(lim, super::super::solve_omega_bar(5));
        assert_eq!(lim.coeff(Tree::vertex()), QRat::one());
    }

    #[test]
    fn corolla_at_one_minus_q_inverse() {
        // Σ_j q^{j-1} [j]_q = 1/((1-q)(1-q^2))
        let s = pawn_one_minus_q_inverse(1, 4).unwrap();
        let expected: Vec<Rational> = [1, 1, 2, 2, 3].into_iter().map(rat).collect();
        assert_eq!(s.coefficients(4), expected);
    }

    #[test]
    fn six_vertex_tree_denominator() {
        let t = canonicalize("(()(()()))").unwrap();
        let c = PawnCoefficient::new(solve_pawn(5).coeff(t)).unwrap();
        let expected: Vec<(usize, u32)> = vec![(2, 2), (3, 1), (4, 1), (5, 1)];
        assert_eq!(c.factors.factors.into_iter().collect::<Vec<_>>(), expected);
        assert!(c.factors.remainder.is_one());
    }
}
