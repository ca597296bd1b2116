//! Dense univariate polynomials in `q` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rat, Rational};
use crate::error::AlgebraError;

/// Polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`.
///
/// Trailing zero coefficients are never stored, so the zero polynomial is
/// the empty vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Convenience constructor from small integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `q^n - 1`.
    pub fn q_pow_minus_one(n: usize) -> Self {
        Self::monomial(Rational::one(), n).sub_ref(&Self::one())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, Rational::zero());
        for (c, s) in coeffs.iter_mut().zip(&other.coeffs) {
            *c -= s;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg_ref(&self) -> Self {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Coefficient reversal `q^deg · p(1/q)`.
    pub fn reverse(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Splits off the leading coefficient: returns `(lc, self / lc)`.
    pub fn monic(&self) -> Option<(Rational, QPoly)> {
        let lc = self.leading()?.clone();
        if lc.is_one() {
            return Some((lc, self.clone()));
        }
        let inv = lc.recip();
        Some((lc, self.scale(&inv)))
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(QPoly, QPoly), AlgebraError> {
        let dd = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn exact_div(&self, divisor: &Self) -> Result<QPoly, AlgebraError> {
        if divisor.is_one() {
            return Ok(self.clone());
        }
        let (quot, rem) = self.div_rem(divisor)?;
        if !rem.is_zero() {
            return Err(AlgebraError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.div_rem(self) {
            Ok((_, rem)) => rem.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Runs a primitive pseudo-remainder sequence over the integers so the
    /// intermediate coefficients stay bounded.
    pub fn gcd(&self, other: &Self) -> QPoly {
        if self.is_zero() {
            return other.monic().map(|(_, m)| m).unwrap_or_default();
        }
        if other.is_zero() {
            return self.monic().map(|(_, m)| m).unwrap_or_default();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        if self == other {
            return self.monic().map(|(_, m)| m).unwrap_or_default();
        }
        let mut a = primitive_integer(self);
        let mut b = primitive_integer(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive_part(r);
        }
        if b.len() == 1 {
            return Self::one();
        }
        let g = QPoly::from_coeffs(a.into_iter().map(Rational::from_integer).collect());
        g.monic().map(|(_, m)| m).unwrap_or_default()
    }

    /// Least common denominator of the coefficients and the integer polynomial
    /// obtained by clearing it.
    pub fn clear_denominators(&self) -> (BigInt, Vec<BigInt>) {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        (l, ints)
    }
}

fn primitive_integer(p: &QPoly) -> Vec<BigInt> {
    primitive_part(p.clear_denominators().1)
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let lr = r.last().expect("nonempty").clone();
        let g = lr.gcd(lb);
        let fb = lb / &g;
        let fr = &lr / &g;
        let shift = r.len() - b.len();
        if !fb.is_one() {
            for c in r.iter_mut() {
                *c *= &fb;
            }
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &fr * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            if i == 0 {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                self.$imp(rhs)
            }
        }
        impl $tr<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.neg_ref()
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn long_division_oracle() {
        // q^3 - 1 = (q - 1)(q^2 + q + 1)
        let (quot, rem) = p(&[-1, 0, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(quot, p(&[1, 1, 1]));
        assert!(rem.is_zero());
        assert!(p(&[1, 0, 1]).exact_div(&p(&[-1, 1])).is_err());
        assert_eq!(p(&[1]).div_rem(&QPoly::zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let a = p(&[1, 1]).mul_ref(&p(&[1, 1, 1])).scale(&frac(3, 2));
        let b = p(&[1, 1]).mul_ref(&p(&[-1, 0, 1])).scale(&rat(-5));
        let g = a.gcd(&b);
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(p(&[2, 0, 1]).gcd(&p(&[1, 1])), QPoly::one());
        assert_eq!(
            QPoly::zero().gcd(&p(&[2, 4])),
            QPoly::from_coeffs(vec![frac(1, 2), rat(1)])
        );
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(p(&[1, -1, 0, 2]).to_string(), "2*q^3 - q + 1");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::constant(frac(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn reverse_and_eval() {
        let f = p(&[0, 1, 2]);
        assert_eq!(f.reverse(), p(&[2, 1]));
        assert_eq!(f.eval(&rat(2)), rat(10));
        assert_eq!(f.valuation(), Some(1));
    }
}
