//! Polynomials in `x` with coefficients in `Q(q)`.

use std::fmt;

use serde_json::{json, Value};

use super::qrat::QRat;
use crate::error::AlgebraError;

/// `coeffs[i]` is the coefficient of `x^i`; no trailing zeros are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<QRat>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QRat::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![QRat::zero(), QRat::one()])
    }

    pub fn constant(c: QRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `a + b x`.
    pub fn linear(a: QRat, b: QRat) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QRat {
        self.coeffs.get(i).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&QRat> {
        self.coeffs.last()
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.add_ref(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }

    pub fn neg_ref(&self) -> Self {
        XPoly {
            coeffs: self.coeffs.iter().map(QRat::neg_ref).collect(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        let mut out = vec![QRat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Multiplication by `x`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(QRat::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul_ref(self))
    }

    pub fn eval(&self, at: &QRat) -> QRat {
        self.coeffs
            .iter()
            .rev()
            .fold(QRat::zero(), |acc, c| acc.mul_ref(at).add_ref(c))
    }

    /// Composition `f(a + b x)`.
    pub fn compose_affine(&self, a: &QRat, b: &QRat) -> Self {
        let inner = XPoly::linear(a.clone(), b.clone());
        self.coeffs.iter().rev().fold(XPoly::zero(), |acc, c| {
            acc.mul_ref(&inner).add_ref(&XPoly::constant(c.clone()))
        })
    }

    /// The substitution `x ↦ 1 + q x`.
    pub fn shift_one_plus_qx(&self) -> Self {
        self.compose_affine(&QRat::one(), &QRat::q())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&super::rational::rat(i as i64)))
                .collect(),
        )
    }

    /// Exact division by the linear polynomial `a + b x` (with `b ≠ 0`).
    pub fn exact_div_linear(&self, a: &QRat, b: &QRat) -> Result<Self, AlgebraError> {
        if b.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        let b_inv = b.inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![QRat::zero(); deg];
        for k in (0..deg).rev() {
            let c = rem[k + 1].mul_ref(&b_inv);
            rem[k] = rem[k].sub_ref(&c.mul_ref(a));
            rem[k + 1] = QRat::zero();
            quot[k] = c;
        }
        if !rem[0].is_zero() {
            return Err(AlgebraError::NotDivisible {
                dividend: self.to_string(),
                divisor: XPoly::linear(a.clone(), b.clone()).to_string(),
            });
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Exact division by `1 + q x`.
    pub fn exact_div_one_plus_qx(&self) -> Result<Self, AlgebraError> {
        self.exact_div_linear(&QRat::one(), &QRat::q())
    }

    /// Serialized as `[[x-exponent, qrat], ...]`, ascending, zero terms omitted.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| json!([i, c.to_json()]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let err = |d: &str| AlgebraError::Parse {
            what: "x-polynomial",
            detail: d.to_string(),
        };
        let terms = v.as_array().ok_or_else(|| err("expected term list"))?;
        let mut coeffs: Vec<QRat> = Vec::new();
        for t in terms {
            let pair = t
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| err("expected [exp, coeff]"))?;
            let exp = pair[0].as_u64().ok_or_else(|| err("bad exponent"))? as usize;
            if exp < coeffs.len() {
                return Err(err("exponents must be strictly ascending"));
            }
            coeffs.resize(exp + 1, QRat::zero());
            coeffs[exp] = QRat::from_json(&pair[1])?;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qpoly::QPoly;

    fn qp(c: &[i64]) -> QRat {
        QRat::from_poly(QPoly::from_ints(c))
    }

    #[test]
    fn eval_at_q_integer() {
        // 1 + q x at x = [2]_q is [3]_q
        let f = XPoly::linear(QRat::one(), QRat::q());
        assert_eq!(f.eval(&QRat::q_integer(2)), QRat::q_integer(3));
    }

    #[test]
    fn shift_substitution() {
        assert_eq!(XPoly::x().shift_one_plus_qx(), XPoly::linear(QRat::one(), QRat::q()));
    }

    #[test]
    fn exact_division_by_one_plus_qx() {
        let a = XPoly::linear(QRat::one(), QRat::q());
        let b = XPoly::linear(qp(&[1, 1]), qp(&[0, 0, 1]));
        assert_eq!(a.mul_ref(&b).exact_div_one_plus_qx().unwrap(), b);
        assert!(b.exact_div_one_plus_qx().is_err());
    }

    #[test]
    fn derivative_and_json() {
        let f = XPoly::from_coeffs(vec![qp(&[1]), qp(&[0, 1]), qp(&[2])]);
        assert_eq!(f.derivative(), XPoly::linear(qp(&[0, 1]), qp(&[4])));
        assert_eq!(XPoly::from_json(&f.to_json()).unwrap(), f);
    }
}
