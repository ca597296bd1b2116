//! Truncated power series in `q` with rational coefficients.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::qpoly::QPoly;
use super::qrat::QRat;
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::AlgebraError;

/// `Σ c_i q^i`, known modulo `q^(precision+1)` when `precision` is `Some`,
/// exactly (a polynomial) when it is `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
    precision: Option<usize>,
}

impl QSeries {
    pub fn exact(p: &QPoly) -> Self {
        QSeries {
            coeffs: p.coeffs().to_vec(),
            precision: None,
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>, precision: Option<usize>) -> Self {
        let mut s = QSeries { coeffs, precision };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if let Some(m) = self.precision {
            self.coeffs.truncate(m + 1);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new(), None)
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![Rational::one()], None)
    }

    pub fn precision(&self) -> Option<usize> {
        self.precision
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficients `c_0..=c_m`.
    pub fn coefficients(&self, m: usize) -> Vec<Rational> {
        (0..=m).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn min_precision(&self, other: &Self) -> Option<usize> {
        match (self.precision, other.precision) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_coeffs(coeffs, self.min_precision(other))
    }

    pub fn neg_ref(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            precision: self.precision,
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let precision = self.min_precision(other);
        if self.is_zero() || other.is_zero() {
            return Self::from_coeffs(Vec::new(), precision);
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(m) = precision {
            len = len.min(m + 1);
        }
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs, precision)
    }

    /// Expansion of a rational function to order `m`; the denominator must not
    /// vanish at `q = 0` once reduced.
    pub fn from_qrat(f: &QRat, m: usize) -> Result<Self, AlgebraError> {
        if f.is_polynomial() {
            return Ok(Self::from_coeffs(f.numerator().coeffs().to_vec(), Some(m)));
        }
        let den = f.denominator();
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(AlgebraError::Pole { at: "0".into() });
        }
        let d0_inv = d0.recip();
        let mut inv: Vec<Rational> = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let mut acc = if k == 0 { Rational::one() } else { Rational::zero() };
            for i in 1..=k.min(den.degree().unwrap_or(0)) {
                acc -= den.coeff(i) * &inv[k - i];
            }
            inv.push(acc * &d0_inv);
        }
        let inv = Self::from_coeffs(inv, Some(m));
        Ok(Self::from_coeffs(f.numerator().coeffs().to_vec(), Some(m)).mul_ref(&inv))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| json!([i, format_rational(c)]))
            .collect();
        json!({ "precision": self.precision, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let err = |d: &str| AlgebraError::Parse {
            what: "q-series",
            detail: d.to_string(),
        };
        let precision = match v.get("precision") {
            None | Some(Value::Null) => None,
            Some(p) => Some(p.as_u64().ok_or_else(|| err("bad precision"))? as usize),
        };
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| err("missing terms"))?;
        let mut coeffs: Vec<Rational> = Vec::new();
        for t in terms {
            let pair = t
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| err("expected [exp, coeff]"))?;
            let exp = pair[0].as_u64().ok_or_else(|| err("bad exponent"))? as usize;
            if exp < coeffs.len() {
                return Err(err("exponents must be strictly ascending"));
            }
            coeffs.resize(exp + 1, Rational::zero());
            coeffs[exp] = parse_rational(pair[1].as_str().ok_or_else(|| err("bad coefficient"))?)?;
        }
        Ok(Self::from_coeffs(coeffs, precision))
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = QPoly::from_coeffs(self.coeffs.clone());
        match self.precision {
            Some(m) => write!(f, "{body} + O(q^{})", m + 1),
            None => write!(f, "{body}"),
        }
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn geometric_series() {
        let f = QRat::new(QPoly::one(), QPoly::from_ints(&[1, -1])).unwrap();
        let s = QSeries::from_qrat(&f, 3).unwrap();
        assert_eq!(s.coefficients(3), vec![rat(1); 4]);
        assert_eq!(s.precision(), Some(3));
    }

    #[test]
    fn pole_at_zero_is_rejected() {
        let f = QRat::q_pow(-1);
        assert!(QSeries::from_qrat(&f, 4).is_err());
    }

    #[test]
    fn product_truncates_to_common_precision() {
        let a = QSeries::from_coeffs(vec![rat(1), rat(1)], Some(5));
        let b = QSeries::from_coeffs(vec![rat(1), rat(1)], Some(1));
        assert_eq!(a.mul_ref(&b).coefficients(2), vec![rat(1), rat(2), rat(0)]);
        assert_eq!(QSeries::from_json(&a.to_json()).unwrap(), a);
    }
}
