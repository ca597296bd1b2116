//! Reduced rational functions in `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::qpoly::QPoly;
use super::rational::{format_rational, parse_rational, rat, Rational};
use crate::error::AlgebraError;

/// Element of `Q(q)` stored as `num / den`.
///
/// Invariants: `den` is monic and nonzero, and `gcd(num, den) = 1`. The zero
/// element is `0 / 1`. Because the representation is canonical, derived
/// equality and hashing are mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_lead(num, den)
    }

    fn normalize_lead(num: QPoly, den: QPoly) -> Self {
        let (lc, den) = den.monic().expect("nonzero denominator");
        let num = if lc.is_one() { num } else { num.scale(&lc.recip()) };
        QRat { num, den }
    }

    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(QPoly::q())
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = QPoly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            QRat {
                num: QPoly::one(),
                den: m,
            }
        }
    }

    /// The q-integer `(q^n - 1)/(q - 1)`, defined for every integer `n`.
    pub fn q_integer(n: i64) -> Self {
        match n {
            0 => Self::zero(),
            n if n > 0 => Self::from_poly(QPoly::from_coeffs(vec![Rational::one(); n as usize])),
            n => {
                // [-m]_q = -q^{-m} [m]_q
                let m = n.unsigned_abs() as usize;
                QRat {
                    num: QPoly::from_coeffs(vec![-Rational::one(); m]),
                    den: QPoly::monomial(Rational::one(), m),
                }
            }
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational constant, if it is one.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add_ref(&other.num);
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return QRat {
                num: self.num.mul_ref(&other.den).add_ref(&other.num),
                den: other.den.clone(),
            }
            .zero_normalized();
        }
        if other.den.is_one() {
            return QRat {
                num: other.num.mul_ref(&self.den).add_ref(&self.num),
                den: self.den.clone(),
            }
            .zero_normalized();
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self
                .num
                .mul_ref(&other.den)
                .add_ref(&other.num.mul_ref(&self.den));
            return QRat {
                num,
                den: self.den.mul_ref(&other.den),
            }
            .zero_normalized();
        }
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = other.den.exact_div(&g).expect("gcd divides");
        let t = self.num.mul_ref(&d1).add_ref(&other.num.mul_ref(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = t.gcd(&g);
        if g2.is_one() {
            QRat {
                num: t,
                den: b1.mul_ref(&other.den),
            }
        } else {
            QRat {
                num: t.exact_div(&g2).expect("gcd divides"),
                den: b1.mul_ref(&other.den.exact_div(&g2).expect("gcd divides")),
            }
        }
    }

    fn zero_normalized(self) -> Self {
        if self.num.is_zero() {
            Self::zero()
        } else {
            self
        }
    }

    pub fn neg_ref(&self) -> Self {
        QRat {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        match (self.den.is_one(), other.den.is_one()) {
            (true, true) => Self::from_poly(self.num.mul_ref(&other.num)),
            (true, false) => Self::mul_poly_frac(&self.num, other),
            (false, true) => Self::mul_poly_frac(&other.num, self),
            (false, false) => {
                let g1 = self.num.gcd(&other.den);
                let g2 = other.num.gcd(&self.den);
                let a = self.num.exact_div(&g1).expect("gcd divides");
                let d = other.den.exact_div(&g1).expect("gcd divides");
                let c = other.num.exact_div(&g2).expect("gcd divides");
                let b = self.den.exact_div(&g2).expect("gcd divides");
                Self::normalize_lead(a.mul_ref(&c), b.mul_ref(&d))
            }
        }
    }

    fn mul_poly_frac(p: &QPoly, f: &QRat) -> Self {
        let g = p.gcd(&f.den);
        if g.is_one() {
            return QRat {
                num: p.mul_ref(&f.num),
                den: f.den.clone(),
            };
        }
        let p1 = p.exact_div(&g).expect("gcd divides");
        let d1 = f.den.exact_div(&g).expect("gcd divides");
        QRat {
            num: p1.mul_ref(&f.num),
            den: d1,
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalize_lead(self.den.clone(), self.num.clone()))
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self, AlgebraError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs() as u32;
        Ok(QRat {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Substitution `q ↦ 1/q`; negative powers of `q` are cleared into the
    /// numerator or denominator so the result is again a quotient of polynomials.
    pub fn reciprocal_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().expect("nonzero");
        let dd = self.den.degree().expect("nonzero");
        let mut num = self.num.reverse();
        let mut den = self.den.reverse();
        if dd >= dn {
            num = num.shift(dd - dn);
        } else {
            den = den.shift(dn - dd);
        }
        Self::reduce(num, den)
    }

    /// Evaluates at a rational value of `q`; fails at a genuine pole.
    pub fn eval(&self, at: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(AlgebraError::Pole {
                at: format_rational(at),
            });
        }
        Ok(self.num.eval(at) / d)
    }

    /// Serialized form `{"num": [[exp, "p/r"], ...], "den": [...]}`.
    pub fn to_json(&self) -> Value {
        json!({ "num": poly_terms_json(&self.num), "den": poly_terms_json(&self.den) })
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let num = poly_from_terms_json(v.get("num").ok_or_else(|| json_err("missing num"))?)?;
        let den = poly_from_terms_json(v.get("den").ok_or_else(|| json_err("missing den"))?)?;
        Self::new(num, den)
    }
}

fn json_err(detail: &str) -> AlgebraError {
    AlgebraError::Parse {
        what: "rational function",
        detail: detail.to_string(),
    }
}

pub(crate) fn poly_terms_json(p: &QPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| json!([i, format_rational(c)]))
            .collect(),
    )
}

pub(crate) fn poly_from_terms_json(v: &Value) -> Result<QPoly, AlgebraError> {
    let terms = v.as_array().ok_or_else(|| json_err("expected term list"))?;
    let mut out = QPoly::zero();
    let mut last: Option<u64> = None;
    for t in terms {
        let pair = t.as_array().filter(|a| a.len() == 2);
        let pair = pair.ok_or_else(|| json_err("expected [exp, coeff]"))?;
        let exp = pair[0].as_u64().ok_or_else(|| json_err("bad exponent"))?;
        if last.is_some_and(|l| l >= exp) {
            return Err(json_err("exponents must be strictly ascending"));
        }
        last = Some(exp);
        let c = parse_rational(pair[1].as_str().ok_or_else(|| json_err("bad coefficient"))?)?;
        out = out.add_ref(&QPoly::monomial(c, exp as usize));
    }
    Ok(out)
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add<&QRat> for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        self.add_ref(rhs)
    }
}

impl Sub<&QRat> for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self.sub_ref(rhs)
    }
}

impl Mul<&QRat> for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        self.mul_ref(rhs)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
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

    fn r(n: &[i64], d: &[i64]) -> QRat {
        QRat::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn additive_and_multiplicative_inverses() {
        // 1/(q-1) + 1/(1-q) = 0
        assert!(r(&[1], &[-1, 1]).add_ref(&r(&[1], &[1, -1])).is_zero());
        // (q-1)/(q+1) * (q+1)/(q-1) = 1
        assert!(r(&[-1, 1], &[1, 1]).mul_ref(&r(&[1, 1], &[-1, 1])).is_one());
    }

    #[test]
    fn division_reduces() {
        let a = QRat::from_poly(p(&[-1, 0, 0, 1]));
        let b = QRat::from_poly(p(&[-1, 1]));
        assert_eq!(a.div_ref(&b).unwrap(), QRat::from_poly(p(&[1, 1, 1])));
        assert_eq!(a.div_ref(&QRat::zero()), Err(AlgebraError::DivisionByZero));
        assert!(QRat::new(p(&[1]), QPoly::zero()).is_err());
    }

    #[test]
    fn denominators_are_monic() {
        let x = r(&[2], &[0, 3]);
        assert_eq!(x.denominator(), &p(&[0, 1]));
        assert_eq!(x.numerator(), &QPoly::constant(frac(2, 3)));
    }

    #[test]
    fn q_integers() {
        assert!(QRat::q_integer(0).is_zero());
        assert_eq!(QRat::q_integer(3), QRat::from_poly(p(&[1, 1, 1])));
        // (q^-2 - 1)/(q - 1) = -(1+q)/q^2
        assert_eq!(QRat::q_integer(-2), r(&[-1, -1], &[0, 0, 1]));
        for n in -6..=6 {
            let direct = QRat::q_pow(n)
                .sub_ref(&QRat::one())
                .div_ref(&QRat::from_poly(p(&[-1, 1])))
                .unwrap();
            assert_eq!(QRat::q_integer(n), direct, "n = {n}");
        }
    }

    #[test]
    fn reciprocal_substitution() {
        let three = QRat::q_integer(3);
        assert_eq!(three.reciprocal_q(), r(&[1, 1, 1], &[0, 0, 1]));
        assert_eq!(three.reciprocal_q().reciprocal_q(), three);
    }

    #[test]
    fn evaluation_after_reduction() {
        let f = QRat::new(p(&[-1, 0, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f.eval(&rat(1)).unwrap(), rat(3));
        let pole = r(&[1], &[-1, 1]);
        assert!(matches!(pole.eval(&rat(1)), Err(AlgebraError::Pole { .. })));
    }

    #[test]
    fn json_shape() {
        let f = r(&[1], &[1, 1]).scale(&frac(-1, 2));
        let v = f.to_json();
        assert_eq!(v, json!({"num": [[0, "-1/2"]], "den": [[0, "1"], [1, "1"]]}));
        assert_eq!(QRat::from_json(&v).unwrap(), f);
        assert!(QRat::from_json(&json!({"num": [[1, "1"], [0, "1"]], "den": [[0, "1"]]})).is_err());
    }
}
