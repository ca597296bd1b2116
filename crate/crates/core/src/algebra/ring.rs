//! The coefficient-ring abstraction shared by tree series.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::Value;

use super::qrat::QRat;
use super::qseries::QSeries;
use super::rational::{format_rational, parse_rational, rat, Rational};
use super::xpoly::XPoly;
use crate::error::AlgebraError;

/// Commutative ring used for tree-series coefficients.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Tag written into serialized series.
    const RING: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.times(self))
    }

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, AlgebraError>;
}

impl Coefficient for Rational {
    const RING: &'static str = "rational";

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        rat(n)
    }
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }
    fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let s = v.as_str().ok_or_else(|| AlgebraError::Parse {
            what: "rational",
            detail: "expected a string".into(),
        })?;
        parse_rational(s)
    }
}

impl Coefficient for QRat {
    const RING: &'static str = "qrat";

    fn zero() -> Self {
        QRat::zero()
    }
    fn one() -> Self {
        QRat::one()
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn negate(&self) -> Self {
        self.neg_ref()
    }
    fn from_i64(n: i64) -> Self {
        QRat::from_i64(n)
    }
    fn to_json(&self) -> Value {
        QRat::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        QRat::from_json(v)
    }
}

impl Coefficient for XPoly {
    const RING: &'static str = "xpoly";

    fn zero() -> Self {
        XPoly::zero()
    }
    fn one() -> Self {
        XPoly::one()
    }
    fn is_zero(&self) -> bool {
        XPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn negate(&self) -> Self {
        self.neg_ref()
    }
    fn from_i64(n: i64) -> Self {
        XPoly::constant(QRat::from_i64(n))
    }
    fn to_json(&self) -> Value {
        XPoly::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        XPoly::from_json(v)
    }
}

impl Coefficient for QSeries {
    const RING: &'static str = "qseries";

    fn zero() -> Self {
        QSeries::zero()
    }
    fn one() -> Self {
        QSeries::one()
    }
    fn is_zero(&self) -> bool {
        QSeries::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn negate(&self) -> Self {
        self.neg_ref()
    }
    fn from_i64(n: i64) -> Self {
        QSeries::from_coeffs(vec![rat(n)], None)
    }
    fn to_json(&self) -> Value {
        QSeries::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        QSeries::from_json(v)
    }
}
