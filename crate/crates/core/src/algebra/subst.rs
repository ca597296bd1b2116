//! Substitutions in the variable `q`.

use super::qrat::QRat;
use super::qseries::QSeries;
use super::rational::Rational;
use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QTarget {
    /// `q ↦ 1/q`
    Reciprocal,
    /// `q ↦` a rational number
    Value(Rational),
    /// power-series expansion in `q` up to and including `q^order`
    Series(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Substituted {
    Function(QRat),
    Value(Rational),
    Series(QSeries),
}

pub fn subst_q(f: &QRat, target: &QTarget) -> Result<Substituted, AlgebraError> {
    Ok(match target {
        QTarget::Reciprocal => Substituted::Function(f.reciprocal_q()),
        QTarget::Value(v) => Substituted::Value(f.eval(v)?),
        QTarget::Series(m) => Substituted::Series(QSeries::from_qrat(f, *m)?),
    })
}
