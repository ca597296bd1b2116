//! Which series the `compute` command can produce, and how to build them.

use anyhow::{bail, Result};
use clap::ValueEnum;
use qtree::algebra::{QRat, XPoly};
use qtree::pawn::{series_e, series_f, series_g, solve_omega, solve_omega_bar, solve_pawn, solve_pawn_at_qint};
use qtree::series::TreeSeries;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    #[value(name = "pawn")]
    Pawn,
    #[value(name = "E")]
    E,
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    #[value(name = "omega")]
    Omega,
    #[value(name = "omega_bar")]
    OmegaBar,
    #[value(name = "pawn_at")]
    PawnAt,
}

impl SeriesName {
    pub fn as_str(self) -> &'static str {
        match self {
            SeriesName::Pawn => "pawn",
            SeriesName::E => "E",
            SeriesName::F => "F",
            SeriesName::G => "G",
            SeriesName::Omega => "omega",
            SeriesName::OmegaBar => "omega_bar",
            SeriesName::PawnAt => "pawn_at",
        }
    }

    /// Checks `--n` against what the series accepts and returns the
    /// parameter record that goes into the output and the cache key.
    pub fn params(self, n: Option<i64>) -> Result<Map<String, Value>> {
        let mut m = Map::new();
        match (self, n) {
            (SeriesName::F, Some(n)) if n < 0 => bail!("F needs --n >= 0, got {n}"),
            (SeriesName::G, Some(n)) if n < -1 => bail!("G needs --n >= -1, got {n}"),
            (SeriesName::F | SeriesName::G | SeriesName::PawnAt, Some(n)) => {
                m.insert("n".into(), json!(n));
            }
            (SeriesName::F | SeriesName::G | SeriesName::PawnAt, None) => {
                bail!("{} needs --n", self.as_str())
            }
            (_, Some(_)) => bail!("{} takes no --n", self.as_str()),
            (_, None) => {}
        }
        Ok(m)
    }
}

/// A computed series over one of the two coefficient rings used here.
#[derive(Debug, Clone, PartialEq)]
pub enum AnySeries {
    X(TreeSeries<XPoly>),
    Q(TreeSeries<QRat>),
}

impl AnySeries {
    pub fn compute(name: SeriesName, n: Option<i64>, order: usize) -> AnySeries {
        let n = n.unwrap_or(0);
        match name {
            SeriesName::Pawn => AnySeries::X(solve_pawn(order)),
            SeriesName::E => AnySeries::Q(series_e(order)),
            SeriesName::F => AnySeries::Q(series_f(n, order)),
            SeriesName::G => AnySeries::Q(series_g(n, order)),
            SeriesName::Omega => AnySeries::Q(solve_omega(order)),
            SeriesName::OmegaBar => AnySeries::Q(solve_omega_bar(order)),
            SeriesName::PawnAt => AnySeries::Q(solve_pawn_at_qint(order, n)),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnySeries::X(s) => s.to_json(),
            AnySeries::Q(s) => s.to_json(),
        }
    }

    /// Parses a payload written by [`AnySeries::to_json`], dispatching on its ring tag.
    pub fn from_json(v: &Value) -> Result<AnySeries> {
        match v.get("ring").and_then(Value::as_str) {
            Some("xpoly") => Ok(AnySeries::X(TreeSeries::from_json(v)?)),
            Some("qrat") => Ok(AnySeries::Q(TreeSeries::from_json(v)?)),
            other => bail!("unsupported ring {other:?}"),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            AnySeries::X(s) => s.order(),
            AnySeries::Q(s) => s.order(),
        }
    }
}
