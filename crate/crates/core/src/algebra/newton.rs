//! Bivariate numerators and their Newton polygons.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::qpoly::QPoly;
use super::qrat::QRat;
use super::rational::Rational;
use super::xpoly::XPoly;
use crate::error::AlgebraError;

/// Polynomial in `(q, x)`; keys are `(q-exponent, x-exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarIntPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivarIntPoly {
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut out = BTreeMap::new();
        for (k, c) in terms {
            let e: &mut Rational = out.entry(k).or_insert_with(Rational::zero);
            *e += c;
        }
        out.retain(|_, c: &mut Rational| !c.is_zero());
        BivarIntPoly { terms: out }
    }

    /// Splits an `x`-polynomial over `Q(q)` as `numerator / denominator`,
    /// where the denominator is the monic lcm of the coefficient denominators.
    pub fn numerator_of(f: &XPoly) -> (BivarIntPoly, QPoly) {
        let mut den = QPoly::one();
        for c in f.coeffs() {
            let d = c.denominator();
            if !d.is_one() {
                let g = den.gcd(d);
                den = den.mul_ref(&d.exact_div(&g).expect("gcd divides"));
            }
        }
        let scale = QRat::from_poly(den.clone());
        let mut terms = Vec::new();
        for (xe, c) in f.coeffs().iter().enumerate() {
            let n = c.mul_ref(&scale);
            debug_assert!(n.is_polynomial());
            for (qe, a) in n.numerator().coeffs().iter().enumerate() {
                if !a.is_zero() {
                    terms.push(((qe as u32, xe as u32), a.clone()));
                }
            }
        }
        (Self::from_terms(terms), den)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.terms.keys().copied()
    }
}

/// Convex hull of the exponent set, with `q`-degree on the horizontal axis and
/// `x`-degree on the vertical axis. Vertices run counterclockwise starting at
/// the lowest-then-leftmost point; collinear points are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolygon {
    pub vertices: Vec<(i64, i64)>,
}

pub fn newton_polygon(p: &BivarIntPoly) -> Result<NewtonPolygon, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut pts: Vec<(i64, i64)> = p
        .exponents()
        .map(|(qe, xe)| (qe as i64, xe as i64))
        .collect();
    Ok(NewtonPolygon {
        vertices: convex_hull(&mut pts),
    })
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain, keyed so the first vertex is the lowest-leftmost one.
fn convex_hull(pts: &mut Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    // sort by (y, x) so the chains split into right and left boundaries
    pts.sort_by_key(|&(x, y)| (y, x));
    pts.dedup();
    if pts.len() <= 2 {
        return pts.clone();
    }
    let mut right: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter() {
        while right.len() >= 2 && cross(right[right.len() - 2], right[right.len() - 1], p) <= 0 {
            right.pop();
        }
        right.push(p);
    }
    let mut left: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while left.len() >= 2 && cross(left[left.len() - 2], left[left.len() - 1], p) <= 0 {
            left.pop();
        }
        left.push(p);
    }
    right.pop();
    left.pop();
    right.extend(left);
    right
}

impl NewtonPolygon {
    pub fn min_y(&self) -> i64 {
        self.vertices.iter().map(|v| v.1).min().unwrap_or(0)
    }

    pub fn max_y(&self) -> i64 {
        self.vertices.iter().map(|v| v.1).max().unwrap_or(0)
    }

    /// Boundary from the bottom-left vertex up to the top-left vertex.
    pub fn left_chain(&self) -> Vec<(i64, i64)> {
        self.chain(false)
    }

    /// Boundary from the bottom-right vertex up to the top-right vertex.
    pub fn right_chain(&self) -> Vec<(i64, i64)> {
        self.chain(true)
    }

    fn chain(&self, right: bool) -> Vec<(i64, i64)> {
        let (lo, hi) = (self.min_y(), self.max_y());
        let pick = |y: i64| {
            let xs = self.vertices.iter().filter(|v| v.1 == y).map(|v| v.0);
            if right {
                xs.max()
            } else {
                xs.min()
            }
            .expect("row has a vertex")
        };
        let start = (pick(lo), lo);
        let end = (pick(hi), hi);
        if start == end {
            return vec![start];
        }
        let n = self.vertices.len();
        let si = self.vertices.iter().position(|&v| v == start).expect("vertex");
        // counterclockwise order walks the right side upward and the left side downward
        let mut out = vec![start];
        let mut i = si;
        loop {
            i = if right { (i + 1) % n } else { (i + n - 1) % n };
            let v = self.vertices[i];
            out.push(v);
            if v == end {
                break;
            }
        }
        out
    }
}
