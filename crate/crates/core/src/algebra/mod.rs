//! Exact arithmetic in `Q`, `Q[q]`, `Q(q)`, `Q(q)[x]` and `Q[[q]]`.

pub mod cyclotomic;
pub mod newton;
pub mod qpoly;
pub mod qrat;
pub mod qseries;
pub mod rational;
pub mod ring;
pub mod subst;
pub mod xpoly;

pub use cyclotomic::{cyclotomic, factor_cyclotomic, CyclotomicFactorization};
pub use newton::{newton_polygon, BivarIntPoly, NewtonPolygon};
pub use qpoly::QPoly;
pub use qrat::QRat;
pub use qseries::QSeries;
pub use rational::{frac, rat, Rational};
pub use ring::Coefficient;
pub use subst::{subst_q, QTarget, Substituted};
pub use xpoly::XPoly;
