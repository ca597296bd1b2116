//! The pawn series `♟` and its relatives: `E`, the coloring series `F^{(n)}`
//! and `G^{(n)}`, `Ω_q`, `Ω̄_q`, Bernoulli–Carlitz numbers and the umbral and
//! Hahn operators.

mod closed;
mod coloring;
mod solve;
mod umbral;

pub use closed::{
    limit_minus_one_over_q, pawn_corolla, pawn_linear, pawn_one_minus_q_inverse, pawn_q1_limit,
    pawn_x_infinity, q1_limit_of, x_infinity_part, PawnCoefficient,
};
pub use coloring::{
    coloring_poly, eval_pawn_at_qint, fbar_type, series_coloring, series_f, series_g, ColoringMode,
};
pub use solve::{
    omega_bar_coefficient, omega_bar_step, omega_bar_via_omega, omega_coefficient, omega_step,
    pawn_coefficient, series_e, solve_omega, solve_omega_bar, solve_pawn, solve_pawn_at_qint,
    solve_pawn_with, PawnStep,
};
pub use umbral::{bernoulli_carlitz, hahn_delta, hahn_inverse, psi_umbral};

use crate::algebra::{QRat, XPoly};

/// `1 + q x`, the pawn coefficient of `●`.
pub fn one_plus_qx() -> XPoly {
    XPoly::linear(QRat::one(), QRat::q())
}

/// `1 + (q - 1) x`.
pub fn twist() -> XPoly {
    XPoly::linear(QRat::one(), QRat::q().sub_ref(&QRat::one()))
}
