//! Exact computation of pawn-type tree series: colorings of rooted trees
//! counted with a `q`-weight, their generating series, and checks of the
//! identities they satisfy.

pub mod algebra;
pub mod error;
pub mod trees;
pub mod par;
pub mod pawn;
pub mod series;
pub mod verify;

pub use error::{AlgebraError, SeriesError, TreeError, VerifyError};
