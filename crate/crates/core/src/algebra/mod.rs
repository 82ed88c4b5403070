//! Exact coefficient arithmetic, matrices and ribbon data.

mod datum;
mod laurent;
mod matrix;

pub use datum::{DatumFailure, DatumReport, RibbonDatum};
pub use laurent::{GaussInt, LaurentPoly};
pub use matrix::RingMatrix;
