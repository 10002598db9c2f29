//! Exact computations in the Solomon descent algebra D_n and the peak
//! algebra P_n of the symmetric group.

pub mod class_functions;
pub mod combinatorics;
pub mod checks;
pub mod cyclotomic;
pub mod descent_peak;
pub mod error;
pub mod eulerian;
pub mod free_lie;
pub mod group_algebra;
pub mod lie_idempotents;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod structure_theory;

pub use error::{Error, Result};
