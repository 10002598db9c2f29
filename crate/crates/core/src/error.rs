use std::sync::OnceLock;

use thiserror::Error;

/// Errors raised by peaklab operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {n} exceeds the cap {cap} (set PEAKLAB_DEGREE_CAP to raise it)")]
    DegreeCap { n: usize, cap: usize },
    #[error("element is not in the descent algebra: {0}")]
    NotInDescentAlgebra(String),
    #[error("element is not in the peak algebra: {0}")]
    NotInPeakAlgebra(String),
    #[error("expected an odd composition, got {0}")]
    NotOdd(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
}

pub type Result<T> = std::result::Result<T, Error>;

const DEFAULT_DEGREE_CAP: usize = 10;

/// The largest degree for which operations enumerate S_n.
///
/// Defaults to 10 and can be overridden by the `PEAKLAB_DEGREE_CAP`
/// environment variable (read once per process).
pub fn degree_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("PEAKLAB_DEGREE_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_DEGREE_CAP)
    })
}

pub fn check_degree(n: usize) -> Result<()> {
    let cap = degree_cap();
    if n > cap {
        Err(Error::DegreeCap { n, cap })
    } else {
        Ok(())
    }
}
