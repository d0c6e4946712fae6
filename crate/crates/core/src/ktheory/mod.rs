//! Complex and real K-theory of `CP^d`: `K(CP^d) = Z[L]/(L^{d+1})` and
//! `KO(CP^d) = Z[w]/I` with `I = (w^3)`, `(2w^3, w^4)`, `(w^4)` for
//! `d = 4, 5, 6`, together with conjugation, complexification, real
//! reduction, Adams operations and the characteristic classes built on them.

mod kclass;
mod koclass;
mod reduce;

use thiserror::Error;

pub use kclass::KClass;
pub use koclass::KOClass;
pub use reduce::{real_reduce, real_reduction_table};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KTheoryError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("KO(CP^{0}) is only modelled for d in {{4, 5, 6}}")]
    UnsupportedDimension(usize),
    #[error("unsupported operation: {0}")]
    UnsupportedOperation(String),
    #[error("expected {expected} coefficients, got {actual}")]
    BadLength { expected: usize, actual: usize },
    #[error("class is not in the image of complexification")]
    NotInImage,
}

/// Dimensions with a KO-theory model.
pub const KO_DIMS: [usize; 3] = [4, 5, 6];

pub(crate) fn check_ko_dim(d: usize) -> Result<(), KTheoryError> {
    if KO_DIMS.contains(&d) {
        Ok(())
    } else {
        Err(KTheoryError::UnsupportedDimension(d))
    }
}
