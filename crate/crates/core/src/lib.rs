//! Exact computations with the genus-2 skein algebra acting on the skein module of the
//! genus-2 handlebody, rank-1 DAHA polynomial representations, and the genus-2 DAHA
//! operators of Arthamonov and Shakirov.

pub mod exactalg;
pub mod daharep;
pub mod genus2daha;
pub mod opexpr;
pub mod skeinmod;

use thiserror::Error;

/// Any failure of a computation or check.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] exactalg::ExactError),
    #[error(transparent)]
    Skein(#[from] skeinmod::SkeinError),
    #[error(transparent)]
    Parse(#[from] opexpr::ParseError),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// Did a probabilistic sample hit a vanishing denominator?
    pub fn is_resample(&self) -> bool {
        matches!(
            self,
            Error::Exact(exactalg::ExactError::Resample) | Error::Skein(skeinmod::SkeinError::Exact(exactalg::ExactError::Resample))
        )
    }
}
