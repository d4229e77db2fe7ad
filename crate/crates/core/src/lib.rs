//! Consecutive-box statistics on permutations: the 1-box and k-box patterns,
//! their distributions over 132-avoiding and separable permutations, and the
//! exact series machinery used to check the closed forms.

// indexed loops over several parallel sequences read better than zips here
#![allow(clippy::needless_range_loop)]

pub mod analytic;
pub mod cli;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod report;
pub mod separable;
pub mod sequence;
pub mod series;
pub mod verify;

use thiserror::Error;

pub use analytic::AnalyticError;
pub use oracle::OracleError;
pub use perm::{PermError, Permutation, RectangleSpec};
pub use sequence::BFileError;
pub use series::SeriesError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
    #[error(transparent)]
    BFile(#[from] BFileError),
    #[error("unknown sequence {0:?}; known: a, b, c, d, four_occ, max_occ, fib, pell, catalan, schroder, a4, b4")]
    UnknownSequence(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<SeriesError> for Error {
    fn from(e: SeriesError) -> Self {
        Error::Analytic(e.into())
    }
}
