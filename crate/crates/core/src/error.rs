use std::path::PathBuf;

use thiserror::Error;

use crate::lattice::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("strip length must be at least 1")]
    EmptyLattice,

    #[error("labels array has {got} entries but the strip has {expected} cells")]
    LengthMismatch { expected: usize, got: usize },

    #[error("tail state needs at least 2 cells, strip has {cells}")]
    TooFewCells { cells: usize },

    /// The exhaustive enumerator refuses strips above its configured cell limit.
    #[error("oracle scale exceeded: strip has {cells} cells, limit is {limit}")]
    OracleScale { cells: usize, limit: usize },

    #[error("not enough rows: need n up to {needed}, triangle has {available}")]
    InsufficientRows { needed: usize, available: usize },

    #[error("column index must be at least 1")]
    InvalidColumn,

    #[error("{series} is not polynomial: fitted polynomial predicts {predicted} at n={n}, triangle has {actual}")]
    NotPolynomial {
        series: String,
        n: usize,
        predicted: String,
        actual: String,
    },

    #[error("denominator constant term must be exactly 1")]
    DenominatorNotMonic,

    #[error("row {n} is empty")]
    EmptyRow { n: usize },

    #[error("method {method} does not apply to the {family} strip")]
    MethodMismatch { method: String, family: Family },

    #[error("methods disagree: {0}")]
    Disagreement(String),

    #[error("malformed division text {text:?}: {reason}")]
    ParseDivision { text: String, reason: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed cache file {}: {reason}", path.display())]
    Cache { path: PathBuf, reason: String },
}
