use thiserror::Error;

use crate::rational::{ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A bottom parameter makes a Pochhammer denominator vanish.
    #[error("bottom parameter {param} vanishes at term {index}")]
    DegenerateParameter { param: Rational, index: usize },

    #[error("series does not terminate: no top parameter is a non-positive integer")]
    NonTerminating,

    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),

    #[error("perturbation degree s = {s} exceeds 2m+1 = {}", 2 * .m + 1)]
    DegreeBound { s: usize, m: usize },

    #[error("invalid perturbation: {0}")]
    InvalidPerturbation(&'static str),

    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
