use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("malformed rational {0:?} (expected \"p\" or \"p/q\")")]
    Malformed(String),
    #[error("zero denominator in rational {0:?}")]
    ZeroDenominator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("functional must be nonzero")]
    ZeroFunctional,

    #[error("structure tensor is not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("bimodule axiom `{0}` fails")]
    BimoduleAxiom(&'static str),

    #[error("operation requires a phi-algebra")]
    NotPhiAlgebra,

    #[error("element is not a nonzero idempotent")]
    NotIdempotent,

    #[error("linear map is not a derivation")]
    NotADerivation,

    #[error("map has the wrong codomain: {0}")]
    WrongCodomain(String),

    #[error("no functional independent of phi")]
    NoIndependentFunctional,

    #[error("dual level {0} is not odd")]
    EvenDualLevel(usize),

    #[error("requested depth {requested} exceeds the limit {limit}")]
    DepthLimit { requested: usize, limit: usize },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
