use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// q = 0 presents the unknot and is excluded everywhere.
    #[error("invalid twist parameter q = {0}: q must be nonzero")]
    InvalidQ(i64),
    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("negative power of a non-unit")]
    NonUnit,
    #[error("number-field elements have different moduli")]
    ModulusMismatch,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("element shares a nontrivial factor with the modulus")]
    ZeroDivisor,
    #[error("generator matrix is not invertible")]
    SingularGenerator,
    #[error("root finder did not converge after {iterations} iterations (max residual {max_residual:e})")]
    NoConvergence { iterations: usize, max_residual: f64 },
    #[error("{check} failed: {source}")]
    Check {
        check: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn in_check(self, check: &'static str) -> Self {
        Error::Check { check, source: Box::new(self) }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
