use std::fmt;

use thiserror::Error;

/// Stages of the primitive GCD pipeline, used to tag retryable failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    Isolation,
    TermBounds,
    Diversify,
    Evaluate,
    Interpolate,
    Assemble,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Isolation => "I (isolation)",
            Stage::TermBounds => "II (term bounds)",
            Stage::Diversify => "III (diversification)",
            Stage::Evaluate => "IV (evaluation)",
            Stage::Interpolate => "V (interpolation)",
            Stage::Assemble => "VI (assembly)",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("factoring {0} exceeded the configured budget; supply a primitive element explicitly")]
    FactorizationBudgetExceeded(u128),
    #[error("target is not a power of the generator within the exponent bound")]
    NotAPower,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("scaling vector contains a zero entry")]
    ZeroScale,
    #[error("found {found} roots for a polynomial of degree {degree}")]
    RootDeficit { found: usize, degree: usize },
    #[error("transposed Vandermonde system is singular")]
    SingularSystem,
    #[error("coefficients are not pairwise distinct; term matching is ambiguous")]
    DiversityViolation,
    #[error("recurrence length mismatch: {0}")]
    LengthMismatch(String),
    #[error("interpolated polynomial does not reproduce its evaluations")]
    VerificationFailed,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("stage {stage} failed: {cause}")]
    Failure { stage: Stage, cause: String },
    #[error("dense oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("deadline exceeded")]
    DeadlineExceeded,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn failure(stage: Stage, cause: impl Into<String>) -> Self {
        Error::Failure {
            stage,
            cause: cause.into(),
        }
    }

    /// Errors that mean "bad luck with the random choices" rather than bad input.
    pub fn is_retryable(&self) -> bool {
        matches!(
            self,
            Error::Failure { .. }
                | Error::NotAPower
                | Error::RootDeficit { .. }
                | Error::SingularSystem
                | Error::DiversityViolation
                | Error::LengthMismatch(_)
                | Error::VerificationFailed
                | Error::DivisionByZero
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
