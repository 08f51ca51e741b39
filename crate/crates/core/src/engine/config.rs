use std::time::Instant;

use crate::sparse::IsolationStrategy;

/// How the working term bound grows while searching for singular Hankel matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TermStrategy {
    /// `T -> 2T`.
    #[default]
    Doubling,
    /// `T -> T + 1`.
    Linear,
}

/// Whether the randomized stages work in extensions sized by the failure
/// tolerance, or directly in the smallest field that holds all exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtensionPolicy {
    /// Extension degrees from the tolerance formulas; the default.
    #[default]
    Formula,
    /// Never extend beyond what the degree bounds require. Much faster on
    /// large primes, with failure probability governed by the field size.
    BaseFieldOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GcdConfig {
    /// Target failure probability, in `(0, 1)`.
    pub epsilon: f64,
    pub seed: u64,
    /// Attempts after the first one.
    pub max_retries: u32,
    pub term_strategy: TermStrategy,
    pub isolation_strategy: IsolationStrategy,
    /// Primitive element of the prime field; discovered when absent.
    pub omega: Option<u64>,
    pub extension: ExtensionPolicy,
    /// Abort with `DeadlineExceeded` once this instant has passed.
    pub deadline: Option<Instant>,
}

impl Default for GcdConfig {
    fn default() -> Self {
        GcdConfig {
            epsilon: 1e-3,
            seed: 0,
            max_retries: 3,
            term_strategy: TermStrategy::default(),
            isolation_strategy: IsolationStrategy::default(),
            omega: None,
            extension: ExtensionPolicy::default(),
            deadline: None,
        }
    }
}

impl GcdConfig {
    pub fn with_seed(seed: u64) -> Self {
        GcdConfig {
            seed,
            ..Self::default()
        }
    }
}
