//! Sparse multivariate polynomial GCD over prime fields.
//!
//! ```
//! use spgcd::engine::{gcd, GcdConfig};
//! use spgcd::field::PrimeField;
//! use spgcd::sparse::SparsePoly;
//!
//! let f = PrimeField::new(11)?;
//! // (x1 + x2)(x1 + 2), (x1 + x2)(x2 + 3)
//! let a = SparsePoly::from_u64_terms(&f, 2, &[(1, vec![2, 0]), (1, vec![1, 1]), (2, vec![1, 0]), (2, vec![0, 1])]);
//! let b = SparsePoly::from_u64_terms(&f, 2, &[(1, vec![1, 1]), (3, vec![1, 0]), (1, vec![0, 2]), (3, vec![0, 1])]);
//! let g = gcd(&f, &a, &b, &GcdConfig::with_seed(1))?;
//! assert_eq!(g, SparsePoly::from_u64_terms(&f, 2, &[(1, vec![1, 0]), (1, vec![0, 1])]));
//! # Ok::<(), spgcd::Error>(())
//! ```

pub mod cli;
pub mod engine;
pub mod error;
pub mod field;
pub mod interp;
pub mod oracle;
pub mod sparse;
pub mod unipoly;

pub use error::{Error, Result, Stage};
