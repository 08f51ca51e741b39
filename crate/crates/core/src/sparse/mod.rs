//! Sparse multivariate polynomials and the structural transforms used by the
//! GCD pipeline: monomial content, homogenization by an isolating vector,
//! diversification and evaluation along geometric sequences.

mod homog;
mod poly;
mod transform;

pub use homog::{
    choose_isolating_vector, has_max_isolated_term, homogenize, weighted_degree, HomoPoly,
    Isolation, IsolationStrategy, Side,
};
pub use poly::{monomial_content, monomial_primitive, Monomial, SparsePoly};
pub use transform::{diversify, eval_at_powers, monomial_values, undiversify};
