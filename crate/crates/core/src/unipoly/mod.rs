//! Dense univariate polynomials over a [`Field`](crate::field::Field): monic
//! GCD, Berlekamp–Massey, root finding and transposed Vandermonde solving.

mod bm;
pub mod fastmul;
mod gcd;
mod poly;
mod roots;
mod vandermonde;

pub use bm::berlekamp_massey;
pub use gcd::{gcd, monic_gcd};
pub use poly::UniPoly;
pub use roots::find_roots;
pub use vandermonde::solve_transposed_vandermonde;
