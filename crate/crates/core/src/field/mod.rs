//! Finite field arithmetic: prime fields `F_p` with `p < 2^62`, their
//! extensions `F_p[z]/(Φ)`, irreducible-polynomial and primitive-element
//! search, and bounded discrete logarithms.
//!
//! Every field implements [`Field`]; algorithms higher up are generic over it
//! so the prime-field case compiles down to plain `u64` arithmetic.

mod dlog;
mod ext;
pub mod factor;
pub(crate) mod fp_poly;
mod irreducible;
mod prime;
mod primitive;

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

use crate::error::Result;

pub use dlog::discrete_log_bounded;
pub use ext::{ExtElem, ExtField};
pub use irreducible::{find_irreducible, is_irreducible};
pub use prime::PrimeField;
pub use primitive::{find_primitive_root, has_order, is_primitive, subfield_primitive};

/// Largest supported characteristic (exclusive).
pub const MAX_MODULUS: u64 = 1 << 62;

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn characteristic(&self) -> u64;

    /// Extension degree over the prime subfield.
    fn degree(&self) -> usize;

    /// Number of elements, when it fits in a `u128`.
    fn order(&self) -> Option<u128> {
        let p = self.characteristic() as u128;
        let mut q: u128 = 1;
        for _ in 0..self.degree() {
            q = q.checked_mul(p)?;
        }
        Some(q)
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// Embeds `v mod p` from the prime subfield.
    fn from_u64(&self, v: u64) -> Self::Elem;

    /// Projects back to the prime subfield, if `a` lies in it.
    fn to_base(&self, a: &Self::Elem) -> Option<u64>;

    /// Coordinates over the prime subfield (a single residue for `F_p`).
    fn coordinates(&self, a: &Self::Elem) -> Vec<u64>;

    /// A deterministic enumeration of field elements (base-`p` digits of `idx`).
    fn element(&self, idx: u64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        self.pow_u128(a, e as u128)
    }

    fn pow_u128(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let a = self.random(rng);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }

    /// Product of two dense coefficient vectors (low to high).
    fn poly_mul(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        crate::unipoly::fastmul::karatsuba(self, a, b)
    }
}
