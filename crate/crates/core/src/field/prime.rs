use rand::Rng;

use super::{Field, MAX_MODULUS};
use crate::error::{Error, Result};

/// The prime field `F_p`. Elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
    // products of two residues fit in a u64
    narrow: bool,
}

impl PrimeField {
    /// Builds `F_p`, checking that `p` is a prime below `2^62`.
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidInput(format!(
                "modulus {p} is not below 2^62"
            )));
        }
        if !super::factor::is_prime(p as u128) {
            return Err(Error::InvalidInput(format!("modulus {p} is not prime")));
        }
        Ok(Self::new_unchecked(p))
    }

    pub(crate) fn new_unchecked(p: u64) -> Self {
        PrimeField {
            p,
            narrow: p < (1 << 32),
        }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u64 {
        v % self.p
    }

    #[inline(always)]
    pub fn mul_mod(&self, a: u64, b: u64) -> u64 {
        if self.narrow {
            (a * b) % self.p
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    #[inline(always)]
    pub fn add_mod(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub_mod(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn inv_mod(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on signed 128-bit values
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.p as i128) as u64)
    }

    pub fn pow_mod(&self, a: u64, mut e: u128) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(acc, base);
            }
            base = self.mul_mod(base, base);
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn degree(&self) -> usize {
        1
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_u64(&self, v: u64) -> u64 {
        v % self.p
    }

    fn to_base(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }

    fn coordinates(&self, a: &u64) -> Vec<u64> {
        vec![*a]
    }

    fn element(&self, idx: u64) -> u64 {
        idx % self.p
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.add_mod(*a, *b)
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.sub_mod(*a, *b)
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_mod(*a, *b)
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        self.inv_mod(*a)
    }

    fn pow(&self, a: &u64, e: u64) -> u64 {
        self.pow_mod(*a, e as u128)
    }

    fn pow_u128(&self, a: &u64, e: u128) -> u64 {
        self.pow_mod(*a, e)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        if self.p == 2 {
            1
        } else {
            rng.gen_range(1..self.p)
        }
    }

    fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        crate::unipoly::fastmul::mul_prime(self, a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_field_examples() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3).unwrap(), 5);
        assert_eq!(f.inv(&0), Err(Error::DivisionByZero));
    }

    #[test]
    fn fermat_at_benchmark_prime() {
        let p = 10_000_019;
        let f = PrimeField::new(p).unwrap();
        assert_eq!(f.pow(&6, p - 1), 1);
    }

    #[test]
    fn rejects_composites_and_oversized() {
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new((1 << 62) + 135).is_err());
    }

    #[test]
    fn wide_modulus_arithmetic() {
        // 2^61 - 1 is prime
        let p = (1u64 << 61) - 1;
        let f = PrimeField::new(p).unwrap();
        let a = p - 2;
        let ai = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &ai), 1);
        assert_eq!(f.pow(&3, p - 1), 1);
    }
}
