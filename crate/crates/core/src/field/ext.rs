use rand::Rng;
use smallvec::{smallvec, SmallVec};

use super::{fp_poly, is_irreducible, Field, PrimeField};
use crate::error::{Error, Result};

/// Element of `F_p[z]/(Φ)`: exactly `k` coordinates, low to high.
pub type ExtElem = SmallVec<[u64; 4]>;

/// The extension field `F_{p^k} = F_p[z]/(Φ)` with dense schoolbook arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    // monic, length k + 1
    modulus: Vec<u64>,
}

impl ExtField {
    /// Wraps a monic irreducible modulus of degree `k >= 1`.
    pub fn new(base: PrimeField, modulus: Vec<u64>) -> Result<Self> {
        let mut m = modulus;
        fp_poly::trim(&mut m);
        let k = match fp_poly::degree(&m) {
            Some(k) if k >= 1 => k,
            _ => {
                return Err(Error::InvalidInput(
                    "extension modulus must have degree >= 1".into(),
                ))
            }
        };
        if m[k] != 1 {
            return Err(Error::InvalidInput(
                "extension modulus must be monic".into(),
            ));
        }
        if !is_irreducible(&base, &m) {
            return Err(Error::InvalidInput("extension modulus is reducible".into()));
        }
        Ok(ExtField { base, modulus: m })
    }

    /// Builds a degree-`k` extension from a freshly sampled irreducible modulus.
    pub fn random<R: Rng + ?Sized>(base: PrimeField, k: usize, rng: &mut R) -> Self {
        let modulus = super::find_irreducible(&base, k, rng);
        ExtField { base, modulus }
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn k(&self) -> usize {
        self.modulus.len() - 1
    }

    fn from_poly(&self, mut v: Vec<u64>) -> ExtElem {
        v.resize(self.k(), 0);
        SmallVec::from_vec(v)
    }
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    fn degree(&self) -> usize {
        self.k()
    }

    fn zero(&self) -> ExtElem {
        smallvec![0; self.k()]
    }

    fn one(&self) -> ExtElem {
        let mut e = self.zero();
        e[0] = 1 % self.base.modulus();
        e
    }

    fn from_u64(&self, v: u64) -> ExtElem {
        let mut e = self.zero();
        e[0] = self.base.reduce(v);
        e
    }

    fn to_base(&self, a: &ExtElem) -> Option<u64> {
        if a[1..].iter().all(|&c| c == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    fn coordinates(&self, a: &ExtElem) -> Vec<u64> {
        a.to_vec()
    }

    fn element(&self, mut idx: u64) -> ExtElem {
        let p = self.base.modulus();
        let mut e = self.zero();
        for c in e.iter_mut() {
            *c = idx % p;
            idx /= p;
        }
        e
    }

    fn is_zero(&self, a: &ExtElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add_mod(x, y))
            .collect()
    }

    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.sub_mod(x, y))
            .collect()
    }

    fn neg(&self, a: &ExtElem) -> ExtElem {
        a.iter().map(|&x| self.base.neg(&x)).collect()
    }

    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let k = self.k();
        let f = &self.base;
        let mut prod = [0u64; 64];
        let mut heap;
        let buf: &mut [u64] = if 2 * k <= 64 {
            &mut prod[..2 * k - 1]
        } else {
            heap = vec![0u64; 2 * k - 1];
            &mut heap
        };
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                buf[i + j] = f.add_mod(buf[i + j], f.mul_mod(x, y));
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = buf[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let t = f.mul_mod(c, self.modulus[j]);
                buf[i - k + j] = f.sub_mod(buf[i - k + j], t);
            }
        }
        SmallVec::from_slice(&buf[..k])
    }

    fn inv(&self, a: &ExtElem) -> Result<ExtElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let inv = fp_poly::invmod(&self.base, a, &self.modulus).ok_or(Error::DivisionByZero)?;
        Ok(self.from_poly(inv))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        (0..self.k()).map(|_| self.base.random(rng)).collect()
    }
}
