//! Roots of a polynomial that splits into distinct linear factors:
//! `gcd(x^Q - x, f)` followed by random equal-degree splitting.

use rand::Rng;

use super::gcd::{divrem, gcd, series_inverse};
use super::poly::{make_monic, mul, sub, trim, UniPoly};
use crate::error::{Error, Result};
use crate::field::Field;

const BRUTE_FORCE_ORDER: u128 = 512;
const BARRETT_CUTOFF: usize = 48;

// Arithmetic in F[x]/(f) for monic f of degree >= 1.
struct Residues<'a, F: Field> {
    field: &'a F,
    modulus: Vec<F::Elem>,
    // inverse of reversed modulus mod x^(deg - 1), for large moduli
    rev_inv: Option<Vec<F::Elem>>,
}

impl<'a, F: Field> Residues<'a, F> {
    fn new(field: &'a F, modulus: Vec<F::Elem>) -> Self {
        let n = modulus.len() - 1;
        let rev_inv = (n >= BARRETT_CUTOFF).then(|| {
            let rev: Vec<F::Elem> = modulus.iter().rev().cloned().collect();
            series_inverse(field, &rev, n - 1)
        });
        Residues {
            field,
            modulus,
            rev_inv,
        }
    }

    fn reduce(&self, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
        let field = self.field;
        trim(field, &mut a);
        let n = self.modulus.len() - 1;
        if a.len() <= n {
            return a;
        }
        match &self.rev_inv {
            Some(inv) if a.len() < 2 * n => {
                let qlen = a.len() - n;
                let ra: Vec<F::Elem> = a.iter().rev().take(qlen).cloned().collect();
                let mut rq = mul(field, &ra, &inv[..qlen.min(inv.len())]);
                rq.resize(qlen, field.zero());
                rq.reverse();
                trim(field, &mut rq);
                sub(field, &a, &mul(field, &rq, &self.modulus))
            }
            _ => divrem(field, &a, &self.modulus).1,
        }
    }

    fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.reduce(mul(self.field, a, b))
    }

    fn pow(&self, a: &[F::Elem], mut e: u128) -> Vec<F::Elem> {
        let mut base = self.reduce(a.to_vec());
        let mut acc = vec![self.field.one()];
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

    // a^(p^j) for j = 0..k, via repeated p-th powers
    fn frobenius_orbit(&self, a: &[F::Elem], k: usize) -> Vec<Vec<F::Elem>> {
        let p = self.field.characteristic() as u128;
        let mut out = Vec::with_capacity(k);
        let mut cur = self.reduce(a.to_vec());
        for _ in 0..k {
            let next = self.pow(&cur, p);
            out.push(cur);
            cur = next;
        }
        out
    }
}

/// All roots of `f` in the field, in no particular order.
///
/// Fails with [`Error::RootDeficit`] unless `f` is a product of distinct
/// linear factors.
pub fn find_roots<F: Field, R: Rng + ?Sized>(
    field: &F,
    f: &UniPoly<F::Elem>,
    rng: &mut R,
) -> Result<Vec<F::Elem>> {
    let degree = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let f = make_monic(field, f.coeffs().to_vec());
    if let Some(q) = field.order().filter(|&q| q <= BRUTE_FORCE_ORDER) {
        let poly = UniPoly::from_coeffs(field, f);
        let roots: Vec<F::Elem> = (0..q as u64)
            .map(|i| field.element(i))
            .filter(|x| field.is_zero(&poly.eval(field, x)))
            .collect();
        // distinct roots, so a full count means f splits; repeated roots leave a deficit
        return if roots.len() == degree {
            Ok(roots)
        } else {
            Err(Error::RootDeficit {
                found: roots.len(),
                degree,
            })
        };
    }
    let k = field.degree();
    let ring = Residues::new(field, f.clone());
    // x^Q mod f, Q = p^k
    let x = vec![field.zero(), field.one()];
    let xq = ring
        .frobenius_orbit(&x, k + 1)
        .pop()
        .expect("orbit has k + 1 entries");
    let split_part = gcd(
        field,
        &UniPoly::from_coeffs(field, sub(field, &xq, &x)),
        &UniPoly::from_coeffs(field, f.clone()),
    );
    let found = split_part.degree().unwrap_or(degree);
    if found < degree {
        return Err(Error::RootDeficit { found, degree });
    }
    let mut roots = Vec::with_capacity(degree);
    let mut pending = vec![f];
    while let Some(g) = pending.pop() {
        if g.len() == 2 {
            roots.push(field.neg(&g[0]));
            continue;
        }
        let d = split_once(field, &g, rng);
        let (q, _) = divrem(field, &g, &d);
        pending.push(d);
        pending.push(make_monic(field, q));
    }
    Ok(roots)
}

// A proper monic factor of g (degree >= 2, product of distinct linear factors).
fn split_once<F: Field, R: Rng + ?Sized>(field: &F, g: &[F::Elem], rng: &mut R) -> Vec<F::Elem> {
    let ring = Residues::new(field, g.to_vec());
    let k = field.degree();
    let p = field.characteristic();
    let whole = UniPoly::from_coeffs(field, g.to_vec());
    loop {
        let delta = field.random(rng);
        let probe = if p == 2 {
            // trace of delta * x: sum of (delta x)^(2^j), j < k
            let lin = vec![field.zero(), delta];
            ring.frobenius_orbit(&lin, k)
                .into_iter()
                .fold(Vec::new(), |acc, t| super::poly::add(field, &acc, &t))
        } else {
            // (x + delta)^((Q - 1) / 2) = prod_j ((x + delta)^((p - 1) / 2))^(p^j)
            let lin = vec![delta, field.one()];
            let half = ring.pow(&lin, ((p - 1) / 2) as u128);
            let chi = ring
                .frobenius_orbit(&half, k)
                .into_iter()
                .reduce(|acc, t| ring.mul(&acc, &t))
                .expect("k >= 1");
            sub(field, &chi, &[field.one()])
        };
        let d = gcd(field, &UniPoly::from_coeffs(field, probe), &whole);
        if let Some(dd) = d.degree() {
            if dd > 0 && dd + 1 < g.len() {
                return d.into_coeffs();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExtField, PrimeField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn sorted(mut v: Vec<u64>) -> Vec<u64> {
        v.sort_unstable();
        v
    }

    #[test]
    fn small_examples() {
        let f = PrimeField::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let lin = UniPoly::from_u64(&f, &[1, 1]); // z - 6
        assert_eq!(find_roots(&f, &lin, &mut rng).unwrap(), vec![6]);
        let quad = UniPoly::from_u64(&f, &[6, 2, 1]);
        assert_eq!(sorted(find_roots(&f, &quad, &mut rng).unwrap()), vec![2, 3]);
        let irr = UniPoly::from_u64(&f, &[1, 0, 1]);
        assert!(matches!(
            find_roots(&f, &irr, &mut rng),
            Err(Error::RootDeficit {
                found: 0,
                degree: 2
            })
        ));
        let repeated = UniPoly::from_roots(&f, &[2, 2]);
        assert!(find_roots(&f, &repeated, &mut rng).is_err());
    }

    #[test]
    fn split_products_over_large_prime() {
        let f = PrimeField::new(10_000_019).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for t in [1usize, 2, 5, 30, 120] {
            let mut set = HashSet::new();
            while set.len() < t {
                set.insert(rng.gen_range(0..f.modulus()));
            }
            let want: Vec<u64> = sorted(set.into_iter().collect());
            let poly = UniPoly::from_roots(&f, &want);
            assert_eq!(sorted(find_roots(&f, &poly, &mut rng).unwrap()), want);
        }
        // partial splitting is a deficit
        let poly = UniPoly::from_roots(&f, &[1, 2, 3]).mul(&f, &UniPoly::from_u64(&f, &[1, 0, 1]));
        let is_residue = f.pow(&(f.modulus() - 1), (f.modulus() - 1) / 2) == 1;
        if !is_residue {
            assert!(matches!(
                find_roots(&f, &poly, &mut rng),
                Err(Error::RootDeficit {
                    found: 3,
                    degree: 5
                })
            ));
        }
    }

    #[test]
    fn characteristic_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let f = ExtField::random(PrimeField::new(2).unwrap(), 12, &mut rng);
        let mut roots = Vec::new();
        while roots.len() < 9 {
            let r = f.random(&mut rng);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let poly = UniPoly::from_roots(&f, &roots);
        let got: HashSet<_> = find_roots(&f, &poly, &mut rng)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(got, roots.into_iter().collect());
    }

    #[test]
    fn odd_extension() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let f = ExtField::random(PrimeField::new(101).unwrap(), 3, &mut rng);
        let roots: Vec<_> = (0..10).map(|_| f.random(&mut rng)).collect();
        let distinct: HashSet<_> = roots.iter().cloned().collect();
        let poly = UniPoly::from_roots(&f, &distinct.iter().cloned().collect::<Vec<_>>());
        let got: HashSet<_> = find_roots(&f, &poly, &mut rng)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(got, distinct);
    }

    #[test]
    fn brute_force_small_field() {
        let f = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        let poly = UniPoly::from_u64(&f, &[0, 1, 1]); // z (z + 1)
        assert_eq!(sorted(find_roots(&f, &poly, &mut rng).unwrap()), vec![0, 1]);
    }
}
