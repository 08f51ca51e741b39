//! Random planted-GCD instances `(A' G, B' G, G)`.

use rand::seq::index;
use rand::Rng;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::oracle::{dense_gcd, sparse_mul, DensePoly, MAX_DEGREE, MAX_VARS};
use crate::sparse::{monomial_content, Monomial, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub a: SparsePoly<u64>,
    pub b: SparsePoly<u64>,
    /// The planted GCD, lex-monic.
    pub g: SparsePoly<u64>,
}

// Resampling cap for cofactors that visibly share a factor.
const MAX_RESAMPLES: usize = 100;

/// Number of monomials in `n` variables of total degree at most `deg`, saturating.
pub fn monomial_count(n: usize, deg: u32) -> u128 {
    // C(deg + n, n)
    let mut c: u128 = 1;
    for i in 1..=n as u128 {
        c = match c.checked_mul(deg as u128 + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    c
}

/// A uniform exponent vector of total degree at most `deg`: the gaps
/// between a sorted random `n`-subset of `0..deg + n`.
fn random_monomial<R: Rng>(n: usize, deg: u32, rng: &mut R) -> Vec<u32> {
    let mut picks = index::sample(rng, deg as usize + n, n).into_vec();
    picks.sort_unstable();
    let mut prev = 0;
    picks
        .into_iter()
        .map(|c| {
            let e = (c - prev) as u32;
            prev = c + 1;
            e
        })
        .collect()
}

/// `terms` distinct monomials of total degree at most `deg`, uniform
/// nonzero coefficients.
pub fn random_poly<R: Rng>(
    field: &PrimeField,
    n: usize,
    terms: usize,
    deg: u32,
    rng: &mut R,
) -> Result<SparsePoly<u64>> {
    if terms as u128 > monomial_count(n, deg) {
        return Err(Error::InvalidInput(format!(
            "only {} monomials in {n} variables have degree at most {deg}",
            monomial_count(n, deg)
        )));
    }
    let mut support = BTreeSet::new();
    while support.len() < terms {
        support.insert(random_monomial(n, deg, rng));
    }
    Ok(SparsePoly::from_terms(
        field,
        n,
        support
            .into_iter()
            .map(|e| (rng.gen_range(1..field.modulus()), e)),
    ))
}

// f / x^m, for a monomial dividing every term.
fn strip(field: &PrimeField, f: &SparsePoly<u64>, m: &Monomial) -> SparsePoly<u64> {
    SparsePoly::from_terms(
        field,
        f.nvars(),
        f.terms()
            .map(|(c, e)| (*c, e.iter().zip(&m.0).map(|(x, y)| x - y).collect())),
    )
}

// Whether the dense oracle sees a common factor, when the inputs are small enough.
fn related(field: &PrimeField, a: &SparsePoly<u64>, b: &SparsePoly<u64>) -> Result<bool> {
    let small =
        a.nvars() <= MAX_VARS && a.max_partial_degree().max(b.max_partial_degree()) <= MAX_DEGREE;
    if !small {
        return Ok(false);
    }
    let g = dense_gcd(
        field,
        &DensePoly::from_sparse(field, a),
        &DensePoly::from_sparse(field, b),
    )?;
    Ok(g.to_sparse(field).total_degree() > 0)
}

/// Samples `G`, `A'`, `B'` with `terms` terms each and total degree at most
/// `deg`, and returns `A' G`, `B' G` and `G`. Any monomial factor shared by
/// `A'` and `B'` is divided out first.
pub fn generate<R: Rng>(
    field: &PrimeField,
    n: usize,
    terms: usize,
    deg: u32,
    rng: &mut R,
) -> Result<Instance> {
    if n == 0 || terms == 0 {
        return Err(Error::InvalidInput(
            "need at least one variable and one term".into(),
        ));
    }
    let g = random_poly(field, n, terms, deg, rng)?.lex_monic(field);
    for _ in 0..MAX_RESAMPLES {
        let a = random_poly(field, n, terms, deg, rng)?;
        let b = random_poly(field, n, terms, deg, rng)?;
        // at high degree both cofactors nearly always contain some x_i; divide it out
        let shared = monomial_content(&a)?.gcd(&monomial_content(&b)?);
        let (a, b) = (strip(field, &a, &shared), strip(field, &b, &shared));
        if related(field, &a, &b)? {
            continue;
        }
        return Ok(Instance {
            a: sparse_mul(field, &a, &g),
            b: sparse_mul(field, &b, &g),
            g,
        });
    }
    Err(Error::InvalidInput(format!(
        "no coprime cofactors after {MAX_RESAMPLES} samples; the degree bound is too small for {terms} terms"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::divides_exactly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_monomials() {
        assert_eq!(monomial_count(1, 0), 1);
        assert_eq!(monomial_count(2, 2), 6);
        assert_eq!(monomial_count(6, 30), 1_947_792);
    }

    #[test]
    fn monomials_respect_the_degree_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut seen = BTreeSet::new();
        for _ in 0..2000 {
            let e = random_monomial(3, 4, &mut rng);
            assert!(e.iter().sum::<u32>() <= 4);
            seen.insert(e);
        }
        assert_eq!(seen.len() as u128, monomial_count(3, 4));
    }

    #[test]
    fn constants() {
        let f = PrimeField::new(10_000_019).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let inst = generate(&f, 1, 1, 0, &mut rng).unwrap();
        for p in [&inst.a, &inst.b, &inst.g] {
            assert_eq!(p.len(), 1);
            assert_eq!(p.total_degree(), 0);
        }
    }

    #[test]
    fn benchmark_shape() {
        let f = PrimeField::new(10_000_019).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let inst = generate(&f, 6, 30, 30, &mut rng).unwrap();
        assert_eq!(inst.g.len(), 30);
        assert!(inst.g.total_degree() <= 30);
        assert_eq!(inst.g.leading_coeff(), Some(&1));
        assert!(divides_exactly(&f, &inst.g, &inst.a).is_some());
        assert!(divides_exactly(&f, &inst.g, &inst.b).is_some());
    }

    #[test]
    fn rejects_impossible_shapes() {
        let f = PrimeField::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(generate(&f, 1, 3, 1, &mut rng).is_err());
        assert!(generate(&f, 0, 1, 1, &mut rng).is_err());
    }
}
