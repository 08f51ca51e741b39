use std::collections::BTreeMap;

use rand::Rng;

use super::poly::SparsePoly;
use crate::error::{Error, Result, Stage};
use crate::field::Field;

/// `f` grouped by `y`-degree after substituting `x_i -> x_i y^(s_i)` and
/// dividing by the lowest power of `y`. Layer coefficients keep the original
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomoPoly<E> {
    s: Vec<u32>,
    layers: Vec<(u64, SparsePoly<E>)>,
}

impl<E: Clone> HomoPoly<E> {
    pub fn s(&self) -> &[u32] {
        &self.s
    }

    /// `(y-degree, coefficient)` pairs with strictly increasing degrees, the first being 0.
    pub fn layers(&self) -> &[(u64, SparsePoly<E>)] {
        &self.layers
    }

    pub fn y_degree(&self) -> u64 {
        self.layers.last().map_or(0, |(e, _)| *e)
    }

    /// Substitutes `y = 1`, recovering the source polynomial.
    pub fn sum_layers<F: Field<Elem = E>>(&self, field: &F, nvars: usize) -> SparsePoly<E> {
        SparsePoly::from_terms(
            field,
            nvars,
            self.layers
                .iter()
                .flat_map(|(_, h)| h.terms().map(|(c, e)| (c.clone(), e.to_vec()))),
        )
    }
}

/// `<e, s>` in 64 bits.
pub fn weighted_degree(e: &[u32], s: &[u32]) -> u64 {
    e.iter().zip(s).map(|(&a, &b)| a as u64 * b as u64).sum()
}

pub fn homogenize<F: Field>(field: &F, f: &SparsePoly<F::Elem>, s: &[u32]) -> HomoPoly<F::Elem> {
    assert_eq!(s.len(), f.nvars());
    assert!(
        s.iter().all(|&x| x >= 1),
        "isolating vector entries must be positive"
    );
    let mut groups: BTreeMap<u64, Vec<(F::Elem, Vec<u32>)>> = BTreeMap::new();
    for (c, e) in f.terms() {
        groups
            .entry(weighted_degree(e, s))
            .or_default()
            .push((c.clone(), e.to_vec()));
    }
    let low = groups.keys().next().copied().unwrap_or(0);
    let layers = groups
        .into_iter()
        .map(|(k, terms)| (k - low, SparsePoly::from_terms(field, f.nvars(), terms)))
        .collect();
    HomoPoly {
        s: s.to_vec(),
        layers,
    }
}

/// True iff exactly one term attains the maximal `<e, s>`.
pub fn has_max_isolated_term<E: Clone>(f: &SparsePoly<E>, s: &[u32]) -> bool {
    let mut best = None;
    let mut count = 0;
    for (_, e) in f.terms() {
        let w = weighted_degree(e, s);
        match best {
            Some(b) if w < b => {}
            Some(b) if w == b => count += 1,
            _ => {
                best = Some(w);
                count = 1;
            }
        }
    }
    count == 1
}

/// How the sampling range `[1, N]` grows between attempts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IsolationStrategy {
    /// `N = 1, 2, 4, ...` up to the maximum, then held there.
    #[default]
    Doubling,
    /// Always sample at the maximum `N = 2 min(T_A - 1, T_B - 1)`.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isolation {
    pub s: Vec<u32>,
    /// Which input had the maximum isolated term.
    pub side: Side,
    pub samples: usize,
}

const MAX_ISOLATION_SAMPLES: usize = 4096;

pub fn choose_isolating_vector<E: Clone, R: Rng + ?Sized>(
    a: &SparsePoly<E>,
    b: &SparsePoly<E>,
    strategy: IsolationStrategy,
    rng: &mut R,
) -> Result<Isolation> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = a.nvars();
    let n_max = 2 * (a.len().min(b.len()) as u64 - 1);
    let mut range = match strategy {
        IsolationStrategy::Doubling => 1,
        IsolationStrategy::Full => n_max.max(1),
    };
    for samples in 1..=MAX_ISOLATION_SAMPLES {
        let s: Vec<u32> = if range <= 1 {
            vec![1; n]
        } else {
            (0..n).map(|_| rng.gen_range(1..=range) as u32).collect()
        };
        if has_max_isolated_term(a, &s) {
            return Ok(Isolation {
                s,
                side: Side::A,
                samples,
            });
        }
        if has_max_isolated_term(b, &s) {
            return Ok(Isolation {
                s,
                side: Side::B,
                samples,
            });
        }
        range = (range * 2).min(n_max.max(1));
    }
    Err(Error::failure(
        Stage::Isolation,
        format!("no isolating vector after {MAX_ISOLATION_SAMPLES} samples"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g_example(f: &PrimeField) -> SparsePoly<u64> {
        SparsePoly::from_u64_terms(f, 2, &[(5, vec![3, 1]), (7, vec![5, 8]), (4, vec![9, 4])])
    }

    #[test]
    fn homogenize_displayed_example() {
        let f = PrimeField::new(10_000_019).unwrap();
        let g = g_example(&f);
        let h = homogenize(&f, &g, &[1, 2]);
        let mono = |c, e: Vec<u32>| SparsePoly::from_u64_terms(&f, 2, &[(c, e)]);
        assert_eq!(
            h.layers(),
            &[
                (0, mono(5, vec![3, 1])),
                (12, mono(4, vec![9, 4])),
                (16, mono(7, vec![5, 8]))
            ]
        );
        let h = homogenize(&f, &g, &[1, 1]);
        assert_eq!(h.layers().len(), 2);
        assert_eq!(h.layers()[0], (0, mono(5, vec![3, 1])));
        assert_eq!(h.layers()[1].0, 9);
        assert_eq!(
            h.layers()[1].1,
            SparsePoly::from_u64_terms(&f, 2, &[(7, vec![5, 8]), (4, vec![9, 4])])
        );
    }

    #[test]
    fn homogenize_constant() {
        let f = PrimeField::new(7).unwrap();
        let c = SparsePoly::from_u64_terms(&f, 3, &[(4, vec![0, 0, 0])]);
        let h = homogenize(&f, &c, &[2, 3, 1]);
        assert_eq!(h.layers(), &[(0, c)]);
    }

    #[test]
    fn isolation_examples() {
        let f = PrimeField::new(11).unwrap();
        let a =
            SparsePoly::from_u64_terms(&f, 2, &[(2, vec![7, 3]), (3, vec![5, 8]), (5, vec![1, 9])]);
        assert!(has_max_isolated_term(&a, &[1, 1]));
        assert!(!has_max_isolated_term(&a, &[5, 2]));
        let single = SparsePoly::from_u64_terms(&f, 2, &[(2, vec![7, 3])]);
        assert!(has_max_isolated_term(&single, &[4, 9]));
    }

    #[test]
    fn choose_accepts_ones_for_single_term() {
        let f = PrimeField::new(11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let a = SparsePoly::from_u64_terms(&f, 3, &[(2, vec![7, 3, 1])]);
        let b = SparsePoly::from_u64_terms(&f, 3, &[(1, vec![1, 0, 0]), (1, vec![0, 1, 0])]);
        let iso = choose_isolating_vector(&a, &b, IsolationStrategy::Doubling, &mut rng).unwrap();
        assert_eq!(iso.s, vec![1, 1, 1]);
        assert_eq!(iso.side, Side::A);
        assert_eq!(iso.samples, 1);
    }

    #[test]
    fn choose_on_example_polynomial() {
        let f = PrimeField::new(11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let a =
            SparsePoly::from_u64_terms(&f, 2, &[(2, vec![7, 3]), (3, vec![5, 8]), (5, vec![1, 9])]);
        let iso = choose_isolating_vector(&a, &a, IsolationStrategy::Doubling, &mut rng).unwrap();
        assert_eq!(iso.s, vec![1, 1]);
        for _ in 0..50 {
            let iso = choose_isolating_vector(&a, &a, IsolationStrategy::Full, &mut rng).unwrap();
            assert!(has_max_isolated_term(&a, &iso.s));
            assert!(iso.s.iter().all(|&x| (1..=4).contains(&x)));
        }
    }
}
