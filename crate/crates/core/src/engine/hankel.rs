use crate::field::Field;

/// Leading principal minors of the Hankel matrix `(v_{i+j-1})`, grown one
/// size at a time by a symmetric `L D L^T` bordering step in `O(k^2)`.
#[derive(Debug, Clone)]
pub(crate) struct HankelMinors<E> {
    // row i of the unit lower factor, entries 0..i
    lower: Vec<Vec<E>>,
    diag: Vec<E>,
    singular_at: Option<usize>,
}

impl<E: Clone> HankelMinors<E> {
    pub(crate) fn new() -> Self {
        HankelMinors {
            lower: Vec::new(),
            diag: Vec::new(),
            singular_at: None,
        }
    }

    /// Size of the first singular leading minor seen so far.
    pub(crate) fn singular_at(&self) -> Option<usize> {
        self.singular_at
    }

    pub(crate) fn size(&self) -> usize {
        self.diag.len()
    }

    /// Tests sizes up to `target`, which needs `seq.len() >= 2 * target - 1`
    /// (`seq[0]` is `v_1`). Stops at the first singular size.
    pub(crate) fn extend<F: Field<Elem = E>>(&mut self, field: &F, seq: &[E], target: usize) {
        assert!(seq.len() + 1 >= 2 * target);
        while self.singular_at.is_none() && self.size() < target {
            let k = self.size();
            let mut row: Vec<E> = Vec::with_capacity(k);
            for j in 0..k {
                // (H[k][j] - sum_m L[k][m] L[j][m] D[m]) / D[j]
                let mut acc = seq[k + j].clone();
                for m in 0..j {
                    let t = field.mul(&field.mul(&row[m], &self.lower[j][m]), &self.diag[m]);
                    acc = field.sub(&acc, &t);
                }
                let l = field
                    .div(&acc, &self.diag[j])
                    .expect("earlier pivots are nonzero");
                row.push(l);
            }
            let mut d = seq[2 * k].clone();
            for m in 0..k {
                let t = field.mul(&field.mul(&row[m], &row[m]), &self.diag[m]);
                d = field.sub(&d, &t);
            }
            if field.is_zero(&d) {
                self.singular_at = Some(k + 1);
            }
            self.lower.push(row);
            self.diag.push(d);
        }
    }
}

/// Smallest `s <= t` with `det (v_{i+j-1})_{i,j <= s} = 0`, or `None` when
/// all of them are nonsingular. `values[0]` is `v_1`; needs `2t - 1` values.
pub fn hankel_first_singular<F: Field>(field: &F, values: &[F::Elem], t: usize) -> Option<usize> {
    let mut minors = HankelMinors::new();
    minors.extend(field, values, t);
    minors.singular_at()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn det(f: &PrimeField, m: &[Vec<u64>]) -> u64 {
        // Gaussian elimination, independent of the bordering code
        let n = m.len();
        let mut a = m.to_vec();
        let mut det = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r][c] != 0) else {
                return 0;
            };
            if p != c {
                a.swap(p, c);
                det = f.neg(&det);
            }
            det = f.mul(&det, &a[c][c]);
            let inv = f.inv(&a[c][c]).unwrap();
            for r in c + 1..n {
                let factor = f.mul(&a[r][c], &inv);
                for k in c..n {
                    let t = f.mul(&factor, &a[c][k]);
                    a[r][k] = f.sub(&a[r][k], &t);
                }
            }
        }
        det
    }

    fn hankel(v: &[u64], s: usize) -> Vec<Vec<u64>> {
        (0..s).map(|i| (0..s).map(|j| v[i + j]).collect()).collect()
    }

    #[test]
    fn one_term_is_singular_at_two() {
        let f = PrimeField::new(10_000_019).unwrap();
        let v: Vec<u64> = (1..=5).map(|i| f.mul(&7, &f.pow(&123, i))).collect();
        assert_eq!(det(&f, &hankel(&v, 2)), 0);
        assert_eq!(hankel_first_singular(&f, &v, 3), Some(2));
    }

    #[test]
    fn zero_sequence_is_singular_at_one() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(hankel_first_singular(&f, &[0, 0, 0], 2), Some(1));
    }

    #[test]
    fn two_terms_are_singular_at_three() {
        let f = PrimeField::new(10_000_019).unwrap();
        let v: Vec<u64> = (1..=7)
            .map(|i| f.add(&f.mul(&3, &f.pow(&11, i)), &f.mul(&5, &f.pow(&29, i))))
            .collect();
        assert_ne!(det(&f, &hankel(&v, 2)), 0);
        assert_eq!(det(&f, &hankel(&v, 3)), 0);
        assert_eq!(hankel_first_singular(&f, &v, 4), Some(3));
        assert_eq!(hankel_first_singular(&f, &v, 2), None);
    }

    #[test]
    fn matches_determinants_on_random_sequences() {
        let f = PrimeField::new(13).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(81);
        for _ in 0..500 {
            let v: Vec<u64> = (0..9).map(|_| rng.gen_range(0..13)).collect();
            let want = (1..=5).find(|&s| det(&f, &hankel(&v, s)) == 0);
            assert_eq!(hankel_first_singular(&f, &v, 5), want, "{v:?}");
        }
    }

    #[test]
    fn incremental_extension_agrees() {
        let f = PrimeField::new(10_000_019).unwrap();
        let v: Vec<u64> = (1..=11)
            .map(|i| {
                (1..=4u64).fold(0, |acc, j| {
                    f.add(&acc, &f.mul(&j, &f.pow(&(j * 1000 + 7), i)))
                })
            })
            .collect();
        let mut m = HankelMinors::new();
        for t in 1..=6 {
            m.extend(&f, &v, t);
        }
        assert_eq!(m.singular_at(), Some(5));
    }
}
