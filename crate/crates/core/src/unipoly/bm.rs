use super::poly::UniPoly;
use crate::field::Field;

/// Minimal monic `Λ` annihilating the linear recurrence generated by `seq`.
///
/// For `seq[i] = Σ c_j m_j^(i+1)` with distinct nonzero `m_j`, nonzero `c_j`
/// and at least `2t` entries, `Λ = ∏ (z - m_j)`.
pub fn berlekamp_massey<F: Field>(field: &F, seq: &[F::Elem]) -> UniPoly<F::Elem> {
    // connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L
    let mut c = vec![field.one()];
    let mut b = vec![field.one()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last_disc = field.one();
    for n in 0..seq.len() {
        let mut disc = seq[n].clone();
        for i in 1..=len.min(c.len() - 1) {
            disc = field.add(&disc, &field.mul(&c[i], &seq[n - i]));
        }
        if field.is_zero(&disc) {
            shift += 1;
            continue;
        }
        let coef = field.div(&disc, &last_disc).expect("nonzero discrepancy");
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, field.zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + shift] = field.sub(&c[i + shift], &field.mul(&coef, bi));
        }
        if 2 * len <= n {
            len = n + 1 - len;
            b = prev;
            last_disc = disc;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.resize(len + 1, field.zero());
    c.reverse();
    UniPoly::from_coeffs(field, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_geometric_sequence() {
        let f = PrimeField::new(7).unwrap();
        let l = berlekamp_massey(&f, &[5, 2]);
        assert_eq!(l.coeffs(), &[1, 1]); // z - 6
    }

    #[test]
    fn zero_sequence() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(berlekamp_massey(&f, &[0, 0, 0, 0]).coeffs(), &[1]);
    }

    #[test]
    fn two_term_sequence() {
        let f = PrimeField::new(7).unwrap();
        // v_i = 2^i + 3^i for i = 1..4
        let v: Vec<u64> = (1..=4).map(|i| (f.pow(&2, i) + f.pow(&3, i)) % 7).collect();
        assert_eq!(&v[..3], &[5, 6, 0]);
        assert_eq!(berlekamp_massey(&f, &v).coeffs(), &[6, 2, 1]);
    }

    #[test]
    fn exact_degree_for_all_small_t() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for t in 0..=12usize {
            for _ in 0..20 {
                let mut nodes: Vec<u64> = Vec::new();
                while nodes.len() < t {
                    let m = rng.gen_range(1..101);
                    if !nodes.contains(&m) {
                        nodes.push(m);
                    }
                }
                let cs: Vec<u64> = (0..t).map(|_| rng.gen_range(1..101)).collect();
                let seq: Vec<u64> = (1..=2 * t.max(1) as u64)
                    .map(|i| {
                        nodes
                            .iter()
                            .zip(&cs)
                            .fold(0, |acc, (m, c)| f.add(&acc, &f.mul(c, &f.pow(m, i))))
                    })
                    .collect();
                let l = berlekamp_massey(&f, &seq);
                assert_eq!(l.degree(), Some(t));
                for m in &nodes {
                    assert_eq!(l.eval(&f, m), 0);
                }
            }
        }
    }
}
