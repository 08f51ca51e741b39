use rand::Rng;

use super::{factor, fp_poly, Field, PrimeField};

/// Rabin's test: `f` (monic, degree `k`) is irreducible iff `x^(p^k) = x mod f`
/// and `gcd(x^(p^(k/r)) - x, f) = 1` for every prime `r | k`.
pub fn is_irreducible(base: &PrimeField, f: &[u64]) -> bool {
    let mut f = f.to_vec();
    fp_poly::trim(&mut f);
    let k = match fp_poly::degree(&f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(k) => k,
    };
    let p = base.modulus();
    let x = vec![0, 1];
    let maximal: Vec<usize> = factor::small_prime_factors(k as u64)
        .into_iter()
        .map(|r| k / r as usize)
        .collect();

    // h = x^(p^i) mod f
    let mut h = x.clone();
    for i in 1..=k {
        h = fp_poly::powmod(base, &h, p as u128, &f);
        if maximal.contains(&i) {
            let g = fp_poly::gcd(base, &fp_poly::sub(base, &h, &x), &f);
            if fp_poly::degree(&g) != Some(0) {
                return false;
            }
        }
    }
    fp_poly::sub(base, &h, &x).is_empty()
}

/// Samples random monic degree-`k` polynomials until one is irreducible.
pub fn find_irreducible<R: Rng + ?Sized>(base: &PrimeField, k: usize, rng: &mut R) -> Vec<u64> {
    assert!(k >= 1, "extension degree must be positive");
    loop {
        let mut cand: Vec<u64> = (0..k).map(|_| base.random(rng)).collect();
        cand.push(1);
        if is_irreducible(base, &cand) {
            return cand;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Brute-force irreducibility for tiny fields: no monic factor of degree <= k/2.
    fn irreducible_by_search(p: u64, f: &[u64]) -> bool {
        let base = PrimeField::new(p).unwrap();
        let k = f.len() - 1;
        for d in 1..=k / 2 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut g: Vec<u64> = (0..d).map(|i| (idx / p.pow(i as u32)) % p).collect();
                g.push(1);
                if fp_poly::rem(&base, f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn degree_one_is_irreducible() {
        let f2 = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = find_irreducible(&f2, 1, &mut rng);
        assert_eq!(m.len(), 2);
        assert_eq!(m[1], 1);
        assert!(is_irreducible(&f2, &[1, 1]));
        assert!(is_irreducible(&f2, &[0, 1]));
    }

    #[test]
    fn quadratic_non_residue_moduli() {
        // -1 is a non-residue mod 7, 2 is a non-residue mod 5
        assert!(is_irreducible(&PrimeField::new(7).unwrap(), &[1, 0, 1]));
        assert!(is_irreducible(&PrimeField::new(5).unwrap(), &[2, 0, 1]));
        // z^2 + 1 over F_5 has roots 2, 3
        assert!(!is_irreducible(&PrimeField::new(5).unwrap(), &[1, 0, 1]));
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        for p in [2u64, 3, 5] {
            let base = PrimeField::new(p).unwrap();
            for k in 2..=4usize {
                let count = p.pow(k as u32);
                for idx in 0..count {
                    let mut f: Vec<u64> = (0..k).map(|i| (idx / p.pow(i as u32)) % p).collect();
                    f.push(1);
                    assert_eq!(
                        is_irreducible(&base, &f),
                        irreducible_by_search(p, &f),
                        "p={p} f={f:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn found_moduli_pass_independent_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (p, k) in [(2u64, 5usize), (3, 4), (7, 3), (5, 2)] {
            let base = PrimeField::new(p).unwrap();
            let m = find_irreducible(&base, k, &mut rng);
            assert!(irreducible_by_search(p, &m));
        }
    }
}
