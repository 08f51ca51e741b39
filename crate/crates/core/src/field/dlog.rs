use std::collections::HashMap;

use super::Field;
use crate::error::{Error, Result};

/// Smallest `e <= bound` with `omega^e = target`, by baby-step/giant-step
/// over `ceil(sqrt(bound + 1))` blocks.
pub fn discrete_log_bounded<F: Field>(
    field: &F,
    omega: &F::Elem,
    target: &F::Elem,
    bound: u64,
) -> Result<u64> {
    if field.is_zero(target) || field.is_zero(omega) {
        return Err(Error::NotAPower);
    }
    let m = ((bound as f64 + 1.0).sqrt().ceil() as u64).max(1);
    let mut baby: HashMap<F::Elem, u64> = HashMap::with_capacity(m as usize);
    let mut x = field.one();
    for j in 0..m {
        baby.entry(x.clone()).or_insert(j);
        x = field.mul(&x, omega);
    }
    // x = omega^m
    let giant = field.inv(&x)?;
    let mut gamma = target.clone();
    for i in 0..=m {
        if let Some(&j) = baby.get(&gamma) {
            let e = i * m + j;
            return if e <= bound {
                Ok(e)
            } else {
                Err(Error::NotAPower)
            };
        }
        gamma = field.mul(&gamma, &giant);
    }
    Err(Error::NotAPower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn small_examples() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(discrete_log_bounded(&f, &3, &4, 6).unwrap(), 4);
        assert_eq!(discrete_log_bounded(&f, &3, &1, 6).unwrap(), 0);
        // 3^5 = 5 but 5 exceeds the bound
        assert_eq!(discrete_log_bounded(&f, &3, &5, 2), Err(Error::NotAPower));
    }

    #[test]
    fn exhaustive_up_to_bound() {
        let f = PrimeField::new(10_000_019).unwrap();
        let d = 1000;
        let mut x = 1u64;
        for e in 0..=d {
            assert_eq!(discrete_log_bounded(&f, &6, &x, d).unwrap(), e);
            x = f.mul(&x, &6);
        }
        // one past the bound
        assert_eq!(discrete_log_bounded(&f, &6, &x, d), Err(Error::NotAPower));
    }
}
