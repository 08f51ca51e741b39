use super::factor::{prime_factors, FactorBudget};
use super::Field;
use crate::error::{Error, Result};

/// True iff `g` has multiplicative order exactly `n`, given the distinct primes of `n`.
pub fn has_order<F: Field>(field: &F, g: &F::Elem, n: u128, primes: &[u128]) -> bool {
    if field.is_zero(g) || !field.is_one(&field.pow_u128(g, n)) {
        return false;
    }
    primes
        .iter()
        .all(|&r| !field.is_one(&field.pow_u128(g, n / r)))
}

fn multiplicative_order<F: Field>(field: &F) -> Result<u128> {
    field
        .order()
        .map(|q| q - 1)
        .ok_or(Error::FactorizationBudgetExceeded(u128::MAX))
}

/// True iff `g` generates the multiplicative group of `field`.
pub fn is_primitive<F: Field>(field: &F, g: &F::Elem) -> Result<bool> {
    let n = multiplicative_order(field)?;
    let primes = prime_factors(n, &FactorBudget::default())?;
    Ok(has_order(field, g, n, &primes))
}

/// Smallest primitive element in the field's deterministic enumeration.
pub fn find_primitive_root<F: Field>(field: &F) -> Result<F::Elem> {
    let n = multiplicative_order(field)?;
    let primes = prime_factors(n, &FactorBudget::default())?;
    if n == 1 {
        return Ok(field.one());
    }
    (1..)
        .map(|i| field.element(i))
        .find(|g| has_order(field, g, n, &primes))
        .ok_or(Error::FactorizationBudgetExceeded(n))
}

/// An element of order `p^sub_degree - 1`, i.e. a primitive element of the
/// subfield `F_{p^sub_degree}` inside `field`. Requires `sub_degree | degree`.
///
/// Candidates are pushed into the subfield with the norm map
/// `x -> x^(1 + q + ... + q^(j-1))`, `q = p^sub_degree`, which is onto the
/// subfield's multiplicative group.
pub fn subfield_primitive<F: Field>(field: &F, sub_degree: usize) -> Result<F::Elem> {
    let k = field.degree();
    if sub_degree == 0 || !k.is_multiple_of(sub_degree) {
        return Err(Error::InvalidInput(format!(
            "F_p^{sub_degree} is not a subfield of F_p^{k}"
        )));
    }
    let p = field.characteristic() as u128;
    let q = p
        .checked_pow(sub_degree as u32)
        .ok_or(Error::FactorizationBudgetExceeded(u128::MAX))?;
    let n = q - 1;
    let primes = prime_factors(n, &FactorBudget::default())?;
    if n == 1 {
        return Ok(field.one());
    }
    let j = k / sub_degree;
    for i in 1.. {
        let x = field.element(i);
        if field.is_zero(&x) {
            continue;
        }
        let mut acc = x.clone();
        let mut frob = x;
        for _ in 1..j {
            frob = field.pow_u128(&frob, q);
            acc = field.mul(&acc, &frob);
        }
        if has_order(field, &acc, n, &primes) {
            return Ok(acc);
        }
    }
    unreachable!("the norm map is onto the subfield")
}
