use super::poly::SparsePoly;
use crate::error::{Error, Result};
use crate::field::Field;

/// `M_j(point)` for every term, in term order.
pub fn monomial_values<F: Field>(
    field: &F,
    f: &SparsePoly<F::Elem>,
    point: &[F::Elem],
) -> Vec<F::Elem> {
    assert_eq!(point.len(), f.nvars());
    f.terms()
        .map(|(_, e)| {
            e.iter().zip(point).fold(field.one(), |m, (&k, x)| {
                if k == 0 {
                    m
                } else {
                    field.mul(&m, &field.pow(x, k as u64))
                }
            })
        })
        .collect()
}

fn rescale<F: Field>(field: &F, f: &SparsePoly<F::Elem>, zeta: &[F::Elem]) -> SparsePoly<F::Elem> {
    let scales = monomial_values(field, f, zeta);
    let coeffs = f
        .coeffs()
        .iter()
        .zip(&scales)
        .map(|(c, m)| field.mul(c, m))
        .collect();
    let exps = f.terms().flat_map(|(_, e)| e.iter().copied()).collect();
    SparsePoly::from_sorted_unchecked(f.nvars(), coeffs, exps)
}

/// `f(ζ_1 x_1, ..., ζ_n x_n)`.
pub fn diversify<F: Field>(
    field: &F,
    f: &SparsePoly<F::Elem>,
    zeta: &[F::Elem],
) -> Result<SparsePoly<F::Elem>> {
    if zeta.iter().any(|z| field.is_zero(z)) {
        return Err(Error::ZeroScale);
    }
    Ok(rescale(field, f, zeta))
}

/// Inverse of [`diversify`].
pub fn undiversify<F: Field>(
    field: &F,
    f: &SparsePoly<F::Elem>,
    zeta: &[F::Elem],
) -> Result<SparsePoly<F::Elem>> {
    let inv = zeta
        .iter()
        .map(|z| field.inv(z).map_err(|_| Error::ZeroScale))
        .collect::<Result<Vec<_>>>()?;
    Ok(rescale(field, f, &inv))
}

/// `f(α^1), ..., f(α^count)` with coordinatewise powers, in
/// `O(count * #f)` multiplications after one pass over the monomials.
pub fn eval_at_powers<F: Field>(
    field: &F,
    f: &SparsePoly<F::Elem>,
    alpha: &[F::Elem],
    count: usize,
) -> Vec<F::Elem> {
    let m = monomial_values(field, f, alpha);
    let mut cur: Vec<F::Elem> = f.coeffs().to_vec();
    (0..count)
        .map(|_| {
            let mut acc = field.zero();
            for (c, mj) in cur.iter_mut().zip(&m) {
                *c = field.mul(c, mj);
                acc = field.add(&acc, c);
            }
            acc
        })
        .collect()
}
