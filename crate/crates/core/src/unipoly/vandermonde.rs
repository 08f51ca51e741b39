use std::collections::HashSet;

use super::poly::UniPoly;
use crate::error::{Error, Result};
use crate::field::Field;

/// Solves `v_i = Σ_j c_j m_j^i` (`i = 1..=t`) for `c`, given distinct nonzero
/// nodes `m_j`. Only the first `t = nodes.len()` values are used.
pub fn solve_transposed_vandermonde<F: Field>(
    field: &F,
    nodes: &[F::Elem],
    values: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    let t = nodes.len();
    if values.len() < t {
        return Err(Error::InvalidInput(format!(
            "{} values for {} nodes",
            values.len(),
            t
        )));
    }
    let mut seen = HashSet::with_capacity(t);
    if nodes.iter().any(|m| field.is_zero(m) || !seen.insert(m)) {
        return Err(Error::SingularSystem);
    }
    let master = UniPoly::from_roots(field, nodes);
    let p = master.coeffs();
    let mut out = Vec::with_capacity(t);
    let mut q = vec![field.zero(); t];
    for m in nodes {
        // q = master / (z - m) by synthetic division, high to low
        let mut acc = field.zero();
        for k in (0..t).rev() {
            acc = field.add(&p[k + 1], &field.mul(&acc, m));
            q[k] = acc.clone();
        }
        let mut num = field.zero();
        let mut den = field.zero();
        let mut pw = field.one();
        for (k, qk) in q.iter().enumerate() {
            num = field.add(&num, &field.mul(qk, &values[k]));
            den = field.add(&den, &field.mul(qk, &pw));
            pw = field.mul(&pw, m);
        }
        // num / den is c_j m_j
        let c = field
            .div(&num, &field.mul(&den, m))
            .map_err(|_| Error::SingularSystem)?;
        out.push(c);
    }
    Ok(out)
}
