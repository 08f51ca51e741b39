//! Slow, independent reference arithmetic: a dense recursive GCD for small
//! inputs and exact sparse multiplication and division. Nothing here calls
//! into `unipoly`, `interp` or `engine`.

mod dense;

use std::collections::{BTreeMap, HashMap};

use crate::field::{Field, PrimeField};
use crate::sparse::SparsePoly;

pub use dense::{dense_gcd, DensePoly, MAX_DEGREE, MAX_VARS};

/// Exact product by schoolbook multiplication.
pub fn sparse_mul(field: &PrimeField, a: &SparsePoly<u64>, b: &SparsePoly<u64>) -> SparsePoly<u64> {
    assert_eq!(a.nvars(), b.nvars(), "operands live in different rings");
    let mut acc: HashMap<Vec<u32>, u64> = HashMap::with_capacity(a.len() * b.len());
    for (c1, e1) in a.terms() {
        for (c2, e2) in b.terms() {
            let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
            let slot = acc.entry(e).or_insert(0);
            *slot = field.add(slot, &field.mul(c1, c2));
        }
    }
    SparsePoly::from_terms(field, a.nvars(), acc.into_iter().map(|(e, c)| (c, e)))
}

/// `Some(q)` with `a = g q` if `g` divides `a`, by lex leading-term division.
///
/// # Panics
/// If `g` is zero.
pub fn divides_exactly(
    field: &PrimeField,
    g: &SparsePoly<u64>,
    a: &SparsePoly<u64>,
) -> Option<SparsePoly<u64>> {
    assert!(!g.is_zero(), "division by the zero polynomial");
    let n = a.nvars();
    if g.nvars() != n {
        return None;
    }
    if a.is_zero() {
        return Some(SparsePoly::zero(n));
    }
    // an exact quotient has partial degrees deg_i(a) - deg_i(g)
    let mut max_q = Vec::with_capacity(n);
    for i in 0..n {
        max_q.push(a.partial_degree(i).checked_sub(g.partial_degree(i))?);
    }
    let (lc, lead) = g.terms().last().expect("nonzero");
    let lc_inv = field.inv(lc).ok()?;
    let mut rem: BTreeMap<Vec<u32>, u64> = a.terms().map(|(c, e)| (e.to_vec(), *c)).collect();
    let mut quotient = Vec::new();
    while let Some((e, c)) = rem.pop_last() {
        let mut q = Vec::with_capacity(n);
        for i in 0..n {
            let d = e[i].checked_sub(lead[i])?;
            if d > max_q[i] {
                return None;
            }
            q.push(d);
        }
        let qc = field.mul(&c, &lc_inv);
        for (gc, ge) in g.terms().take(g.len() - 1) {
            let m: Vec<u32> = ge.iter().zip(&q).map(|(x, y)| x + y).collect();
            let v = field.sub(rem.get(&m).unwrap_or(&0), &field.mul(&qc, gc));
            if v == 0 {
                rem.remove(&m);
            } else {
                rem.insert(m, v);
            }
        }
        quotient.push((qc, q));
    }
    Some(SparsePoly::from_terms(field, n, quotient))
}
