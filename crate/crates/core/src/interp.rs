//! Sparse interpolation from a base row `f(α^i)` and `n` rows shifted by `ω`
//! in one coordinate each. Exponents come from bounded discrete logarithms of
//! the ratio between matched monomial values.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{discrete_log_bounded, Field};
use crate::sparse::{eval_at_powers, SparsePoly};
use crate::unipoly::{berlekamp_massey, find_roots, solve_transposed_vandermonde};

/// Evaluations on the grid `α^i` (base row) and `α_k^i` (row `k`), where
/// `α_k` is `α` with coordinate `k` multiplied by `ω`; `i = 1..=2T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalGrid<E> {
    pub base_row: Vec<E>,
    pub shifted_rows: Vec<Vec<E>>,
    pub alpha: Vec<E>,
    pub omega: E,
}

impl<E: Clone> EvalGrid<E> {
    /// Evaluates a known polynomial on the grid with `columns` entries per row.
    pub fn from_poly<F: Field<Elem = E>>(
        field: &F,
        f: &SparsePoly<E>,
        alpha: &[E],
        omega: &E,
        columns: usize,
    ) -> Self {
        let shifted_rows = (0..alpha.len())
            .map(|k| {
                let mut a = alpha.to_vec();
                a[k] = field.mul(&a[k], omega);
                eval_at_powers(field, f, &a, columns)
            })
            .collect();
        EvalGrid {
            base_row: eval_at_powers(field, f, alpha, columns),
            shifted_rows,
            alpha: alpha.to_vec(),
            omega: omega.clone(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.alpha.len()
    }
}

// (coefficient, monomial value) pairs recovered from one row
fn row_terms<F: Field>(
    field: &F,
    row: &[F::Elem],
    term_bound: usize,
    seed: u64,
) -> Result<Vec<(F::Elem, F::Elem)>> {
    let len = (2 * term_bound).min(row.len());
    let lambda = berlekamp_massey(field, &row[..len]);
    let t = lambda.degree().unwrap_or(0);
    if t > term_bound {
        return Err(Error::LengthMismatch(format!(
            "recurrence of length {t} exceeds the term bound {term_bound}"
        )));
    }
    if t == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes = find_roots(field, &lambda, &mut rng)?;
    let coeffs = solve_transposed_vandermonde(field, &nodes, row)?;
    Ok(coeffs.into_iter().zip(nodes).collect())
}

/// Recovers `f` with at most `term_bound` terms and partial degrees at most
/// `deg_bound` from its grid, which needs `2 * term_bound` columns.
///
/// Any inconsistency (ambiguous matches, disagreeing row lengths, exponents
/// out of range, or a result that does not reproduce the base row) is
/// reported as an error; a returned polynomial always matches the base row.
pub fn interpolate<F: Field, R: Rng + ?Sized>(
    field: &F,
    grid: &EvalGrid<F::Elem>,
    deg_bound: u64,
    term_bound: usize,
    rng: &mut R,
) -> Result<SparsePoly<F::Elem>> {
    let n = grid.nvars();
    if grid.shifted_rows.len() != n {
        return Err(Error::InvalidInput(format!(
            "{} shifted rows for {} variables",
            grid.shifted_rows.len(),
            n
        )));
    }
    let columns = 2 * term_bound;
    if grid.base_row.len() < columns || grid.shifted_rows.iter().any(|r| r.len() < columns) {
        return Err(Error::InvalidInput(format!(
            "grid rows need {columns} columns"
        )));
    }
    let seeds: Vec<u64> = (0..=n).map(|_| rng.gen()).collect();
    let rows: Vec<&[F::Elem]> = std::iter::once(grid.base_row.as_slice())
        .chain(grid.shifted_rows.iter().map(|r| r.as_slice()))
        .collect();
    let recovered = rows
        .par_iter()
        .zip(seeds.par_iter())
        .map(|(row, &seed)| row_terms(field, row, term_bound, seed))
        .collect::<Result<Vec<_>>>()?;

    let base = &recovered[0];
    let t = base.len();
    let mut index: HashMap<&F::Elem, usize> = HashMap::with_capacity(t);
    for (j, (c, _)) in base.iter().enumerate() {
        if index.insert(c, j).is_some() {
            return Err(Error::DiversityViolation);
        }
    }
    let mut exps = vec![vec![0u32; n]; t];
    for (k, row) in recovered[1..].iter().enumerate() {
        if row.len() != t {
            return Err(Error::LengthMismatch(format!(
                "base row has {t} terms, shifted row {k} has {}",
                row.len()
            )));
        }
        let mut used = vec![false; t];
        for (c, m_shift) in row {
            let &j = index.get(c).ok_or(Error::DiversityViolation)?;
            if std::mem::replace(&mut used[j], true) {
                return Err(Error::DiversityViolation);
            }
            let ratio = field.div(m_shift, &base[j].1)?;
            let e = discrete_log_bounded(field, &grid.omega, &ratio, deg_bound)?;
            exps[j][k] = u32::try_from(e).map_err(|_| Error::NotAPower)?;
        }
    }
    let f = SparsePoly::from_terms(
        field,
        n,
        base.iter().zip(exps).map(|((c, _), e)| (c.clone(), e)),
    );
    if f.len() != t {
        return Err(Error::DiversityViolation);
    }
    if eval_at_powers(field, &f, &grid.alpha, columns) != grid.base_row[..columns] {
        return Err(Error::VerificationFailed);
    }
    Ok(f)
}
