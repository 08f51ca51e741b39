use rayon::prelude::*;

use crate::field::Field;
use crate::sparse::{monomial_values, HomoPoly};

struct Term<E> {
    poly: usize,
    y_degree: usize,
    coeff: E,
    value: E,
}

/// Dense univariate images `F_1(y, β^i)`, `F_2(y, β^i)` of two homogenized
/// polynomials along the geometric sequence of a point `β`.
pub(crate) struct ImageEvaluator<E> {
    degrees: [usize; 2],
    terms: Vec<Term<E>>,
}

const MIN_CHUNK: usize = 2;

impl<E: Clone + Send + Sync> ImageEvaluator<E> {
    pub(crate) fn new<F: Field<Elem = E>>(
        field: &F,
        f1: &HomoPoly<E>,
        f2: &HomoPoly<E>,
        point: &[E],
    ) -> Self {
        let mut terms = Vec::new();
        for (poly, h) in [f1, f2].into_iter().enumerate() {
            for (e, layer) in h.layers() {
                let values = monomial_values(field, layer, point);
                for (c, v) in layer.coeffs().iter().zip(values) {
                    terms.push(Term {
                        poly,
                        y_degree: *e as usize,
                        coeff: c.clone(),
                        value: v,
                    });
                }
            }
        }
        ImageEvaluator {
            degrees: [f1.y_degree() as usize, f2.y_degree() as usize],
            terms,
        }
    }

    /// Applies `f(i, image_1, image_2)` for `i` in `start..end`, in order.
    pub(crate) fn map_range<F, T, G>(&self, field: &F, start: u64, end: u64, f: G) -> Vec<T>
    where
        F: Field<Elem = E>,
        T: Send,
        G: Fn(u64, &[E], &[E]) -> T + Sync,
    {
        if start >= end {
            return Vec::new();
        }
        let count = (end - start) as usize;
        let chunk = count
            .div_ceil(rayon::current_num_threads().max(1))
            .max(MIN_CHUNK) as u64;
        let starts: Vec<u64> = (start..end).step_by(chunk as usize).collect();
        starts
            .into_par_iter()
            .flat_map_iter(|s| {
                let e = (s + chunk).min(end);
                self.run_chunk(field, s, e, &f)
            })
            .collect()
    }

    fn run_chunk<F, T, G>(&self, field: &F, start: u64, end: u64, f: &G) -> Vec<T>
    where
        F: Field<Elem = E>,
        G: Fn(u64, &[E], &[E]) -> T,
    {
        // cur_j = c_j m_j^i
        let mut cur: Vec<E> = self
            .terms
            .iter()
            .map(|t| field.mul(&t.coeff, &field.pow(&t.value, start)))
            .collect();
        let mut out = Vec::with_capacity((end - start) as usize);
        let mut p1 = vec![field.zero(); self.degrees[0] + 1];
        let mut p2 = vec![field.zero(); self.degrees[1] + 1];
        for i in start..end {
            for c in p1.iter_mut().chain(p2.iter_mut()) {
                *c = field.zero();
            }
            for (t, c) in self.terms.iter().zip(cur.iter_mut()) {
                if i > start {
                    *c = field.mul(c, &t.value);
                }
                let slot = if t.poly == 0 {
                    &mut p1[t.y_degree]
                } else {
                    &mut p2[t.y_degree]
                };
                *slot = field.add(slot, c);
            }
            out.push(f(i, &p1, &p2));
        }
        out
    }
}
