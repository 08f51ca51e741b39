use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Sparse multivariate polynomial in canonical form: nonzero coefficients,
/// distinct exponent vectors, terms sorted lexicographically increasing.
/// The last term is the leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<E> {
    nvars: usize,
    coeffs: Vec<E>,
    // term i owns exps[i * nvars..(i + 1) * nvars]
    exps: Vec<u32>,
}

/// A monomial `x^e` with implicit coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Coordinatewise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }
}

impl<E: fmt::Debug> fmt::Debug for SparsePoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.coeffs.len() {
            list.entry(&(&self.coeffs[i], self.exps_of(i)));
        }
        list.finish()
    }
}

impl<E> SparsePoly<E> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &E {
        &self.coeffs[i]
    }

    pub fn exps_of(&self, i: usize) -> &[u32] {
        &self.exps[i * self.nvars..(i + 1) * self.nvars]
    }

    pub fn terms(&self) -> impl Iterator<Item = (&E, &[u32])> + '_ {
        (0..self.len()).map(move |i| (&self.coeffs[i], self.exps_of(i)))
    }
}

impl<E: Clone> SparsePoly<E> {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            coeffs: Vec::new(),
            exps: Vec::new(),
        }
    }

    /// Canonicalizes arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms<F, I>(field: &F, nvars: usize, terms: I) -> Self
    where
        F: Field<Elem = E>,
        I: IntoIterator<Item = (E, Vec<u32>)>,
    {
        let mut raw: Vec<(E, Vec<u32>)> = terms.into_iter().collect();
        for (_, e) in &raw {
            assert_eq!(e.len(), nvars, "exponent vector length must equal nvars");
        }
        raw.sort_by(|a, b| a.1.cmp(&b.1));
        let mut out = SparsePoly::zero(nvars);
        let mut iter = raw.into_iter().peekable();
        while let Some((mut c, e)) = iter.next() {
            while iter.peek().is_some_and(|(_, e2)| *e2 == e) {
                let (c2, _) = iter.next().expect("peeked");
                c = field.add(&c, &c2);
            }
            if !field.is_zero(&c) {
                out.coeffs.push(c);
                out.exps.extend_from_slice(&e);
            }
        }
        out
    }

    /// Builds from integer coefficients reduced into the field.
    pub fn from_u64_terms<F: Field<Elem = E>>(
        field: &F,
        nvars: usize,
        terms: &[(u64, Vec<u32>)],
    ) -> Self {
        Self::from_terms(
            field,
            nvars,
            terms.iter().map(|(c, e)| (field.from_u64(*c), e.clone())),
        )
    }

    /// Constant polynomial.
    pub fn constant<F: Field<Elem = E>>(field: &F, nvars: usize, c: E) -> Self {
        Self::from_terms(field, nvars, [(c, vec![0; nvars])])
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, c: E, m: &Monomial) -> Self {
        Self::from_terms(field, m.0.len(), [(c, m.0.clone())])
    }

    // Caller guarantees canonical order and nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(nvars: usize, coeffs: Vec<E>, exps: Vec<u32>) -> Self {
        debug_assert_eq!(coeffs.len() * nvars, exps.len());
        SparsePoly {
            nvars,
            coeffs,
            exps,
        }
    }

    /// Coefficient of the lexicographically greatest term.
    pub fn leading_coeff(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn total_degree(&self) -> u64 {
        (0..self.len())
            .map(|i| self.exps_of(i).iter().map(|&e| e as u64).sum())
            .max()
            .unwrap_or(0)
    }

    /// Largest exponent of any single variable.
    pub fn max_partial_degree(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    pub fn partial_degree(&self, var: usize) -> u32 {
        (0..self.len())
            .map(|i| self.exps_of(i)[var])
            .max()
            .unwrap_or(0)
    }

    pub fn coeff_of(&self, e: &[u32]) -> Option<&E> {
        let idx = self.search(e).ok()?;
        Some(&self.coeffs[idx])
    }

    fn search(&self, e: &[u32]) -> std::result::Result<usize, usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.exps_of(mid).cmp(e) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Ok(mid),
            }
        }
        Err(lo)
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, point: &[E]) -> E {
        assert_eq!(point.len(), self.nvars);
        self.terms().fold(field.zero(), |acc, (c, e)| {
            let m = e.iter().zip(point).fold(c.clone(), |m, (&k, x)| {
                field.mul(&m, &field.pow(x, k as u64))
            });
            field.add(&acc, &m)
        })
    }

    /// Divides by the leading coefficient so the lex-greatest term has coefficient 1.
    pub fn lex_monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        let Some(lc) = self.leading_coeff() else {
            return self.clone();
        };
        let li = field.inv(lc).expect("leading coefficient is nonzero");
        self.scale(field, &li)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Self::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|x| field.mul(x, c)).collect(),
            exps: self.exps.clone(),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        Self::from_terms(
            field,
            self.nvars,
            self.terms()
                .chain(other.terms())
                .map(|(c, e)| (c.clone(), e.to_vec())),
        )
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        SparsePoly {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect(),
            exps: self.exps.clone(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add(field, &other.neg(field))
    }

    /// Product with a monomial (order preserving).
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        assert_eq!(m.0.len(), self.nvars);
        let mut exps = self.exps.clone();
        for chunk in exps.chunks_mut(self.nvars.max(1)) {
            for (e, k) in chunk.iter_mut().zip(&m.0) {
                *e += k;
            }
        }
        SparsePoly {
            nvars: self.nvars,
            coeffs: self.coeffs.clone(),
            exps,
        }
    }

    /// Re-expresses the coefficients in another field (e.g. an extension).
    pub fn map_coeffs<G: Field>(
        &self,
        target: &G,
        f: impl Fn(&E) -> G::Elem,
    ) -> SparsePoly<G::Elem> {
        SparsePoly::from_terms(
            target,
            self.nvars,
            self.terms().map(|(c, e)| (f(c), e.to_vec())),
        )
    }
}

/// Coordinatewise minimum of the exponent vectors.
pub fn monomial_content<E: Clone>(f: &SparsePoly<E>) -> Result<Monomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut m = f.exps_of(0).to_vec();
    for i in 1..f.len() {
        for (a, &b) in m.iter_mut().zip(f.exps_of(i)) {
            *a = (*a).min(b);
        }
    }
    Ok(Monomial(m))
}

/// `f` divided by its monomial content.
pub fn monomial_primitive<E: Clone>(f: &SparsePoly<E>) -> Result<SparsePoly<E>> {
    let m = monomial_content(f)?;
    let n = f.nvars();
    let mut exps = f.exps.clone();
    for chunk in exps.chunks_mut(n.max(1)) {
        for (e, k) in chunk.iter_mut().zip(&m.0) {
            *e -= k;
        }
    }
    Ok(SparsePoly {
        nvars: n,
        coeffs: f.coeffs.clone(),
        exps,
    })
}
