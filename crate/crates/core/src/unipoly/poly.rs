use crate::error::{Error, Result};
use crate::field::Field;

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> UniPoly<E> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs<F: Field<Elem = E>>(field: &F, mut coeffs: Vec<E>) -> Self {
        trim(field, &mut coeffs);
        UniPoly { coeffs }
    }

    pub fn from_u64<F: Field<Elem = E>>(field: &F, coeffs: &[u64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_u64(c)).collect())
    }

    /// `∏ (z - r)` over the given roots.
    pub fn from_roots<F: Field<Elem = E>>(field: &F, roots: &[E]) -> Self {
        let mut acc = vec![field.one()];
        for r in roots {
            acc = mul_naive(field, &acc, &[field.neg(r), field.one()]);
        }
        Self::from_coeffs(field, acc)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, x: &E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        UniPoly {
            coeffs: make_monic(field, self.coeffs.clone()),
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(field, field.poly_mul(&self.coeffs, &other.coeffs))
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divrem<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<(Self, Self)> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = super::gcd::divrem(field, &self.coeffs, &other.coeffs);
        Ok((UniPoly { coeffs: q }, UniPoly { coeffs: r }))
    }
}

pub(crate) fn trim<F: Field>(field: &F, v: &mut Vec<F::Elem>) {
    while v.last().is_some_and(|c| field.is_zero(c)) {
        v.pop();
    }
}

pub(crate) fn deg<E>(v: &[E]) -> isize {
    v.len() as isize - 1
}

pub(crate) fn make_monic<F: Field>(field: &F, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
    trim(field, &mut v);
    if let Some(lc) = v.last() {
        if !field.is_one(lc) {
            let li = field.inv(lc).expect("nonzero leading coefficient");
            for c in v.iter_mut() {
                *c = field.mul(c, &li);
            }
        }
    }
    v
}

pub(crate) fn mul_naive<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    out
}

pub(crate) fn add<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => field.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(field, &mut out);
    out
}

pub(crate) fn sub<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => field.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => field.neg(y),
            (None, None) => unreachable!(),
        });
    }
    trim(field, &mut out);
    out
}

pub(crate) fn mul<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = field.poly_mul(a, b);
    trim(field, &mut out);
    out
}
