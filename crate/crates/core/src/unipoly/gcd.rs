//! Division with remainder and monic GCDs: the classical Euclidean algorithm
//! and a half-GCD for large degrees.

use super::poly::{deg, make_monic, mul, mul_naive, sub, trim, UniPoly};
use crate::field::Field;

const NEWTON_CUTOFF: usize = 64;
const HGCD_BASE: isize = 96;
const FAST_GCD_CUTOFF: usize = 160;

fn divrem_schoolbook<F: Field>(
    field: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    trim(field, &mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let li = field.inv(&b[db]).expect("nonzero leading coefficient");
    let mut q = vec![field.zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        if field.is_zero(&r[i]) {
            continue;
        }
        let c = field.mul(&r[i], &li);
        let shift = i - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = field.sub(&r[shift + j], &field.mul(&c, bc));
        }
        q[shift] = c;
    }
    r.truncate(db);
    trim(field, &mut r);
    trim(field, &mut q);
    (q, r)
}

/// Power series inverse of `h` (with `h[0] != 0`) modulo `x^n`.
pub(crate) fn series_inverse<F: Field>(field: &F, h: &[F::Elem], n: usize) -> Vec<F::Elem> {
    let mut g = vec![field.inv(&h[0]).expect("unit constant term")];
    let mut len = 1;
    while len < n {
        len = (2 * len).min(n);
        let hh: Vec<F::Elem> = h.iter().take(len).cloned().collect();
        // g <- g * (2 - h g) mod x^len
        let mut e = mul(field, &hh, &g);
        e.resize(len, field.zero());
        for c in e.iter_mut() {
            *c = field.neg(c);
        }
        e[0] = field.add(&e[0], &field.from_u64(2));
        let mut next = mul(field, &g, &e);
        next.resize(len, field.zero());
        g = next;
    }
    g.truncate(n);
    g
}

/// Quotient and remainder of `a` by a nonzero, trimmed `b`.
pub(crate) fn divrem<F: Field>(
    field: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let mut a = a.to_vec();
    trim(field, &mut a);
    let mut b = b.to_vec();
    trim(field, &mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a);
    }
    let qlen = a.len() - b.len() + 1;
    if qlen < NEWTON_CUTOFF || b.len() < NEWTON_CUTOFF {
        return divrem_schoolbook(field, &a, &b);
    }
    // reversed quotient = rev(a) / rev(b) mod x^qlen
    let ra: Vec<F::Elem> = a.iter().rev().take(qlen).cloned().collect();
    let rb: Vec<F::Elem> = b.iter().rev().take(qlen).cloned().collect();
    let inv = series_inverse(field, &rb, qlen);
    let mut rq = mul(field, &ra, &inv);
    rq.resize(qlen, field.zero());
    rq.reverse();
    let mut q = rq;
    trim(field, &mut q);
    let r = sub(field, &a, &mul(field, &q, &b));
    debug_assert!(r.len() < b.len());
    (q, r)
}

/// Classical Euclid with leading-coefficient normalization. `gcd(0, 0) = 0`.
pub fn monic_gcd<F: Field>(
    field: &F,
    u: &UniPoly<F::Elem>,
    v: &UniPoly<F::Elem>,
) -> UniPoly<F::Elem> {
    UniPoly::from_coeffs(
        field,
        euclid(field, u.coeffs().to_vec(), v.coeffs().to_vec()),
    )
}

fn euclid<F: Field>(field: &F, a: Vec<F::Elem>, b: Vec<F::Elem>) -> Vec<F::Elem> {
    let mut x = make_monic(field, a);
    let mut y = make_monic(field, b);
    while !y.is_empty() {
        let (_, r) = divrem_schoolbook(field, &x, &y);
        x = y;
        y = make_monic(field, r);
    }
    x
}

/// Monic GCD, switching to the half-GCD when both inputs are large.
pub fn gcd<F: Field>(field: &F, u: &UniPoly<F::Elem>, v: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
    if u.coeffs().len().min(v.coeffs().len()) < FAST_GCD_CUTOFF {
        return monic_gcd(field, u, v);
    }
    fast_gcd(field, u, v)
}

// 2x2 polynomial matrix acting on column vectors (a, b)
struct Mat<E> {
    m: [[Vec<E>; 2]; 2],
}

impl<E: Clone> Mat<E> {
    fn identity<F: Field<Elem = E>>(field: &F) -> Self {
        Mat {
            m: [
                [vec![field.one()], Vec::new()],
                [Vec::new(), vec![field.one()]],
            ],
        }
    }

    // [[0, 1], [1, -q]]
    fn quotient<F: Field<Elem = E>>(field: &F, q: &[E]) -> Self {
        let negq: Vec<E> = q.iter().map(|c| field.neg(c)).collect();
        Mat {
            m: [[Vec::new(), vec![field.one()]], [vec![field.one()], negq]],
        }
    }

    fn apply<F: Field<Elem = E>>(&self, field: &F, a: &[E], b: &[E]) -> (Vec<E>, Vec<E>) {
        let x = super::poly::add(
            field,
            &mul(field, &self.m[0][0], a),
            &mul(field, &self.m[0][1], b),
        );
        let y = super::poly::add(
            field,
            &mul(field, &self.m[1][0], a),
            &mul(field, &self.m[1][1], b),
        );
        (x, y)
    }

    // self * rhs
    fn compose<F: Field<Elem = E>>(&self, field: &F, rhs: &Mat<E>) -> Mat<E> {
        let entry = |i: usize, j: usize| {
            super::poly::add(
                field,
                &mul(field, &self.m[i][0], &rhs.m[0][j]),
                &mul(field, &self.m[i][1], &rhs.m[1][j]),
            )
        };
        Mat {
            m: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]],
        }
    }
}

fn shift_down<E: Clone>(a: &[E], k: usize) -> Vec<E> {
    if k >= a.len() {
        Vec::new()
    } else {
        a[k..].to_vec()
    }
}

/// Matrix of the remainder sequence of `(a, b)` up to the first remainder of
/// degree below `ceil(deg a / 2)`. Requires `deg a > deg b` or `b = 0`.
fn half_gcd<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Mat<F::Elem> {
    let da = deg(a);
    let m = (da + 1) / 2;
    if deg(b) < m {
        return Mat::identity(field);
    }
    if da < HGCD_BASE {
        let mut mat = Mat::identity(field);
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        while deg(&y) >= m {
            let (q, r) = divrem_schoolbook(field, &x, &y);
            // rows (r0, r1) -> (r1, r0 - q r1)
            mat = Mat {
                m: [
                    [mat.m[1][0].clone(), mat.m[1][1].clone()],
                    [
                        sub(field, &mat.m[0][0], &mul_naive(field, &q, &mat.m[1][0])),
                        sub(field, &mat.m[0][1], &mul_naive(field, &q, &mat.m[1][1])),
                    ],
                ],
            };
            for row in mat.m.iter_mut() {
                for e in row.iter_mut() {
                    trim(field, e);
                }
            }
            x = y;
            y = r;
        }
        return mat;
    }
    let mu = m as usize;
    let r = half_gcd(field, &shift_down(a, mu), &shift_down(b, mu));
    let (a1, b1) = r.apply(field, a, b);
    if deg(&b1) < m {
        return r;
    }
    let (q, rem) = divrem(field, &a1, &b1);
    let step = Mat::quotient(field, &q).compose(field, &r);
    let (a2, b2) = (b1, rem);
    if deg(&b2) < m {
        return step;
    }
    let k = (2 * m - deg(&a2)).max(0) as usize;
    let s = half_gcd(field, &shift_down(&a2, k), &shift_down(&b2, k));
    s.compose(field, &step)
}

fn fast_gcd<F: Field>(field: &F, u: &UniPoly<F::Elem>, v: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
    let (mut a, mut b) = (u.coeffs().to_vec(), v.coeffs().to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if !b.is_empty() && a.len() == b.len() {
        let (_, r) = divrem(field, &a, &b);
        a = std::mem::replace(&mut b, r);
    }
    loop {
        if b.is_empty() {
            return UniPoly::from_coeffs(field, make_monic(field, a));
        }
        if (a.len() as isize) < HGCD_BASE * 2 {
            return UniPoly::from_coeffs(field, euclid(field, a, b));
        }
        let mat = half_gcd(field, &a, &b);
        let (x, y) = mat.apply(field, &a, &b);
        a = x;
        b = y;
        if b.is_empty() {
            continue;
        }
        let (_, r) = divrem(field, &a, &b);
        a = std::mem::replace(&mut b, r);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExtField, PrimeField};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_poly(rng: &mut ChaCha8Rng, p: u64, len: usize) -> Vec<u64> {
        let mut v: Vec<u64> = (0..len).map(|_| rng.gen_range(0..p)).collect();
        if let Some(last) = v.last_mut() {
            *last = rng.gen_range(1..p);
        }
        v
    }

    #[test]
    fn small_examples() {
        let f = PrimeField::new(7).unwrap();
        // y^2 - 1 and y - 1
        let u = UniPoly::from_u64(&f, &[6, 0, 1]);
        let v = UniPoly::from_u64(&f, &[6, 1]);
        assert_eq!(monic_gcd(&f, &u, &v).coeffs(), &[6, 1]);
        let w = UniPoly::from_u64(&f, &[3, 0, 2]);
        assert_eq!(monic_gcd(&f, &w, &UniPoly::zero()), w.monic(&f));
        assert!(monic_gcd(&f, &UniPoly::zero(), &UniPoly::zero()).is_zero());
    }

    #[test]
    fn coprime_irreducibles() {
        let f = PrimeField::new(7).unwrap();
        // z^2 + 1 and z^2 + 2 are distinct irreducibles mod 7
        assert!(crate::field::is_irreducible(&f, &[1, 0, 1]));
        assert!(crate::field::is_irreducible(&f, &[2, 0, 1]));
        let a = UniPoly::from_u64(&f, &[1, 0, 1]);
        let b = UniPoly::from_u64(&f, &[2, 0, 1]);
        let u = a.mul(&f, &UniPoly::from_u64(&f, &[3, 1]));
        let v = b.mul(&f, &UniPoly::from_u64(&f, &[4, 1]));
        assert_eq!(monic_gcd(&f, &u, &v).coeffs(), &[1]);
    }

    #[test]
    fn newton_division_matches_schoolbook() {
        let f = PrimeField::new(10_000_019).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &(la, lb) in &[(500, 100), (1000, 200), (300, 299), (2000, 70)] {
            let a = random_poly(&mut rng, f.modulus(), la);
            let b = random_poly(&mut rng, f.modulus(), lb);
            assert_eq!(divrem(&f, &a, &b), divrem_schoolbook(&f, &a, &b));
        }
    }

    #[test]
    fn half_gcd_matches_classical() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for p in [10_000_019u64, 101, 7] {
            let f = PrimeField::new(p).unwrap();
            for &(lg, la, lb) in &[
                (1, 400, 380),
                (50, 300, 500),
                (200, 200, 350),
                (300, 1, 1),
                (120, 700, 700),
            ] {
                let g = UniPoly::from_coeffs(&f, random_poly(&mut rng, p, lg));
                let a = UniPoly::from_coeffs(&f, random_poly(&mut rng, p, la)).mul(&f, &g);
                let b = UniPoly::from_coeffs(&f, random_poly(&mut rng, p, lb)).mul(&f, &g);
                let slow = monic_gcd(&f, &a, &b);
                let fast = fast_gcd(&f, &a, &b);
                assert_eq!(fast, slow, "p={p} sizes={lg},{la},{lb}");
                assert!(slow.degree().unwrap() >= g.degree().unwrap());
            }
        }
    }

    #[test]
    fn half_gcd_over_extension() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let f = ExtField::random(PrimeField::new(7).unwrap(), 3, &mut rng);
        let rand_poly = |rng: &mut ChaCha8Rng, n: usize| {
            let mut v: Vec<_> = (0..n).map(|_| f.random(rng)).collect();
            v.push(f.one());
            UniPoly::from_coeffs(&f, v)
        };
        let g = rand_poly(&mut rng, 60);
        let a = rand_poly(&mut rng, 250).mul(&f, &g);
        let b = rand_poly(&mut rng, 240).mul(&f, &g);
        assert_eq!(fast_gcd(&f, &a, &b), monic_gcd(&f, &a, &b));
    }

    #[test]
    fn gcd_scaling_property() {
        // gcd(u w, v w) = monic(w) gcd(u, v)
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..20 {
            let u = UniPoly::from_coeffs(&f, random_poly(&mut rng, 101, 8));
            let v = UniPoly::from_coeffs(&f, random_poly(&mut rng, 101, 6));
            let w = UniPoly::from_coeffs(&f, random_poly(&mut rng, 101, 5));
            let lhs = monic_gcd(&f, &u.mul(&f, &w), &v.mul(&f, &w));
            let rhs = w.monic(&f).mul(&f, &monic_gcd(&f, &u, &v));
            assert_eq!(lhs, rhs);
        }
    }
}
