//! Small dense polynomial helpers over a prime field, used to build and
//! test extension moduli. Coefficients run low to high.

use super::PrimeField;

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn mul(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add_mod(out[i + j], f.mul_mod(x, y));
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            f.sub_mod(x, y)
        })
        .collect();
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a nonzero `m`.
pub(crate) fn rem(f: &PrimeField, a: &[u64], m: &[u64]) -> Vec<u64> {
    let dm = degree(m).expect("modulus must be nonzero");
    let mut r = a.to_vec();
    trim(&mut r);
    let lead_inv = f.inv_mod(m[dm]).expect("nonzero leading coefficient");
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let q = f.mul_mod(r[dr], lead_inv);
        let shift = dr - dm;
        for (i, &mc) in m[..=dm].iter().enumerate() {
            r[shift + i] = f.sub_mod(r[shift + i], f.mul_mod(q, mc));
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mulmod(f: &PrimeField, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    rem(f, &mul(f, a, b), m)
}

pub(crate) fn powmod(f: &PrimeField, a: &[u64], mut e: u128, m: &[u64]) -> Vec<u64> {
    let mut base = rem(f, a, m);
    let mut acc = rem(f, &[1], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(f, &base, &base, m);
        }
    }
    acc
}

pub(crate) fn gcd(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let li = f.inv_mod(x[d]).unwrap();
        for c in x.iter_mut() {
            *c = f.mul_mod(*c, li);
        }
    }
    x
}

/// Inverse of `a` modulo `m` (extended Euclid); `None` when not coprime.
pub(crate) fn invmod(f: &PrimeField, a: &[u64], m: &[u64]) -> Option<Vec<u64>> {
    let mut r0 = m.to_vec();
    let mut r1 = rem(f, a, m);
    let mut t0: Vec<u64> = Vec::new();
    let mut t1: Vec<u64> = vec![1];
    trim(&mut r0);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let li = f.inv_mod(r0[0]).unwrap();
    let out: Vec<u64> = t0.iter().map(|&c| f.mul_mod(c, li)).collect();
    Some(rem(f, &out, m))
}

pub(crate) fn divrem(f: &PrimeField, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("divisor must be nonzero");
    let mut r = a.to_vec();
    trim(&mut r);
    let da = match degree(&r) {
        Some(d) if d >= db => d,
        _ => return (Vec::new(), r),
    };
    let mut q = vec![0u64; da - db + 1];
    let li = f.inv_mod(b[db]).unwrap();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul_mod(r[dr], li);
        let shift = dr - db;
        q[shift] = c;
        for (i, &bc) in b[..=db].iter().enumerate() {
            r[shift + i] = f.sub_mod(r[shift + i], f.mul_mod(c, bc));
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}
