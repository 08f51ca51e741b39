//! Polynomial multiplication: schoolbook, Karatsuba over any field, and a
//! three-prime NTT with CRT reconstruction for prime fields below 2^31.

use super::poly::mul_naive;
use crate::field::{Field, PrimeField};

const KARATSUBA_CUTOFF: usize = 32;
const NTT_CUTOFF: usize = 96;

/// Full-length product (`a.len() + b.len() - 1` entries, not trimmed).
pub fn karatsuba<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    karatsuba_into(field, a, b, &mut out);
    out
}

fn add_into<F: Field>(field: &F, dst: &mut [F::Elem], src: &[F::Elem]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = field.add(d, s);
    }
}

fn sub_into<F: Field>(field: &F, dst: &mut [F::Elem], src: &[F::Elem]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = field.sub(d, s);
    }
}

// out += a * b; out.len() >= a.len() + b.len() - 1
fn karatsuba_into<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem], out: &mut [F::Elem]) {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.is_empty() {
        return;
    }
    if b.len() < KARATSUBA_CUTOFF {
        let prod = mul_naive(field, a, b);
        add_into(field, out, &prod);
        return;
    }
    let h = a.len().div_ceil(2);
    if b.len() <= h {
        // unbalanced: split only the longer operand
        karatsuba_into(field, &a[..h], b, out);
        karatsuba_into(field, &a[h..], b, &mut out[h..]);
        return;
    }
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let mut z0 = vec![field.zero(); a0.len() + b0.len() - 1];
    karatsuba_into(field, a0, b0, &mut z0);
    let mut z2 = vec![field.zero(); a1.len() + b1.len() - 1];
    karatsuba_into(field, a1, b1, &mut z2);
    let mut sa = a0.to_vec();
    add_into(field, &mut sa, a1);
    let mut sb = b0.to_vec();
    add_into(field, &mut sb, b1);
    let mut z1 = vec![field.zero(); sa.len() + sb.len() - 1];
    karatsuba_into(field, &sa, &sb, &mut z1);
    sub_into(field, &mut z1, &z0);
    sub_into(field, &mut z1, &z2);
    add_into(field, out, &z0);
    add_into(field, &mut out[h..], &z1);
    add_into(field, &mut out[2 * h..], &z2);
}

/// Prime-field product dispatching on size and modulus width.
pub fn mul_prime(field: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < NTT_CUTOFF || field.modulus() >= (1 << 31) {
        return karatsuba(field, a, b);
    }
    mul_ntt_crt(field, a, b)
}

const P1: u64 = 998_244_353;
const P2: u64 = 167_772_161;
const P3: u64 = 469_762_049;

const fn pow_const(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn ntt<const P: u64>(a: &mut [u64], invert: bool) {
    const G: u64 = 3;
    let n = a.len();
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j ^= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let mut w = pow_const(G, (P - 1) / len as u64, P);
        if invert {
            w = pow_const(w, P - 2, P);
        }
        let half = len / 2;
        let mut twiddles = Vec::with_capacity(half);
        let mut t = 1u64;
        for _ in 0..half {
            twiddles.push(t);
            t = t * w % P;
        }
        for chunk in a.chunks_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for ((u, v), &tw) in lo.iter_mut().zip(hi.iter_mut()).zip(&twiddles) {
                let x = *u;
                let y = *v * tw % P;
                *u = if x + y >= P { x + y - P } else { x + y };
                *v = if x >= y { x - y } else { x + P - y };
            }
        }
        len <<= 1;
    }
    if invert {
        let ni = pow_const(n as u64, P - 2, P);
        for x in a.iter_mut() {
            *x = *x * ni % P;
        }
    }
}

fn convolve<const P: u64>(a: &[u64], b: &[u64], size: usize) -> Vec<u64> {
    let mut fa = vec![0u64; size];
    let mut fb = vec![0u64; size];
    for (d, &s) in fa.iter_mut().zip(a) {
        *d = s % P;
    }
    for (d, &s) in fb.iter_mut().zip(b) {
        *d = s % P;
    }
    ntt::<P>(&mut fa, false);
    ntt::<P>(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x = *x * y % P;
    }
    ntt::<P>(&mut fa, true);
    fa
}

// Exact coefficients are below len * p^2 < 2^85 <= P1 * P2 * P3 for p < 2^31
// and len <= 2^23.
fn mul_ntt_crt(field: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len() + b.len() - 1;
    let size = n.next_power_of_two();
    assert!(size <= 1 << 23, "product too long for the NTT primes");
    let (r1, (r2, r3)) = rayon::join(
        || convolve::<P1>(a, b, size),
        || rayon::join(|| convolve::<P2>(a, b, size), || convolve::<P3>(a, b, size)),
    );
    const INV_P1_MOD_P2: u64 = pow_const(P1, P2 - 2, P2);
    const P1P2_MOD_P3: u64 = (P1 % P3) * (P2 % P3) % P3;
    const INV_P1P2_MOD_P3: u64 = pow_const(P1P2_MOD_P3, P3 - 2, P3);
    let p = field.modulus() as u128;
    let p1_mod = P1 as u128 % p;
    let p1p2_mod = (P1 as u128 * P2 as u128) % p;
    (0..n)
        .map(|i| {
            let x1 = r1[i];
            let t2 = ((r2[i] + P2 - x1 % P2) % P2) * INV_P1_MOD_P2 % P2;
            // x1 + P1 * t2 reduced mod P3
            let partial = (x1 % P3 + (P1 % P3) * t2 % P3) % P3;
            let t3 = ((r3[i] + P3 - partial) % P3) * INV_P1P2_MOD_P3 % P3;
            ((x1 as u128 + p1_mod * t2 as u128 + p1p2_mod * t3 as u128) % p) as u64
        })
        .collect()
}
