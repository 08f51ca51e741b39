//! Integer factorization for group orders `p^k - 1`: trial division followed
//! by Brent's variant of Pollard rho, both under an explicit budget.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct FactorBudget {
    pub trial_limit: u64,
    /// Iterations allowed per rho attempt.
    pub rho_iterations: u64,
    pub rho_attempts: u32,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_limit: 1_000_000,
            rho_iterations: 1 << 22,
            rho_attempts: 16,
        }
    }
}

fn mul_mod(a: u128, b: u128, n: u128) -> u128 {
    if n <= u64::MAX as u128 {
        return (a * b) % n;
    }
    // shift-and-add; only reached for moduli above 2^64
    let (mut a, mut b) = (a % n, b % n);
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, n);
        }
        a = add_mod(a, a, n);
        b >>= 1;
    }
    acc
}

fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    if a >= n - b {
        a - (n - b)
    } else {
        a + b
    }
}

fn pow_mod(mut a: u128, mut e: u128, n: u128) -> u128 {
    let mut acc = 1 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, n);
        }
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Miller-Rabin; deterministic below 2^64.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u128; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n == b {
            return true;
        }
        if n.is_multiple_of(b) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors of a small integer by trial division.
pub fn small_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn rho(n: u128, c: u128, budget: &FactorBudget) -> Option<u128> {
    let f = |x: u128| add_mod(mul_mod(x, x, n), c, n);
    let (mut y, mut r, mut q) = (2u128, 1u64, 1u128);
    let mut g = 1u128;
    let mut x = y;
    let mut ys = y;
    let mut spent = 0u64;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        spent += r;
        if spent > budget.rho_iterations {
            return None;
        }
        r *= 2;
    }
    if g == n {
        // backtrack one step at a time
        loop {
            ys = f(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn split_into(n: u128, budget: &FactorBudget, out: &mut Vec<u128>, original: u128) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime(n) {
        out.push(n);
        return Ok(());
    }
    for c in 1..=budget.rho_attempts as u128 {
        if let Some(d) = rho(n, c, budget) {
            split_into(d, budget, out, original)?;
            split_into(n / d, budget, out, original)?;
            return Ok(());
        }
    }
    Err(Error::FactorizationBudgetExceeded(original))
}

/// Distinct prime factors of `n >= 1`, ascending.
pub fn prime_factors(n: u128, budget: &FactorBudget) -> Result<Vec<u128>> {
    let original = n;
    let mut n = n;
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d <= budget.trial_limit as u128 && d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        split_into(n, budget, &mut out, original)?;
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
