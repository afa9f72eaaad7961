//! Dense univariate polynomials over a prime field `GF(p)`.
//!
//! Coefficients are stored little-endian (`coeffs[i]` multiplies `x^i`) as
//! integers in `[0, p)`. The zero polynomial is the empty slice. These
//! routines back the irreducibility test for extension-field moduli and the
//! generator-polynomial checks of cyclic code constructions.

use alloc::vec;
use alloc::vec::Vec;

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = (a as u128 + b as u128) % p as u128;
    s as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(ai, bj, p), p);
        }
    }
    trim(out)
}

/// Remainder of `a` divided by `b` (`b` nonzero).
pub(crate) fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(b[db], p);
    let mut r: Vec<u64> = a.to_vec();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mul_mod(r[dr], lead_inv, p);
        let shift = dr - db;
        for j in 0..=db {
            let sub = mul_mod(c, b[j], p);
            r[shift + j] = add_mod(r[shift + j], p - sub % p, p) % p;
        }
        r = trim(r);
    }
    trim(r)
}

pub(crate) fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    // Monic normalization so gcd comparisons are canonical.
    if let Some(d) = degree(&x) {
        let c = inv_mod(x[d], p);
        for v in x.iter_mut() {
            *v = mul_mod(*v, c, p);
        }
    }
    x
}

fn poly_mul_rem(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, p), f, p)
}

/// `base^exp mod f` by square-and-multiply.
pub(crate) fn poly_pow_rem(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut sq = poly_rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_rem(&acc, &sq, f, p);
        }
        sq = poly_mul_rem(&sq, &sq, f, p);
        exp >>= 1;
    }
    acc
}

/// Irreducibility of a monic `f` of degree `m >= 1` over `GF(p)`.
///
/// For small search spaces this trial-divides by every monic polynomial of
/// degree at most `m/2`; otherwise it runs the order test: `x^(p^m) == x`
/// modulo `f`, and `gcd(x^(p^(m/r)) - x, f) = 1` for every prime `r`
/// dividing `m`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = match degree(f) {
        Some(m) => m,
        None => return false,
    };
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    if f[0] == 0 {
        return false; // divisible by x
    }
    let half = m / 2;
    // Number of monic divisor candidates is sum_{d<=half} p^d ~ p^half.
    let candidates = checked_pow(p, half as u32);
    match candidates {
        Some(c) if c <= 4096 => trial_division_irreducible(f, p, half),
        _ => rabin_irreducible(f, p, m),
    }
}

fn checked_pow(p: u64, e: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

fn trial_division_irreducible(f: &[u64], p: u64, half: usize) -> bool {
    // Enumerate monic candidates g of degree d as integers in base p.
    for d in 1..=half {
        let count = checked_pow(p, d as u32).expect("candidate budget checked");
        for t in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut v = t;
            for c in g.iter_mut().take(d) {
                *c = v % p;
                v /= p;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn rabin_irreducible(f: &[u64], p: u64, m: usize) -> bool {
    let x = vec![0u64, 1];
    for (r, _) in crate::factor::factor_u64(m as u64) {
        let e = checked_pow(p, (m as u64 / r) as u32).expect("p^(m/r) fits: p^m does");
        let h = poly_pow_rem(&x, e, f, p);
        // gcd(h - x, f) must be constant.
        let mut diff = h;
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = add_mod(diff[1], p - 1, p);
        let diff = trim(diff);
        let g = poly_gcd(&diff, f, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    let e = checked_pow(p, m as u32).expect("q fits u64");
    let h = poly_pow_rem(&x, e, f, p);
    trim(h) == x
}
