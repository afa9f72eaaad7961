//! Integer primality and factorization helpers for `u64`.
//!
//! Used when validating field characteristics and when searching for
//! multiplicative generators (which needs the prime factors of `q - 1`).

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for `u64` (the first twelve primes are a
/// sufficient witness set for all 64-bit integers).
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

/// Pollard's rho (Brent variant) with deterministic parameter sweep.
/// `n` must be odd, composite and > 1.
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Prime factorization of `n` as `(prime, multiplicity)` pairs sorted by
/// prime. `n = 0` and `n = 1` yield an empty list.
pub(crate) fn factor_u64(mut n: u64) -> alloc::vec::Vec<(u64, u32)> {
    let mut out = alloc::vec::Vec::new();
    if n < 2 {
        return out;
    }
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    // Wheel over 6k ± 1 up to a fixed trial bound, then rho for the rest.
    let mut p = 7u64;
    while p <= 1_000_000 && p.saturating_mul(p) <= n {
        for q in [p, p + 4] {
            let mut e = 0;
            while n % q == 0 {
                n /= q;
                e += 1;
            }
            if e > 0 {
                out.push((q, e));
            }
        }
        p += 6;
    }
    let mut stack = alloc::vec::Vec::new();
    if n > 1 {
        stack.push(n);
    }
    while let Some(m) = stack.pop() {
        if is_prime_u64(m) {
            match out.iter_mut().find(|(q, _)| *q == m) {
                Some((_, e)) => *e += 1,
                None => out.push((m, 1)),
            }
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                79, 83, 89, 97
            ]
        );
    }

    #[test]
    fn primality_large() {
        assert!(is_prime_u64(2u64.pow(61) - 1));
        assert!(!is_prime_u64(2u64.pow(37) - 1));
        assert!(is_prime_u64(616_318_177));
        assert!(is_prime_u64(223));
    }

    #[test]
    fn factor_mersenne_37() {
        // 2^37 - 1 = 223 * 616318177, both prime.
        assert_eq!(factor_u64(2u64.pow(37) - 1), vec![(223, 1), (616_318_177, 1)]);
    }

    #[test]
    fn factor_roundtrip() {
        for n in [1u64, 2, 12, 360, 1024, 104729 * 104729, 999_999_937] {
            let f = factor_u64(n);
            let back: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            if n >= 2 {
                assert_eq!(back, n);
                assert!(f.iter().all(|&(p, _)| is_prime_u64(p)));
            } else {
                assert!(f.is_empty());
            }
        }
    }
}
