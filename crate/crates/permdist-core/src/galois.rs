//! Exact arithmetic in `GF(p^m)`.
//!
//! Elements are encoded as integers in `[0, q)` with `q = p^m`: the value
//! `sum c_i * p^i` stands for the residue class of the polynomial
//! `sum c_i * a^i` modulo a monic irreducible of degree `m`. `0` and `1`
//! encode the additive and multiplicative identities, and for `m = 1` the
//! encoding is the usual integers-mod-`p`.
//!
//! A [`FieldSpec`] is immutable after construction and safe to share across
//! threads; all operations are pure. Fields with `q <= 2^16` carry
//! precomputed log/antilog tables, since multiplication dominates the cost
//! of row reduction.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::factor::{factor_u64, is_prime_u64};
use crate::gfpoly;

/// An element of a finite field, encoded as an integer in `[0, q)`.
///
/// The encoding is little-endian base-`p`: digit `i` is the coefficient of
/// `a^i` in the residue representative. Elements are only meaningful
/// relative to the [`FieldSpec`] that produced them.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// The characteristic is not prime.
    NonPrime(u64),
    /// The extension degree must be at least 1.
    ZeroDegree,
    /// `p^m` does not fit the supported element range (`q <= 2^63`).
    OrderOverflow { p: u64, m: u32 },
    /// The modulus vector does not have `m + 1` coefficients.
    ModulusLength { expected: usize, got: usize },
    /// A modulus coefficient lies outside `[0, p)`.
    ModulusCoefficient(u64),
    /// The modulus is not monic.
    NonMonicModulus,
    /// The modulus factors over `GF(p)`.
    ReducibleModulus,
    /// No built-in default modulus for this `(p, m)`.
    MissingDefaultModulus { p: u64, m: u32 },
    /// An element encoding outside `[0, q)`.
    ElementOutOfRange { value: u64, q: u64 },
    /// Multiplicative inverse of zero requested.
    ZeroInverse,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPrime(p) => write!(f, "{p} is not prime"),
            FieldError::ZeroDegree => write!(f, "extension degree must be >= 1"),
            FieldError::OrderOverflow { p, m } => {
                write!(f, "field order {p}^{m} exceeds the supported range")
            }
            FieldError::ModulusLength { expected, got } => {
                write!(f, "modulus must have {expected} coefficients, got {got}")
            }
            FieldError::ModulusCoefficient(c) => {
                write!(f, "modulus coefficient {c} outside [0, p)")
            }
            FieldError::NonMonicModulus => write!(f, "modulus must be monic"),
            FieldError::ReducibleModulus => write!(f, "modulus is reducible over GF(p)"),
            FieldError::MissingDefaultModulus { p, m } => {
                write!(f, "no built-in default modulus for GF({p}^{m}); supply one explicitly")
            }
            FieldError::ElementOutOfRange { value, q } => {
                write!(f, "element {value} outside [0, {q})")
            }
            FieldError::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
        }
    }
}

impl core::error::Error for FieldError {}

struct LogTables {
    /// `log[v]` = discrete log of the element encoded `v` (undefined at 0).
    log: Vec<u32>,
    /// `antilog[i]` = encoding of `g^i` for the chosen generator `g`.
    antilog: Vec<u64>,
}

/// A finite field `GF(p^m)` with an explicit irreducible modulus.
pub struct FieldSpec {
    p: u64,
    m: u32,
    q: u64,
    /// `m + 1` coefficients in `[0, p)`, little-endian, monic.
    modulus: Vec<u64>,
    /// For `p = 2`: the modulus packed as bits (bit `i` = coefficient of `x^i`).
    modulus_bits: u64,
    tables: Option<LogTables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

/// Largest supported order: element encodings must stay below `2^63` so all
/// digit arithmetic fits in `u64` without overflow.
const MAX_ORDER: u64 = 1 << 63;

/// Fields at most this large carry log/antilog tables.
const TABLE_LIMIT: u64 = 1 << 16;

fn checked_order(p: u64, m: u32) -> Option<u64> {
    let mut q: u64 = 1;
    for _ in 0..m {
        q = q.checked_mul(p)?;
    }
    (q <= MAX_ORDER).then_some(q)
}

impl FieldSpec {
    /// Builds `GF(p^m)`. With `modulus = None` the built-in default is used:
    /// the monic irreducible of degree `m` whose non-leading coefficients
    /// have the smallest integer encoding `sum c_i * p^i`. Defaults exist for
    /// `m = 1` (any prime), `p = 2` with `m <= 63`, and `p in {3, 5, 7}` with
    /// `m <= 4`.
    pub fn new(p: u64, m: u32, modulus: Option<Vec<u64>>) -> Result<Arc<FieldSpec>, FieldError> {
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NonPrime(p));
        }
        let q = checked_order(p, m).ok_or(FieldError::OrderOverflow { p, m })?;
        let modulus = match modulus {
            Some(v) => Self::validate_modulus(p, m, v)?,
            None => Self::default_modulus(p, m)?,
        };
        let modulus_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };
        let mut spec = FieldSpec {
            p,
            m,
            q,
            modulus,
            modulus_bits,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            spec.tables = Some(spec.build_tables());
        }
        Ok(Arc::new(spec))
    }

    /// Shorthand for [`FieldSpec::new`] with the default modulus.
    pub fn gf(p: u64, m: u32) -> Result<Arc<FieldSpec>, FieldError> {
        Self::new(p, m, None)
    }

    fn validate_modulus(p: u64, m: u32, v: Vec<u64>) -> Result<Vec<u64>, FieldError> {
        let expected = m as usize + 1;
        if v.len() != expected {
            return Err(FieldError::ModulusLength {
                expected,
                got: v.len(),
            });
        }
        if let Some(&c) = v.iter().find(|&&c| c >= p) {
            return Err(FieldError::ModulusCoefficient(c));
        }
        if v[m as usize] != 1 {
            return Err(FieldError::NonMonicModulus);
        }
        if m == 1 {
            // Degree-1 moduli are placeholders; arithmetic is plain mod p.
            if v != [0, 1] {
                return Err(FieldError::ReducibleModulus);
            }
            return Ok(v);
        }
        if !gfpoly::is_irreducible(&v, p) {
            return Err(FieldError::ReducibleModulus);
        }
        Ok(v)
    }

    /// The built-in default modulus for `(p, m)`: minimal integer encoding of
    /// the non-leading part, searched in increasing order.
    pub fn default_modulus(p: u64, m: u32) -> Result<Vec<u64>, FieldError> {
        if m == 1 {
            return Ok(vec![0, 1]);
        }
        let supported = (p == 2 && m <= 63) || ((p == 3 || p == 5 || p == 7) && m <= 4);
        if !supported {
            return Err(FieldError::MissingDefaultModulus { p, m });
        }
        let md = m as usize;
        let mut low: u64 = 1;
        loop {
            // Constant coefficient 0 means the candidate is divisible by x.
            if low % p != 0 {
                let mut f = vec![0u64; md + 1];
                let mut v = low;
                for c in f.iter_mut().take(md) {
                    *c = v % p;
                    v /= p;
                }
                if v == 0 {
                    f[md] = 1;
                    if gfpoly::is_irreducible(&f, p) {
                        return Ok(f);
                    }
                } else {
                    // low part no longer fits below degree m; no irreducible
                    // was found (cannot happen for the supported domain).
                    return Err(FieldError::MissingDefaultModulus { p, m });
                }
            }
            low += 1;
        }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// The field order `q = p^m`.
    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Validates an integer encoding.
    pub fn element(&self, value: u64) -> Result<FieldElement, FieldError> {
        if value < self.q {
            Ok(FieldElement(value))
        } else {
            Err(FieldError::ElementOutOfRange { value, q: self.q })
        }
    }

    #[inline]
    pub fn contains(&self, x: FieldElement) -> bool {
        x.0 < self.q
    }

    /// All `q` elements in encoding order. Intended for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(x.0 ^ y.0);
        }
        if self.m == 1 {
            return FieldElement((x.0 + y.0) % self.p);
        }
        self.digitwise(x, y, |a, b, p| (a + b) % p)
    }

    #[inline]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        if self.p == 2 {
            return x;
        }
        if self.m == 1 {
            return FieldElement(if x.0 == 0 { 0 } else { self.p - x.0 });
        }
        self.digitwise(x, FieldElement::ZERO, |a, _, p| (p - a) % p)
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(x.0 ^ y.0);
        }
        self.add(x, self.neg(y))
    }

    fn digitwise(&self, x: FieldElement, y: FieldElement, op: fn(u64, u64, u64) -> u64) -> FieldElement {
        let p = self.p;
        let (mut a, mut b) = (x.0, y.0);
        let mut out = 0u64;
        let mut place = 1u64;
        while a != 0 || b != 0 {
            out += op(a % p, b % p, p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if let Some(t) = &self.tables {
            if x.0 == 0 || y.0 == 0 {
                return FieldElement::ZERO;
            }
            let n = self.q - 1;
            let i = (t.log[x.0 as usize] as u64 + t.log[y.0 as usize] as u64) % n;
            return FieldElement(t.antilog[i as usize]);
        }
        self.mul_direct(x, y)
    }

    /// Polynomial product reduced modulo the field modulus, without tables.
    fn mul_direct(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.m == 1 {
            return FieldElement(((x.0 as u128 * y.0 as u128) % self.p as u128) as u64);
        }
        if self.p == 2 {
            let high = 1u64 << self.m;
            let mut a = x.0;
            let mut b = y.0;
            let mut acc = 0u64;
            while b != 0 {
                if b & 1 == 1 {
                    acc ^= a;
                }
                b >>= 1;
                a <<= 1;
                if a & high != 0 {
                    a ^= self.modulus_bits;
                }
            }
            return FieldElement(acc);
        }
        let p = self.p;
        let md = self.m as usize;
        let mut xa = [0u64; 64];
        let mut ya = [0u64; 64];
        let mut prod = [0u64; 128];
        let mut v = x.0;
        for d in xa.iter_mut().take(md) {
            *d = v % p;
            v /= p;
        }
        let mut v = y.0;
        for d in ya.iter_mut().take(md) {
            *d = v % p;
            v /= p;
        }
        for i in 0..md {
            if xa[i] == 0 {
                continue;
            }
            for j in 0..md {
                prod[i + j] = (prod[i + j] + xa[i] * ya[j]) % p;
            }
        }
        // Reduce degrees >= m against the monic modulus.
        for i in (md..=2 * md - 2).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..md {
                let sub = (c * self.modulus[j]) % p;
                prod[i - md + j] = (prod[i - md + j] + p - sub) % p;
            }
        }
        let mut out = 0u64;
        let mut place = 1u64;
        for &c in prod.iter().take(md) {
            out += c * place;
            place = place.saturating_mul(p);
        }
        FieldElement(out)
    }

    /// `x^e` by square-and-multiply; `pow(0, 0) = 1` by convention.
    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        if x.0 == 0 {
            return Err(FieldError::ZeroInverse);
        }
        if let Some(t) = &self.tables {
            let n = self.q - 1;
            let i = (n - t.log[x.0 as usize] as u64) % n;
            return Ok(FieldElement(t.antilog[i as usize]));
        }
        Ok(self.pow(x, self.q - 2))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// The minimal-encoding generator of the multiplicative group, found by
    /// testing candidates against the maximal-subgroup orders `(q-1)/r`.
    pub fn multiplicative_generator(&self) -> FieldElement {
        if self.q == 2 {
            return FieldElement::ONE;
        }
        let n = self.q - 1;
        let factors = factor_u64(n);
        for v in 2..self.q {
            let g = FieldElement(v);
            let is_gen = factors
                .iter()
                .all(|&(r, _)| self.pow_direct(g, n / r) != FieldElement::ONE);
            if is_gen {
                return g;
            }
        }
        unreachable!("every finite field has a multiplicative generator")
    }

    /// Power using the direct multiply path, usable while tables are absent.
    fn pow_direct(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_direct(acc, base);
            }
            base = self.mul_direct(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&self) -> LogTables {
        let n = (self.q - 1) as usize;
        let g = self.multiplicative_generator();
        let mut antilog = vec![0u64; n.max(1)];
        let mut log = vec![u32::MAX; self.q as usize];
        let mut acc = FieldElement::ONE;
        for i in 0..n.max(1) {
            antilog[i] = acc.0;
            log[acc.0 as usize] = i as u32;
            acc = self.mul_direct(acc, g);
        }
        debug_assert_eq!(acc, FieldElement::ONE, "generator order must be q - 1");
        LogTables { log, antilog }
    }
}
