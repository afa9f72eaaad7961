//! Code constructions used by tests and experiments: a fixed `[6,3]` sample
//! over `GF(8)`, repetition and random codes, and binary quadratic residue
//! cyclic codes.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::code::{CodeError, LinearCode};
use crate::factor::is_prime_u64;
use crate::galois::{FieldElement, FieldSpec};
use crate::gfpoly;
use crate::matgf::MatrixGF;
use crate::rng::{RngCore, StreamExt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    NotOddPrime(u64),
    /// 2 must be a quadratic residue mod p (p = ±1 mod 8).
    TwoNotQuadraticResidue(u64),
    /// The splitting field `GF(2^m)` with `m = ord_p(2)` exceeds the
    /// supported element range.
    FieldTooLarge { p: u64, m: u64 },
    /// Base not coprime to the modulus in a coset computation.
    NotCoprime { base: u64, p: u64 },
    /// `1 <= k < n` violated.
    BadDimensions { n: usize, k: usize },
    /// Random sampling failed to reach full rank within the retry bound.
    ResamplingFailed,
    /// A verified construction invariant failed; indicates a bug.
    InternalCheck(&'static str),
    Code(CodeError),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
            ConstructionError::TwoNotQuadraticResidue(p) => {
                write!(f, "2 is not a quadratic residue mod {p} (need p = ±1 mod 8)")
            }
            ConstructionError::FieldTooLarge { p, m } => {
                write!(f, "splitting field GF(2^{m}) for p={p} is out of range")
            }
            ConstructionError::NotCoprime { base, p } => {
                write!(f, "base {base} is not coprime to {p}")
            }
            ConstructionError::BadDimensions { n, k } => {
                write!(f, "invalid dimensions k={k}, n={n}")
            }
            ConstructionError::ResamplingFailed => {
                write!(f, "failed to sample a full-rank matrix in 100 attempts")
            }
            ConstructionError::InternalCheck(what) => {
                write!(f, "internal construction check failed: {what}")
            }
            ConstructionError::Code(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<CodeError> for ConstructionError {
    fn from(e: CodeError) -> Self {
        ConstructionError::Code(e)
    }
}

/// A fixed `[6,3]` code over `GF(8)` (modulus `x^3 + x + 1`, `a = 2`), used
/// as a small demonstration fixture throughout the test suite. Entries are
/// powers of `a`:
///
/// ```text
/// a^5  0    a^5  a^6  a    0
/// a^4  a    1    0    a    a^2
/// a^5  a^4  a^6  a^4  a^2  1
/// ```
pub fn f8_demo_code() -> LinearCode {
    let f = FieldSpec::gf(2, 3).expect("GF(8) always constructible");
    let g = MatrixGF::from_values(
        f,
        3,
        6,
        &[
            7, 0, 7, 5, 2, 0, //
            6, 2, 1, 0, 2, 4, //
            7, 6, 5, 6, 4, 1,
        ],
    )
    .expect("fixture entries are valid");
    LinearCode::new(g).expect("fixture has full rank")
}

/// The `[n, 1]` repetition code: a single all-ones row.
pub fn repetition_code(field: Arc<FieldSpec>, n: usize) -> Result<LinearCode, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::BadDimensions { n, k: 1 });
    }
    let g = MatrixGF::from_values(field, 1, n, &vec![1u64; n]).expect("all-ones row is valid");
    Ok(LinearCode::new(g)?)
}

/// A uniformly random `[n, k]` code: entries are resampled until the matrix
/// has full rank (at most 100 attempts).
pub fn random_code<R: RngCore + ?Sized>(
    rng: &mut R,
    field: Arc<FieldSpec>,
    n: usize,
    k: usize,
) -> Result<LinearCode, ConstructionError> {
    if k == 0 || k >= n {
        return Err(ConstructionError::BadDimensions { n, k });
    }
    let q = field.q();
    for _ in 0..100 {
        let vals: Vec<u64> = (0..k * n).map(|_| rng.next_below(q)).collect();
        let g = MatrixGF::from_values(Arc::clone(&field), k, n, &vals)
            .expect("sampled entries lie in the field");
        match LinearCode::new(g) {
            Ok(code) => return Ok(code),
            Err(CodeError::RankDeficient { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(ConstructionError::ResamplingFailed)
}

/// Partition of `{1, .., p-1}` into orbits under multiplication by `base`
/// mod `p`. Cosets are ordered by smallest element; each coset lists its
/// orbit starting from that representative.
pub fn cyclotomic_cosets(p: u64, base: u64) -> Result<Vec<Vec<u64>>, ConstructionError> {
    if p < 3 || !is_prime_u64(p) {
        return Err(ConstructionError::NotOddPrime(p));
    }
    if base % p == 0 {
        return Err(ConstructionError::NotCoprime { base, p });
    }
    let b = base % p;
    let mut seen = vec![false; p as usize];
    let mut cosets = Vec::new();
    for rep in 1..p {
        if seen[rep as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = rep;
        loop {
            seen[x as usize] = true;
            orbit.push(x);
            x = (x as u128 * b as u128 % p as u128) as u64;
            if x == rep {
                break;
            }
        }
        cosets.push(orbit);
    }
    Ok(cosets)
}

/// Construction data of a binary quadratic residue code of prime length `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCodeSpec {
    /// Odd prime code length.
    pub p: u64,
    /// Multiplicative order of 2 mod `p` (degree of the splitting field).
    pub m: u32,
    /// Quadratic residues mod `p`, ascending.
    pub qr_set: Vec<u64>,
    /// Generator polynomial coefficients over `GF(2)`, little-endian,
    /// degree `(p-1)/2`.
    pub generator_poly: Vec<u64>,
}

impl CyclicCodeSpec {
    /// The cyclic code generated by `generator_poly`: `k = (p+1)/2` rows,
    /// row `i` holding the coefficients shifted by `i` positions.
    pub fn code(&self) -> Result<LinearCode, ConstructionError> {
        let n = self.p as usize;
        let deg = self.generator_poly.len() - 1;
        let k = n - deg;
        let f = FieldSpec::gf(2, 1).expect("GF(2) always constructible");
        let mut g = MatrixGF::zero(f, k, n);
        for i in 0..k {
            for (j, &c) in self.generator_poly.iter().enumerate() {
                if c != 0 {
                    g.set(i, i + j, FieldElement::ONE);
                }
            }
        }
        Ok(LinearCode::new(g)?)
    }
}

fn ord_of_two(p: u64) -> u64 {
    let mut x = 2u64 % p;
    let mut m = 1u64;
    while x != 1 {
        x = (x as u128 * 2 % p as u128) as u64;
        m += 1;
    }
    m
}

/// Builds the quadratic residue construction for an odd prime `p` with
/// `p = ±1 mod 8`: the generator polynomial has the residue-power roots
/// `alpha^i`, `i` a quadratic residue, for a fixed primitive `p`-th root of
/// unity `alpha` in `GF(2^m)`.
///
/// The choice of `alpha` is pinned (smallest-encoding group generator), so
/// the emitted matrix is identical across runs.
pub fn qr_spec(p: u64) -> Result<CyclicCodeSpec, ConstructionError> {
    if p < 3 || !is_prime_u64(p) {
        return Err(ConstructionError::NotOddPrime(p));
    }
    let rem = p % 8;
    if rem != 1 && rem != 7 {
        return Err(ConstructionError::TwoNotQuadraticResidue(p));
    }
    let m = ord_of_two(p);
    if m > 63 {
        return Err(ConstructionError::FieldTooLarge { p, m });
    }
    let field = FieldSpec::gf(2, m as u32).map_err(|_| ConstructionError::FieldTooLarge { p, m })?;

    let beta = field.multiplicative_generator();
    let alpha = field.pow(beta, (field.q() - 1) / p);

    let mut qr_set: Vec<u64> = (1..p)
        .map(|i| (i as u128 * i as u128 % p as u128) as u64)
        .collect();
    qr_set.sort_unstable();
    qr_set.dedup();
    if qr_set.len() != (p as usize - 1) / 2 {
        return Err(ConstructionError::InternalCheck("residue count"));
    }

    // The residue set must be a union of base-2 cyclotomic cosets; this is
    // exactly why the generator polynomial lands in GF(2).
    for coset in cyclotomic_cosets(p, 2)? {
        let inside = qr_set.binary_search(&coset[0]).is_ok();
        for v in &coset {
            if qr_set.binary_search(v).is_ok() != inside {
                return Err(ConstructionError::InternalCheck(
                    "residues not closed under doubling",
                ));
            }
        }
    }

    // g(x) = prod_{i in QR} (x + alpha^i) over GF(2^m).
    let mut coeffs: Vec<FieldElement> = vec![FieldElement::ONE];
    for &i in &qr_set {
        let root = field.pow(alpha, i);
        let mut next = vec![FieldElement::ZERO; coeffs.len() + 1];
        for (t, &c) in coeffs.iter().enumerate() {
            next[t + 1] = field.add(next[t + 1], c);
            next[t] = field.add(next[t], field.mul(root, c));
        }
        coeffs = next;
    }
    let generator_poly: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            if c.0 <= 1 {
                Ok(c.0)
            } else {
                Err(ConstructionError::InternalCheck(
                    "generator polynomial has a non-binary coefficient",
                ))
            }
        })
        .collect::<Result<_, _>>()?;

    // g must divide x^p - 1 over GF(2).
    let mut xp1 = vec![0u64; p as usize + 1];
    xp1[0] = 1;
    xp1[p as usize] = 1;
    if !gfpoly::poly_rem(&xp1, &generator_poly, 2).is_empty() {
        return Err(ConstructionError::InternalCheck(
            "generator polynomial does not divide x^p - 1",
        ));
    }

    Ok(CyclicCodeSpec {
        p,
        m: m as u32,
        qr_set,
        generator_poly,
    })
}

/// The binary quadratic residue code of prime length `p`; see [`qr_spec`].
pub fn qr_code(p: u64) -> Result<LinearCode, ConstructionError> {
    qr_spec(p)?.code()
}
