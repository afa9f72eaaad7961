//! Linear codes, the permutation fitness map, and desk-scale oracles.
//!
//! The fitness of a permutation `P` for a code with generator matrix `G` is
//! the minimum Hamming weight among the rows of the row reduced echelon form
//! of the column-permuted matrix. Every such row corresponds to a codeword,
//! so the fitness is always an upper bound on the minimum distance, and some
//! permutation attains the distance exactly. The exact oracle
//! ([`exact_distance`]) enumerates all nonzero codewords; the exhaustive
//! fitness minimum ([`min_fitness_exhaustive`]) enumerates all of `S_n`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::galois::{FieldElement, FieldSpec};
use crate::matgf::{next_permutation, MatError, MatrixGF, Permutation};
use crate::rng::RngCore;

/// Default ceiling on `q^k - 1` for [`exact_distance`].
pub const DEFAULT_CODEWORD_BUDGET: u64 = 1 << 22;

/// Default ceiling on `n!` for [`min_fitness_exhaustive`] (8! by default).
pub const DEFAULT_PERMUTATION_BUDGET: u64 = 40_320;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    /// The generator matrix has rank below its row count.
    RankDeficient { rows: usize, rank: usize },
    /// A code needs `1 <= k < n`.
    BadDimensions { n: usize, k: usize },
    /// Permutation degree differs from the code length.
    DegreeMismatch { expected: usize, got: usize },
    /// The enumeration is larger than the stated budget.
    BudgetExceeded { required: u128, budget: u64 },
    /// `random_search` needs at least one sample.
    EmptySearch,
    Mat(MatError),
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::RankDeficient { rows, rank } => {
                write!(f, "not a generating matrix: rank {rank} < {rows} rows")
            }
            CodeError::BadDimensions { n, k } => {
                write!(f, "invalid code dimensions k={k}, n={n} (need 1 <= k < n)")
            }
            CodeError::DegreeMismatch { expected, got } => {
                write!(f, "permutation degree {got}, expected code length {expected}")
            }
            CodeError::BudgetExceeded { required, budget } => {
                write!(f, "enumeration of {required} items exceeds budget {budget}")
            }
            CodeError::EmptySearch => write!(f, "random search needs count >= 1"),
            CodeError::Mat(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CodeError {}

impl From<MatError> for CodeError {
    fn from(e: MatError) -> Self {
        CodeError::Mat(e)
    }
}

/// An `[n, k]_q` linear code given by a full-rank `k x n` generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Arc<FieldSpec>,
    n: usize,
    k: usize,
    generator: MatrixGF,
    /// For `GF(2)` codes: generator rows packed as bit words (row `i` in
    /// `packed[i * words..]`, bit `j` = entry `(i, j)`), the hot-path input
    /// of [`fitness`].
    packed: Option<Vec<u64>>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        // `packed` is derived from the generator.
        self.generator == other.generator
    }
}

impl Eq for LinearCode {}

/// Fitness of one permutation: the minimum RREF row weight, the index of the
/// first row attaining it, and the corresponding codeword of the original
/// (unpermuted) code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitnessResult {
    pub value: usize,
    pub row: usize,
    pub witness: Vec<FieldElement>,
}

impl LinearCode {
    /// Validates a generator matrix: full rank (computed via RREF) and
    /// `1 <= k < n`.
    pub fn new(generator: MatrixGF) -> Result<Self, CodeError> {
        let k = generator.rows();
        let n = generator.cols();
        if k == 0 || k >= n {
            return Err(CodeError::BadDimensions { n, k });
        }
        let rank = generator.rref().rank;
        if rank != k {
            return Err(CodeError::RankDeficient { rows: k, rank });
        }
        let packed = (generator.field().q() == 2).then(|| {
            let words = n.div_ceil(64);
            let mut bits = vec![0u64; k * words];
            for i in 0..k {
                for j in 0..n {
                    if !generator.get(i, j).is_zero() {
                        bits[i * words + j / 64] |= 1u64 << (j % 64);
                    }
                }
            }
            bits
        });
        Ok(LinearCode {
            field: Arc::clone(generator.field()),
            n,
            k,
            generator,
            packed,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.field.q()
    }

    #[inline]
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    #[inline]
    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    /// Membership test: reduces `word` against the RREF of the generator.
    pub fn contains(&self, word: &[FieldElement]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let r = self.generator.rref();
        let f = &self.field;
        let mut w = word.to_vec();
        for (ri, &pc) in r.pivots.iter().enumerate() {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for j in 0..self.n {
                w[j] = f.sub(w[j], f.mul(c, r.matrix.get(ri, j)));
            }
        }
        w.iter().all(|e| e.is_zero())
    }
}

/// Fitness of permutation `P`: minimum row weight of `rref(G M_P)` together
/// with a witness codeword of that weight (ties: first minimizing row).
///
/// Dispatches to a bit-packed elimination for `GF(2)`; both paths compute
/// the same unique RREF.
pub fn fitness(code: &LinearCode, p: &Permutation) -> Result<FitnessResult, CodeError> {
    if p.n() != code.n {
        return Err(CodeError::DegreeMismatch {
            expected: code.n,
            got: p.n(),
        });
    }
    if code.q() == 2 {
        Ok(fitness_gf2(code, p))
    } else {
        Ok(fitness_generic(code, p))
    }
}

fn fitness_generic(code: &LinearCode, p: &Permutation) -> FitnessResult {
    let permuted = code
        .generator
        .apply_permutation(p)
        .expect("degree checked by caller");
    let r = permuted.rref();
    debug_assert_eq!(r.rank, code.k, "full-rank generator stays full rank");
    let mut best_row = 0usize;
    let mut best = usize::MAX;
    for i in 0..code.k {
        let w = r.matrix.row_weight(i);
        if w < best {
            best = w;
            best_row = i;
        }
    }
    let mut witness = vec![FieldElement::ZERO; code.n];
    for j in 0..code.n {
        witness[p.image(j)] = r.matrix.get(best_row, j);
    }
    FitnessResult {
        value: best,
        row: best_row,
        witness,
    }
}

/// Bit-packed Gaussian elimination over `GF(2)`: rows are `u64` words, so
/// elimination and weight counting cost a few word operations per row.
fn fitness_gf2(code: &LinearCode, p: &Permutation) -> FitnessResult {
    let n = code.n;
    let k = code.k;
    let words = n.div_ceil(64);
    let packed = code
        .packed
        .as_deref()
        .expect("GF(2) codes carry packed rows");
    let images = p.images();
    let mut rows = vec![0u64; k * words];
    for i in 0..k {
        let src = &packed[i * words..(i + 1) * words];
        let dst = &mut rows[i * words..(i + 1) * words];
        for (j, &pj) in images.iter().enumerate() {
            dst[j / 64] |= (src[pj / 64] >> (pj % 64) & 1) << (j % 64);
        }
    }
    let mut rank = 0usize;
    for col in 0..n {
        let (w, b) = (col / 64, col % 64);
        let Some(pivot) = (rank..k).find(|&i| rows[i * words + w] >> b & 1 == 1) else {
            continue;
        };
        if pivot != rank {
            for t in 0..words {
                rows.swap(rank * words + t, pivot * words + t);
            }
        }
        for i in 0..k {
            if i != rank && rows[i * words + w] >> b & 1 == 1 {
                for t in 0..words {
                    rows[i * words + t] ^= rows[rank * words + t];
                }
            }
        }
        rank += 1;
        if rank == k {
            break;
        }
    }
    debug_assert_eq!(rank, k, "full-rank generator stays full rank");
    let mut best_row = 0usize;
    let mut best = usize::MAX;
    for i in 0..k {
        let w: u32 = rows[i * words..(i + 1) * words]
            .iter()
            .map(|x| x.count_ones())
            .sum();
        if (w as usize) < best {
            best = w as usize;
            best_row = i;
        }
    }
    let mut witness = vec![FieldElement::ZERO; n];
    let base = best_row * words;
    for j in 0..n {
        if rows[base + j / 64] >> (j % 64) & 1 == 1 {
            witness[p.image(j)] = FieldElement::ONE;
        }
    }
    FitnessResult {
        value: best,
        row: best_row,
        witness,
    }
}

fn codeword_count(q: u64, k: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..k {
        total = total.saturating_mul(q as u128);
    }
    total - 1
}

/// Exact minimum distance by enumerating all `q^k - 1` nonzero codewords
/// as message-vector products, with incremental odometer updates.
pub fn exact_distance(code: &LinearCode, budget: u64) -> Result<usize, CodeError> {
    let q = code.q();
    let required = codeword_count(q, code.k);
    if required > budget as u128 {
        return Err(CodeError::BudgetExceeded { required, budget });
    }
    let f = &code.field;
    let g = &code.generator;
    let n = code.n;
    let mut message = vec![0u64; code.k];
    let mut word = vec![FieldElement::ZERO; n];
    let mut best = usize::MAX;
    'outer: loop {
        let mut digit = 0usize;
        loop {
            let old = message[digit];
            let new = if old + 1 == q { 0 } else { old + 1 };
            message[digit] = new;
            let delta = f.sub(FieldElement(new), FieldElement(old));
            if !delta.is_zero() {
                for j in 0..n {
                    word[j] = f.add(word[j], f.mul(delta, g.get(digit, j)));
                }
            }
            if new != 0 {
                break;
            }
            digit += 1;
            if digit == code.k {
                break 'outer;
            }
        }
        let w = word.iter().filter(|e| !e.is_zero()).count();
        if w < best {
            best = w;
        }
    }
    Ok(best)
}

/// Minimum fitness over all `n!` permutations; by the echelon-form theorem
/// this equals [`exact_distance`].
pub fn min_fitness_exhaustive(code: &LinearCode, budget: u64) -> Result<usize, CodeError> {
    let n = code.n;
    let mut required: u128 = 1;
    for i in 1..=n as u128 {
        required = required.saturating_mul(i);
    }
    if required > budget as u128 {
        return Err(CodeError::BudgetExceeded { required, budget });
    }
    let mut images: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    loop {
        let p = Permutation::new(images.clone()).expect("images stay a bijection");
        let fr = fitness(code, &p)?;
        if fr.value < best {
            best = fr.value;
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(best)
}

/// Best fitness over `count` uniformly random permutations (strict
/// improvement keeps the earliest best, so results are reproducible).
pub fn random_search<R: RngCore + ?Sized>(
    code: &LinearCode,
    count: u64,
    rng: &mut R,
) -> Result<FitnessResult, CodeError> {
    if count == 0 {
        return Err(CodeError::EmptySearch);
    }
    let mut best: Option<FitnessResult> = None;
    for _ in 0..count {
        let p = Permutation::random(rng, code.n);
        let fr = fitness(code, &p)?;
        if best.as_ref().map_or(true, |b| fr.value < b.value) {
            best = Some(fr);
        }
    }
    Ok(best.expect("count >= 1"))
}
