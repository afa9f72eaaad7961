//! Dense matrices over a finite field and the permutation action on columns.
//!
//! Matrices are immutable values (row-major storage); [`MatrixGF::rref`]
//! computes the unique row reduced echelon form with deterministic
//! first-nonzero pivoting. [`Permutation`] is an element of `S_n` acting on
//! column indices with the pull convention: column `j` of `apply_permutation`
//! is column `P(j)` of the source, so
//! `apply(apply(M, P), Q) = apply(M, compose(P, Q))`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::galois::{FieldElement, FieldSpec};
use crate::rng::{RngCore, StreamExt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatError {
    /// Entry count does not match `rows * cols`, or a dimension is zero.
    Shape { rows: usize, cols: usize, len: usize },
    /// An entry is not a valid element of the matrix field.
    EntryOutOfRange { row: usize, col: usize, value: u64 },
    /// Permutation degree does not match the column count (or co-degree).
    DegreeMismatch { expected: usize, got: usize },
    /// The image vector is not a bijection on `[0, n)`.
    NotBijective,
    /// Transposition endpoints out of range or equal.
    BadTransposition,
    /// `random_cross_transposition` needs `1 <= k < n`.
    SplitOutOfRange { n: usize, k: usize },
}

impl fmt::Display for MatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatError::Shape { rows, cols, len } => {
                write!(f, "{rows}x{cols} matrix cannot hold {len} entries")
            }
            MatError::EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row}, {col}) = {value} outside the field")
            }
            MatError::DegreeMismatch { expected, got } => {
                write!(f, "permutation degree {got}, expected {expected}")
            }
            MatError::NotBijective => write!(f, "images are not a bijection"),
            MatError::BadTransposition => write!(f, "invalid transposition endpoints"),
            MatError::SplitOutOfRange { n, k } => {
                write!(f, "split point k={k} outside [1, {n})")
            }
        }
    }
}

impl core::error::Error for MatError {}

/// A `rows x cols` matrix over a [`FieldSpec`], entries stored row-major.
#[derive(Clone)]
pub struct MatrixGF {
    field: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl PartialEq for MatrixGF {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}

impl Eq for MatrixGF {}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGF {}x{} over GF({})", self.rows, self.cols, self.field.q())?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Result of row reduction: the echelon form, its rank, and the pivot
/// column indices in increasing order. Zero rows (if any) sit at the bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: MatrixGF,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl MatrixGF {
    pub fn new(
        field: Arc<FieldSpec>,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self, MatError> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(MatError::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        for (idx, &e) in entries.iter().enumerate() {
            if !field.contains(e) {
                return Err(MatError::EntryOutOfRange {
                    row: idx / cols,
                    col: idx % cols,
                    value: e.0,
                });
            }
        }
        Ok(MatrixGF {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from raw integer encodings.
    pub fn from_values(
        field: Arc<FieldSpec>,
        rows: usize,
        cols: usize,
        values: &[u64],
    ) -> Result<Self, MatError> {
        let entries = values.iter().map(|&v| FieldElement(v)).collect();
        Self::new(field, rows, cols, entries)
    }

    pub fn zero(field: Arc<FieldSpec>, rows: usize, cols: usize) -> Self {
        MatrixGF {
            field,
            rows,
            cols,
            entries: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: Arc<FieldSpec>, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Number of nonzero entries in row `i`.
    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().filter(|e| !e.is_zero()).count()
    }

    /// The unique row reduced echelon form. Pivoting is deterministic: for
    /// each column, the topmost unprocessed row with a nonzero entry.
    pub fn rref(&self) -> Rref {
        let f = Arc::clone(&self.field);
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..m.cols {
            let Some(pivot_row) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if pivot_row != r {
                for j in 0..m.cols {
                    let a = m.get(r, j);
                    let b = m.get(pivot_row, j);
                    m.set(r, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let inv = f
                .inv(m.get(r, col))
                .expect("pivot entry is nonzero by construction");
            if m.get(r, col) != FieldElement::ONE {
                for j in col..m.cols {
                    m.set(r, j, f.mul(m.get(r, j), inv));
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, col);
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    /// Column action under the pull convention: column `j` of the result is
    /// column `P(j)` of `self`.
    pub fn apply_permutation(&self, p: &Permutation) -> Result<MatrixGF, MatError> {
        if p.n() != self.cols {
            return Err(MatError::DegreeMismatch {
                expected: self.cols,
                got: p.n(),
            });
        }
        let mut out = Self::zero(Arc::clone(&self.field), self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, p.image(j)));
            }
        }
        Ok(out)
    }
}

/// An element of the symmetric group `S_n`, stored as its image table:
/// `images[j] = P(j)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Validates that `images` is a bijection on `[0, n)`.
    pub fn new(images: Vec<usize>) -> Result<Self, MatError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(MatError::NotBijective);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition exchanging `a` and `b` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self, MatError> {
        if a >= n || b >= n || a == b {
            return Err(MatError::BadTransposition);
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, j: usize) -> usize {
        self.images[j]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &v)| j == v)
    }

    /// Function composition `(P ∘ Q)(j) = P(Q(j))`. Under the pull
    /// convention on columns, `apply(M, compose(P, Q)) = apply(apply(M, P), Q)`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, MatError> {
        if self.n() != other.n() {
            return Err(MatError::DegreeMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        let images = other.images.iter().map(|&j| self.images[j]).collect();
        Ok(Permutation { images })
    }

    pub fn invert(&self) -> Permutation {
        let mut images = vec![0usize; self.n()];
        for (j, &v) in self.images.iter().enumerate() {
            images[v] = j;
        }
        Permutation { images }
    }

    /// Uniform random permutation by Fisher-Yates; consumes exactly `n - 1`
    /// bounded draws from the stream.
    pub fn random<R: RngCore + ?Sized>(rng: &mut R, n: usize) -> Permutation {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.next_below(i as u64 + 1) as usize;
            images.swap(i, j);
        }
        Permutation { images }
    }

    /// A random transposition `(t1 t2)` with `t1` uniform over the first `k`
    /// positions and `t2` uniform over the last `n - k`; consumes exactly two
    /// bounded draws. Requires `1 <= k < n`.
    pub fn random_cross_transposition<R: RngCore + ?Sized>(
        rng: &mut R,
        n: usize,
        k: usize,
    ) -> Result<Permutation, MatError> {
        if k == 0 || k >= n {
            return Err(MatError::SplitOutOfRange { n, k });
        }
        let t1 = rng.next_below(k as u64) as usize;
        let t2 = k + rng.next_below((n - k) as u64) as usize;
        Permutation::transposition(n, t1, t2)
    }
}

/// Lexicographic successor of an index sequence in place; returns false once
/// the sequence is fully descending (i.e. the enumeration is complete).
pub(crate) fn next_permutation(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{DefaultRng, SeedableRng};

    fn gf(p: u64, m: u32) -> Arc<FieldSpec> {
        FieldSpec::gf(p, m).unwrap()
    }

    #[test]
    fn rref_gf2_small() {
        let f = gf(2, 1);
        let m = MatrixGF::from_values(f.clone(), 2, 2, &[1, 1, 0, 1]).unwrap();
        let r = m.rref();
        assert_eq!(r.matrix, MatrixGF::identity(f, 2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_scales_pivot() {
        let f = gf(3, 1);
        let m = MatrixGF::from_values(f, 1, 2, &[2, 1]).unwrap();
        let r = m.rref();
        assert_eq!(r.matrix.row(0), &[FieldElement(1), FieldElement(2)]);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_idempotent_and_detects_rank() {
        let f = gf(2, 2);
        // Row 2 = row 0 + row 1, so rank 2.
        let m = MatrixGF::from_values(f, 3, 4, &[1, 2, 3, 0, 0, 1, 2, 3, 1, 3, 1, 3]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 2);
        let again = r.matrix.rref();
        assert_eq!(again.matrix, r.matrix);
        assert_eq!(again.pivots, r.pivots);
        // Zero rows last.
        assert_eq!(r.matrix.row_weight(2), 0);
    }

    #[test]
    fn row_weight_counts_nonzero() {
        let f = gf(2, 3);
        let m = MatrixGF::from_values(f.clone(), 1, 6, &[7, 0, 7, 5, 2, 0]).unwrap();
        assert_eq!(m.row_weight(0), 4);
        let z = MatrixGF::zero(f.clone(), 1, 5);
        assert_eq!(z.row_weight(0), 0);
        let ones = MatrixGF::from_values(f, 1, 5, &[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(ones.row_weight(0), 5);
    }

    #[test]
    fn apply_identity_is_noop() {
        let f = gf(2, 1);
        let m = MatrixGF::from_values(f, 2, 3, &[1, 0, 1, 0, 1, 1]).unwrap();
        let p = Permutation::identity(3);
        assert_eq!(m.apply_permutation(&p).unwrap(), m);
    }

    #[test]
    fn apply_transposition_pulls_columns() {
        let f = gf(2, 1);
        let m = MatrixGF::from_values(f.clone(), 1, 3, &[1, 0, 0]).unwrap();
        let p = Permutation::transposition(3, 0, 2).unwrap();
        let expect = MatrixGF::from_values(f, 1, 3, &[0, 0, 1]).unwrap();
        assert_eq!(m.apply_permutation(&p).unwrap(), expect);
    }

    #[test]
    fn degree_mismatch_rejected() {
        let f = gf(2, 1);
        let m = MatrixGF::from_values(f, 1, 3, &[1, 0, 0]).unwrap();
        let p = Permutation::identity(4);
        assert!(matches!(
            m.apply_permutation(&p),
            Err(MatError::DegreeMismatch { .. })
        ));
        let q = Permutation::identity(3);
        assert!(p.compose(&q).is_err());
    }

    #[test]
    fn composition_matches_application_order() {
        let f = gf(3, 1);
        let mut rng = DefaultRng::seed_from_u64(11);
        for _ in 0..100 {
            let rows = 1 + rng.next_below(3) as usize;
            let n = 2 + rng.next_below(5) as usize;
            let vals: Vec<u64> = (0..rows * n).map(|_| rng.next_below(3)).collect();
            let m = MatrixGF::from_values(f.clone(), rows, n, &vals).unwrap();
            let p = Permutation::random(&mut rng, n);
            let q = Permutation::random(&mut rng, n);
            let lhs = m
                .apply_permutation(&p)
                .unwrap()
                .apply_permutation(&q)
                .unwrap();
            let rhs = m.apply_permutation(&p.compose(&q).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn group_axioms() {
        let mut rng = DefaultRng::seed_from_u64(13);
        for _ in 0..50 {
            let n = 1 + rng.next_below(8) as usize;
            let p = Permutation::random(&mut rng, n);
            let q = Permutation::random(&mut rng, n);
            let r = Permutation::random(&mut rng, n);
            let id = Permutation::identity(n);
            assert_eq!(p.compose(&id).unwrap(), p);
            assert_eq!(id.compose(&p).unwrap(), p);
            assert_eq!(p.compose(&p.invert()).unwrap(), id);
            assert_eq!(p.invert().invert(), p);
            let a = p.compose(&q).unwrap().compose(&r).unwrap();
            let b = p.compose(&q.compose(&r).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn three_cycle_composition() {
        // (0 1 2) composed with itself is (0 2 1), as image tables.
        let c = Permutation::new(vec![1, 2, 0]).unwrap();
        let cc = c.compose(&c).unwrap();
        assert_eq!(cc.images(), &[2, 0, 1]);
    }

    #[test]
    fn permutation_preserves_row_weights() {
        let f = gf(2, 3);
        let mut rng = DefaultRng::seed_from_u64(17);
        for _ in 0..50 {
            let n = 2 + rng.next_below(6) as usize;
            let vals: Vec<u64> = (0..2 * n).map(|_| rng.next_below(8)).collect();
            let m = MatrixGF::from_values(f.clone(), 2, n, &vals).unwrap();
            let p = Permutation::random(&mut rng, n);
            let pm = m.apply_permutation(&p).unwrap();
            for i in 0..2 {
                assert_eq!(m.row_weight(i), pm.row_weight(i));
            }
        }
    }

    #[test]
    fn random_permutation_degenerate() {
        let mut rng = DefaultRng::seed_from_u64(1);
        assert!(Permutation::random(&mut rng, 1).is_identity());
    }

    #[test]
    fn random_permutation_uniform_n4() {
        // 10^4 samples over S_4: each of the 24 permutations within 5 sigma
        // of the expected count.
        let mut rng = DefaultRng::seed_from_u64(20260810);
        let samples = 10_000usize;
        let mut counts = alloc::collections::BTreeMap::new();
        for _ in 0..samples {
            let p = Permutation::random(&mut rng, 4);
            *counts.entry(p.images().to_vec()).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 24);
        let expected = samples as f64 / 24.0;
        let sigma = (samples as f64 * (1.0 / 24.0) * (23.0 / 24.0)).sqrt();
        for (perm, count) in counts {
            let dev = (count as f64 - expected).abs();
            assert!(dev < 5.0 * sigma, "{perm:?} occurred {count} times");
        }
    }

    #[test]
    fn cross_transposition_split() {
        let mut rng = DefaultRng::seed_from_u64(5);
        // n=2, k=1: the only choice is (0 1).
        let t = Permutation::random_cross_transposition(&mut rng, 2, 1).unwrap();
        assert_eq!(t.images(), &[1, 0]);

        let mut counts = [[0usize; 3]; 3];
        for _ in 0..10_000 {
            let t = Permutation::random_cross_transposition(&mut rng, 6, 3).unwrap();
            assert!(!t.is_identity());
            assert_eq!(t.compose(&t).unwrap(), Permutation::identity(6));
            let moved: Vec<usize> = (0..6).filter(|&j| t.image(j) != j).collect();
            assert_eq!(moved.len(), 2);
            let (t1, t2) = (moved[0], moved[1]);
            assert!(t1 < 3 && t2 >= 3, "endpoints {t1} {t2}");
            counts[t1][t2 - 3] += 1;
        }
        let expected = 10_000.0 / 9.0;
        let sigma = (10_000.0_f64 * (1.0 / 9.0) * (8.0 / 9.0)).sqrt();
        for row in counts {
            for c in row {
                assert!((c as f64 - expected).abs() < 5.0 * sigma);
            }
        }
        assert!(Permutation::random_cross_transposition(&mut rng, 5, 0).is_err());
        assert!(Permutation::random_cross_transposition(&mut rng, 5, 5).is_err());
    }

    #[test]
    fn rref_rows_stay_in_row_space() {
        // Reduce each original row against R: remainder must vanish, and
        // conversely every row of R must reduce to zero against the row
        // space basis.
        let f = gf(2, 2);
        let mut rng = DefaultRng::seed_from_u64(23);
        for _ in 0..30 {
            let rows = 1 + rng.next_below(4) as usize;
            let cols = rows + rng.next_below(4) as usize;
            let vals: Vec<u64> = (0..rows * cols).map(|_| rng.next_below(4)).collect();
            let m = MatrixGF::from_values(f.clone(), rows, cols, &vals).unwrap();
            let r = m.rref();
            for i in 0..rows {
                assert!(reduces_to_zero(&r, m.row(i)));
            }
            for i in 0..r.rank {
                let rr = m.rref();
                assert!(reduces_to_zero(&rr, r.matrix.row(i)));
            }
        }
    }

    fn reduces_to_zero(r: &Rref, row: &[FieldElement]) -> bool {
        let f = r.matrix.field();
        let mut w = row.to_vec();
        for (ri, &pc) in r.pivots.iter().enumerate() {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for j in 0..w.len() {
                w[j] = f.sub(w[j], f.mul(c, r.matrix.get(ri, j)));
            }
        }
        w.iter().all(|e| e.is_zero())
    }

    #[test]
    fn next_permutation_enumerates_lexicographically() {
        let mut seq = vec![0usize, 1, 2];
        let mut all = vec![seq.clone()];
        while next_permutation(&mut seq) {
            all.push(seq.clone());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
    }

    #[test]
    fn brute_force_rank_agreement() {
        // Enumerate the full row space and compare q^rank with its size.
        let mut rng = DefaultRng::seed_from_u64(29);
        for (p, m) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let f = gf(p, m);
            let q = f.q();
            for _ in 0..20 {
                let rows = 1 + rng.next_below(3) as usize;
                if (q as f64).powi(rows as i32) > 4096.0 {
                    continue;
                }
                let cols = 1 + rng.next_below(5) as usize;
                let vals: Vec<u64> = (0..rows * cols).map(|_| rng.next_below(q)).collect();
                let mat = MatrixGF::from_values(f.clone(), rows, cols, &vals).unwrap();
                let rank = mat.rref().rank;

                let mut space = alloc::collections::BTreeSet::new();
                let total = q.pow(rows as u32);
                for idx in 0..total {
                    let mut coeffs = Vec::with_capacity(rows);
                    let mut v = idx;
                    for _ in 0..rows {
                        coeffs.push(FieldElement(v % q));
                        v /= q;
                    }
                    let mut word = vec![FieldElement::ZERO; cols];
                    for (i, &c) in coeffs.iter().enumerate() {
                        for j in 0..cols {
                            word[j] = f.add(word[j], f.mul(c, mat.get(i, j)));
                        }
                    }
                    space.insert(word);
                }
                assert_eq!(space.len() as u64, q.pow(rank as u32));
            }
        }
    }
}
