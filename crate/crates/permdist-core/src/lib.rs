//! Upper bounds on the minimum Hamming distance of linear codes over finite
//! fields.
//!
//! The crate is organised around a permutation encoding of the distance
//! problem: for a full-rank generator matrix `G` of an `[n, k]` code, every
//! column permutation `P` yields a row reduced echelon form of the permuted
//! matrix, and the minimum row weight of that form is an upper bound on the
//! code's minimum distance. Some permutation attains the distance exactly, so
//! searching over `S_n` with a genetic algorithm gives a field-size-independent
//! heuristic, while exhaustive enumeration over small codes doubles as an
//! exact oracle.
//!
//! Modules:
//! - [`galois`]: arithmetic in `GF(p^m)` with integer-encoded elements.
//! - [`matgf`]: dense matrices over a field, RREF, and permutations acting on
//!   columns.
//! - [`code`]: linear codes, the permutation fitness map, and the exact /
//!   random-search oracles.
//! - [`constructions`]: test fixtures, random codes, and binary quadratic
//!   residue codes.
//! - [`evolve`]: the generational genetic algorithm (algebraic crossover,
//!   restricted transposition mutation, elitism).
//!
//! The crate is `no_std` compatible (with `alloc`); wall-clock time enters
//! only through the [`clock::Clock`] trait so that embedders choose the time
//! source.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod clock;
pub mod code;
pub mod constructions;
pub mod evolve;
pub mod galois;
pub mod matgf;
pub mod rng;

mod factor;
mod gfpoly;

pub use clock::{Clock, NullClock};
pub use code::{FitnessResult, LinearCode};
pub use evolve::{GaConfig, Individual, RunStats};
pub use galois::{FieldElement, FieldSpec};
pub use matgf::{MatrixGF, Permutation};
pub use rng::DefaultRng;
