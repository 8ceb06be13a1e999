//! Search and verification engine for ternary constant-weight codes whose
//! words carry exactly one starred coordinate.
//!
//! The space `X^n` consists of length-`n` words over `{*, 0, 1}` with exactly
//! one `*`. Such a word is the same thing as an unordered pair of binary words
//! at Hamming distance 1 (substitute `0`/`1` for the star), so every word has
//! one even-weight and one odd-weight member. Codes in `X^n` with minimum
//! distance 5 and `M = 2^(n-1)/n` words decompose into a pair of extended
//! 1-perfect binary codes, and conversely a pair of extended perfect codes
//! recombines into such a ternary code exactly when a quadruple condition on
//! their distance-1 pairings holds. This crate implements:
//!
//! * [`words`]: binary and starred words as machine integers, permutations and
//!   isometries of the space, distance and ball enumeration;
//! * [`binary_codes`]: extended Hamming codes, perfectness checks, translation;
//! * [`ternary_codes`]: decomposition/recombination, the quadruple condition,
//!   parameter verification, and a perfect distance-3 code construction;
//! * [`exact_cover`]: a dancing-links exact cover solver with node budgets,
//!   ground restriction, partial-solution extension, and a monotone pruning
//!   hook;
//! * [`symmetry`]: coordinate symmetries of a binary code by backtracking with
//!   invariant pruning, plus orbit computations;
//! * [`diameter`]: anticodes, the pigeonhole bound, diameter-perfectness
//!   certificates, and small-set classification used by the size bounds;
//! * [`search`]: the staged search that ties the above together (ground sets,
//!   candidate filtering, quadruple-condition pruning, stage orchestration).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, timing, and thread
//! scheduling live in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod binary_codes;
pub mod diameter;
pub mod exact_cover;
pub mod rng;
pub mod search;
pub mod symmetry;
pub mod ternary_codes;
pub mod words;

pub use binary_codes::BinaryCode;
pub use exact_cover::ExactCoverInstance;
pub use symmetry::SymmetryGroup;
pub use ternary_codes::TernaryCode;
pub use words::{BinaryWord, Isometry, Permutation, StarredWord};

/// Number of words in the starred space `X^n`, i.e. `n * 2^(n-1)`.
///
/// ```
/// assert_eq!(starcw_core::starred_space_size(8), 1024);
/// assert_eq!(starcw_core::starred_space_size(16), 16 * 32768);
/// ```
pub fn starred_space_size(n: usize) -> u128 {
    assert!((1..=64).contains(&n), "word length {n} out of range 1..=64");
    (n as u128) << (n - 1)
}
