//! Binary codes: extended 1-perfect code construction and verification,
//! translation, and the equidistant-code size bounds used by the diameter
//! arguments.
//!
//! An extended 1-perfect code is an `(n = 2^m, 2^(n-1)/n, 4)` code whose
//! words all share one parity; the radius-1 balls around its codewords then
//! tile the opposite-parity half of `F^n`, which is the property the
//! recombination of two such codes into a ternary code rests on.

use alloc::vec::Vec;
use core::fmt;

use crate::words::{all_even_words, BinaryWord, Parity};

/// A finite set of distinct binary words of a common length, kept in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryCode {
    n: usize,
    words: Vec<BinaryWord>,
}

impl BinaryCode {
    /// Builds a code from a list of words.
    ///
    /// # Panics
    /// If a word has the wrong length or a word repeats.
    pub fn new(n: usize, mut words: Vec<BinaryWord>) -> Self {
        assert!((1..=64).contains(&n), "code length {n} out of range");
        for w in &words {
            assert_eq!(w.len(), n, "word {w} has length {} in a length-{n} code", w.len());
        }
        words.sort_unstable();
        for pair in words.windows(2) {
            assert_ne!(pair[0], pair[1], "duplicate word {} in code", pair[0]);
        }
        Self { n, words }
    }

    /// Word length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of codewords.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Whether the code has no words.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The codewords in lexicographic order.
    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    /// Membership test.
    pub fn contains(&self, w: &BinaryWord) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Minimum pairwise Hamming distance; `None` for fewer than two words.
    pub fn min_distance(&self) -> Option<u32> {
        if self.words.len() < 2 {
            return None;
        }
        let mut best = u32::MAX;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                best = best.min(a.distance(b));
                if best == 1 {
                    return Some(1);
                }
            }
        }
        Some(best)
    }

    /// The common parity of all words, or `None` if parities are mixed or the
    /// code is empty.
    pub fn uniform_parity(&self) -> Option<Parity> {
        let first = self.words.first()?.parity();
        self.words
            .iter()
            .all(|w| w.parity() == first)
            .then_some(first)
    }

    /// The code `{w + x : w in C}`.
    pub fn translate(&self, x: &BinaryWord) -> BinaryCode {
        assert_eq!(x.len(), self.n, "length mismatch in translate");
        BinaryCode::new(self.n, self.words.iter().map(|w| *w ^ *x).collect())
    }

    /// Translates the code by a minimum-weight codeword (the lexicographically
    /// least such), so that the result contains the zero word. A code already
    /// containing zero is returned unchanged; the result always has even
    /// parity when the input parity is uniform.
    pub fn normalize_zero(&self) -> BinaryCode {
        let Some(shift) = self
            .words
            .iter()
            .min_by_key(|w| (w.weight(), *w))
            .copied()
        else {
            return self.clone();
        };
        if shift.weight() == 0 {
            self.clone()
        } else {
            self.translate(&shift)
        }
    }

    /// Checks the extended 1-perfect property, reporting the first failure.
    ///
    /// On success returns the common parity of the codewords. The checks run
    /// in order: power-of-two length, uniform parity, size `2^(n-1)/n`,
    /// minimum distance at least 4, and finally the ball property that the
    /// radius-1 neighborhoods of the codewords are pairwise disjoint (with
    /// the size already fixed, disjointness makes them tile the whole
    /// opposite-parity half-space).
    pub fn check_extended_perfect(&self) -> Result<Parity, PerfectnessIssue> {
        let n = self.n;
        if n < 4 || !n.is_power_of_two() {
            return Err(PerfectnessIssue::LengthNotPowerOfTwo { n });
        }
        let parity = self
            .uniform_parity()
            .ok_or(PerfectnessIssue::MixedParity)?;
        let expected = (1usize << (n - 1)) / n;
        if self.len() != expected {
            return Err(PerfectnessIssue::WrongSize {
                expected,
                actual: self.len(),
            });
        }
        let found = self.min_distance().expect("size checked above");
        if found < 4 {
            return Err(PerfectnessIssue::MinDistance { found });
        }
        // Direct ball-tiling verification: collect every radius-1 neighbor of
        // every codeword and look for a repeat. There are exactly 2^(n-1) of
        // them, so disjointness alone gives the tiling.
        let mut neighbors: Vec<u64> = Vec::with_capacity(self.len() * n);
        for w in &self.words {
            for c in 0..n {
                neighbors.push(w.flip(c).bits());
            }
        }
        neighbors.sort_unstable();
        for pair in neighbors.windows(2) {
            if pair[0] == pair[1] {
                return Err(PerfectnessIssue::OverlappingBalls {
                    word: BinaryWord::new(n, pair[0]),
                });
            }
        }
        Ok(parity)
    }

    /// Whether the code is extended 1-perfect.
    pub fn is_extended_perfect(&self) -> bool {
        self.check_extended_perfect().is_ok()
    }
}

/// Why a code fails the extended 1-perfect check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PerfectnessIssue {
    /// The length is not a power of two at least 4.
    LengthNotPowerOfTwo { n: usize },
    /// Codewords do not all share one parity.
    MixedParity,
    /// The size differs from `2^(n-1)/n`.
    WrongSize { expected: usize, actual: usize },
    /// The minimum distance is below 4.
    MinDistance { found: u32 },
    /// Two codewords share a radius-1 neighbor (cannot occur once the
    /// distance check passes; kept as the direct tiling certificate).
    OverlappingBalls { word: BinaryWord },
}

impl fmt::Display for PerfectnessIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PerfectnessIssue::LengthNotPowerOfTwo { n } => {
                write!(f, "length {n} is not a power of two at least 4")
            }
            PerfectnessIssue::MixedParity => write!(f, "codewords have mixed parities"),
            PerfectnessIssue::WrongSize { expected, actual } => {
                write!(f, "size {actual}, extended perfect code needs {expected}")
            }
            PerfectnessIssue::MinDistance { found } => {
                write!(f, "minimum distance {found}, need at least 4")
            }
            PerfectnessIssue::OverlappingBalls { word } => {
                write!(f, "word {word} lies in two codeword balls")
            }
        }
    }
}

impl core::error::Error for PerfectnessIssue {}

/// The extended Hamming code of length `n = 2^m`: all even-weight words
/// whose 1-positions, read as `m`-bit labels `0..n-1`, XOR to zero.
///
/// This is the linear `(n, 2^(n-1)/n, 4)` code containing the zero word.
/// Supported for `m` in `2..=4` (lengths 4, 8, 16) — the codes this engine
/// searches over; larger lengths would be impractical to materialize here.
pub fn extended_hamming(m: usize) -> BinaryCode {
    assert!(
        (2..=4).contains(&m),
        "extended Hamming code supported for m in 2..=4, got {m}"
    );
    let n = 1usize << m;
    let words = all_even_words(n)
        .into_iter()
        .filter(|w| label_xor(w) == 0)
        .collect();
    BinaryCode::new(n, words)
}

/// XOR of the coordinate labels (`0..n-1`) of the word's 1-positions.
pub(crate) fn label_xor(w: &BinaryWord) -> u32 {
    let mut acc = 0u32;
    let mut rest = w.bits();
    while rest != 0 {
        acc ^= rest.trailing_zeros();
        rest &= rest - 1;
    }
    acc
}

/// Classification of an equidistant binary code against the size bounds used
/// in the diameter arguments: a code with all pairwise distances `2k` is
/// *trivial* when every coordinate carries at most one minority value, in
/// which case its size is at most `n/k`; otherwise (Deza's bound) its size is
/// at most `k^2 + k + 2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EquidistantCheck {
    /// The common pairwise distance `2k`.
    pub distance: u32,
    /// Whether every coordinate has at most one minority value.
    pub trivial: bool,
    /// The applicable size bound.
    pub bound: usize,
    /// The code size.
    pub size: usize,
}

impl EquidistantCheck {
    /// Whether the size respects the applicable bound.
    pub fn satisfied(&self) -> bool {
        self.size <= self.bound
    }
}

/// Why an equidistant-bound check could not be performed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EquidistantError {
    /// Fewer than two words: no pairwise distance to speak of.
    TooSmall,
    /// Two words at a distance different from the first pair's.
    NotEquidistant { a: BinaryWord, b: BinaryWord, distance: u32 },
    /// The common distance is odd, so no bound of the `2k` form applies.
    OddDistance { distance: u32 },
}

impl fmt::Display for EquidistantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquidistantError::TooSmall => write!(f, "need at least two words"),
            EquidistantError::NotEquidistant { a, b, distance } => {
                write!(f, "words {a} and {b} are at distance {distance}, breaking equidistance")
            }
            EquidistantError::OddDistance { distance } => {
                write!(f, "common distance {distance} is odd")
            }
        }
    }
}

impl core::error::Error for EquidistantError {}

/// Verifies that `words` form an equidistant code of even distance `2k` and
/// classifies it against the trivial bound `n/k` or Deza's bound `k^2+k+2`.
pub fn check_equidistant_bound(words: &[BinaryWord]) -> Result<EquidistantCheck, EquidistantError> {
    if words.len() < 2 {
        return Err(EquidistantError::TooSmall);
    }
    let distance = words[0].distance(&words[1]);
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            let d = a.distance(b);
            if d != distance {
                return Err(EquidistantError::NotEquidistant { a: *a, b: *b, distance: d });
            }
        }
    }
    if distance % 2 != 0 {
        return Err(EquidistantError::OddDistance { distance });
    }
    let k = (distance / 2) as usize;
    let n = words[0].len();
    let size = words.len();
    let trivial = (0..n).all(|c| {
        let ones = words.iter().filter(|w| w.bit(c)).count();
        ones.min(size - ones) <= 1
    });
    let bound = if trivial { n / k } else { k * k + k + 2 };
    Ok(EquidistantCheck { distance, trivial, bound, size })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::words::all_odd_words;
    use alloc::vec;

    #[test]
    fn smallest_extended_hamming_is_repetition() {
        let c = extended_hamming(2);
        assert_eq!(c.words(), &[BinaryWord::zero(4), BinaryWord::new(4, 0b1111)]);
        assert_eq!(c.min_distance(), Some(4));
        assert!(c.is_extended_perfect());
    }

    #[test]
    fn extended_hamming_8_parameters() {
        let c = extended_hamming(3);
        assert_eq!(c.n(), 8);
        assert_eq!(c.len(), 16);
        assert_eq!(c.min_distance(), Some(4));
        assert!(c.contains(&BinaryWord::zero(8)));
        assert_eq!(c.check_extended_perfect(), Ok(Parity::Even));
        // Linearity: closed under XOR.
        for a in c.words() {
            for b in c.words() {
                assert!(c.contains(&(*a ^ *b)));
            }
        }
    }

    #[test]
    fn extended_hamming_16_parameters() {
        let c = extended_hamming(4);
        assert_eq!(c.n(), 16);
        assert_eq!(c.len(), 2048);
        assert_eq!(c.min_distance(), Some(4));
        assert!(c.contains(&BinaryWord::zero(16)));
        assert_eq!(c.check_extended_perfect(), Ok(Parity::Even));
    }

    #[test]
    fn perfectness_diagnostics() {
        let c = extended_hamming(3);

        let mut smaller = c.words().to_vec();
        smaller.pop();
        assert_eq!(
            BinaryCode::new(8, smaller).check_extended_perfect(),
            Err(PerfectnessIssue::WrongSize { expected: 16, actual: 15 })
        );

        // Swap one codeword for an odd word: parity breaks.
        let mut mixed = c.words().to_vec();
        mixed[3] = mixed[3].flip(0);
        assert_eq!(
            BinaryCode::new(8, mixed).check_extended_perfect(),
            Err(PerfectnessIssue::MixedParity)
        );

        // Swap one codeword for an even word at distance 2 from another.
        let mut close = c.words().to_vec();
        let stranger = close[0].flip(0).flip(1);
        assert!(!c.contains(&stranger));
        close[15] = stranger;
        assert_eq!(
            BinaryCode::new(8, close).check_extended_perfect(),
            Err(PerfectnessIssue::MinDistance { found: 2 })
        );

        let odd_len = BinaryCode::new(6, vec![BinaryWord::zero(6)]);
        assert_eq!(
            odd_len.check_extended_perfect(),
            Err(PerfectnessIssue::LengthNotPowerOfTwo { n: 6 })
        );
    }

    #[test]
    fn translation_preserves_perfectness_and_flips_parity() {
        let c = extended_hamming(4);
        let shifted = c.translate(&BinaryWord::unit(16, 0));
        assert_eq!(shifted.check_extended_perfect(), Ok(Parity::Odd));
        assert!(!shifted.contains(&BinaryWord::zero(16)));
    }

    #[test]
    fn translate_examples() {
        let c = BinaryCode::new(4, vec![BinaryWord::zero(4), BinaryWord::new(4, 0b1111)]);
        assert_eq!(c.translate(&BinaryWord::zero(4)), c);
        let t = c.translate(&BinaryWord::unit(4, 0));
        // Lexicographic order reads coordinate 1 first: 0111 before 1000.
        assert_eq!(
            t.words(),
            &[BinaryWord::new(4, 0b1110), BinaryWord::new(4, 0b0001)]
        );
    }

    #[test]
    fn translation_preserves_min_distance() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..100 {
            let n = 6 + rng.next_below(6) as usize;
            let mut words = vec![];
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            while words.len() < 8 {
                let w = BinaryWord::new(n, rng.next_u64() & mask);
                if !words.contains(&w) {
                    words.push(w);
                }
            }
            let c = BinaryCode::new(n, words);
            let x = BinaryWord::new(n, rng.next_u64() & mask);
            assert_eq!(c.translate(&x).min_distance(), c.min_distance());
        }
    }

    #[test]
    fn normalization_lands_zero_even() {
        let c = extended_hamming(3);
        for shift_bits in [0b0000_0001u64, 0b0001_1000, 0b1110_0101] {
            let shifted = c.translate(&BinaryWord::new(8, shift_bits));
            let norm = shifted.normalize_zero();
            assert!(norm.contains(&BinaryWord::zero(8)));
            assert_eq!(norm.uniform_parity(), Some(Parity::Even));
            assert!(norm.is_extended_perfect());
        }
        // For a linear input, any member translation recovers the code itself.
        let norm = c.translate(&c.words()[5]).normalize_zero();
        assert_eq!(norm, c);
    }

    /// Every word of the opposite parity has exactly one codeword at
    /// distance 1 (exhaustive at length 8, sampled at length 16).
    #[test]
    fn unique_neighbor_property() {
        let c8 = extended_hamming(3);
        for y in all_odd_words(8) {
            let hits = c8.words().iter().filter(|w| w.distance(&y) == 1).count();
            assert_eq!(hits, 1, "odd word {y}");
        }

        let c16 = extended_hamming(4);
        let odds = all_odd_words(16);
        let mut rng = SplitMix64::new(12);
        for _ in 0..10_000 {
            let y = odds[rng.next_below(odds.len() as u64) as usize];
            let hits = c16.words().iter().filter(|w| w.distance(&y) == 1).count();
            assert_eq!(hits, 1, "odd word {y}");
        }
    }

    #[test]
    fn equidistant_trivial_pairs() {
        // Disjoint weight-2 words: pairwise distance 4, one minority value
        // per coordinate, size exactly n/2.
        let n = 12;
        let words: Vec<BinaryWord> = (0..n / 2)
            .map(|j| BinaryWord::from_coords(n, &[2 * j, 2 * j + 1]))
            .collect();
        let check = check_equidistant_bound(&words).unwrap();
        assert_eq!(check.distance, 4);
        assert!(check.trivial);
        assert_eq!(check.bound, 6);
        assert!(check.satisfied());
    }

    #[test]
    fn equidistant_nontrivial_triples() {
        // Four weight-3 words pairwise meeting in one coordinate: distance 4,
        // every coordinate carries two minority ones.
        let words = vec![
            BinaryWord::from_coords(6, &[0, 1, 2]),
            BinaryWord::from_coords(6, &[0, 3, 4]),
            BinaryWord::from_coords(6, &[1, 3, 5]),
            BinaryWord::from_coords(6, &[2, 4, 5]),
        ];
        let check = check_equidistant_bound(&words).unwrap();
        assert_eq!(check.distance, 4);
        assert!(!check.trivial);
        assert_eq!(check.bound, 8);
        assert!(check.satisfied());
    }

    #[test]
    fn equidistant_rejects_uneven_distances() {
        let words = vec![
            BinaryWord::zero(6),
            BinaryWord::from_coords(6, &[0, 1]),
            BinaryWord::from_coords(6, &[0, 1, 2, 3]),
        ];
        assert!(matches!(
            check_equidistant_bound(&words),
            Err(EquidistantError::NotEquidistant { .. })
        ));
        assert_eq!(
            check_equidistant_bound(&[BinaryWord::zero(6)]),
            Err(EquidistantError::TooSmall)
        );
    }
}
