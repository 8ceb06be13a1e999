//! Ternary constant-weight codes in `X^n` and the bridge to pairs of binary
//! codes.
//!
//! Every set of starred words decomposes into its even and odd binary parts.
//! Conversely, a pair of extended 1-perfect codes of opposite parity
//! recombines into a ternary code of minimum distance 3 by joining each even
//! codeword with its unique odd codeword at distance 1; the recombined code
//! reaches minimum distance 5 exactly when no two even codewords at distance
//! 4 use the same difference as their odd partners, which is what
//! [`check_condition2`] tests.

use alloc::vec::Vec;
use core::fmt;

use crate::binary_codes::{label_xor, BinaryCode, PerfectnessIssue};
use crate::rng::SplitMix64;
use crate::words::{all_even_words, BinaryWord, Parity, StarredWord};

/// A finite set of distinct starred words of a common length, kept in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TernaryCode {
    n: usize,
    words: Vec<StarredWord>,
}

impl TernaryCode {
    /// Builds a code from a list of starred words.
    ///
    /// # Panics
    /// If a word has the wrong length or a word repeats.
    pub fn new(n: usize, mut words: Vec<StarredWord>) -> Self {
        assert!((2..=64).contains(&n), "code length {n} out of range");
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
    pub fn words(&self) -> &[StarredWord] {
        &self.words
    }

    /// Membership test.
    pub fn contains(&self, w: &StarredWord) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Minimum pairwise distance; `None` for fewer than two words.
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

    /// Splits the code into its even and odd binary parts.
    ///
    /// Both parts have the same size as the code itself unless two codewords
    /// share a member, which forces their distance below 3 and is reported as
    /// an error.
    pub fn decompose(&self) -> Result<(BinaryCode, BinaryCode), DecomposeError> {
        let mut evens: Vec<BinaryWord> = self.words.iter().map(|w| w.even_part()).collect();
        let mut odds: Vec<BinaryWord> = self.words.iter().map(|w| w.odd_part()).collect();
        evens.sort_unstable();
        odds.sort_unstable();
        for pair in evens.windows(2) {
            if pair[0] == pair[1] {
                return Err(DecomposeError::SharedEvenPart { word: pair[0] });
            }
        }
        for pair in odds.windows(2) {
            if pair[0] == pair[1] {
                return Err(DecomposeError::SharedOddPart { word: pair[0] });
            }
        }
        Ok((BinaryCode::new(self.n, evens), BinaryCode::new(self.n, odds)))
    }
}

/// Why a ternary code cannot be decomposed into binary codes of its own size.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecomposeError {
    /// Two codewords share their even member (their distance is below 3).
    SharedEvenPart { word: BinaryWord },
    /// Two codewords share their odd member.
    SharedOddPart { word: BinaryWord },
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::SharedEvenPart { word } => {
                write!(f, "two codewords share the even part {word}")
            }
            DecomposeError::SharedOddPart { word } => {
                write!(f, "two codewords share the odd part {word}")
            }
        }
    }
}

impl core::error::Error for DecomposeError {}

/// Which of the two codes in a recombination a failure refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CodeRole {
    /// The even code, `e(C)`.
    Even,
    /// The odd code, `o(C)`.
    Odd,
}

impl fmt::Display for CodeRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeRole::Even => write!(f, "even code"),
            CodeRole::Odd => write!(f, "odd code"),
        }
    }
}

/// Why a pair of binary codes is not eligible for recombination.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairingError {
    /// The two codes have different lengths.
    LengthMismatch { n0: usize, n1: usize },
    /// One of the codes is not extended 1-perfect.
    NotExtendedPerfect { role: CodeRole, issue: PerfectnessIssue },
    /// A code has uniform parity, but the wrong one for its role.
    WrongParity { role: CodeRole },
}

impl fmt::Display for PairingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairingError::LengthMismatch { n0, n1 } => {
                write!(f, "code lengths differ: {n0} vs {n1}")
            }
            PairingError::NotExtendedPerfect { role, issue } => {
                write!(f, "{role} is not extended perfect: {issue}")
            }
            PairingError::WrongParity { role } => {
                write!(f, "{role} has the wrong parity")
            }
        }
    }
}

impl core::error::Error for PairingError {}

fn validate_pair(c0: &BinaryCode, c1: &BinaryCode) -> Result<(), PairingError> {
    if c0.n() != c1.n() {
        return Err(PairingError::LengthMismatch { n0: c0.n(), n1: c1.n() });
    }
    for (code, role, want) in [(c0, CodeRole::Even, Parity::Even), (c1, CodeRole::Odd, Parity::Odd)] {
        let parity = code
            .check_extended_perfect()
            .map_err(|issue| PairingError::NotExtendedPerfect { role, issue })?;
        if parity != want {
            return Err(PairingError::WrongParity { role });
        }
    }
    Ok(())
}

/// For each word of `c0`, the unique word of `c1` at distance 1.
///
/// Callers must have validated `c1` as extended perfect of length `c0.n()`;
/// existence and uniqueness of the neighbor then follow from the ball tiling.
fn partner_map(c0: &BinaryCode, c1: &BinaryCode) -> Vec<BinaryWord> {
    let n = c0.n();
    c0.words()
        .iter()
        .map(|x| {
            let mut found: Option<BinaryWord> = None;
            for c in 0..n {
                let y = x.flip(c);
                if c1.contains(&y) {
                    assert!(found.is_none(), "two neighbors of {x} in a perfect code");
                    found = Some(y);
                }
            }
            found.expect("perfect code tiles the opposite half-space")
        })
        .collect()
}

/// Recombines an even and an odd extended 1-perfect code into a ternary code
/// of minimum distance at least 3: each even codeword is joined with its
/// unique odd codeword at distance 1.
pub fn combine(c0: &BinaryCode, c1: &BinaryCode) -> Result<TernaryCode, PairingError> {
    validate_pair(c0, c1)?;
    let partners = partner_map(c0, c1);
    let words = c0
        .words()
        .iter()
        .zip(&partners)
        .map(|(x, y)| StarredWord::star_from_pair(*x, *y).expect("partners are adjacent"))
        .collect();
    Ok(TernaryCode::new(c0.n(), words))
}

/// A quadruple witnessing a violation of the distance-5 condition:
/// `d(x1, y1) = d(x2, y2) = 1`, `d(x1, x2) = 4`, and `x1 + x2 = y1 + y2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Quadruple {
    pub x1: BinaryWord,
    pub x2: BinaryWord,
    pub y1: BinaryWord,
    pub y2: BinaryWord,
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x1={} x2={} y1={} y2={}",
            self.x1, self.x2, self.y1, self.y2
        )
    }
}

/// Outcome of the distance-5 condition check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Condition2Report {
    /// Exact number of violating unordered quadruples.
    pub violations: u64,
    /// Up to [`Condition2Report::SAMPLE_CAP`] concrete violations.
    pub samples: Vec<Quadruple>,
}

impl Condition2Report {
    /// How many concrete violations are retained in `samples`.
    pub const SAMPLE_CAP: usize = 8;

    /// Whether the condition holds (no violations).
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// Checks the distance-5 condition for a validated recombination pair: no two
/// codewords `x1, x2` of `c0` at distance 4 may have equal differences with
/// their odd partners, `x1 + x2 = y1 + y2`.
///
/// Since each `x + partner(x)` is a weight-1 word, the differences coincide
/// exactly when the two partner edges use the same direction, so the scan
/// groups the words of `c0` by partner direction and looks for distance-4
/// pairs within a group.
pub fn check_condition2(c0: &BinaryCode, c1: &BinaryCode) -> Result<Condition2Report, PairingError> {
    validate_pair(c0, c1)?;
    let n = c0.n();
    let partners = partner_map(c0, c1);
    let mut by_direction: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for (i, (x, y)) in c0.words().iter().zip(&partners).enumerate() {
        let dir = (x.bits() ^ y.bits()).trailing_zeros() as usize;
        by_direction[dir].push(i);
    }
    let mut report = Condition2Report { violations: 0, samples: Vec::new() };
    for group in &by_direction {
        for (k, &i) in group.iter().enumerate() {
            for &j in &group[k + 1..] {
                let x1 = c0.words()[i];
                let x2 = c0.words()[j];
                if x1.distance(&x2) == 4 {
                    report.violations += 1;
                    if report.samples.len() < Condition2Report::SAMPLE_CAP {
                        report.samples.push(Quadruple {
                            x1,
                            x2,
                            y1: partners[i],
                            y2: partners[j],
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Why a ternary code fails verification against declared parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParamFailure {
    /// The code's length differs from the declared `n`.
    WrongLength { expected: usize, actual: usize },
    /// The declared weight is not `n - 1` (every starred word has one star).
    WrongWeight { expected: usize, actual: usize },
    /// The code size differs from the declared `M`.
    WrongSize { expected: usize, actual: usize },
    /// Two codewords closer than the declared minimum distance.
    DistanceTooSmall {
        a: StarredWord,
        b: StarredWord,
        distance: u32,
        required: u32,
    },
}

impl fmt::Display for ParamFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamFailure::WrongLength { expected, actual } => {
                write!(f, "length {actual}, declared {expected}")
            }
            ParamFailure::WrongWeight { expected, actual } => {
                write!(f, "weight {actual} declared, starred words have weight {expected}")
            }
            ParamFailure::WrongSize { expected, actual } => {
                write!(f, "size {actual}, declared {expected}")
            }
            ParamFailure::DistanceTooSmall { a, b, distance, required } => {
                write!(f, "words {a} and {b} at distance {distance}, need {required}")
            }
        }
    }
}

impl core::error::Error for ParamFailure {}

/// Verifies a ternary code against declared `(n, d, w; M)` parameters:
/// length, weight `w = n - 1`, size, and minimum distance at least `d` by a
/// full pairwise scan. Reports the first failure.
pub fn verify_params(
    code: &TernaryCode,
    n: usize,
    d: u32,
    w: usize,
    m: usize,
) -> Result<(), ParamFailure> {
    if code.n() != n {
        return Err(ParamFailure::WrongLength { expected: n, actual: code.n() });
    }
    if w != n - 1 {
        return Err(ParamFailure::WrongWeight { expected: n - 1, actual: w });
    }
    if code.len() != m {
        return Err(ParamFailure::WrongSize { expected: m, actual: code.len() });
    }
    for (i, a) in code.words().iter().enumerate() {
        for b in &code.words()[i + 1..] {
            let distance = a.distance(b);
            if distance < d {
                return Err(ParamFailure::DistanceTooSmall { a: *a, b: *b, distance, required: d });
            }
        }
    }
    Ok(())
}

/// Multiplication by the generator `x` in `GF(2^m)`, for labels in `0..2^m`.
fn gf_times_alpha(m: usize, v: u32) -> u32 {
    let poly: u32 = match m {
        2 => 0b111,    // x^2 + x + 1
        3 => 0b1011,   // x^3 + x + 1
        4 => 0b10011,  // x^4 + x + 1
        _ => unreachable!("only m in 2..=4 is constructed"),
    };
    let doubled = v << 1;
    if doubled >> m & 1 == 1 {
        doubled ^ poly
    } else {
        doubled
    }
}

/// A full-size distance-3 code: one starred word per even word of `F^n`,
/// `n = 2^m`, giving an `(n, 3, n-1; 2^(n-1))` ternary code.
///
/// The star of the word with even part `e` is placed at the coordinate whose
/// `m`-bit label is `alpha * L(e)`, where `L(e)` is the XOR of the labels of
/// `e`'s 1-positions and `alpha` is the generator of `GF(2^m)`. Multiplying
/// by `alpha` is what makes the placement collision-free: two even words at
/// distance 2 always get distinct stars, and the star pair never equals the
/// difference pair, which together force minimum distance 3 (larger even
/// differences give distance at least 3 on their own). The construction is
/// verified at build time: full pairwise scan at `m = 3`; at `m = 4`, an
/// exhaustive scan over all distance-2 even pairs (the only pairs that could
/// violate distance 3) plus a million sampled pairs.
///
/// # Panics
/// If `m` is outside `2..=4`, or — defensively — if verification fails.
pub fn full_distance3_code(m: usize) -> TernaryCode {
    assert!((2..=4).contains(&m), "full distance-3 code supported for m in 2..=4, got {m}");
    let n = 1usize << m;
    let words: Vec<StarredWord> = all_even_words(n)
        .into_iter()
        .map(|e| StarredWord::from_even(gf_times_alpha(m, label_xor(&e)) as usize, e))
        .collect();
    let code = TernaryCode::new(n, words);
    verify_full_distance3(&code, m);
    code
}

fn verify_full_distance3(code: &TernaryCode, m: usize) {
    let n = code.n();
    assert_eq!(code.len(), 1 << (n - 1), "size 2^(n-1) required");
    if m <= 3 {
        assert_eq!(code.min_distance(), Some(3), "full pairwise verification");
        return;
    }
    // Index words by even part for O(1) lookup; even parts are exactly all
    // even words, in enumeration order rank = bits >> 1.
    let lookup: Vec<StarredWord> = {
        let mut v = code.words().to_vec();
        v.sort_unstable_by_key(|w| w.even_part().bits());
        v
    };
    let at = |e: &BinaryWord| lookup[(e.bits() >> 1) as usize];
    // Exhaustive over the only possible violations: even parts at distance 2.
    for x in code.words() {
        let e = x.even_part();
        for a in 0..n {
            for b in a + 1..n {
                let f = e.flip(a).flip(b);
                let y = at(&f);
                assert!(x.distance(&y) >= 3, "{x} vs {y}");
            }
        }
    }
    // Sampled global check.
    let mut rng = SplitMix64::new(0x5eed_d3);
    let size = code.len() as u64;
    for _ in 0..1_000_000 {
        let i = rng.next_below(size) as usize;
        let j = rng.next_below(size) as usize;
        if i != j {
            let (x, y) = (code.words()[i], code.words()[j]);
            assert!(x.distance(&y) >= 3, "{x} vs {y}");
        }
    }
}
