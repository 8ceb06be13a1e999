//! Anticodes and diameter-perfect certification.
//!
//! The counting side of the engine: a code `C` with minimum distance `d`
//! and a set `A` of diameter at most `d - 1` always satisfy
//! `|C| * |A| <= |X^n|`, and `C` is *diameter perfect* when equality holds.
//! This module provides the diameter computation, the canonical radius-2
//! ball anticode of size `n^2`, the generalized pigeonhole bound behind the
//! inequality, the equality certifier, and the star-class analysis showing
//! that a set with minimum distance 3 and diameter at most 4 in `X^n`,
//! `n >= 16`, has at most `n` elements — the ingredient that pins the ball
//! as the largest diameter-4 anticode.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binary_codes::{check_equidistant_bound, EquidistantCheck};
use crate::rng::SplitMix64;
use crate::ternary_codes::TernaryCode;
use crate::words::{word_at_rank, BinaryWord, Parity, StarredWord};
use crate::starred_space_size;

/// A set of starred words together with its computed diameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anticode {
    n: usize,
    words: Vec<StarredWord>,
    diameter: u32,
}

impl Anticode {
    /// Builds an anticode from a non-empty set of words of length `n`,
    /// computing the diameter.
    ///
    /// # Panics
    /// If `words` is empty, contains duplicates, or mixes lengths.
    pub fn new(n: usize, mut words: Vec<StarredWord>) -> Self {
        assert!(!words.is_empty(), "anticode must be non-empty");
        for w in &words {
            assert_eq!(w.len(), n, "word length {} does not match n={n}", w.len());
        }
        words.sort_unstable();
        for pair in words.windows(2) {
            assert_ne!(pair[0], pair[1], "duplicate word {}", pair[0]);
        }
        let diameter = diameter_of(&words).expect("non-empty");
        Anticode { n, words, diameter }
    }

    /// Word length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of words.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// True when the anticode has no words (never, by construction).
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The words in increasing order.
    pub fn words(&self) -> &[StarredWord] {
        &self.words
    }

    /// Maximum pairwise distance.
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Membership test.
    pub fn contains(&self, w: &StarredWord) -> bool {
        self.words.binary_search(w).is_ok()
    }
}

/// Maximum pairwise distance of a set of starred words; `None` when empty,
/// 0 for singletons.
pub fn diameter_of(words: &[StarredWord]) -> Option<u32> {
    if words.is_empty() {
        return None;
    }
    let mut max = 0;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            max = max.max(a.distance(b));
        }
    }
    Some(max)
}

/// The ball `{ y in X^n : d(0, y) <= 2 }` around the zero binary word:
/// for every star position `s` it contains the word with even part `0` (at
/// distance 1 from `0`) and the `n - 1` words with even part `{s, j}` (at
/// distance 2), hence exactly `n^2` words.  Its diameter is 4 for `n >= 4`.
pub fn anticode_ball2(n: usize) -> Anticode {
    assert!(n >= 2, "need n >= 2, got {n}");
    let mut words = Vec::with_capacity(n * n);
    for s in 0..n {
        words.push(StarredWord::from_even(s, BinaryWord::zero(n)));
        for j in 0..n {
            if j != s {
                words.push(StarredWord::from_even(s, BinaryWord::from_coords(n, &[s, j])));
            }
        }
    }
    Anticode::new(n, words)
}

/// The generalized pigeonhole bound: if a space of `size_s` elements is
/// covered by sets of size `m` such that every element lies in the same
/// number of sets, and a code meets each set in at most `k` words, then
/// `|C| / size_s <= k / m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PigeonholeBound {
    /// Numerator `k` of the density bound `k / m`.
    pub numerator: u128,
    /// Denominator `m` of the density bound.
    pub denominator: u128,
    /// The implied cap `floor(size_s * k / m)` on the code size.
    pub cap: u128,
}

/// Computes the density bound `k / m` and the integer cap it implies on a
/// code in a space of `size_s` elements.
///
/// # Panics
/// If `m` is zero.
pub fn pigeonhole_bound(size_s: u128, m: u128, k: u128) -> PigeonholeBound {
    assert!(m >= 1, "covering sets must be non-empty");
    PigeonholeBound {
        numerator: k,
        denominator: m,
        cap: size_s * k / m,
    }
}

/// Outcome of a diameter-perfect certification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerfectionReport {
    pub code_size: u128,
    pub anticode_size: u128,
    /// `|X^n| = n * 2^(n-1)`.
    pub space: u128,
    /// `code_size * anticode_size`.
    pub product: u128,
    /// Whether the product attains the space size exactly.
    pub perfect: bool,
}

impl PerfectionReport {
    /// The inequality `|C| * |A| <= |X^n|`; holds for every valid pair.
    pub fn bound_holds(&self) -> bool {
        self.product <= self.space
    }
}

/// Why a (code, anticode) pair cannot be certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiameterPerfectError {
    /// Code and anticode live in different spaces.
    LengthMismatch { code: usize, anticode: usize },
    /// An empty code has no minimum distance.
    EmptyCode,
    /// The anticode diameter reaches the code's minimum distance.
    AnticodeTooWide { diameter: u32, min_distance: u32 },
}

impl fmt::Display for DiameterPerfectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiameterPerfectError::LengthMismatch { code, anticode } => {
                write!(f, "code length {code} vs anticode length {anticode}")
            }
            DiameterPerfectError::EmptyCode => write!(f, "empty code has no minimum distance"),
            DiameterPerfectError::AnticodeTooWide { diameter, min_distance } => write!(
                f,
                "anticode diameter {diameter} must stay below code minimum distance {min_distance}"
            ),
        }
    }
}

impl core::error::Error for DiameterPerfectError {}

/// Certifies whether `code` is diameter perfect with respect to `anticode`:
/// verifies that the anticode diameter stays below the code's minimum
/// distance, then tests `|C| * |A| = n * 2^(n-1)`.
///
/// Codes of a single word have no pairwise distance; they are treated as
/// having unbounded minimum distance, so any anticode qualifies.
pub fn is_diameter_perfect(
    code: &TernaryCode,
    anticode: &Anticode,
) -> Result<PerfectionReport, DiameterPerfectError> {
    if code.n() != anticode.n() {
        return Err(DiameterPerfectError::LengthMismatch {
            code: code.n(),
            anticode: anticode.n(),
        });
    }
    if code.is_empty() {
        return Err(DiameterPerfectError::EmptyCode);
    }
    if let Some(d) = code.min_distance() {
        if anticode.diameter() >= d {
            return Err(DiameterPerfectError::AnticodeTooWide {
                diameter: anticode.diameter(),
                min_distance: d,
            });
        }
    }
    let code_size = code.len() as u128;
    let anticode_size = anticode.len() as u128;
    let space = starred_space_size(code.n());
    let product = code_size * anticode_size;
    Ok(PerfectionReport {
        code_size,
        anticode_size,
        space,
        product,
        perfect: product == space,
    })
}

/// Which configuration a star class of a distance-3, diameter-4 set falls
/// into.  The cases mirror the proof that such a set has at most `n` words:
/// each shape limits how the rest of the set can look.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarClassCase {
    /// At most one word in the class; nothing to classify.
    Small,
    /// Three words with pairwise distance 4.
    ThreeMutualFour,
    /// Some pair at distance 4, but no such triple; forces class size <= 4.
    PairAtFour,
    /// All pairs at distance 3; forces class size <= 2.
    AllPairsThree,
}

/// Analysis of one non-empty star class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarClassReport {
    /// The star coordinate shared by the class.
    pub star: usize,
    /// Number of words with that star.
    pub size: usize,
    pub case: StarClassCase,
    /// For classes of two or more words: the result of puncturing the star
    /// coordinate and appending a parity bit, which turns the class into an
    /// equidistant binary code of distance 4 subject to the trivial or
    /// nontrivial size bound.
    pub equidistant: Option<EquidistantCheck>,
}

/// Result of checking a distance-3, diameter-4 set against the size bound
/// `|D| <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiameterSetCheck {
    pub size: usize,
    /// The bound `n`.
    pub bound: usize,
    pub min_distance: u32,
    pub diameter: u32,
    /// Non-empty star classes in increasing star order.
    pub classes: Vec<StarClassReport>,
    /// Size within bound, every class within its case bound, and every
    /// multi-word class passing the equidistant size check.
    pub satisfied: bool,
}

/// Why a set is outside the scope of the size-bound check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiameterSetError {
    Empty,
    /// The bound argument needs `n >= 16`.
    TooShort { n: usize },
    /// Minimum distance below 3.
    MinDistance { found: u32 },
    /// Diameter above 4.
    Diameter { found: u32 },
}

impl fmt::Display for DiameterSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiameterSetError::Empty => write!(f, "empty set"),
            DiameterSetError::TooShort { n } => write!(f, "need length >= 16, got {n}"),
            DiameterSetError::MinDistance { found } => {
                write!(f, "minimum distance {found} below 3")
            }
            DiameterSetError::Diameter { found } => write!(f, "diameter {found} above 4"),
        }
    }
}

impl core::error::Error for DiameterSetError {}

/// Deletes coordinate `i` and appends an even-parity bit, mapping a star
/// class of a distance-3/4 set to an equidistant distance-4 binary code:
/// distance-4 pairs keep equal parity bits, distance-3 pairs differ in
/// them, so every pair lands at distance exactly 4.
fn puncture_with_parity(e: &BinaryWord, i: usize) -> BinaryWord {
    let n = e.len();
    let bits = e.bits();
    let low = bits & ((1u64 << i) - 1);
    let high = bits >> (i + 1) << i;
    let mut out = low | high;
    out |= u64::from(out.count_ones() & 1) << (n - 1);
    BinaryWord::new(n, out)
}

/// Verifies the size bound `|D| <= n` for a set `D` of minimum distance 3
/// and diameter at most 4 in `X^n`, `n >= 16`, and classifies each star
/// class by the shape driving its own bound.
pub fn check_diameter_set(words: &[StarredWord]) -> Result<DiameterSetCheck, DiameterSetError> {
    if words.is_empty() {
        return Err(DiameterSetError::Empty);
    }
    let n = words[0].len();
    if n < 16 {
        return Err(DiameterSetError::TooShort { n });
    }
    let mut min = u32::MAX;
    let mut max = 0;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            let d = a.distance(b);
            min = min.min(d);
            max = max.max(d);
        }
    }
    if words.len() >= 2 && min < 3 {
        return Err(DiameterSetError::MinDistance { found: min });
    }
    if max > 4 {
        return Err(DiameterSetError::Diameter { found: max });
    }

    let mut by_star: Vec<Vec<StarredWord>> = vec![Vec::new(); n];
    for &w in words {
        by_star[w.star()].push(w);
    }
    let mut classes = Vec::new();
    let mut satisfied = words.len() <= n;
    for (star, class) in by_star.iter().enumerate() {
        if class.is_empty() {
            continue;
        }
        let case = classify_class(class);
        let class_ok = match case {
            StarClassCase::Small | StarClassCase::ThreeMutualFour => true,
            StarClassCase::PairAtFour => class.len() <= 4,
            StarClassCase::AllPairsThree => class.len() <= 2,
        };
        let equidistant = if class.len() >= 2 {
            let punctured: Vec<BinaryWord> = class
                .iter()
                .map(|w| puncture_with_parity(&w.even_part(), star))
                .collect();
            let check = check_equidistant_bound(&punctured)
                .expect("class distances 3/4 map to equidistant distance 4");
            satisfied &= check.satisfied() && check.distance == 4;
            Some(check)
        } else {
            None
        };
        satisfied &= class_ok;
        classes.push(StarClassReport {
            star,
            size: class.len(),
            case,
            equidistant,
        });
    }
    Ok(DiameterSetCheck {
        size: words.len(),
        bound: n,
        min_distance: if words.len() >= 2 { min } else { 0 },
        diameter: max,
        classes,
        satisfied,
    })
}

fn classify_class(class: &[StarredWord]) -> StarClassCase {
    if class.len() <= 1 {
        return StarClassCase::Small;
    }
    let mut pair_at_four = false;
    for (i, a) in class.iter().enumerate() {
        for (j, b) in class.iter().enumerate().skip(i + 1) {
            if a.distance(b) != 4 {
                continue;
            }
            pair_at_four = true;
            for c in &class[j + 1..] {
                if a.distance(c) == 4 && b.distance(c) == 4 {
                    return StarClassCase::ThreeMutualFour;
                }
            }
        }
    }
    if pair_at_four {
        StarClassCase::PairAtFour
    } else {
        StarClassCase::AllPairsThree
    }
}

/// A uniformly random starred word of length `n`.
fn random_starred_word(n: usize, rng: &mut SplitMix64) -> StarredWord {
    let star = rng.next_below(n as u64) as usize;
    let rank = rng.next_below(1 << (n - 1));
    StarredWord::from_even(star, word_at_rank(n, Parity::Even, rank))
}

/// Grows `start` into a maximal set with pairwise distances in `{3, 4}` by
/// shuffling the radius-4 ball around the first word and adding greedily.
/// Every word compatible with the whole set is within distance 4 of the
/// first word, so scanning that ball suffices for maximality.
///
/// # Panics
/// If `start` is empty or violates the pairwise distance constraint.
pub fn greedy_complete_diameter_set(
    start: &[StarredWord],
    rng: &mut SplitMix64,
) -> Vec<StarredWord> {
    assert!(!start.is_empty(), "need at least one seed word");
    for (i, a) in start.iter().enumerate() {
        for b in &start[i + 1..] {
            let d = a.distance(b);
            assert!((3..=4).contains(&d), "seed words at distance {d}");
        }
    }
    let mut chosen: Vec<StarredWord> = start.to_vec();
    let mut pool = start[0].ball(4);
    rng.shuffle(&mut pool);
    for cand in pool {
        if chosen
            .iter()
            .all(|w| matches!(w.distance(&cand), 3 | 4))
        {
            chosen.push(cand);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// A random maximal subset of `X^n` with pairwise distances in `{3, 4}`:
/// a random first word, then greedy completion in shuffled order.
pub fn greedy_maximal_diameter_set(n: usize, rng: &mut SplitMix64) -> Vec<StarredWord> {
    let first = random_starred_word(n, rng);
    greedy_complete_diameter_set(&[first], rng)
}

#[cfg(test)]
mod tests {
    extern crate std;

    use super::*;
    use crate::binary_codes::extended_hamming;
    use crate::ternary_codes::{combine, full_distance3_code};
    use crate::words::{all_starred_words, Isometry, Permutation};

    fn starred(n: usize, star: usize, coords: &[usize]) -> StarredWord {
        StarredWord::from_even(star, BinaryWord::from_coords(n, coords))
    }

    #[test]
    fn ball2_matches_full_enumeration() {
        for n in [4usize, 8] {
            let ball = anticode_ball2(n);
            let zero = BinaryWord::zero(n);
            let expected: Vec<StarredWord> = all_starred_words(n)
                .into_iter()
                .filter(|w| w.distance_to_binary(&zero) <= 2)
                .collect();
            assert_eq!(ball.len(), expected.len());
            for w in &expected {
                assert!(ball.contains(w));
            }
        }
    }

    #[test]
    fn ball2_size_and_diameter() {
        for n in [4usize, 8, 16] {
            let ball = anticode_ball2(n);
            assert_eq!(ball.len(), n * n);
            assert_eq!(ball.diameter(), 4);
        }
    }

    #[test]
    fn diameter_examples() {
        let n = 4;
        let single = starred(n, 2, &[1, 2]); // 01*0
        assert_eq!(diameter_of(&[single]), Some(0));
        assert_eq!(diameter_of(&[]), None);

        let n = 16;
        let a = starred(n, 0, &[]);
        let b = starred(n, 0, &[0, 1, 2, 3]); // *111000...0
        assert_eq!(diameter_of(&[a, b]), Some(3));
    }

    #[test]
    fn pigeonhole_examples() {
        let b = pigeonhole_bound(starred_space_size(16), 1 << 15, 16);
        assert_eq!(b.cap, 256);
        assert_eq!(pigeonhole_bound(1024, 64, 0).cap, 0);
        assert_eq!(pigeonhole_bound(1024, 64, 1).cap, 16);
    }

    #[test]
    #[should_panic(expected = "non-empty")]
    fn pigeonhole_rejects_zero_denominator() {
        pigeonhole_bound(1024, 0, 1);
    }

    /// The diameter-2 anticode of all words with star `s` within distance 2
    /// of the zero word; size `n`.
    fn star_class_anticode(n: usize, s: usize) -> Anticode {
        let mut words = vec![StarredWord::from_even(s, BinaryWord::zero(n))];
        for j in 0..n {
            if j != s {
                words.push(starred(n, s, &[s, j]));
            }
        }
        Anticode::new(n, words)
    }

    #[test]
    fn full_distance3_codes_are_diameter_perfect() {
        for m in [2usize, 3] {
            let n = 1 << m;
            let code = full_distance3_code(m);
            let anticode = star_class_anticode(n, 0);
            assert_eq!(anticode.diameter(), 2);
            let report = is_diameter_perfect(&code, &anticode).unwrap();
            assert!(report.bound_holds());
            assert!(report.perfect, "{} * {} != {}", report.code_size, report.anticode_size, report.space);
        }
    }

    #[test]
    fn distance3_combine_output_is_not_perfect() {
        // The distance-3 pairing of the length-16 extended code with its
        // coset: 2048 words, but a diameter-2 anticode is far too small.
        let c0 = extended_hamming(4);
        let c1 = c0.translate(&BinaryWord::unit(16, 0));
        let code = combine(&c0, &c1).unwrap();
        assert_eq!(code.len(), 2048);
        let mut small = star_class_anticode(16, 3);
        let words: Vec<StarredWord> = small.words()[..10].to_vec();
        small = Anticode::new(16, words);
        let report = is_diameter_perfect(&code, &small).unwrap();
        assert!(report.bound_holds());
        assert!(!report.perfect);
    }

    #[test]
    fn perfect_requires_exact_code_size() {
        // With the n=16 ball anticode of size 256, only M = 2048 can attain
        // the space size 16 * 2^15.
        let space = starred_space_size(16);
        let ball = anticode_ball2(16);
        assert_eq!(space % ball.len() as u128, 0);
        assert_eq!(space / ball.len() as u128, 2048);
    }

    #[test]
    fn certifier_rejects_bad_pairs() {
        let code = full_distance3_code(3);
        let wide = anticode_ball2(8); // diameter 4 >= min distance 3
        assert_eq!(
            is_diameter_perfect(&code, &wide),
            Err(DiameterPerfectError::AnticodeTooWide { diameter: 4, min_distance: 3 })
        );
        let other = anticode_ball2(4);
        assert!(matches!(
            is_diameter_perfect(&code, &other),
            Err(DiameterPerfectError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn proof_case_configurations_classify() {
        let n = 16;
        // Three words with mutual distances 4.
        let case1 = vec![
            starred(n, 0, &[1, 2]),
            starred(n, 0, &[3, 4]),
            starred(n, 0, &[5, 6]),
        ];
        let report = check_diameter_set(&case1).unwrap();
        assert!(report.satisfied);
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.classes[0].case, StarClassCase::ThreeMutualFour);

        // A pair at distance 4 and no triple.
        let case2 = vec![starred(n, 0, &[]), starred(n, 0, &[1, 2, 3, 4])];
        let report = check_diameter_set(&case2).unwrap();
        assert!(report.satisfied);
        assert_eq!(report.classes[0].case, StarClassCase::PairAtFour);

        // All pairs at distance 3.
        let case3 = vec![starred(n, 0, &[]), starred(n, 0, &[0, 1, 2, 3])];
        let report = check_diameter_set(&case3).unwrap();
        assert!(report.satisfied);
        assert_eq!(report.classes[0].case, StarClassCase::AllPairsThree);
    }

    #[test]
    fn greedy_completion_of_case1_stays_within_bound() {
        let n = 16;
        let seed = vec![
            starred(n, 0, &[1, 2]),
            starred(n, 0, &[3, 4]),
            starred(n, 0, &[5, 6]),
        ];
        let mut rng = SplitMix64::new(0x5eed_d1a3);
        for _ in 0..20 {
            let set = greedy_complete_diameter_set(&seed, &mut rng);
            assert!(set.len() <= n, "got {}", set.len());
            let report = check_diameter_set(&set).unwrap();
            assert!(report.satisfied);
        }
    }

    #[test]
    fn random_maximal_sets_stay_within_bound() {
        let n = 16;
        let mut rng = SplitMix64::new(0x5eed_d1a4);
        for _ in 0..100 {
            let set = greedy_maximal_diameter_set(n, &mut rng);
            assert!(set.len() <= n, "got {}", set.len());
            let report = check_diameter_set(&set).unwrap();
            assert!(report.satisfied);
            assert!(report.min_distance >= 3);
            assert!(report.diameter <= 4);
        }
    }

    #[test]
    fn check_rejects_out_of_scope_sets() {
        assert_eq!(check_diameter_set(&[]), Err(DiameterSetError::Empty));
        let short = vec![starred(8, 0, &[])];
        assert_eq!(check_diameter_set(&short), Err(DiameterSetError::TooShort { n: 8 }));
        let n = 16;
        let close = vec![starred(n, 0, &[]), starred(n, 0, &[0, 1])];
        assert_eq!(
            check_diameter_set(&close),
            Err(DiameterSetError::MinDistance { found: 1 })
        );
        let far = vec![starred(n, 0, &[]), starred(n, 0, &[1, 2, 3, 4, 5, 6])];
        assert_eq!(check_diameter_set(&far), Err(DiameterSetError::Diameter { found: 6 }));
    }

    #[test]
    fn singleton_set_is_trivially_bounded() {
        let set = vec![starred(16, 3, &[1, 2])];
        let report = check_diameter_set(&set).unwrap();
        assert!(report.satisfied);
        assert_eq!(report.classes[0].case, StarClassCase::Small);
    }

    #[test]
    fn ball_intersections_with_distance3_copies_stay_small() {
        // The diameter-4 ball meets every isometric copy of the full
        // distance-3 code in a set of minimum distance 3 and diameter at
        // most 4, so in at most 16 words.
        let n = 16;
        let ball = anticode_ball2(n);
        let f = full_distance3_code(4);
        let mut rng = SplitMix64::new(0x5eed_7e57);
        let mut images: Vec<usize> = (0..n).collect();
        for _ in 0..100 {
            rng.shuffle(&mut images);
            let perm = Permutation::from_images(&images).unwrap();
            let shift = BinaryWord::new(n, rng.next_u64() & 0xffff);
            let g = Isometry::new(perm, shift);
            let g_inv = g.inverse();
            let hits: Vec<StarredWord> = ball
                .words()
                .iter()
                .filter(|y| f.contains(&g_inv.apply_starred(y)))
                .copied()
                .collect();
            assert!(hits.len() <= n, "intersection of size {}", hits.len());
            if hits.len() >= 2 {
                let report = check_diameter_set(&hits).unwrap();
                assert!(report.satisfied);
            }
        }
    }
}
