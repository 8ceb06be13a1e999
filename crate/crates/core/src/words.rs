//! Words of the binary space `F^n` and the starred space `X^n`, plus the
//! coordinate permutations and isometries acting on them.
//!
//! A starred word has exactly one `*` coordinate and binary values elsewhere;
//! substituting `0` and `1` for the star yields an unordered pair of binary
//! words at Hamming distance 1, one of even and one of odd weight. Words are
//! stored as machine integers (`n <= 64`); coordinate 1 is the least
//! significant bit, and the displayed/lexicographic order reads coordinate 1
//! first (leftmost).
//!
//! ```
//! use starcw_core::words::{BinaryWord, StarredWord};
//!
//! let even = BinaryWord::from_coords(4, &[1, 2]); // symbols 0110
//! let word = StarredWord::from_even(2, even);     // symbols 01*0
//! assert_eq!(word.to_string(), "01*0");
//! assert_eq!(word.odd_part(), BinaryWord::from_coords(4, &[1]));
//! ```

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A binary word of length `n <= 64`. Coordinate `i` (0-based) is bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: u64,
    n: u8,
}

/// Weight parity of a binary word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl BinaryWord {
    /// Builds a word from raw bits.
    ///
    /// # Panics
    /// If `n` is outside `1..=64` or `bits` has bits set at or above `n`.
    pub fn new(n: usize, bits: u64) -> Self {
        assert!((1..=64).contains(&n), "word length {n} out of range 1..=64");
        assert!(
            bits & !mask(n) == 0,
            "bits 0x{bits:x} exceed word length {n}"
        );
        Self { bits, n: n as u8 }
    }

    /// The all-zero word.
    pub fn zero(n: usize) -> Self {
        Self::new(n, 0)
    }

    /// The weight-1 word with a single one at `coord`.
    pub fn unit(n: usize, coord: usize) -> Self {
        assert!(coord < n, "coordinate {coord} out of range for length {n}");
        Self::new(n, 1u64 << coord)
    }

    /// Word with ones exactly at the listed coordinates.
    pub fn from_coords(n: usize, coords: &[usize]) -> Self {
        let mut bits = 0u64;
        for &c in coords {
            assert!(c < n, "coordinate {c} out of range for length {n}");
            assert!(bits & (1 << c) == 0, "duplicate coordinate {c}");
            bits |= 1 << c;
        }
        Self::new(n, bits)
    }

    /// Word length `n`.
    pub fn len(&self) -> usize {
        self.n as usize
    }

    /// Raw bit representation (coordinate `i` = bit `i`).
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Weight parity.
    pub fn parity(&self) -> Parity {
        if self.weight() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Value at `coord` (0-based).
    pub fn bit(&self, coord: usize) -> bool {
        assert!(coord < self.len());
        self.bits >> coord & 1 == 1
    }

    /// Copy with the value at `coord` flipped.
    pub fn flip(&self, coord: usize) -> Self {
        assert!(coord < self.len());
        Self {
            bits: self.bits ^ (1 << coord),
            n: self.n,
        }
    }

    /// Hamming distance.
    ///
    /// # Panics
    /// If the lengths differ.
    pub fn distance(&self, other: &Self) -> u32 {
        assert_eq!(self.n, other.n, "length mismatch in distance");
        (self.bits ^ other.bits).count_ones()
    }

    /// All words within Hamming distance `radius` (center included), ordered
    /// by weight of the difference and then numerically.
    pub fn ball(&self, radius: u32) -> Vec<Self> {
        let n = self.len();
        let mut out = Vec::new();
        for w in 0..=radius.min(n as u32) {
            for_each_mask(n as u32, w, &mut |m| {
                out.push(Self {
                    bits: self.bits ^ m,
                    n: self.n,
                });
            });
        }
        out
    }

    /// Key realizing the lexicographic order that reads coordinate 1 first.
    fn lex_key(&self) -> u64 {
        self.bits.reverse_bits() >> (64 - self.n as u32)
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.lex_key()).cmp(&(other.n, other.lex_key()))
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::ops::BitXor for BinaryWord {
    type Output = BinaryWord;
    fn bitxor(self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "length mismatch in xor");
        Self {
            bits: self.bits ^ rhs.bits,
            n: self.n,
        }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

const fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Calls `f` for every `n`-bit mask of Hamming weight exactly `w`, in
/// increasing numeric order (Gosper's hack).
fn for_each_mask(n: u32, w: u32, f: &mut impl FnMut(u64)) {
    if w > n {
        return;
    }
    if w == 0 {
        f(0);
        return;
    }
    if w == 64 {
        f(u64::MAX);
        return;
    }
    let last = ((1u64 << w) - 1) << (n - w);
    let mut m = (1u64 << w) - 1;
    loop {
        f(m);
        if m == last {
            return;
        }
        let u = m & m.wrapping_neg();
        let v = m + u;
        m = v | (((m ^ v) >> 2) / u);
    }
}

/// All even-weight words of length `n`, in increasing numeric order.
///
/// Materializes `2^(n-1)` words; restricted to `n <= 28` to keep that sane.
pub fn all_even_words(n: usize) -> Vec<BinaryWord> {
    half_space(n, Parity::Even)
}

/// All odd-weight words of length `n`, in increasing numeric order.
pub fn all_odd_words(n: usize) -> Vec<BinaryWord> {
    half_space(n, Parity::Odd)
}

fn half_space(n: usize, parity: Parity) -> Vec<BinaryWord> {
    assert!(
        (2..=28).contains(&n),
        "half-space enumeration supports 2..=28, got {n}"
    );
    (0..1u64 << (n - 1))
        .map(|r| BinaryWord::new(n, half_space_word(r, parity)))
        .collect()
}

fn half_space_word(rank: u64, parity: Parity) -> u64 {
    let fix = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    (rank << 1) | ((rank.count_ones() as u64 + fix) & 1)
}

/// Rank of a word within its parity half-space (inverse of the enumeration
/// order of [`all_even_words`]/[`all_odd_words`]): bits above coordinate 1
/// determine the word, so the rank is just `bits >> 1`.
pub fn half_space_rank(word: &BinaryWord) -> u64 {
    word.bits() >> 1
}

/// Word of the given parity and length with the given half-space rank.
pub fn word_at_rank(n: usize, parity: Parity, rank: u64) -> BinaryWord {
    assert!(rank < 1u64 << (n - 1), "rank {rank} out of range");
    BinaryWord::new(n, half_space_word(rank, parity))
}

/// All starred words of length `n` (there are `n * 2^(n-1)`), grouped by star
/// coordinate and ordered by even part within each group.
pub fn all_starred_words(n: usize) -> Vec<StarredWord> {
    let evens = all_even_words(n);
    let mut out = Vec::with_capacity(n << (n - 1));
    for star in 0..n {
        for &e in &evens {
            out.push(StarredWord::from_even(star, e));
        }
    }
    out
}

/// Error from pairing two binary words into a starred word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairError {
    /// The two members have different lengths.
    LengthMismatch { left: usize, right: usize },
    /// The two members are not at Hamming distance 1.
    NotAdjacent { distance: u32 },
}

impl fmt::Display for PairError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairError::LengthMismatch { left, right } => {
                write!(f, "member lengths differ: {left} vs {right}")
            }
            PairError::NotAdjacent { distance } => {
                write!(f, "members are at distance {distance}, expected 1")
            }
        }
    }
}

impl core::error::Error for PairError {}

/// A word of `X^n`: one starred coordinate, binary values elsewhere.
///
/// Canonically stored as the star position plus the even-weight member of the
/// pair `{e, e XOR unit(star)}`; the value the even member carries *at* the
/// star position is determined by the parity of the other coordinates, so the
/// representation is unique.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarredWord {
    star: u8,
    even: BinaryWord,
}

impl StarredWord {
    /// Builds a starred word from its star position and even member.
    ///
    /// # Panics
    /// If `star >= even.len()` or `even` has odd weight.
    pub fn from_even(star: usize, even: BinaryWord) -> Self {
        assert!(star < even.len(), "star {star} out of range");
        assert!(
            even.parity() == Parity::Even,
            "even member must have even weight"
        );
        Self {
            star: star as u8,
            even,
        }
    }

    /// Builds a starred word from its star position and either member.
    pub fn from_member(star: usize, member: BinaryWord) -> Self {
        match member.parity() {
            Parity::Even => Self::from_even(star, member),
            Parity::Odd => Self::from_even(star, member.flip(star)),
        }
    }

    /// Builds the starred word `{a, b}` from two binary words at distance 1.
    pub fn star_from_pair(a: BinaryWord, b: BinaryWord) -> Result<Self, PairError> {
        if a.len() != b.len() {
            return Err(PairError::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        let d = a.distance(&b);
        if d != 1 {
            return Err(PairError::NotAdjacent { distance: d });
        }
        let star = (a.bits() ^ b.bits()).trailing_zeros() as usize;
        let even = match a.parity() {
            Parity::Even => a,
            Parity::Odd => b,
        };
        Ok(Self::from_even(star, even))
    }

    /// Word length `n`.
    pub fn len(&self) -> usize {
        self.even.len()
    }

    /// Star coordinate (0-based).
    pub fn star(&self) -> usize {
        self.star as usize
    }

    /// The even-weight member.
    pub fn even_part(&self) -> BinaryWord {
        self.even
    }

    /// The odd-weight member.
    pub fn odd_part(&self) -> BinaryWord {
        self.even.flip(self.star())
    }

    /// Both members, even first.
    pub fn members(&self) -> (BinaryWord, BinaryWord) {
        (self.even_part(), self.odd_part())
    }

    /// Binary value at a non-star coordinate; `None` at the star.
    pub fn value(&self, coord: usize) -> Option<bool> {
        assert!(coord < self.len());
        if coord == self.star() {
            None
        } else {
            Some(self.even.bit(coord))
        }
    }

    /// Hamming distance in `X^n`: coordinates differ unless both carry the
    /// same binary value or both are starred.
    ///
    /// # Panics
    /// If the lengths differ.
    pub fn distance(&self, other: &Self) -> u32 {
        assert_eq!(self.len(), other.len(), "length mismatch in distance");
        let diff = self.even.bits() ^ other.even.bits();
        if self.star == other.star {
            (diff & !(1 << self.star)).count_ones()
        } else {
            2 + (diff & !(1 << self.star) & !(1 << other.star)).count_ones()
        }
    }

    /// Distance to a binary word: the star coordinate differs from both `0`
    /// and `1`, the rest compare as usual.
    pub fn distance_to_binary(&self, other: &BinaryWord) -> u32 {
        assert_eq!(self.len(), other.len(), "length mismatch in distance");
        1 + ((self.even.bits() ^ other.bits()) & !(1 << self.star)).count_ones()
    }

    /// All starred words within distance `radius` (center included).
    pub fn ball(&self, radius: u32) -> Vec<StarredWord> {
        let n = self.len();
        let s = self.star();
        let mut out = Vec::new();
        // Same star: distance is the number of changed values off the star.
        for w in 0..=radius.min(n as u32 - 1) {
            for_each_mask_avoiding(n, &[s], w, &mut |m| {
                let v = (self.even.bits() & !(1 << s)) ^ m;
                out.push(StarredWord::from_member(s, BinaryWord::new(n, v)));
            });
        }
        // Moved star: positions s and t differ for free, so radius shrinks by
        // 2 and the value the new word carries at s is unconstrained.
        if radius >= 2 {
            for t in 0..n {
                if t == s {
                    continue;
                }
                for w in 0..=(radius - 2).min(n as u32 - 2) {
                    for_each_mask_avoiding(n, &[s, t], w, &mut |m| {
                        let base = (self.even.bits() & !(1 << s) & !(1 << t)) ^ m;
                        for b in 0..2u64 {
                            let v = base | (b << s);
                            out.push(StarredWord::from_member(t, BinaryWord::new(n, v)));
                        }
                    });
                }
            }
        }
        out
    }

    fn symbol_rank(&self, coord: usize) -> u8 {
        if coord == self.star() {
            0 // '*' sorts before '0' and '1'
        } else if self.even.bit(coord) {
            2
        } else {
            1
        }
    }
}

impl Ord for StarredWord {
    /// Lexicographic on symbols, coordinate 1 first, with `* < 0 < 1`.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in 0..self.len() {
            match self.symbol_rank(i).cmp(&other.symbol_rank(i)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for StarredWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StarredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(match self.symbol_rank(i) {
                0 => "*",
                1 => "0",
                _ => "1",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for StarredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarredWord({self})")
    }
}

/// Weight-`w` masks over the `n` coordinates excluding `skip`, via a compact
/// enumeration over the remaining positions.
pub(crate) fn for_each_mask_avoiding(n: usize, skip: &[usize], w: u32, f: &mut impl FnMut(u64)) {
    let keep: Vec<usize> = (0..n).filter(|i| !skip.contains(i)).collect();
    for_each_mask(keep.len() as u32, w, &mut |packed| {
        let mut m = 0u64;
        let mut rest = packed;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            m |= 1 << keep[j];
            rest &= rest - 1;
        }
        f(m);
    });
}

/// Error from building a permutation out of an image table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PermutationError {
    /// Some coordinate image repeats or is out of range.
    NotABijection,
}

impl fmt::Display for PermutationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "image table is not a bijection on coordinates")
    }
}

impl core::error::Error for PermutationError {}

/// A permutation of the `n` coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Identity on `n` coordinates.
    pub fn identity(n: usize) -> Self {
        assert!((1..=64).contains(&n));
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// Permutation sending coordinate `i` to `images[i]`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermutationError> {
        let n = images.len();
        if n == 0 || n > 64 {
            return Err(PermutationError::NotABijection);
        }
        let mut seen = 0u64;
        for &img in images {
            if img >= n || seen >> img & 1 == 1 {
                return Err(PermutationError::NotABijection);
            }
            seen |= 1 << img;
        }
        Ok(Self {
            images: images.iter().map(|&i| i as u8).collect(),
        })
    }

    /// The transposition of `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    /// Number of coordinates.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    /// Image of coordinate `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u8 == j)
    }

    /// Applies the permutation to a binary word: bit `i` moves to `image(i)`.
    pub fn apply(&self, w: &BinaryWord) -> BinaryWord {
        assert_eq!(self.len(), w.len(), "length mismatch in apply");
        let mut bits = 0u64;
        let mut rest = w.bits();
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            bits |= 1 << self.images[i];
            rest &= rest - 1;
        }
        BinaryWord::new(w.len(), bits)
    }

    /// Applies the permutation to a starred word.
    pub fn apply_starred(&self, x: &StarredWord) -> StarredWord {
        StarredWord::from_even(self.image(x.star()), self.apply(&x.even_part()))
    }

    /// Composition: `p.compose(&q)` applies `q` first, then `p`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self {
            images: (0..self.len())
                .map(|i| self.images[other.image(i)])
                .collect(),
        }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut images = alloc::vec![0u8; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Self { images }
    }
}

/// An isometry of `X^n`: a coordinate permutation combined with a binary
/// translation, acting as `c -> perm(c XOR shift)`.
///
/// Every such map preserves Hamming distance on `F^n` and the starred
/// distance on `X^n`; when the shift has odd weight the even and odd members
/// of each starred word swap roles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Isometry {
    perm: Permutation,
    shift: BinaryWord,
}

impl Isometry {
    /// Builds an isometry; the permutation and shift lengths must match.
    pub fn new(perm: Permutation, shift: BinaryWord) -> Self {
        assert_eq!(perm.len(), shift.len(), "length mismatch in isometry");
        Self { perm, shift }
    }

    /// The identity isometry.
    pub fn identity(n: usize) -> Self {
        Self::new(Permutation::identity(n), BinaryWord::zero(n))
    }

    /// The coordinate permutation part.
    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    /// The translation part.
    pub fn shift(&self) -> BinaryWord {
        self.shift
    }

    /// Applies the isometry to a binary word.
    pub fn apply(&self, w: &BinaryWord) -> BinaryWord {
        self.perm.apply(&(*w ^ self.shift))
    }

    /// Applies the isometry to a starred word; the image of either member is
    /// a member of the image.
    pub fn apply_starred(&self, x: &StarredWord) -> StarredWord {
        StarredWord::from_member(self.perm.image(x.star()), self.apply(&x.even_part()))
    }

    /// Composition: `a.compose(&b)` applies `b` first, then `a`.
    pub fn compose(&self, other: &Self) -> Self {
        let shift = other.shift ^ other.perm.inverse().apply(&self.shift);
        Self::new(self.perm.compose(&other.perm), shift)
    }

    /// Inverse isometry.
    pub fn inverse(&self) -> Self {
        Self::new(self.perm.inverse(), self.perm.apply(&self.shift))
    }
}
