//! Coordinate symmetries of binary codes.
//!
//! A symmetry of a code `C` of length `n` is a permutation of the `n`
//! coordinates that maps `C` onto itself.  These form a group, and
//! [`symmetries`] computes it as a small set of generators together with the
//! exact group order, using a stabilizer-chain search: for each coordinate
//! `k` in turn it determines the orbit of `k` under the subgroup fixing
//! coordinates `0..k` pointwise, and the order is the product of the orbit
//! sizes.
//!
//! The point of computing symmetries here is orbit reduction: when a search
//! problem is invariant under the symmetries of its input code, it suffices
//! to continue from one representative per orbit.  [`SymmetryGroup::orbits`]
//! performs that reduction on an arbitrary set of words.

use alloc::vec;
use alloc::vec::Vec;

use crate::binary_codes::BinaryCode;
use crate::words::{BinaryWord, Permutation};

/// A permutation group acting on the coordinates `0..n`, given by
/// generators and its exact order.
///
/// Produced by [`symmetries`]; the generator set is base-adapted (each
/// generator fixes some prefix of the coordinates pointwise), which keeps it
/// short: at most `n - 1` generators even for groups of order in the
/// hundreds of thousands.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    n: usize,
    generators: Vec<Permutation>,
    order: u128,
}

/// One orbit of a set of words under a [`SymmetryGroup`].
///
/// `members` is sorted by numeric value and `representative` is the least
/// member, so independent runs pick the same representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub representative: BinaryWord,
    pub members: Vec<BinaryWord>,
}

impl SymmetryGroup {
    /// The identity-only group on `n` coordinates.
    pub fn trivial(n: usize) -> Self {
        SymmetryGroup {
            n,
            generators: Vec::new(),
            order: 1,
        }
    }

    /// Number of coordinates the group acts on.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Generating permutations.  Empty for the trivial group.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Exact group order.
    pub fn order(&self) -> u128 {
        self.order
    }

    /// Partitions `points` into orbits under the generated group.
    ///
    /// Each orbit is the full group orbit of its members, so if `points` is
    /// closed under the group action the result is a partition of `points`;
    /// words reachable from a given point but absent from `points` are
    /// included in the orbit regardless.  Orbits are sorted by
    /// representative, members by numeric value; representatives are the
    /// numerically least members, e.g. the 16 weight-1 words of length 16
    /// collapse under a transitive group to the single representative with
    /// bit 0 set.
    pub fn orbits(&self, points: &[BinaryWord]) -> Vec<Orbit> {
        let mut out: Vec<Orbit> = Vec::new();
        let mut seen: Vec<BinaryWord> = Vec::new();
        for &start in points {
            if seen.binary_search_by_key(&start.bits(), |w| w.bits()).is_ok() {
                continue;
            }
            let mut members = vec![start];
            let mut frontier = vec![start];
            while let Some(w) = frontier.pop() {
                for g in &self.generators {
                    let img = g.apply(&w);
                    if let Err(pos) =
                        members.binary_search_by_key(&img.bits(), |m| m.bits())
                    {
                        members.insert(pos, img);
                        frontier.push(img);
                    }
                }
            }
            for &m in &members {
                if let Err(pos) =
                    seen.binary_search_by_key(&m.bits(), |w| w.bits())
                {
                    seen.insert(pos, m);
                }
            }
            out.push(Orbit {
                representative: members[0],
                members,
            });
        }
        out.sort_by_key(|o| o.representative.bits());
        out
    }
}

/// Computes the full group of coordinate permutations preserving `code`.
///
/// Every returned generator `g` satisfies `g(code) = code` word for word,
/// and the reported order is exact.  The search fixes coordinates `0, 1,
/// ...` in turn; candidate images are pruned by per-coordinate column
/// statistics and by a pattern-multiset refinement that compares, for the
/// assigned coordinates, the multiset of bit patterns the code induces on
/// the source prefix against the multiset induced on the chosen images.  At
/// full depth that comparison is exactly the condition `g(code) = code`.
///
/// Supports `n <= 32`; the order of a subgroup of `S_32` fits comfortably
/// in `u128`.
pub fn symmetries(code: &BinaryCode) -> SymmetryGroup {
    let n = code.n();
    assert!(
        (1..=32).contains(&n),
        "symmetry search supports lengths 1..=32, got {n}"
    );
    let search = AutSearch::new(code);
    let mut generators: Vec<Permutation> = Vec::new();
    let mut order: u128 = 1;
    for k in 0..n {
        let mut orbit = prefix_orbit(&generators, n, k);
        for j in k + 1..n {
            if orbit & (1 << j) != 0 {
                continue;
            }
            if let Some(g) = search.find(k, j) {
                debug_assert!(code_preserved(code, &g));
                generators.push(g);
                orbit = prefix_orbit(&generators, n, k);
            }
        }
        order *= u128::from(orbit.count_ones());
    }
    SymmetryGroup {
        n,
        generators,
        order,
    }
}

fn code_preserved(code: &BinaryCode, g: &Permutation) -> bool {
    code.words().iter().all(|w| code.contains(&g.apply(w)))
}

/// Orbit of point `k` (as a bitmask) under those generators that fix the
/// coordinates `0..k` pointwise.
fn prefix_orbit(generators: &[Permutation], n: usize, k: usize) -> u32 {
    let fixing: Vec<&Permutation> = generators
        .iter()
        .filter(|g| (0..k).all(|i| g.image(i) == i))
        .collect();
    let mut orbit: u32 = 1 << k;
    let mut frontier = vec![k];
    while let Some(p) = frontier.pop() {
        for g in &fixing {
            let q = g.image(p);
            debug_assert!(q < n);
            if orbit & (1 << q) == 0 {
                orbit |= 1 << q;
                frontier.push(q);
            }
        }
    }
    orbit
}

/// Backtracking search for a single automorphism with a prescribed action
/// on a prefix of the coordinates.
struct AutSearch {
    n: usize,
    /// Code words as plain bit masks.
    words: Vec<u32>,
    /// Sorted copy for the exact full-depth check.
    sorted_words: Vec<u32>,
    /// `column[i]` = number of code words with bit `i` set.
    column: Vec<u32>,
    /// `joint[i * n + j]` = number of code words with bits `i` and `j` set.
    joint: Vec<u32>,
    /// `key_base[idx]` = weight of word `idx` shifted above the pattern
    /// bits, so refinement keys never mix words of different weights.
    key_base: Vec<u64>,
    /// `source_hash[t]` = multiset hash of the (weight, prefix pattern)
    /// keys of the code at depth `t`; the target side must match.
    source_hash: Vec<u64>,
}

/// SplitMix64 finalizer, used as the per-key mixer of the multiset hash.
fn mix64(mut x: u64) -> u64 {
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn depth_mask(t: usize) -> u32 {
    if t + 1 >= 32 {
        !0
    } else {
        (1 << (t + 1)) - 1
    }
}

impl AutSearch {
    fn new(code: &BinaryCode) -> Self {
        let n = code.n();
        let words: Vec<u32> = code.words().iter().map(|w| w.bits() as u32).collect();
        let mut sorted_words = words.clone();
        sorted_words.sort_unstable();
        let mut column = vec![0u32; n];
        let mut joint = vec![0u32; n * n];
        for &w in &words {
            for i in 0..n {
                if w & (1 << i) != 0 {
                    column[i] += 1;
                    for j in 0..n {
                        if w & (1 << j) != 0 {
                            joint[i * n + j] += 1;
                        }
                    }
                }
            }
        }
        let key_base: Vec<u64> = words
            .iter()
            .map(|&w| u64::from(w.count_ones()) << 32)
            .collect();
        let mut source_hash = Vec::with_capacity(n);
        for t in 0..n {
            let mask = depth_mask(t);
            let mut sum = 0u64;
            for (idx, &w) in words.iter().enumerate() {
                sum = sum.wrapping_add(mix64(key_base[idx] | u64::from(w & mask)));
            }
            source_hash.push(sum);
        }
        AutSearch {
            n,
            words,
            sorted_words,
            column,
            joint,
            key_base,
            source_hash,
        }
    }

    /// Searches for an automorphism fixing coordinates `0..k` pointwise and
    /// mapping `k` to `j`.  Returns the first one found, or `None` after an
    /// exhaustive search.
    fn find(&self, k: usize, j: usize) -> Option<Permutation> {
        let mut state = SearchState {
            images: vec![usize::MAX; self.n],
            used: 0,
            // Bit pattern each code word induces on the images chosen so
            // far, maintained incrementally: bit `t` of `pat_image[w]` is
            // the bit of word `w` at `images[t]`.
            pat_image: self.words.clone(),
        };
        // pat_image starts as the identity patterns; the prefix assignment
        // below keeps bits 0..k as-is, which is exactly the identity image.
        for i in 0..k {
            state.images[i] = i;
            state.used |= 1 << i;
        }
        if !self.assign(&mut state, k, j) {
            return None;
        }
        if self.dfs(&mut state, k + 1) {
            return Some(
                Permutation::from_images(&state.images).expect("bijection by construction"),
            );
        }
        None
    }

    /// Tries `images[t] = p`; returns false (state unchanged) if pruned.
    fn assign(&self, state: &mut SearchState, t: usize, p: usize) -> bool {
        if self.column[t] != self.column[p] {
            return false;
        }
        for s in 0..t {
            if self.joint[t * self.n + s] != self.joint[p * self.n + state.images[s]] {
                return false;
            }
        }
        state.images[t] = p;
        state.used |= 1 << p;
        let clear = !(1u32 << t);
        for (pat, &w) in state.pat_image.iter_mut().zip(&self.words) {
            let bit = (w >> p) & 1;
            *pat = (*pat & clear) | (bit << t);
        }
        if self.refine_ok(state, t) {
            true
        } else {
            self.unassign(state, t, p);
            false
        }
    }

    fn unassign(&self, state: &mut SearchState, t: usize, p: usize) {
        state.images[t] = usize::MAX;
        state.used &= !(1u32 << p);
        // pat_image bits at position t are stale but every consumer masks
        // to the assigned depth, so no restore is needed.
    }

    /// Multiset comparison of induced (weight, bit pattern) keys at depth
    /// `t`: the code restricted to coordinates `0..=t` must look the same
    /// as the code restricted to their images.  Compared through a
    /// commutative hash, so a stray collision can only delay the search;
    /// the exact check at full depth decides acceptance.
    fn refine_ok(&self, state: &SearchState, t: usize) -> bool {
        let mask = depth_mask(t);
        let mut sum = 0u64;
        for (idx, &pat) in state.pat_image.iter().enumerate() {
            sum = sum.wrapping_add(mix64(self.key_base[idx] | u64::from(pat & mask)));
        }
        sum == self.source_hash[t]
    }

    /// Extends the assignment from depth `t` onward, in ascending image
    /// order; returns true as soon as one full extension passes the exact
    /// preservation check.
    fn dfs(&self, state: &mut SearchState, t: usize) -> bool {
        if t == self.n {
            return self.full_check(state);
        }
        for p in 0..self.n {
            if state.used & (1 << p) != 0 {
                continue;
            }
            if self.assign(state, t, p) {
                if self.dfs(state, t + 1) {
                    return true;
                }
                self.unassign(state, t, p);
            }
        }
        false
    }

    fn full_check(&self, state: &SearchState) -> bool {
        self.words.iter().enumerate().all(|(idx, _)| {
            let img = state.pat_image[idx];
            self.sorted_words.binary_search(&img).is_ok()
        })
    }
}

struct SearchState {
    images: Vec<usize>,
    used: u32,
    pat_image: Vec<u32>,
}
