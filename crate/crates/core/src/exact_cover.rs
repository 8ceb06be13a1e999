//! A generic exact cover solver over the dancing-links structure.
//!
//! An instance has a ground set `0..ground_size` and a list of candidates,
//! each covering a non-empty subset of the ground; a solution is a set of
//! candidates covering every ground element exactly once. The solver supports
//! node budgets (deterministic, machine-independent), restriction to a ground
//! subset, extension of a partial solution, and a monotone pruning hook — the
//! pieces the staged code search is built from.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

/// Pruning hook: given the chosen candidates so far (in choice order) and a
/// prospective next candidate, return `true` to allow it.
///
/// The predicate must be *monotone*: once it rejects a candidate against some
/// partial solution, it must also reject it against every extension of that
/// partial solution. The solver then only needs to consult it at the moment a
/// candidate is about to be chosen.
pub type PruneFn<'a> = &'a dyn Fn(&[u32], u32) -> bool;

/// What the solver should produce.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveMode {
    /// Stop at the first solution.
    First,
    /// Enumerate and return every solution.
    All,
    /// Count solutions without materializing them.
    Count,
}

/// Result of a solve or extend call.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolveOutcome {
    /// The solutions found, each as an ascending list of candidate ids
    /// (empty in [`SolveMode::Count`]).
    pub solutions: Vec<Vec<u32>>,
    /// Number of solutions encountered.
    pub count: u64,
    /// Number of candidate placements attempted.
    pub nodes: u64,
    /// Whether the search space was fully explored (false when the node
    /// budget ran out or the mode stopped the search early).
    pub exhausted: bool,
}

/// Why a partial solution cannot seed an extension.
///
/// A partial whose candidates overlap on some ground element is *not* an
/// error: it simply has no completions, and extension reports that as an
/// exhausted run with zero solutions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtendError {
    /// A candidate id outside the instance.
    UnknownCandidate { candidate: u32 },
    /// The pruning hook rejects a partial candidate.
    PrunedPartial { candidate: u32 },
}

impl fmt::Display for ExtendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendError::UnknownCandidate { candidate } => {
                write!(f, "candidate {candidate} does not exist")
            }
            ExtendError::PrunedPartial { candidate } => {
                write!(f, "candidate {candidate} is rejected by the pruning hook")
            }
        }
    }
}

impl core::error::Error for ExtendError {}

/// An instance restricted to a ground subset, with maps back to the original
/// indexing.
#[derive(Clone, Debug)]
pub struct Restriction {
    /// The induced sub-instance.
    pub instance: ExactCoverInstance,
    /// New ground index to old ground index (ascending).
    pub ground_map: Vec<u32>,
    /// New candidate id to old candidate id (ascending).
    pub candidate_map: Vec<u32>,
}

/// An exact cover instance: `ground_size` elements and one cover set per
/// candidate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactCoverInstance {
    ground_size: usize,
    covers: Vec<Vec<u32>>,
}

impl ExactCoverInstance {
    /// Builds an instance.
    ///
    /// # Panics
    /// If a cover is empty, unsorted, has repeats, or points outside the
    /// ground set — malformed instances are rejected outright.
    pub fn new(ground_size: usize, covers: Vec<Vec<u32>>) -> Self {
        assert!(covers.len() <= u32::MAX as usize, "too many candidates");
        for (id, cover) in covers.iter().enumerate() {
            assert!(!cover.is_empty(), "candidate {id} covers nothing");
            for pair in cover.windows(2) {
                assert!(pair[0] < pair[1], "candidate {id} has an unsorted or repeated cover");
            }
            assert!(
                (*cover.last().unwrap() as usize) < ground_size,
                "candidate {id} covers a ground element out of range"
            );
        }
        Self { ground_size, covers }
    }

    /// Number of ground elements.
    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Number of candidates.
    pub fn num_candidates(&self) -> usize {
        self.covers.len()
    }

    /// The ground elements covered by a candidate, ascending.
    pub fn cover(&self, candidate: u32) -> &[u32] {
        &self.covers[candidate as usize]
    }

    /// The sub-instance induced by a ground subset: candidates meeting the
    /// subset survive, with covers intersected and reindexed.
    pub fn restrict(&self, ground: &[u32]) -> Restriction {
        let mut ground_map: Vec<u32> = ground.to_vec();
        ground_map.sort_unstable();
        ground_map.dedup();
        assert!(
            ground_map.last().map_or(true, |&g| (g as usize) < self.ground_size),
            "ground subset out of range"
        );
        let mut new_index = alloc::vec![u32::MAX; self.ground_size];
        for (new, &old) in ground_map.iter().enumerate() {
            new_index[old as usize] = new as u32;
        }
        let mut covers = Vec::new();
        let mut candidate_map = Vec::new();
        for (id, cover) in self.covers.iter().enumerate() {
            let reduced: Vec<u32> = cover
                .iter()
                .filter_map(|&g| {
                    let n = new_index[g as usize];
                    (n != u32::MAX).then_some(n)
                })
                .collect();
            if !reduced.is_empty() {
                covers.push(reduced);
                candidate_map.push(id as u32);
            }
        }
        Restriction {
            instance: ExactCoverInstance::new(ground_map.len(), covers),
            ground_map,
            candidate_map,
        }
    }

    /// Solves the instance from scratch.
    pub fn solve(&self, mode: SolveMode, budget: Option<u64>, prune: Option<PruneFn>) -> SolveOutcome {
        self.extend(&[], mode, budget, prune)
            .expect("empty partial is always valid")
    }

    /// Finds the solutions containing all candidates of `partial`.
    ///
    /// The partial must be conflict-free and acceptable to the pruning hook;
    /// returned solutions include the partial's candidates.
    pub fn extend(
        &self,
        partial: &[u32],
        mode: SolveMode,
        budget: Option<u64>,
        prune: Option<PruneFn>,
    ) -> Result<SolveOutcome, ExtendError> {
        let mut solutions: Vec<Vec<u32>> = Vec::new();
        let keep = !matches!(mode, SolveMode::Count);
        let stats = self.run(partial, budget, prune, &mut |sol| {
            if keep {
                solutions.push(sol.to_vec());
            }
            !matches!(mode, SolveMode::First)
        })?;
        Ok(SolveOutcome {
            solutions,
            count: stats.count,
            nodes: stats.nodes,
            exhausted: stats.exhausted,
        })
    }

    /// The streaming engine behind [`ExactCoverInstance::solve`] and
    /// [`ExactCoverInstance::extend`]: applies the partial, then runs the
    /// dancing-links search, invoking `visit` with each solution (candidate
    /// ids ascending). `visit` returns `false` to stop the search.
    pub fn run(
        &self,
        partial: &[u32],
        budget: Option<u64>,
        prune: Option<PruneFn>,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> Result<RunStats, ExtendError> {
        let mut dlx = Dlx::build(self, budget.unwrap_or(u64::MAX), prune);
        if !dlx.apply_partial(partial)? {
            // Overlapping partial: vacuously exhausted, no completions.
            return Ok(RunStats { count: 0, nodes: 0, exhausted: true });
        }
        dlx.search(visit);
        Ok(RunStats {
            count: dlx.count,
            nodes: dlx.nodes,
            exhausted: !dlx.aborted,
        })
    }

    /// Debug rendering: `ground <k>` then one `candidate <id>: <indices>`
    /// line per candidate, in id order.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ground {}", self.ground_size);
        for (id, cover) in self.covers.iter().enumerate() {
            let _ = write!(s, "candidate {id}:");
            for g in cover {
                let _ = write!(s, " {g}");
            }
            let _ = writeln!(s);
        }
        s
    }
}

/// Counters from a [`ExactCoverInstance::run`] call.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RunStats {
    /// Number of solutions encountered.
    pub count: u64,
    /// Number of candidate placements attempted.
    pub nodes: u64,
    /// Whether the search space was fully explored.
    pub exhausted: bool,
}

/// Dancing-links state: a torus of doubly-linked nodes per incidence, column
/// headers threaded off a root, and O(1) reversible cover/uncover.
struct Dlx<'a> {
    instance: &'a ExactCoverInstance,
    prune: Option<PruneFn<'a>>,
    left: Vec<u32>,
    right: Vec<u32>,
    up: Vec<u32>,
    down: Vec<u32>,
    /// Owning column header of each data node.
    col_of: Vec<u32>,
    /// Candidate id of each data node (u32::MAX for root/headers).
    row_of: Vec<u32>,
    /// Remaining rows per column (indexed by header).
    size: Vec<u32>,
    /// Whether a column is currently covered (indexed by ground element).
    covered: Vec<bool>,
    chosen: Vec<u32>,
    nodes: u64,
    budget: u64,
    count: u64,
    aborted: bool,
}

const ROOT: u32 = 0;

impl<'a> Dlx<'a> {
    fn build(instance: &'a ExactCoverInstance, budget: u64, prune: Option<PruneFn<'a>>) -> Self {
        let g = instance.ground_size;
        let total: usize = 1 + g + instance.covers.iter().map(Vec::len).sum::<usize>();
        let mut dlx = Dlx {
            instance,
            prune,
            left: Vec::with_capacity(total),
            right: Vec::with_capacity(total),
            up: Vec::with_capacity(total),
            down: Vec::with_capacity(total),
            col_of: Vec::with_capacity(total),
            row_of: Vec::with_capacity(total),
            size: alloc::vec![0; g + 1],
            covered: alloc::vec![false; g],
            chosen: Vec::new(),
            nodes: 0,
            budget,
            count: 0,
            aborted: false,
        };
        // Root and column headers, linked in a ring left-to-right.
        for i in 0..=g as u32 {
            dlx.left.push(if i == 0 { g as u32 } else { i - 1 });
            dlx.right.push(if i == g as u32 { 0 } else { i + 1 });
            dlx.up.push(i);
            dlx.down.push(i);
            dlx.col_of.push(i);
            dlx.row_of.push(u32::MAX);
        }
        // Data nodes, one row per candidate.
        for (id, cover) in instance.covers.iter().enumerate() {
            let first = dlx.left.len() as u32;
            for (k, &gidx) in cover.iter().enumerate() {
                let node = dlx.left.len() as u32;
                let header = gidx + 1;
                // Horizontal ring within the row.
                let prev = if k == 0 { node } else { node - 1 };
                dlx.left.push(prev);
                dlx.right.push(first);
                if k > 0 {
                    dlx.right[prev as usize] = node;
                }
                // Vertical insertion at the column bottom.
                let tail = dlx.up[header as usize];
                dlx.up.push(tail);
                dlx.down.push(header);
                dlx.down[tail as usize] = node;
                dlx.up[header as usize] = node;
                dlx.col_of.push(header);
                dlx.row_of.push(id as u32);
                dlx.size[header as usize] += 1;
            }
            // Close the horizontal ring.
            let last = dlx.left.len() as u32 - 1;
            dlx.left[first as usize] = last;
        }
        dlx
    }

    fn cover(&mut self, header: u32) {
        self.covered[header as usize - 1] = true;
        let (l, r) = (self.left[header as usize], self.right[header as usize]);
        self.right[l as usize] = r;
        self.left[r as usize] = l;
        let mut i = self.down[header as usize];
        while i != header {
            let mut j = self.right[i as usize];
            while j != i {
                let (u, d) = (self.up[j as usize], self.down[j as usize]);
                self.down[u as usize] = d;
                self.up[d as usize] = u;
                self.size[self.col_of[j as usize] as usize] -= 1;
                j = self.right[j as usize];
            }
            i = self.down[i as usize];
        }
    }

    fn uncover(&mut self, header: u32) {
        let mut i = self.up[header as usize];
        while i != header {
            let mut j = self.left[i as usize];
            while j != i {
                self.size[self.col_of[j as usize] as usize] += 1;
                let (u, d) = (self.up[j as usize], self.down[j as usize]);
                self.down[u as usize] = j;
                self.up[d as usize] = j;
                j = self.left[j as usize];
            }
            i = self.up[i as usize];
        }
        let (l, r) = (self.left[header as usize], self.right[header as usize]);
        self.right[l as usize] = header;
        self.left[r as usize] = header;
        self.covered[header as usize - 1] = false;
    }

    fn allowed(&self, candidate: u32) -> bool {
        self.prune.map_or(true, |p| p(&self.chosen, candidate))
    }

    /// Applies the partial solution; `Ok(false)` flags an overlap (the
    /// partial then has no completions).
    fn apply_partial(&mut self, partial: &[u32]) -> Result<bool, ExtendError> {
        for &u in partial {
            if u as usize >= self.instance.covers.len() {
                return Err(ExtendError::UnknownCandidate { candidate: u });
            }
            if !self.allowed(u) {
                return Err(ExtendError::PrunedPartial { candidate: u });
            }
            if self.instance.covers[u as usize]
                .iter()
                .any(|&g| self.covered[g as usize])
            {
                return Ok(false);
            }
            for k in 0..self.instance.covers[u as usize].len() {
                let g = self.instance.covers[u as usize][k];
                self.cover(g + 1);
            }
            self.chosen.push(u);
        }
        Ok(true)
    }

    /// Minimum-remaining-candidates column, lowest header on ties; `None`
    /// when every column is covered.
    fn pick_column(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        let mut h = self.right[ROOT as usize];
        while h != ROOT {
            if best.map_or(true, |b| self.size[h as usize] < self.size[b as usize]) {
                best = Some(h);
            }
            h = self.right[h as usize];
        }
        best
    }

    fn search(&mut self, visit: &mut dyn FnMut(&[u32]) -> bool) {
        let Some(column) = self.pick_column() else {
            self.count += 1;
            let mut sol = self.chosen.clone();
            sol.sort_unstable();
            if !visit(&sol) {
                self.aborted = true;
            }
            return;
        };
        if self.size[column as usize] == 0 {
            return;
        }
        self.cover(column);
        let mut node = self.down[column as usize];
        while node != column {
            if self.nodes >= self.budget {
                self.aborted = true;
                break;
            }
            self.nodes += 1;
            let row = self.row_of[node as usize];
            if self.allowed(row) {
                let mut j = self.right[node as usize];
                while j != node {
                    self.cover(self.col_of[j as usize]);
                    j = self.right[j as usize];
                }
                self.chosen.push(row);
                self.search(visit);
                self.chosen.pop();
                let mut j = self.left[node as usize];
                while j != node {
                    self.uncover(self.col_of[j as usize]);
                    j = self.left[j as usize];
                }
                if self.aborted {
                    break;
                }
            }
            node = self.down[node as usize];
        }
        self.uncover(column);
    }
}
