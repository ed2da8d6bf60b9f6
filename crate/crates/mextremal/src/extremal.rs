//! Exact finite-n extremal searches over r-colored multigraphs.
//!
//! The search assigns each vertex pair a color subset, walking pairs in
//! vertex-incremental order ((0,1), (0,2), (1,2), (0,3), ...) and pruning by
//!
//! 1. an incremental containment check restricted to copies using the newly
//!    assigned pair,
//! 2. an optimistic completion bound (every remaining pair gets all colors)
//!    against the active thresholds, and
//! 3. transposition-local symmetry breaking: once every pair inside
//!    `0..=v` is assigned, any adjacent-vertex transposition must not produce
//!    a lexicographically smaller prefix encoding.
//!
//! Pattern avoidance forbids *homomorphic* copies: maps that send adjacent
//! pattern vertices to distinct host vertices and every color-c pattern edge
//! onto a host pair carrying c, while nonadjacent pattern vertices may share
//! an image. A host that is free in this sense stays free under blow-ups,
//! which is the regime these densities model; in particular a pair carrying
//! two colors already hosts a bicolored 2-edge path. Witnesses are also
//! embedding-free, so re-checks with [`contains_colored`] always pass.
//!
//! Optimization runs as a binary search over the decision form, so incumbent
//! thresholds sharpen the bound. Results are deterministic: the reported
//! witness is the lexicographically least one under the pair-order encoding,
//! whether or not the top branches run in parallel.

use crate::error::Error;
use crate::graph::{contains_colored, ColorMatrix, ColoredMultigraph};
use rayon::prelude::*;
use serde::Serialize;
use std::sync::atomic::{AtomicU64, Ordering};

/// What to maximize over pattern-avoiding hosts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Objective {
    /// Maximize the smallest per-color edge count.
    MaxMinColorClass,
    /// Maximize the total number of multigraph edges.
    MaxTotalEdges,
}

/// A forbidden-pattern search instance.
#[derive(Clone, Debug)]
pub struct SearchProblem {
    pub n: usize,
    pub r: usize,
    pub patterns: Vec<ColoredMultigraph>,
    pub objective: Objective,
}

/// Knobs for the search; defaults run exhaustively on the global thread pool.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    /// Stop refining after this many search nodes; the result is then
    /// flagged as non-exhaustive.
    pub node_limit: Option<u64>,
    /// Run the top branches sequentially instead of on the thread pool.
    pub sequential: bool,
}

/// Search statistics for one decision run.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SearchStats {
    pub nodes_explored: u64,
    /// True when the symmetry-reduced space was fully covered.
    pub complete: bool,
}

/// Result of an extremal computation.
#[derive(Clone, Debug, Serialize)]
pub struct MexResult {
    /// The objective value (min per-color count, or total edges).
    pub value: usize,
    /// A pattern-avoiding graph attaining `value`.
    pub witness: ColoredMultigraph,
    /// True when every relevant decision run covered its full space.
    pub exhaustive: bool,
    pub nodes_explored: u64,
}

impl SearchProblem {
    pub fn solve(&self, opts: &SearchOptions) -> Result<MexResult, Error> {
        let patterns = PatternSet::new(self.r, &self.patterns)?;
        let pair_count = self.n * self.n.saturating_sub(1) / 2;
        let cap = match self.objective {
            Objective::MaxMinColorClass => pair_count,
            Objective::MaxTotalEdges => pair_count * self.r,
        };
        let goal_at = |t: usize| match self.objective {
            Objective::MaxMinColorClass => Goal::PerColor(vec![t; self.r]),
            Objective::MaxTotalEdges => Goal::Total(t),
        };
        let mut nodes = 0u64;
        let mut exhaustive = true;
        // T = 0 is witnessed by the empty graph; patterns have edges.
        let mut best = ColoredMultigraph::empty(self.n, self.r);
        let (mut lo, mut hi) = (0usize, cap);
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            let (witness, stats) = run_search(self.n, self.r, &patterns, goal_at(mid), opts);
            nodes += stats.nodes_explored;
            match witness {
                Some(w) => {
                    best = w;
                    lo = mid;
                }
                None => {
                    exhaustive &= stats.complete;
                    hi = mid - 1;
                }
            }
        }
        for p in &self.patterns {
            debug_assert!(contains_colored(&best, p)?.is_none());
        }
        Ok(MexResult {
            value: lo,
            witness: best,
            exhaustive,
            nodes_explored: nodes,
        })
    }
}

/// Largest T such that some host avoiding every pattern has at least T edges
/// in every color.
pub fn mex_exact(
    n: usize,
    r: usize,
    patterns: &[ColoredMultigraph],
) -> Result<MexResult, Error> {
    mex_exact_with(n, r, patterns, &SearchOptions::default())
}

pub fn mex_exact_with(
    n: usize,
    r: usize,
    patterns: &[ColoredMultigraph],
    opts: &SearchOptions,
) -> Result<MexResult, Error> {
    SearchProblem {
        n,
        r,
        patterns: patterns.to_vec(),
        objective: Objective::MaxMinColorClass,
    }
    .solve(opts)
}

/// Largest total edge count over hosts avoiding every pattern.
pub fn max_edges_avoiding(
    n: usize,
    r: usize,
    patterns: &[ColoredMultigraph],
) -> Result<MexResult, Error> {
    max_edges_avoiding_with(n, r, patterns, &SearchOptions::default())
}

pub fn max_edges_avoiding_with(
    n: usize,
    r: usize,
    patterns: &[ColoredMultigraph],
    opts: &SearchOptions,
) -> Result<MexResult, Error> {
    SearchProblem {
        n,
        r,
        patterns: patterns.to_vec(),
        objective: Objective::MaxTotalEdges,
    }
    .solve(opts)
}

/// Decision form: a pattern-avoiding host meeting every per-color minimum,
/// or `None` (exhaustive when `stats.complete`).
pub fn decision_avoidable(
    n: usize,
    r: usize,
    patterns: &[ColoredMultigraph],
    thresholds: &[usize],
    opts: &SearchOptions,
) -> Result<(Option<ColoredMultigraph>, SearchStats), Error> {
    if thresholds.len() != r {
        return Err(Error::ColorCountMismatch {
            left: r,
            right: thresholds.len(),
        });
    }
    let cap = n * n.saturating_sub(1) / 2;
    if let Some(&t) = thresholds.iter().find(|&&t| t > cap) {
        return Err(Error::domain(format!(
            "threshold {t} exceeds the {cap} available pairs"
        )));
    }
    let patterns = PatternSet::new(r, patterns)?;
    Ok(run_search(
        n,
        r,
        &patterns,
        Goal::PerColor(thresholds.to_vec()),
        opts,
    ))
}

#[derive(Clone, Debug)]
enum Goal {
    PerColor(Vec<usize>),
    Total(usize),
}

/// Preprocessed forbidden patterns.
struct PatternSet {
    pats: Vec<PatternData>,
}

struct PatternData {
    n: usize,
    /// Every pattern pair carrying colors, as `(a, b, required color mask)`.
    edges: Vec<(usize, usize, u32)>,
    /// `adj[p]` lists `(neighbor, required mask)`.
    adj: Vec<Vec<(usize, u32)>>,
    /// Vertices by descending degree, the extension order.
    order: Vec<usize>,
}

impl PatternSet {
    fn new(r: usize, patterns: &[ColoredMultigraph]) -> Result<Self, Error> {
        let mut pats = Vec::with_capacity(patterns.len());
        for (index, p) in patterns.iter().enumerate() {
            if p.r() != r {
                return Err(Error::ColorCountMismatch {
                    left: r,
                    right: p.r(),
                });
            }
            if p.total_edges() == 0 {
                return Err(Error::PatternHasNoEdge { index });
            }
            let n = p.n();
            let mut mask = vec![vec![0u32; n]; n];
            for (u, v, c) in p.all_edges() {
                mask[u][v] |= 1 << (c - 1);
                mask[v][u] |= 1 << (c - 1);
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if mask[u][v] != 0 {
                        edges.push((u, v, mask[u][v]));
                    }
                }
            }
            let adj: Vec<Vec<(usize, u32)>> = (0..n)
                .map(|u| {
                    (0..n)
                        .filter(|&v| mask[u][v] != 0)
                        .map(|v| (v, mask[u][v]))
                        .collect()
                })
                .collect();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
            pats.push(PatternData { n, edges, adj, order });
        }
        Ok(PatternSet { pats })
    }
}

#[derive(Clone)]
struct Engine<'a> {
    n: usize,
    r: usize,
    /// Pairs in vertex-incremental order; `pairs[i] = (u, v)` with `u < v`.
    pairs: Vec<(usize, usize)>,
    /// `pos[u * n + v]` is the index of pair `(u, v)`.
    pos: Vec<usize>,
    patterns: &'a PatternSet,
    goal: Goal,
    masks: Vec<u32>,
    host: ColorMatrix,
    counts: Vec<usize>,
    total: usize,
    nodes: u64,
    node_limit: Option<u64>,
    hit_limit: bool,
}

impl<'a> Engine<'a> {
    fn new(n: usize, r: usize, patterns: &'a PatternSet, goal: Goal, opts: &SearchOptions) -> Self {
        assert!((1..=16).contains(&r), "search supports 1..=16 colors");
        let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for v in 1..n {
            for u in 0..v {
                pairs.push((u, v));
            }
        }
        let mut pos = vec![usize::MAX; n * n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            pos[u * n + v] = i;
            pos[v * n + u] = i;
        }
        Engine {
            n,
            r,
            pairs,
            pos,
            patterns,
            goal,
            masks: Vec::new(),
            host: ColorMatrix::zero(n),
            counts: vec![0; r],
            total: 0,
            nodes: 0,
            node_limit: opts.node_limit,
            hit_limit: false,
        }
    }

    fn bound_ok(&self, idx: usize, mask: u32) -> bool {
        let remaining = self.pairs.len() - idx - 1;
        match &self.goal {
            Goal::PerColor(thr) => (0..self.r).all(|c| {
                self.counts[c] + ((mask >> c) & 1) as usize + remaining >= thr[c]
            }),
            Goal::Total(t) => {
                self.total + mask.count_ones() as usize + remaining * self.r >= *t
            }
        }
    }

    fn apply(&mut self, idx: usize, mask: u32) {
        debug_assert_eq!(self.masks.len(), idx);
        self.masks.push(mask);
        let (u, v) = self.pairs[idx];
        self.host.set(u, v, mask);
        for c in 0..self.r {
            self.counts[c] += ((mask >> c) & 1) as usize;
        }
        self.total += mask.count_ones() as usize;
    }

    fn revert(&mut self, idx: usize) {
        let mask = self.masks.pop().expect("revert matches apply");
        let (u, v) = self.pairs[idx];
        self.host.set(u, v, 0);
        for c in 0..self.r {
            self.counts[c] -= ((mask >> c) & 1) as usize;
        }
        self.total -= mask.count_ones() as usize;
    }

    /// Does assigning `mask` to pair `idx` complete a homomorphic copy of
    /// some pattern that uses this pair?
    fn creates_copy(&self, idx: usize, mask: u32) -> bool {
        let (u, v) = self.pairs[idx];
        for pat in &self.patterns.pats {
            for &(a, b, req) in &pat.edges {
                if req & mask != req {
                    continue;
                }
                for (ia, ib) in [(u, v), (v, u)] {
                    let mut map = vec![usize::MAX; pat.n];
                    map[a] = ia;
                    map[b] = ib;
                    if self.extend_hom(pat, idx, mask, &mut map) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Mask of the pair `{x, y}` as seen by the copy check, counting the
    /// pending assignment at `idx`.
    fn seen_mask(&self, idx: usize, pending: u32, x: usize, y: usize) -> u32 {
        if x == y {
            return 0;
        }
        let p = self.pos[x * self.n + y];
        if p == idx {
            pending
        } else if p < self.masks.len() {
            self.host.get(x, y)
        } else {
            0
        }
    }

    fn extend_hom(&self, pat: &PatternData, idx: usize, pending: u32, map: &mut [usize]) -> bool {
        let next = pat.order.iter().copied().find(|&p| map[p] == usize::MAX);
        let Some(p) = next else {
            return true;
        };
        'cand: for w in 0..self.n {
            for &(q, req) in &pat.adj[p] {
                if map[q] != usize::MAX && self.seen_mask(idx, pending, w, map[q]) & req != req {
                    continue 'cand;
                }
            }
            map[p] = w;
            if self.extend_hom(pat, idx, pending, map) {
                return true;
            }
            map[p] = usize::MAX;
        }
        false
    }

    /// After completing every pair inside `0..=v`, checks that no adjacent
    /// transposition yields a lexicographically smaller prefix.
    fn canonical_through(&self, v: usize) -> bool {
        let upto = (v + 1) * v / 2;
        debug_assert_eq!(upto, self.masks.len());
        for i in 0..v {
            // Transposition of vertices i and i + 1.
            let swap = |x: usize| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            };
            for p in 0..upto {
                let (a, b) = self.pairs[p];
                let (sa, sb) = (swap(a), swap(b));
                let q = self.pos[sa * self.n + sb];
                match self.masks[q].cmp(&self.masks[p]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        true
    }

    fn dfs(&mut self, idx: usize) -> Option<Vec<u32>> {
        if self.hit_limit {
            return None;
        }
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                self.hit_limit = true;
                return None;
            }
        }
        if idx == self.pairs.len() {
            return Some(self.masks.clone());
        }
        let (u, v) = self.pairs[idx];
        for mask in 0..(1u32 << self.r) {
            if !self.bound_ok(idx, mask) {
                continue;
            }
            if mask != 0 && self.creates_copy(idx, mask) {
                continue;
            }
            self.apply(idx, mask);
            if u + 1 == v && !self.canonical_through(v) {
                self.revert(idx);
                continue;
            }
            if let Some(found) = self.dfs(idx + 1) {
                return Some(found);
            }
            self.revert(idx);
        }
        None
    }

    /// Enumerates surviving prefixes of length `depth` for parallel fan-out.
    fn seeds(&mut self, depth: usize) -> Vec<Engine<'a>> {
        let mut out = Vec::new();
        self.seed_rec(0, depth, &mut out);
        out
    }

    fn seed_rec(&mut self, idx: usize, depth: usize, out: &mut Vec<Engine<'a>>) {
        if idx == depth {
            out.push(self.clone());
            return;
        }
        let (u, v) = self.pairs[idx];
        for mask in 0..(1u32 << self.r) {
            if !self.bound_ok(idx, mask) {
                continue;
            }
            if mask != 0 && self.creates_copy(idx, mask) {
                continue;
            }
            self.apply(idx, mask);
            if u + 1 == v && !self.canonical_through(v) {
                self.revert(idx);
                continue;
            }
            self.seed_rec(idx + 1, depth, out);
            self.revert(idx);
        }
    }

    fn to_graph(&self, masks: &[u32]) -> ColoredMultigraph {
        let triples = masks.iter().enumerate().flat_map(|(i, &mask)| {
            let (u, v) = self.pairs[i];
            (0..self.r)
                .filter(move |c| mask >> c & 1 == 1)
                .map(move |c| (u, v, c + 1))
        });
        ColoredMultigraph::new(self.n, self.r, triples).expect("search masks are valid edges")
    }
}

fn run_search(
    n: usize,
    r: usize,
    patterns: &PatternSet,
    goal: Goal,
    opts: &SearchOptions,
) -> (Option<ColoredMultigraph>, SearchStats) {
    let mut root = Engine::new(n, r, patterns, goal, opts);
    let pair_count = root.pairs.len();
    if pair_count == 0 {
        let feasible = root.bound_ok_empty();
        let witness = feasible.then(|| ColoredMultigraph::empty(n, r));
        return (
            witness,
            SearchStats {
                nodes_explored: 1,
                complete: true,
            },
        );
    }
    // Fan out over the first few pairs; (2^r)^depth branches at most.
    let depth = (12 / r).clamp(1, 3).min(pair_count);
    if opts.sequential || pair_count <= depth {
        let found = root.dfs(0).map(|masks| root.to_graph(&masks));
        let complete = !root.hit_limit;
        return (
            found,
            SearchStats {
                nodes_explored: root.nodes,
                complete,
            },
        );
    }
    let branches = root.seeds(depth);
    let seed_nodes = root.nodes;
    let nodes = AtomicU64::new(seed_nodes);
    let limited = std::sync::atomic::AtomicBool::new(root.hit_limit);
    let found = branches
        .into_par_iter()
        .find_map_first(|mut engine| {
            let result = engine.dfs(depth).map(|masks| engine.to_graph(&masks));
            nodes.fetch_add(engine.nodes, Ordering::Relaxed);
            if engine.hit_limit {
                limited.store(true, Ordering::Relaxed);
            }
            result
        });
    (
        found,
        SearchStats {
            nodes_explored: nodes.load(Ordering::Relaxed),
            complete: !limited.load(Ordering::Relaxed),
        },
    )
}

impl Engine<'_> {
    /// Feasibility of the degenerate zero-pair instance.
    fn bound_ok_empty(&self) -> bool {
        match &self.goal {
            Goal::PerColor(thr) => thr.iter().all(|&t| t == 0),
            Goal::Total(t) => *t == 0,
        }
    }
}
