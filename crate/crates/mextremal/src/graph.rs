//! Core representation of r-edge-colored multigraphs and the containment /
//! homomorphism searches built on it.
//!
//! A [`ColoredMultigraph`] has vertices `0..n` and colors `1..=r`. Each
//! unordered vertex pair carries a subset of the colors; the multiplicity of a
//! pair is the size of that subset. Parallel edges of the same color do not
//! exist.

use crate::error::Error;
use serde::{Deserialize, Serialize};

/// An r-edge-colored multigraph on vertices `0..n`.
///
/// Immutable after construction; all invariants (no loops, colors and
/// vertices in range, at most one edge per color per pair) are enforced by
/// [`ColoredMultigraph::new`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredMultigraph {
    n: usize,
    r: usize,
    /// `edges[c - 1]` holds the color-`c` pairs `(u, v)` with `u < v`, sorted.
    edges: Vec<Vec<(usize, usize)>>,
}

impl ColoredMultigraph {
    /// Builds a graph from `(u, v, c)` triples, validating every invariant.
    ///
    /// Endpoints may come in either order; they are normalized to `u < v`.
    pub fn new(
        n: usize,
        r: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, Error> {
        let mut per_color: Vec<Vec<(usize, usize)>> = vec![Vec::new(); r];
        for (a, b, c) in edges {
            if a == b {
                return Err(Error::Loop {
                    vertex: a,
                    color: c,
                });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(Error::VertexOutOfRange { u, v, color: c, n });
            }
            if c < 1 || c > r {
                return Err(Error::ColorOutOfRange { u, v, color: c, r });
            }
            per_color[c - 1].push((u, v));
        }
        for (ci, list) in per_color.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                    color: ci + 1,
                });
            }
        }
        Ok(ColoredMultigraph {
            n,
            r,
            edges: per_color,
        })
    }

    /// The edgeless graph on `n` vertices with `r` colors.
    pub fn empty(n: usize, r: usize) -> Self {
        ColoredMultigraph {
            n,
            r,
            edges: vec![Vec::new(); r],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Sorted color-`c` edge list (colors are 1-indexed).
    pub fn color_edges(&self, c: usize) -> &[(usize, usize)] {
        &self.edges[c - 1]
    }

    pub fn edge_count(&self, c: usize) -> usize {
        self.edges[c - 1].len()
    }

    /// Total number of multigraph edges (sum of multiplicities).
    pub fn total_edges(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Smallest per-color edge count.
    pub fn min_color_edges(&self) -> usize {
        (1..=self.r).map(|c| self.edge_count(c)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize, c: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges[c - 1].binary_search(&key).is_ok()
    }

    /// Colors present on the pair `{u, v}`, ascending.
    pub fn colors_on(&self, u: usize, v: usize) -> Vec<usize> {
        (1..=self.r).filter(|&c| self.has_edge(u, v, c)).collect()
    }

    /// Number of distinct colors on the pair `{u, v}`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        (1..=self.r).filter(|&c| self.has_edge(u, v, c)).count()
    }

    /// All edges as `(u, v, c)` triples, ordered by `(u, v, c)`.
    pub fn all_edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = Vec::with_capacity(self.total_edges());
        for c in 1..=self.r {
            out.extend(self.edges[c - 1].iter().map(|&(u, v)| (u, v, c)));
        }
        out.sort_unstable();
        out
    }

    /// Degree of `v` in color `c`.
    pub fn color_degree(&self, v: usize, c: usize) -> usize {
        self.edges[c - 1]
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Total degree of `v` (counting multiplicities).
    pub fn degree(&self, v: usize) -> usize {
        (1..=self.r).map(|c| self.color_degree(v, c)).sum()
    }

    /// The 1-colored union of all color classes: a pair is present iff it is
    /// present in some color.
    pub fn underlying_simple(&self) -> ColoredMultigraph {
        let mut pairs: Vec<(usize, usize)> = self.edges.concat();
        pairs.sort_unstable();
        pairs.dedup();
        ColoredMultigraph {
            n: self.n,
            r: 1,
            edges: vec![pairs],
        }
    }

    /// Blow-up: vertex `v` becomes the class `{v*s, .., v*s + s - 1}`, and each
    /// color-`c` edge `{u, v}` becomes the complete bipartite color-`c` graph
    /// between the two classes. Classes stay independent.
    pub fn blow_up(&self, s: usize) -> ColoredMultigraph {
        assert!(s >= 1, "blow-up factor must be positive");
        let mut per_color: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.r];
        for (ci, list) in self.edges.iter().enumerate() {
            for &(u, v) in list {
                for i in 0..s {
                    for j in 0..s {
                        let a = u * s + i;
                        let b = v * s + j;
                        per_color[ci].push(if a < b { (a, b) } else { (b, a) });
                    }
                }
            }
            per_color[ci].sort_unstable();
        }
        ColoredMultigraph {
            n: self.n * s,
            r: self.r,
            edges: per_color,
        }
    }

    /// Induced sub-multigraph on `verts`; vertex `verts[i]` becomes vertex `i`.
    pub fn induced(&self, verts: &[usize]) -> ColoredMultigraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut per_color: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.r];
        for (ci, list) in self.edges.iter().enumerate() {
            for &(u, v) in list {
                if pos[u] != usize::MAX && pos[v] != usize::MAX {
                    let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
                    per_color[ci].push((a, b));
                }
            }
            per_color[ci].sort_unstable();
        }
        ColoredMultigraph {
            n: verts.len(),
            r: self.r,
            edges: per_color,
        }
    }

    /// Applies a global color permutation: color `c` becomes `perm[c - 1]`.
    pub fn permute_colors(&self, perm: &[usize]) -> Result<ColoredMultigraph, Error> {
        if perm.len() != self.r {
            return Err(Error::ColorCountMismatch {
                left: self.r,
                right: perm.len(),
            });
        }
        let mut seen = vec![false; self.r];
        for &p in perm {
            if p < 1 || p > self.r || seen[p - 1] {
                return Err(Error::domain("color permutation is not a bijection"));
            }
            seen[p - 1] = true;
        }
        let mut per_color: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.r];
        for (ci, list) in self.edges.iter().enumerate() {
            per_color[perm[ci] - 1] = list.clone();
        }
        Ok(ColoredMultigraph {
            n: self.n,
            r: self.r,
            edges: per_color,
        })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<ColoredMultigraph, Error> {
        if perm.len() != self.n {
            return Err(Error::domain("vertex permutation has wrong length"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::domain("vertex permutation is not a bijection"));
            }
            seen[p] = true;
        }
        let triples = self
            .all_edges()
            .into_iter()
            .map(|(u, v, c)| (perm[u], perm[v], c));
        ColoredMultigraph::new(self.n, self.r, triples)
    }
}

/// Dense color-mask adjacency used by the search routines.
///
/// `mask(u, v)` has bit `c - 1` set iff the pair carries color `c`. Supports
/// up to 32 colors, far beyond anything exercised here.
#[derive(Clone, Debug)]
pub(crate) struct ColorMatrix {
    n: usize,
    mask: Vec<u32>,
}

impl ColorMatrix {
    pub(crate) fn from_graph(g: &ColoredMultigraph) -> Self {
        assert!(g.r <= 32, "color masks support at most 32 colors");
        let mut m = ColorMatrix {
            n: g.n,
            mask: vec![0; g.n * g.n],
        };
        for (u, v, c) in g.all_edges() {
            m.add(u, v, 1 << (c - 1));
        }
        m
    }

    pub(crate) fn zero(n: usize) -> Self {
        ColorMatrix {
            n,
            mask: vec![0; n * n],
        }
    }

    #[inline]
    pub(crate) fn get(&self, u: usize, v: usize) -> u32 {
        self.mask[u * self.n + v]
    }

    #[inline]
    pub(crate) fn add(&mut self, u: usize, v: usize, bits: u32) {
        self.mask[u * self.n + v] |= bits;
        self.mask[v * self.n + u] |= bits;
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize, bits: u32) {
        self.mask[u * self.n + v] = bits;
        self.mask[v * self.n + u] = bits;
    }
}

/// A copy witness: an injective map from pattern vertices to host vertices
/// sending every color-c pattern edge onto a host pair carrying color c.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// `map[p]` is the host image of pattern vertex `p`.
    pub map: Vec<usize>,
}

impl Embedding {
    /// Re-checks the witness edge by edge against its pattern and host.
    pub fn verify(&self, host: &ColoredMultigraph, pattern: &ColoredMultigraph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for &h in &self.map {
            if h >= host.n() || seen[h] {
                return false;
            }
            seen[h] = true;
        }
        pattern
            .all_edges()
            .into_iter()
            .all(|(u, v, c)| host.has_edge(self.map[u], self.map[v], c))
    }
}

/// A colored homomorphism witness: adjacent pattern vertices map to distinct
/// targets, and every color-c pattern edge lands on a target pair carrying c.
/// Nonadjacent pattern vertices may share an image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomWitness {
    /// `map[p]` is the target image of pattern vertex `p`.
    pub map: Vec<usize>,
}

impl HomWitness {
    /// Re-checks the witness edge by edge against its pattern and target.
    pub fn verify(&self, pattern: &ColoredMultigraph, target: &ColoredMultigraph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        if self.map.iter().any(|&t| t >= target.n()) {
            return false;
        }
        pattern.all_edges().into_iter().all(|(u, v, c)| {
            self.map[u] != self.map[v] && target.has_edge(self.map[u], self.map[v], c)
        })
    }
}

/// Per-vertex pattern data shared by the two searches.
struct PatternView {
    n: usize,
    /// Search order: vertices by descending total degree, ties by index.
    order: Vec<usize>,
    /// `adj[p]` lists `(neighbor, required color mask)` for pattern vertex `p`.
    adj: Vec<Vec<(usize, u32)>>,
    /// `deg[p][c - 1]` is the color-c degree of pattern vertex `p`.
    deg: Vec<Vec<usize>>,
}

impl PatternView {
    fn new(pattern: &ColoredMultigraph) -> Self {
        let n = pattern.n();
        let r = pattern.r();
        let mut adj_mask = vec![vec![0u32; n]; n];
        let mut deg = vec![vec![0usize; r]; n];
        for (u, v, c) in pattern.all_edges() {
            adj_mask[u][v] |= 1 << (c - 1);
            adj_mask[v][u] |= 1 << (c - 1);
            deg[u][c - 1] += 1;
            deg[v][c - 1] += 1;
        }
        let adj: Vec<Vec<(usize, u32)>> = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| adj_mask[u][v] != 0)
                    .map(|v| (v, adj_mask[u][v]))
                    .collect()
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        let total: Vec<usize> = (0..n).map(|v| deg[v].iter().sum()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(total[v]), v));
        PatternView { n, order, adj, deg }
    }
}

/// Searches for a copy of `pattern` in `host` (injective on vertices).
///
/// Backtracks over pattern vertices in descending total-degree order, trying
/// host candidates in ascending index order, pruning by per-color degree.
/// Deterministic: the same inputs always yield the same witness.
pub fn contains_colored(
    host: &ColoredMultigraph,
    pattern: &ColoredMultigraph,
) -> Result<Option<Embedding>, Error> {
    if host.r() != pattern.r() {
        return Err(Error::ColorCountMismatch {
            left: host.r(),
            right: pattern.r(),
        });
    }
    if pattern.n() > host.n() {
        return Ok(None);
    }
    for c in 1..=pattern.r() {
        if pattern.edge_count(c) > host.edge_count(c) {
            return Ok(None);
        }
    }
    let view = PatternView::new(pattern);
    let matrix = ColorMatrix::from_graph(host);
    let host_deg: Vec<Vec<usize>> = (0..host.n())
        .map(|v| (1..=host.r()).map(|c| host.color_degree(v, c)).collect())
        .collect();
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];
    if embed(&view, &matrix, &host_deg, 0, &mut map, &mut used) {
        Ok(Some(Embedding { map }))
    } else {
        Ok(None)
    }
}

fn embed(
    view: &PatternView,
    matrix: &ColorMatrix,
    host_deg: &[Vec<usize>],
    level: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if level == view.n {
        return true;
    }
    let p = view.order[level];
    'cand: for h in 0..used.len() {
        if used[h] {
            continue;
        }
        for (c, &d) in view.deg[p].iter().enumerate() {
            if d > host_deg[h][c] {
                continue 'cand;
            }
        }
        for &(q, need) in &view.adj[p] {
            if map[q] != usize::MAX && matrix.get(h, map[q]) & need != need {
                continue 'cand;
            }
        }
        map[p] = h;
        used[h] = true;
        if embed(view, matrix, host_deg, level + 1, map, used) {
            return true;
        }
        map[p] = usize::MAX;
        used[h] = false;
    }
    false
}

/// Searches for a colored homomorphism from `pattern` into `target`.
///
/// Images of nonadjacent pattern vertices may coincide; adjacent vertices get
/// distinct images because targets carry no loops.
pub fn hom_exists(
    pattern: &ColoredMultigraph,
    target: &ColoredMultigraph,
) -> Result<Option<HomWitness>, Error> {
    if pattern.r() != target.r() {
        return Err(Error::ColorCountMismatch {
            left: pattern.r(),
            right: target.r(),
        });
    }
    let view = PatternView::new(pattern);
    let matrix = ColorMatrix::from_graph(target);
    let mut map = vec![usize::MAX; pattern.n()];
    if hom_extend(&view, &matrix, target.n(), 0, &mut map) {
        Ok(Some(HomWitness { map }))
    } else {
        Ok(None)
    }
}

fn hom_extend(
    view: &PatternView,
    matrix: &ColorMatrix,
    target_n: usize,
    level: usize,
    map: &mut Vec<usize>,
) -> bool {
    if level == view.n {
        return true;
    }
    let p = view.order[level];
    'cand: for t in 0..target_n {
        for &(q, need) in &view.adj[p] {
            if map[q] != usize::MAX && matrix.get(t, map[q]) & need != need {
                continue 'cand;
            }
        }
        map[p] = t;
        if hom_extend(view, matrix, target_n, level + 1, map) {
            return true;
        }
        map[p] = usize::MAX;
    }
    false
}
