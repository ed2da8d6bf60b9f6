//! Exact chromatic number and enumeration of proper vertex partitions.

use crate::error::Error;
use crate::graph::ColoredMultigraph;
use serde::Serialize;

/// A division of `0..n` into disjoint nonempty classes.
///
/// Classes are canonical: each class is sorted and classes are ordered by
/// least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    /// Validates disjointness and coverage, then canonicalizes class order.
    pub fn new(classes: Vec<Vec<usize>>, n: usize) -> Result<Self, Error> {
        let mut seen = vec![false; n];
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(classes.len());
        for class in classes {
            if class.is_empty() {
                return Err(Error::InvalidPartition {
                    message: "empty class".into(),
                });
            }
            let mut class = class;
            class.sort_unstable();
            for &v in &class {
                if v >= n {
                    return Err(Error::InvalidPartition {
                        message: format!("vertex {v} out of range (n = {n})"),
                    });
                }
                if seen[v] {
                    return Err(Error::InvalidPartition {
                        message: format!("vertex {v} appears in two classes"),
                    });
                }
                seen[v] = true;
            }
            canon.push(class);
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition {
                message: format!("vertex {v} not covered"),
            });
        }
        canon.sort_by_key(|c| c[0]);
        Ok(Partition { classes: canon, n })
    }

    fn from_labels(labels: &[usize], k: usize) -> Self {
        let mut classes = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            classes[l].push(v);
        }
        // Restricted growth labels already order classes by least element.
        Partition {
            classes,
            n: labels.len(),
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `class_of()[v]` is the index of the class containing `v`.
    pub fn class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = i;
            }
        }
        out
    }

    /// First edge of the underlying simple graph lying inside a class, if any.
    pub fn violation(&self, g: &ColoredMultigraph) -> Option<(usize, usize, usize)> {
        let class_of = self.class_of();
        g.underlying_simple()
            .color_edges(1)
            .iter()
            .find(|&&(u, v)| class_of[u] == class_of[v])
            .map(|&(u, v)| (class_of[u], u, v))
    }
}

fn simple_adjacency(g: &ColoredMultigraph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.underlying_simple().color_edges(1) {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Exact chromatic number of the underlying simple graph.
///
/// Greedy clique gives the lower bound, greedy coloring the upper bound, and
/// a backtracking k-colorability test closes the gap from below.
pub fn chromatic_number(g: &ColoredMultigraph) -> Result<usize, Error> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let adj = simple_adjacency(g);
    let lb = greedy_clique(&adj).max(1);
    let ub = greedy_coloring_bound(&adj).max(1);
    for k in lb..ub {
        if colorable(&adj, k) {
            return Ok(k);
        }
    }
    Ok(ub)
}

fn greedy_clique(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    let deg: Vec<usize> = (0..n).map(|v| adj[v].iter().filter(|&&b| b).count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| adj[u][v]) {
            clique.push(v);
        }
    }
    clique.len()
}

fn greedy_coloring_bound(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for v in 0..n {
        let forbidden: Vec<bool> = {
            let mut f = vec![false; used + 1];
            for u in 0..n {
                if adj[v][u] && color[u] != usize::MAX {
                    f[color[u]] = true;
                }
            }
            f
        };
        let c = (0..=used).find(|&c| !forbidden[c]).unwrap();
        color[v] = c;
        if c == used {
            used += 1;
        }
    }
    used
}

fn colorable(adj: &[Vec<bool>], k: usize) -> bool {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    fn rec(adj: &[Vec<bool>], k: usize, color: &mut [usize], v: usize, max_used: usize) -> bool {
        if v == adj.len() {
            return true;
        }
        let cap = k.min(max_used + 2);
        for c in 0..cap {
            if (0..v).all(|u| !adj[v][u] || color[u] != c) {
                color[v] = c;
                if rec(adj, k, color, v + 1, max_used.max(c)) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    if n == 0 {
        return true;
    }
    color[0] = 0;
    rec(adj, k, &mut color, 1, 0)
}

/// Streams every partition of the vertex set into exactly `k` independent
/// classes, each emitted once in restricted-growth order.
///
/// Empty if `k` is below the chromatic number or above `n`.
pub fn enumerate_proper_partitions(g: &ColoredMultigraph, k: usize) -> ProperPartitions {
    ProperPartitions {
        adj: simple_adjacency(g),
        n: g.n(),
        k,
        labels: Vec::new(),
        next_try: Vec::new(),
        used: Vec::new(),
        started: false,
        done: k == 0 || k > g.n(),
    }
}

/// Iterator state: a depth-first walk over restricted growth strings.
pub struct ProperPartitions {
    adj: Vec<Vec<bool>>,
    n: usize,
    k: usize,
    /// `labels[v]` is the class of vertex `v` on the current path.
    labels: Vec<usize>,
    /// Next label to try at each depth when backtracking resumes.
    next_try: Vec<usize>,
    /// Number of classes opened so far at each depth (before assigning).
    used: Vec<usize>,
    started: bool,
    done: bool,
}

impl ProperPartitions {
    fn label_ok(&self, v: usize, l: usize) -> bool {
        (0..v).all(|u| self.labels[u] != l || !self.adj[u][v])
    }

    fn pop_level(&mut self) {
        self.labels.pop();
        self.next_try.truncate(self.labels.len() + 1);
        self.used.truncate(self.labels.len() + 1);
    }
}

impl Iterator for ProperPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        // Invariant between steps: next_try.len() == used.len() ==
        // labels.len() + 1.
        if !self.started {
            self.started = true;
            self.labels.clear();
            self.next_try = vec![0];
            self.used = vec![0];
        } else {
            // Pop the yielded assignment to resume searching.
            self.pop_level();
        }
        loop {
            let depth = self.labels.len();
            if depth == self.n {
                // Full restricted growth string with exactly k classes.
                return Some(Partition::from_labels(&self.labels, self.k));
            }
            let used = self.used[depth];
            // A label may open at most one new class.
            let cap = (used + 1).min(self.k);
            let mut advanced = false;
            for l in self.next_try[depth]..cap {
                // Remaining vertices after this one must be able to open the
                // classes still missing.
                let opens = usize::from(l == used);
                if used + opens + (self.n - depth - 1) < self.k {
                    continue;
                }
                if self.label_ok(depth, l) {
                    self.next_try[depth] = l + 1;
                    self.labels.push(l);
                    self.next_try.push(0);
                    self.used.push(used + opens);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                // Exhausted labels here; backtrack.
                if self.labels.is_empty() {
                    self.done = true;
                    return None;
                }
                self.pop_level();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn red_k3() -> ColoredMultigraph {
        ColoredMultigraph::new(3, 2, [(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap()
    }

    fn c5_rrrrb() -> ColoredMultigraph {
        ColoredMultigraph::new(5, 2, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 2)])
            .unwrap()
    }

    #[test]
    fn chromatic_clique() {
        assert_eq!(chromatic_number(&red_k3()).unwrap(), 3);
    }

    #[test]
    fn chromatic_odd_cycle() {
        assert_eq!(chromatic_number(&c5_rrrrb()).unwrap(), 3);
    }

    #[test]
    fn chromatic_edgeless() {
        assert_eq!(chromatic_number(&ColoredMultigraph::empty(5, 2)).unwrap(), 1);
    }

    #[test]
    fn chromatic_empty_vertex_set() {
        assert_eq!(
            chromatic_number(&ColoredMultigraph::empty(0, 1)),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn k3_partitions_forced() {
        let parts: Vec<_> = enumerate_proper_partitions(&red_k3(), 3).collect();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].classes(), &[vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn k3_below_chi_is_empty() {
        assert_eq!(enumerate_proper_partitions(&red_k3(), 2).count(), 0);
    }

    #[test]
    fn c5_has_five_partitions() {
        let parts: Vec<_> = enumerate_proper_partitions(&c5_rrrrb(), 3).collect();
        assert_eq!(parts.len(), 5);
        for p in &parts {
            assert!(p.violation(&c5_rrrrb()).is_none());
        }
    }

    #[test]
    fn singleton_partition_unique_for_k_equals_n() {
        for g in [red_k3(), c5_rrrrb(), ColoredMultigraph::empty(4, 2)] {
            assert_eq!(enumerate_proper_partitions(&g, g.n()).count(), 1);
        }
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0], vec![1]], 2).is_ok());
        assert!(Partition::new(vec![vec![0, 0]], 1).is_err());
        assert!(Partition::new(vec![vec![0]], 2).is_err());
        assert!(Partition::new(vec![vec![0], vec![]], 1).is_err());
    }
}
