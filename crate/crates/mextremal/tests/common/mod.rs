//! Brute-force oracles and the shared corpus of small named graphs.
//!
//! Everything here enumerates raw maps or assignments without any of the
//! library's pruning or symmetry machinery, so agreement between these
//! oracles and the optimized implementations is meaningful.

#![allow(dead_code)]

use mextremal::constructions::cycle_pattern;
use mextremal::ColoredMultigraph;

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

pub fn rb_path() -> ColoredMultigraph {
    ColoredMultigraph::new(3, 2, [(0, 1, 1), (1, 2, 2)]).unwrap()
}

pub fn single_red_edge() -> ColoredMultigraph {
    ColoredMultigraph::new(2, 2, [(0, 1, 1)]).unwrap()
}

pub fn double_edge() -> ColoredMultigraph {
    ColoredMultigraph::new(2, 2, [(0, 1, 1), (0, 1, 2)]).unwrap()
}

pub fn mono_k(k: usize) -> ColoredMultigraph {
    let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v, 1)));
    ColoredMultigraph::new(k, 2, edges).unwrap()
}

pub fn k3_all_colors() -> ColoredMultigraph {
    let edges = (0..3)
        .flat_map(|u| (u + 1..3).map(move |v| (u, v)))
        .flat_map(|(u, v)| [(u, v, 1), (u, v, 2)]);
    ColoredMultigraph::new(3, 2, edges).unwrap()
}

pub fn c5_rrrrb() -> ColoredMultigraph {
    cycle_pattern(5, "RRRRB").unwrap()
}

// ---------------------------------------------------------------------------
// Map enumeration oracles
// ---------------------------------------------------------------------------

/// Injective copy check by enumerating all injective vertex maps.
pub fn naive_contains(host: &ColoredMultigraph, pattern: &ColoredMultigraph) -> bool {
    assert_eq!(host.r(), pattern.r());
    let pn = pattern.n();
    let hn = host.n();
    if pn > hn {
        return false;
    }
    let edges = pattern.all_edges();
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; hn];
    fn rec(
        host: &ColoredMultigraph,
        edges: &[(usize, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        p: usize,
    ) -> bool {
        if p == map.len() {
            return edges
                .iter()
                .all(|&(u, v, c)| host.has_edge(map[u], map[v], c));
        }
        for h in 0..used.len() {
            if !used[h] {
                map[p] = h;
                used[h] = true;
                if rec(host, edges, map, used, p + 1) {
                    return true;
                }
                used[h] = false;
            }
        }
        false
    }
    rec(host, &edges, &mut map, &mut used, 0)
}

/// Colored homomorphism check by enumerating all vertex maps.
pub fn naive_hom(pattern: &ColoredMultigraph, target: &ColoredMultigraph) -> bool {
    assert_eq!(pattern.r(), target.r());
    let pn = pattern.n();
    let tn = target.n();
    if pn == 0 {
        return true;
    }
    if tn == 0 {
        return false;
    }
    let edges = pattern.all_edges();
    let total = tn.checked_pow(pn as u32).expect("oracle domain too large");
    'outer: for code in 0..total {
        let mut map = Vec::with_capacity(pn);
        let mut x = code;
        for _ in 0..pn {
            map.push(x % tn);
            x /= tn;
        }
        for &(u, v, c) in &edges {
            if map[u] == map[v] || !target.has_edge(map[u], map[v], c) {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

// ---------------------------------------------------------------------------
// Chromatic and reduced-matching oracles
// ---------------------------------------------------------------------------

fn proper_labelings(g: &ColoredMultigraph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let simple = g.underlying_simple();
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(
        simple: &ColoredMultigraph,
        k: usize,
        labels: &mut Vec<usize>,
        v: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == labels.len() {
            out.push(labels.clone());
            return;
        }
        for l in 0..k {
            if (0..v).all(|u| labels[u] != l || !simple.has_edge(u, v, 1)) {
                labels[v] = l;
                rec(simple, k, labels, v + 1, out);
            }
        }
    }
    rec(&simple, k, &mut labels, 0, &mut out);
    out
}

/// Smallest k admitting a proper labeled coloring.
pub fn naive_chromatic(g: &ColoredMultigraph) -> usize {
    let n = g.n();
    assert!(n >= 1);
    (1..=n)
        .find(|&k| !proper_labelings(g, k).is_empty())
        .unwrap()
}

/// M(g) by enumerating every labeled chi-coloring, building the class-pair
/// color sets directly, and maximizing matchings by subset search.
pub fn naive_reduced_max_matching(g: &ColoredMultigraph) -> usize {
    let chi = naive_chromatic(g);
    let mut best = 0;
    for labels in proper_labelings(g, chi) {
        // Skip labelings that do not use all chi labels (cannot happen at
        // k = chi, but keep the oracle self-contained).
        let mut used = vec![false; chi];
        for &l in &labels {
            used[l] = true;
        }
        if used.iter().any(|&u| !u) {
            continue;
        }
        let mut colorsets = std::collections::BTreeMap::<(usize, usize), Vec<usize>>::new();
        for (u, v, c) in g.all_edges() {
            let key = (labels[u].min(labels[v]), labels[u].max(labels[v]));
            let cs = colorsets.entry(key).or_default();
            if !cs.contains(&c) {
                cs.push(c);
            }
        }
        let singles: Vec<(usize, usize)> = colorsets
            .iter()
            .filter(|(_, cs)| cs.len() == 1)
            .map(|(&k, _)| k)
            .collect();
        best = best.max(max_disjoint(&singles));
    }
    best
}

fn max_disjoint(pairs: &[(usize, usize)]) -> usize {
    let m = pairs.len();
    let mut best = 0;
    for subset in 0u32..(1 << m) {
        let chosen: Vec<(usize, usize)> = (0..m)
            .filter(|&i| subset >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let mut seen = std::collections::HashSet::new();
        if chosen
            .iter()
            .all(|&(a, b)| seen.insert(a) && seen.insert(b))
        {
            best = best.max(chosen.len());
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Extremal search oracles
// ---------------------------------------------------------------------------

/// Every r-colored multigraph on n vertices, as mask-per-pair assignments.
pub fn all_assignments(n: usize, r: usize) -> Vec<ColoredMultigraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let states = 1usize << r;
    let total = states.checked_pow(pairs.len() as u32).expect("too large");
    (0..total)
        .map(|code| {
            let mut x = code;
            let mut edges = Vec::new();
            for &(u, v) in &pairs {
                let mask = x % states;
                x /= states;
                for c in 0..r {
                    if mask >> c & 1 == 1 {
                        edges.push((u, v, c + 1));
                    }
                }
            }
            ColoredMultigraph::new(n, r, edges).unwrap()
        })
        .collect()
}

pub fn avoids_all(g: &ColoredMultigraph, patterns: &[ColoredMultigraph]) -> bool {
    patterns.iter().all(|p| !naive_hom(p, g))
}

/// mex by full enumeration of every assignment (no symmetry, no pruning).
pub fn naive_mex(n: usize, r: usize, patterns: &[ColoredMultigraph]) -> usize {
    all_assignments(n, r)
        .iter()
        .filter(|g| avoids_all(g, patterns))
        .map(|g| g.min_color_edges())
        .max()
        .unwrap_or(0)
}

/// Maximum total edges by full enumeration.
pub fn naive_max_edges(n: usize, r: usize, patterns: &[ColoredMultigraph]) -> usize {
    all_assignments(n, r)
        .iter()
        .filter(|g| avoids_all(g, patterns))
        .map(|g| g.total_edges())
        .max()
        .unwrap_or(0)
}
