//! Structure-finding pipeline for dense multigraphs: look for a copy of the
//! target P' (a matching of prescribed single-color edges, all other pairs at
//! full multiplicity) by combining the full-multiplicity core, a k-partition,
//! random part-to-matching assignments, and per-part max cuts.
//!
//! The pipeline is a heuristic finder: a `Found` result carries a verified
//! embedding, while `Exhausted` means "not found within the round budget",
//! never a certificate of absence.

use crate::coloring::Partition;
use crate::error::Error;
use crate::graph::{contains_colored, ColoredMultigraph, Embedding};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Shape of the target multigraph P' on `k + 1` vertices: `matching_colors`
/// prescribes the single edges `(0,1), (2,3), ...`; every other pair carries
/// all `r` colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PPrimeSpec {
    pub k: usize,
    pub matching_colors: Vec<usize>,
    pub r: usize,
}

impl PPrimeSpec {
    pub fn new(k: usize, matching_colors: Vec<usize>, r: usize) -> Result<Self, Error> {
        if k < 1 {
            return Err(Error::domain("need k >= 1"));
        }
        let m = matching_colors.len();
        if 2 * m > k + 1 {
            return Err(Error::MatchingTooLarge {
                m,
                vertices: k + 1,
            });
        }
        for &c in &matching_colors {
            if c < 1 || c > r {
                return Err(Error::ColorOutOfRange {
                    u: 0,
                    v: 0,
                    color: c,
                    r,
                });
            }
        }
        Ok(PPrimeSpec {
            k,
            matching_colors,
            r,
        })
    }

    pub fn m(&self) -> usize {
        self.matching_colors.len()
    }
}

/// Builds the target P' from its spec.
pub fn build_pprime(spec: &PPrimeSpec) -> ColoredMultigraph {
    let n = spec.k + 1;
    let mut matched_color = vec![0usize; n];
    for (j, &c) in spec.matching_colors.iter().enumerate() {
        matched_color[2 * j] = c;
        matched_color[2 * j + 1] = c;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let is_matching_pair = v == u + 1 && u % 2 == 0 && u / 2 < spec.m();
            if is_matching_pair {
                edges.push((u, v, matched_color[u]));
            } else {
                edges.extend((1..=spec.r).map(|c| (u, v, c)));
            }
        }
    }
    ColoredMultigraph::new(n, spec.r, edges).expect("generated edges are valid")
}

/// The 1-colored graph of pairs present in every color simultaneously.
pub fn multiplicity_r_core(h: &ColoredMultigraph) -> ColoredMultigraph {
    let r = h.r();
    let edges = (0..h.n())
        .flat_map(|u| (u + 1..h.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| h.multiplicity(u, v) == r)
        .map(|(u, v)| (u, v, 1));
    ColoredMultigraph::new(h.n(), 1, edges).expect("core pairs are valid")
}

/// Where the k-partition came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PartitionSource {
    Provided,
    ExactMaxCut,
    GreedyMaxCut,
}

/// Per-round log of the randomized search.
#[derive(Clone, Debug, Serialize)]
pub struct RoundTrace {
    pub round: usize,
    /// `perm[j]` is the part assigned to matching slot `j`.
    pub perm: Vec<usize>,
    /// Edge count of each within-part color graph F_j.
    pub fj_edges: Vec<usize>,
    /// Edge count of each cut F_j'.
    pub cut_edges: Vec<usize>,
    pub rprime_edges: usize,
    pub hprime_edges: usize,
    pub clique: Option<Vec<usize>>,
}

/// Full trace of one pipeline invocation.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineTrace {
    pub partition: Vec<Vec<usize>>,
    pub source: PartitionSource,
    /// Set when the full-multiplicity core already contains a (k+1)-clique.
    pub core_clique: Option<Vec<usize>>,
    pub rounds: Vec<RoundTrace>,
    /// Formula lower estimate for E[e(F_j)] under the density hypotheses:
    /// `(1/k) * ((r-1)/(rk) - m/(9rk^2)) * C(n,2)`. Diagnostic only.
    pub fj_expected_lower: f64,
    /// Mean of the observed e(F_j) over all rounds, when any were sampled.
    pub fj_empirical_mean: Option<f64>,
}

/// Options for [`find_pprime`].
#[derive(Clone, Debug, Default)]
pub struct FindOptions {
    /// A k-partition to use verbatim; must be proper for the core. When
    /// omitted, an exact maximum k-partite subgraph of the core is computed
    /// for hosts with at most 12 vertices, a greedy one beyond.
    pub partition: Option<Partition>,
    pub rounds: usize,
    pub seed: u64,
}

/// Outcome of the pipeline search.
#[derive(Clone, Debug)]
pub enum FindOutcome {
    Found(Embedding),
    /// No copy found within the round budget; not a certificate of absence.
    Exhausted,
}

/// Hunts for a copy of `build_pprime(spec)` inside `h`.
///
/// Checks the full-multiplicity core for a (k+1)-clique first. Otherwise,
/// per round: assign matching slots to parts by a seeded random permutation,
/// take a maximum cut of each within-part color graph, join the cut edges
/// with the cross-part core edges, and look for a (k+1)-clique there. Any
/// clique translates into an embedding, which is re-verified before return.
pub fn find_pprime(
    h: &ColoredMultigraph,
    spec: &PPrimeSpec,
    opts: &FindOptions,
) -> Result<(FindOutcome, PipelineTrace), Error> {
    if h.r() != spec.r {
        return Err(Error::ColorCountMismatch {
            left: h.r(),
            right: spec.r,
        });
    }
    let n = h.n();
    let k = spec.k;
    let m = spec.m();
    let core = multiplicity_r_core(h);
    let core_adj = simple_adjacency(&core);
    let pattern = build_pprime(spec);

    let pairs = n * n.saturating_sub(1) / 2;
    let fj_expected_lower = if k > 0 {
        let rk = (spec.r * k) as f64;
        (1.0 / k as f64) * ((spec.r as f64 - 1.0) / rk - m as f64 / (9.0 * rk * k as f64))
            * pairs as f64
    } else {
        0.0
    };

    // A clique in the core is already the full-multiplicity form of P'.
    if let Some(q) = find_clique(&core_adj, k + 1) {
        let emb = translate(h, &pattern, &q)?;
        let trace = PipelineTrace {
            partition: Vec::new(),
            source: PartitionSource::ExactMaxCut,
            core_clique: Some(q),
            rounds: Vec::new(),
            fj_expected_lower,
            fj_empirical_mean: None,
        };
        if let Some(emb) = emb {
            return Ok((FindOutcome::Found(emb), trace));
        }
    }

    if n < k {
        return Err(Error::domain(format!(
            "host has {n} vertices, cannot form a {k}-partition"
        )));
    }
    let (partition, source) = match &opts.partition {
        Some(p) => {
            if p.n() != n {
                return Err(Error::InvalidPartition {
                    message: format!("partition covers {} vertices, host has {n}", p.n()),
                });
            }
            if p.len() != k {
                return Err(Error::PartitionClassCount {
                    expected: k,
                    got: p.len(),
                });
            }
            let class_of = p.class_of();
            for &(u, v) in core.color_edges(1) {
                if class_of[u] == class_of[v] {
                    return Err(Error::PartitionNotProperForCore {
                        class: class_of[u],
                        u,
                        v,
                    });
                }
            }
            (p.clone(), PartitionSource::Provided)
        }
        None => {
            let (labels, exact) = max_k_cut(&core_adj, k, n <= 12);
            let mut classes = vec![Vec::new(); k];
            for (v, &l) in labels.iter().enumerate() {
                classes[l].push(v);
            }
            let p = Partition::new(classes, n).expect("cut labels form a partition");
            (
                p,
                if exact {
                    PartitionSource::ExactMaxCut
                } else {
                    PartitionSource::GreedyMaxCut
                },
            )
        }
    };

    let class_of = partition.class_of();
    let rprime: Vec<(usize, usize)> = core
        .color_edges(1)
        .iter()
        .copied()
        .filter(|&(u, v)| class_of[u] != class_of[v])
        .collect();

    let mut rounds = Vec::with_capacity(opts.rounds);
    let mut fj_sum = 0usize;
    let mut fj_count = 0usize;
    let mut outcome = FindOutcome::Exhausted;
    for round in 0..opts.rounds {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(round as u64 + 1);
        let mut perm: Vec<usize> = (0..k).collect();
        perm.shuffle(&mut rng);
        let slots: Vec<usize> = perm.iter().copied().take(m).collect();

        let mut fj_edges = Vec::with_capacity(m);
        let mut cut_edges = Vec::with_capacity(m);
        let mut extra: Vec<(usize, usize)> = Vec::new();
        for (j, &part) in slots.iter().enumerate() {
            let color = spec.matching_colors[j];
            let verts = &partition.classes()[part];
            let fj: Vec<(usize, usize)> = h
                .color_edges(color)
                .iter()
                .copied()
                .filter(|&(u, v)| class_of[u] == part && class_of[v] == part)
                .collect();
            let sides = max_cut(verts, &fj);
            let fj_cut: Vec<(usize, usize)> = fj
                .iter()
                .copied()
                .filter(|&(u, v)| sides[&u] != sides[&v])
                .collect();
            fj_edges.push(fj.len());
            cut_edges.push(fj_cut.len());
            fj_sum += fj.len();
            fj_count += 1;
            extra.extend(fj_cut);
        }

        let mut hprime = vec![vec![false; n]; n];
        let mut hprime_edges = 0;
        for &(u, v) in rprime.iter().chain(extra.iter()) {
            if !hprime[u][v] {
                hprime[u][v] = true;
                hprime[v][u] = true;
                hprime_edges += 1;
            }
        }
        let clique = find_clique(&hprime, k + 1);
        rounds.push(RoundTrace {
            round,
            perm: slots.clone(),
            fj_edges,
            cut_edges,
            rprime_edges: rprime.len(),
            hprime_edges,
            clique: clique.clone(),
        });
        if let Some(q) = clique {
            if let Some(emb) = translate(h, &pattern, &q)? {
                outcome = FindOutcome::Found(emb);
                break;
            }
        }
    }

    let trace = PipelineTrace {
        partition: partition.classes().to_vec(),
        source,
        core_clique: None,
        rounds,
        fj_expected_lower,
        fj_empirical_mean: (fj_count > 0).then(|| fj_sum as f64 / fj_count as f64),
    };
    Ok((outcome, trace))
}

/// Maps a clique of host vertices back to an embedding of the pattern.
fn translate(
    h: &ColoredMultigraph,
    pattern: &ColoredMultigraph,
    clique: &[usize],
) -> Result<Option<Embedding>, Error> {
    let sub = h.induced(clique);
    let emb = contains_colored(&sub, pattern)?;
    Ok(emb.map(|e| {
        let map = e.map.iter().map(|&i| clique[i]).collect();
        let emb = Embedding { map };
        debug_assert!(emb.verify(h, pattern));
        emb
    }))
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

/// First clique of the requested size in ascending vertex order.
fn find_clique(adj: &[Vec<bool>], size: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if size == 0 {
        return Some(Vec::new());
    }
    if size > n {
        return None;
    }
    let mut chosen = Vec::with_capacity(size);
    fn rec(adj: &[Vec<bool>], size: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == size {
            return true;
        }
        let n = adj.len();
        let needed = size - chosen.len();
        for v in start..n {
            if n - v < needed {
                return false;
            }
            if chosen.iter().all(|&u| adj[u][v]) {
                chosen.push(v);
                if rec(adj, size, v + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if rec(adj, size, 0, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Labels maximizing the number of cross-class edges; exact via
/// symmetry-broken search when allowed, greedy with first-improvement moves
/// otherwise. Returns `(labels, was_exact)`.
fn max_k_cut(adj: &[Vec<bool>], k: usize, allow_exact: bool) -> (Vec<usize>, bool) {
    let n = adj.len();
    if allow_exact {
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut labels = vec![0usize; n];
        fn rec(
            adj: &[Vec<bool>],
            k: usize,
            v: usize,
            used: usize,
            cut: usize,
            labels: &mut Vec<usize>,
            best: &mut Option<(usize, Vec<usize>)>,
        ) {
            let n = adj.len();
            if v == n {
                if best.as_ref().is_none_or(|(b, _)| cut > *b) {
                    *best = Some((cut, labels.clone()));
                }
                return;
            }
            // Class labels are interchangeable; only allow opening one new
            // class at a time.
            let cap = (used + 1).min(k);
            for l in 0..cap {
                let gain = (0..v)
                    .filter(|&u| adj[u][v] && labels[u] != l)
                    .count();
                labels[v] = l;
                rec(adj, k, v + 1, used.max(l + 1), cut + gain, labels, best);
            }
        }
        rec(adj, k, 0, 0, 0, &mut labels, &mut best);
        let (_, mut labels) = best.expect("search visits at least one labeling");
        rebalance(&mut labels, k);
        (labels, true)
    } else {
        let mut labels = vec![0usize; n];
        for v in 0..n {
            let gain = |l: usize| (0..v).filter(|&u| adj[u][v] && labels[u] != l).count();
            labels[v] = (0..k).max_by_key(|&l| (gain(l), std::cmp::Reverse(l))).unwrap();
        }
        // First-improvement single-vertex moves until stable.
        let mut improved = true;
        while improved {
            improved = false;
            for v in 0..n {
                let score = |l: usize| {
                    (0..n)
                        .filter(|&u| u != v && adj[u][v] && labels[u] != l)
                        .count()
                };
                let current = score(labels[v]);
                if let Some(better) = (0..k).find(|&l| score(l) > current) {
                    labels[v] = better;
                    improved = true;
                }
            }
        }
        rebalance(&mut labels, k);
        (labels, false)
    }
}

/// Moves vertices into empty classes (never decreases a cut) so that all k
/// classes are nonempty whenever `n >= k`.
fn rebalance(labels: &mut [usize], k: usize) {
    loop {
        let mut counts = vec![0usize; k];
        for &l in labels.iter() {
            counts[l] += 1;
        }
        let Some(empty) = counts.iter().position(|&c| c == 0) else {
            return;
        };
        let Some(donor) = counts.iter().position(|&c| c >= 2) else {
            return;
        };
        let v = labels.iter().rposition(|&l| l == donor).unwrap();
        labels[v] = empty;
    }
}

/// Bipartition of `verts` maximizing the number of crossing edges, exact for
/// at most 20 vertices, greedy with first-improvement flips beyond.
fn max_cut(
    verts: &[usize],
    edges: &[(usize, usize)],
) -> std::collections::HashMap<usize, bool> {
    let p = verts.len();
    let index: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let local: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| (index[&u], index[&v]))
        .collect();
    let sides = if p <= 20 {
        exact_cut(p, &local)
    } else {
        greedy_cut(p, &local)
    };
    verts
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, sides[i]))
        .collect()
}

fn exact_cut(p: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut best: Option<(usize, Vec<bool>)> = None;
    let mut sides = vec![false; p];
    fn rec(
        p: usize,
        edges: &[(usize, usize)],
        v: usize,
        sides: &mut Vec<bool>,
        best: &mut Option<(usize, Vec<bool>)>,
    ) {
        if v == p {
            let cut = edges.iter().filter(|&&(a, b)| sides[a] != sides[b]).count();
            if best.as_ref().is_none_or(|(b, _)| cut > *b) {
                *best = Some((cut, sides.clone()));
            }
            return;
        }
        // Fix vertex 0 on the false side to halve the space.
        let choices: &[bool] = if v == 0 { &[false] } else { &[false, true] };
        for &side in choices {
            sides[v] = side;
            rec(p, edges, v + 1, sides, best);
        }
    }
    if p == 0 {
        return sides;
    }
    rec(p, edges, 0, &mut sides, &mut best);
    best.expect("cut search visits at least one assignment").1
}

fn greedy_cut(p: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut adj = vec![Vec::new(); p];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut sides = vec![false; p];
    for v in 1..p {
        let cross_false = adj[v].iter().filter(|&&u| u < v && sides[u]).count();
        let cross_true = adj[v].iter().filter(|&&u| u < v && !sides[u]).count();
        sides[v] = cross_true > cross_false;
    }
    let mut improved = true;
    while improved {
        improved = false;
        for v in 0..p {
            let cross = adj[v].iter().filter(|&&u| sides[u] != sides[v]).count();
            let flipped = adj[v].len() - cross;
            if flipped > cross {
                sides[v] = !sides[v];
                improved = true;
            }
        }
    }
    sides
}
