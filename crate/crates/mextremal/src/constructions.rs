//! Generators for the explicit graph families: Turán graphs, round-robin
//! 1-factorizations, colored bipartite gadgets, the complete-multipartite
//! host H and its red-clique extension H', the r-graph lower-bound family,
//! the bicolored triangles T1/T2, and bicolored cycles.

use crate::error::Error;
use crate::graph::ColoredMultigraph;
use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Complete multipartite graph on `n` vertices with `parts` balanced parts
/// (sizes differing by at most one), one color.
pub fn turan_graph(n: usize, parts: usize) -> ColoredMultigraph {
    assert!(parts >= 1 && parts <= n, "need 1 <= parts <= n");
    let base = n / parts;
    let extra = n % parts;
    let mut part_of = Vec::with_capacity(n);
    for p in 0..parts {
        let size = base + usize::from(p < extra);
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .map(|(u, v)| (u, v, 1));
    ColoredMultigraph::new(n, 1, edges).expect("generated edges are valid")
}

/// A partition of the complete graph on an even vertex count into perfect
/// matchings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneFactorization {
    pub r: usize,
    /// `classes[i]` is the i-th perfect matching on vertices `0..r`.
    pub classes: Vec<Vec<(usize, usize)>>,
}

/// Round-robin (circle method) 1-factorization of the complete graph on `r`
/// vertices. Requires `r` even and at least 2.
pub fn one_factorization(r: usize) -> Result<OneFactorization, Error> {
    if r < 2 || !r.is_multiple_of(2) {
        return Err(Error::OddR { r });
    }
    let m = r - 1;
    let mut classes = Vec::with_capacity(m);
    for round in 0..m {
        let mut class = Vec::with_capacity(r / 2);
        let fixed = r - 1;
        let a = round;
        class.push((a.min(fixed), a.max(fixed)));
        for j in 1..r / 2 {
            let x = (round + j) % m;
            let y = (round + m - j) % m;
            class.push((x.min(y), x.max(y)));
        }
        class.sort_unstable();
        classes.push(class);
    }
    Ok(OneFactorization { r, classes })
}

impl OneFactorization {
    /// The matching class containing the pair `{y, y'}`, 1-indexed.
    pub fn class_of_pair(&self, y: usize, yp: usize) -> usize {
        let key = (y.min(yp), y.max(yp));
        self.classes
            .iter()
            .position(|c| c.binary_search(&key).is_ok())
            .map(|i| i + 1)
            .expect("every pair lies in exactly one class")
    }
}

/// Parameters for a random gadget coloring: a complete bipartite graph with
/// sides of size `t`, each cross pair colored uniformly from `1..=r`, plus
/// the side-subset size `s` used when verifying it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetSpec {
    pub t: usize,
    pub r: usize,
    pub s: usize,
    pub seed: u64,
}

impl GadgetSpec {
    pub fn new(t: usize, r: usize, s: usize, seed: u64) -> Result<Self, Error> {
        if s < 1 || s > t {
            return Err(Error::domain(format!("need 1 <= s <= t, got s={s}, t={t}")));
        }
        Ok(GadgetSpec { t, r, s, seed })
    }
}

/// Side-subset size `ceil(t / (rk)^exponent)`; the two exponents in use are
/// `k` and `2`.
pub fn gadget_threshold(r: usize, k: usize, t: usize, exponent: u32) -> usize {
    let denom = (r * k).pow(exponent);
    t.div_ceil(denom).max(1)
}

/// Expected number of monochromatically deficient subset pairs under a
/// uniform random r-coloring: `r * C(t, s)^2 * ((r-1)/r)^((t/(rk))^2)` with
/// `s = ceil(t / (rk)^k)`. Computed in log space; below 1 for suitable
/// parameters, e.g. (r, k, t) = (2, 2, 16).
pub fn gadget_failure_bound(r: usize, k: usize, t: usize) -> f64 {
    let s = gadget_threshold(r, k, t, k as u32);
    let ln_binom = ln_choose(t, s);
    let ratio = (t as f64) / ((r * k) as f64);
    let ln_val = (r as f64).ln() + 2.0 * ln_binom
        + ratio * ratio * (((r - 1) as f64) / (r as f64)).ln();
    ln_val.exp()
}

fn ln_choose(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

fn bipartite_graph(t: usize, r: usize, color_at: impl Fn(usize, usize) -> usize) -> ColoredMultigraph {
    // Sides X = 0..t and Y = t..2t.
    let edges = (0..t)
        .flat_map(|i| (0..t).map(move |j| (i, j)))
        .map(|(i, j)| (i, t + j, color_at(i, j)));
    ColoredMultigraph::new(2 * t, r, edges).expect("generated edges are valid")
}

/// Seeded uniform random coloring of K_{t,t}: each cross pair gets exactly
/// one color from `1..=r`. Sides are `0..t` and `t..2t`.
pub fn gadget_coloring(spec: &GadgetSpec) -> ColoredMultigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let colors: Vec<Vec<usize>> = (0..spec.t)
        .map(|_| (0..spec.t).map(|_| rng.gen_range(1..=spec.r)).collect())
        .collect();
    bipartite_graph(spec.t, spec.r, |i, j| colors[i][j])
}

/// Deterministic t=3, r=2 gadget: color 2 exactly on the cross pairs
/// `(i, i+1 mod 3)`, color 1 elsewhere. Every pair of 2-subsets of the sides
/// spans both colors.
pub fn builtin_gadget_t3() -> ColoredMultigraph {
    bipartite_graph(3, 2, |i, j| if j == (i + 1) % 3 { 2 } else { 1 })
}

/// All cross pairs in color 1: a negative control that fails verification
/// for every s whenever r >= 2.
pub fn mono_gadget(t: usize, r: usize) -> ColoredMultigraph {
    bipartite_graph(t, r, |_, _| 1)
}

/// Two colors by parity of `i + j`: fails verification at s = 2 because
/// same-parity index pairs span a monochromatic 2x2 block.
pub fn checkerboard_gadget(t: usize) -> ColoredMultigraph {
    bipartite_graph(t, 2, |i, j| 1 + (i + j) % 2)
}

/// Outcome of a gadget verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GadgetVerdict {
    Pass,
    /// A concrete violating pair of side subsets (original vertex ids).
    Fail { rows: Vec<usize>, cols: Vec<usize> },
}

/// How to scan subset pairs: every pair, or a seeded uniform sample.
#[derive(Clone, Copy, Debug)]
pub enum VerifyMode {
    Exact,
    Sampled { trials: usize, seed: u64 },
}

/// Checks that every pair of s-subsets of the two sides spans all colors.
///
/// Exact mode enumerates all `C(t,s)^2` subset pairs and is capped at 10^7
/// pairs; sampled mode draws `trials` uniform pairs. The input must be a
/// complete bipartite graph with equal sides (every cross pair colored, no
/// edges within a side).
pub fn verify_gadget(
    f: &ColoredMultigraph,
    s: usize,
    mode: VerifyMode,
) -> Result<GadgetVerdict, Error> {
    let (x_side, y_side) = bipartition(f)?;
    let t = x_side.len();
    if s < 1 || s > t {
        return Err(Error::domain(format!("need 1 <= s <= t, got s={s}, t={t}")));
    }
    let full: u32 = if f.r() == 32 { u32::MAX } else { (1u32 << f.r()) - 1 };
    let mask = |x: usize, y: usize| -> u32 {
        f.colors_on(x, y).iter().map(|&c| 1u32 << (c - 1)).sum()
    };
    let check = |rows: &[usize], cols: &[usize]| -> bool {
        let mut seen = 0u32;
        for &x in rows {
            for &y in cols {
                seen |= mask(x, y);
                if seen == full {
                    return true;
                }
            }
        }
        false
    };
    match mode {
        VerifyMode::Exact => {
            let per_side = binom(t, s);
            if per_side.saturating_mul(per_side) > 10_000_000 {
                return Err(Error::ExactCheckTooLarge {
                    pairs: per_side as u128 * per_side as u128,
                });
            }
            for rows in x_side.iter().copied().combinations(s) {
                for cols in y_side.iter().copied().combinations(s) {
                    if !check(&rows, &cols) {
                        return Ok(GadgetVerdict::Fail { rows, cols });
                    }
                }
            }
            Ok(GadgetVerdict::Pass)
        }
        VerifyMode::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let rows: Vec<usize> = rand::seq::index::sample(&mut rng, t, s)
                    .into_iter()
                    .map(|i| x_side[i])
                    .sorted()
                    .collect();
                let cols: Vec<usize> = rand::seq::index::sample(&mut rng, t, s)
                    .into_iter()
                    .map(|i| y_side[i])
                    .sorted()
                    .collect();
                if !check(&rows, &cols) {
                    return Ok(GadgetVerdict::Fail { rows, cols });
                }
            }
            Ok(GadgetVerdict::Pass)
        }
    }
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u64 = 1;
    for i in 0..k {
        out = out.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    out
}

/// Recovers the sides of a complete bipartite graph with equal sides.
fn bipartition(f: &ColoredMultigraph) -> Result<(Vec<usize>, Vec<usize>), Error> {
    let n = f.n();
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::NotCompleteBipartite);
    }
    let simple = f.underlying_simple();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in simple.color_edges(1) {
        adj[u].push(v);
        adj[v].push(u);
    }
    // Two-color by breadth-first search from vertex 0.
    let mut side = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([0usize]);
    side[0] = 0;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if side[v] == usize::MAX {
                side[v] = 1 - side[u];
                queue.push_back(v);
            } else if side[v] == side[u] {
                return Err(Error::NotCompleteBipartite);
            }
        }
    }
    if side.contains(&usize::MAX) {
        return Err(Error::NotCompleteBipartite);
    }
    let x_side: Vec<usize> = (0..n).filter(|&v| side[v] == 0).collect();
    let y_side: Vec<usize> = (0..n).filter(|&v| side[v] == 1).collect();
    if x_side.len() != y_side.len() {
        return Err(Error::NotCompleteBipartite);
    }
    for &x in &x_side {
        for &y in &y_side {
            if f.multiplicity(x, y) == 0 {
                return Err(Error::NotCompleteBipartite);
            }
        }
    }
    Ok((x_side, y_side))
}

/// Complete k-partite graph with parts of size `t`; each pair of parts
/// carries an independent seeded random gadget coloring. Part `j` occupies
/// vertices `j*t..(j+1)*t`.
pub fn graph_h(r: usize, k: usize, t: usize, seed: u64) -> ColoredMultigraph {
    assert!(k >= 2 && t >= 1, "need k >= 2 and t >= 1");
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for p in 0..k {
        for q in p + 1..k {
            let mut rng = ChaCha8Rng::seed_from_u64(master.gen());
            for i in 0..t {
                for j in 0..t {
                    edges.push((p * t + i, q * t + j, rng.gen_range(1..=r)));
                }
            }
        }
    }
    ColoredMultigraph::new(k * t, r, edges).expect("generated edges are valid")
}

/// Extends `h` by a clique on `2m` fresh vertices in the given color, joined
/// completely to `h` in that color.
pub fn graph_h_prime(
    h: &ColoredMultigraph,
    m: usize,
    red: usize,
) -> Result<ColoredMultigraph, Error> {
    assert!(m >= 1, "need m >= 1");
    if red < 1 || red > h.r() {
        return Err(Error::ColorOutOfRange {
            u: 0,
            v: 0,
            color: red,
            r: h.r(),
        });
    }
    let n = h.n();
    let total = n + 2 * m;
    let mut edges = h.all_edges();
    for a in n..total {
        for b in a + 1..total {
            edges.push((a, b, red));
        }
        for v in 0..n {
            edges.push((v, a, red));
        }
    }
    ColoredMultigraph::new(total, h.r(), edges)
}

/// The r-colored lower-bound family on `(k-1) * r * m` vertices.
///
/// Vertices are indexed by coordinates `(x, y, z)` with `x < k-1`, `y < r`,
/// `z < m`. The complements are prescribed: the color-r complement consists
/// of the cliques inside each `(x, y)` group; for `i < r` the color-i
/// complement joins groups `(x, y)` and `(x, y')` whenever `{y, y'}` lies in
/// class `i` of the round-robin 1-factorization of `K_r`.
#[derive(Clone, Debug)]
pub struct ConstructionFamily {
    pub r: usize,
    pub k: usize,
    pub m: usize,
    pub graph: ColoredMultigraph,
    factorization: OneFactorization,
}

impl ConstructionFamily {
    pub fn vertex_id(&self, x: usize, y: usize, z: usize) -> usize {
        x * self.r * self.m + y * self.m + z
    }

    pub fn coords(&self, id: usize) -> (usize, usize, usize) {
        let x = id / (self.r * self.m);
        let rest = id % (self.r * self.m);
        (x, rest / self.m, rest % self.m)
    }

    pub fn factorization(&self) -> &OneFactorization {
        &self.factorization
    }

    /// Number of pairs missing from color `i` (the complement size).
    pub fn complement_count(&self, i: usize) -> usize {
        let n = self.graph.n();
        n * (n - 1) / 2 - self.graph.edge_count(i)
    }

    /// Closed-form complement size: `(k-1) * r * C(m,2)` for color r and
    /// `(k-1) * (r/2) * m^2` for the other colors.
    pub fn complement_closed_form(&self, i: usize) -> usize {
        if i == self.r {
            (self.k - 1) * self.r * (self.m * (self.m - 1) / 2)
        } else {
            (self.k - 1) * (self.r / 2) * self.m * self.m
        }
    }
}

/// Builds the lower-bound family. Requires `r` even, `k >= 2`, `m >= 1`.
pub fn lower_bound_family(r: usize, k: usize, m: usize) -> Result<ConstructionFamily, Error> {
    if r < 2 || !r.is_multiple_of(2) {
        return Err(Error::OddR { r });
    }
    assert!(k >= 2 && m >= 1, "need k >= 2 and m >= 1");
    let factorization = one_factorization(r)?;
    let n = (k - 1) * r * m;
    let id = |x: usize, y: usize, z: usize| x * r * m + y * m + z;
    // Complement pair sets per color.
    let mut complement: Vec<std::collections::HashSet<(usize, usize)>> =
        vec![std::collections::HashSet::new(); r];
    for x in 0..k - 1 {
        for y in 0..r {
            for z in 0..m {
                for zp in z + 1..m {
                    complement[r - 1].insert((id(x, y, z), id(x, y, zp)));
                }
            }
        }
        for (ci, class) in factorization.classes.iter().enumerate() {
            for &(y, yp) in class {
                for z in 0..m {
                    for zp in 0..m {
                        let (a, b) = (id(x, y, z), id(x, yp, zp));
                        complement[ci].insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for (ci, comp) in complement.iter().enumerate() {
                if !comp.contains(&(u, v)) {
                    edges.push((u, v, ci + 1));
                }
            }
        }
    }
    let graph = ColoredMultigraph::new(n, r, edges)?;
    Ok(ConstructionFamily {
        r,
        k,
        m,
        graph,
        factorization,
    })
}

/// Bicolored triangle with one double edge on `{0,1}` and two red edges.
pub fn t1() -> ColoredMultigraph {
    ColoredMultigraph::new(3, 2, [(0, 1, 1), (0, 1, 2), (0, 2, 1), (1, 2, 1)])
        .expect("fixed edges are valid")
}

/// Bicolored triangle with one double edge on `{0,1}`, one red edge, and one
/// blue edge.
pub fn t2() -> ColoredMultigraph {
    ColoredMultigraph::new(3, 2, [(0, 1, 1), (0, 1, 2), (0, 2, 1), (1, 2, 2)])
        .expect("fixed edges are valid")
}

/// Cycle `v0 .. v_{len-1}` with edge `(v_i, v_{i+1})` colored by the i-th
/// letter of `colorword` (R = 1, B = 2). Two colors.
pub fn cycle_pattern(length: usize, colorword: &str) -> Result<ColoredMultigraph, Error> {
    if length < 3 {
        return Err(Error::CycleTooShort { got: length });
    }
    let letters: Vec<char> = colorword.chars().collect();
    if letters.len() != length {
        return Err(Error::LengthMismatch {
            expected: length,
            got: letters.len(),
        });
    }
    let mut edges = Vec::with_capacity(length);
    for (i, &ch) in letters.iter().enumerate() {
        let c = match ch {
            'R' => 1,
            'B' => 2,
            other => return Err(Error::InvalidColorChar { index: i, ch: other }),
        };
        let u = i;
        let v = (i + 1) % length;
        edges.push((u.min(v), u.max(v), c));
    }
    ColoredMultigraph::new(length, 2, edges)
}
