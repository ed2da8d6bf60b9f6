//! Quotient graphs, multiplicity-one matchings, and the reduced maximum
//! matching number M(G).
//!
//! The quotient of a graph by a proper partition records, for each class
//! pair, exactly the set of colors appearing between the classes. M(G) is
//! the maximum, over proper partitions into chromatic-number many classes,
//! of the largest matching among class pairs joined by exactly one color.

use crate::coloring::{chromatic_number, enumerate_proper_partitions, Partition};
use crate::error::Error;
use crate::graph::{hom_exists, ColoredMultigraph};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// A quotient multigraph together with its source partition and the exact
/// color sets between class pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGraph {
    base: ColoredMultigraph,
    partition: Partition,
    colorsets: BTreeMap<(usize, usize), Vec<usize>>,
}

impl ReducedGraph {
    /// The quotient multigraph on the class vertices.
    pub fn base(&self) -> &ColoredMultigraph {
        &self.base
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Colors between classes `x` and `y`, ascending; empty when no edge.
    pub fn colorset(&self, x: usize, y: usize) -> &[usize] {
        let key = (x.min(y), x.max(y));
        self.colorsets.get(&key).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Class pairs carrying exactly one color, with that color.
    pub fn multiplicity_one_pairs(&self) -> Vec<(usize, usize, usize)> {
        self.colorsets
            .iter()
            .filter(|(_, cs)| cs.len() == 1)
            .map(|(&(x, y), cs)| (x, y, cs[0]))
            .collect()
    }
}

/// One edge of a multiplicity-one matching: a class pair and its sole color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingEdge {
    pub a: usize,
    pub b: usize,
    pub color: usize,
}

/// A maximum matching restricted to multiplicity-one class pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingResult {
    pub size: usize,
    pub edges: Vec<MatchingEdge>,
}

/// Quotients `g` by a proper partition.
///
/// Errors with [`Error::ImproperPartition`] naming a violating class and edge
/// when some class is not independent.
pub fn quotient(g: &ColoredMultigraph, p: &Partition) -> Result<ReducedGraph, Error> {
    if p.n() != g.n() {
        return Err(Error::InvalidPartition {
            message: format!("partition covers {} vertices, graph has {}", p.n(), g.n()),
        });
    }
    if let Some((class, u, v)) = p.violation(g) {
        return Err(Error::ImproperPartition { class, u, v });
    }
    let class_of = p.class_of();
    let mut colorsets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (u, v, c) in g.all_edges() {
        let (x, y) = (class_of[u].min(class_of[v]), class_of[u].max(class_of[v]));
        let cs = colorsets.entry((x, y)).or_default();
        if !cs.contains(&c) {
            cs.push(c);
        }
    }
    for cs in colorsets.values_mut() {
        cs.sort_unstable();
    }
    let triples = colorsets
        .iter()
        .flat_map(|(&(x, y), cs)| cs.iter().map(move |&c| (x, y, c)));
    let base = ColoredMultigraph::new(p.len(), g.r(), triples)?;
    Ok(ReducedGraph {
        base,
        partition: p.clone(),
        colorsets,
    })
}

/// Maximum matching among multiplicity-one class pairs, exact.
///
/// Class counts stay tiny here, so an include/exclude search over the pairs
/// suffices; the reported matching is the lexicographically least maximum.
pub fn multiplicity_one_matching(rg: &ReducedGraph) -> MatchingResult {
    let pairs = rg.multiplicity_one_pairs();
    let k = rg.base().n();
    let mut best: Vec<(usize, usize, usize)> = Vec::new();
    let mut current: Vec<(usize, usize, usize)> = Vec::new();
    let mut used = vec![false; k];
    fn rec(
        pairs: &[(usize, usize, usize)],
        idx: usize,
        used: &mut [bool],
        current: &mut Vec<(usize, usize, usize)>,
        best: &mut Vec<(usize, usize, usize)>,
    ) {
        // Even taking every remaining pair cannot beat the incumbent.
        if current.len() + (pairs.len() - idx) < best.len() {
            return;
        }
        if idx == pairs.len() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        let (a, b, c) = pairs[idx];
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            current.push((a, b, c));
            rec(pairs, idx + 1, used, current, best);
            current.pop();
            used[a] = false;
            used[b] = false;
        }
        rec(pairs, idx + 1, used, current, best);
    }
    rec(&pairs, 0, &mut used, &mut current, &mut best);
    MatchingResult {
        size: best.len(),
        edges: best
            .into_iter()
            .map(|(a, b, color)| MatchingEdge { a, b, color })
            .collect(),
    }
}

/// The value M(g) together with a partition and matching attaining it.
#[derive(Clone, Debug)]
pub struct ReducedMatching {
    pub m: usize,
    pub partition: Partition,
    pub matching: MatchingResult,
}

/// Computes M(g): the maximum multiplicity-one matching size over all proper
/// partitions into chromatic-number many classes.
///
/// Partitions are scored in parallel; the witness is the first partition in
/// enumeration order attaining the maximum, so results are deterministic.
pub fn reduced_max_matching(g: &ColoredMultigraph) -> Result<ReducedMatching, Error> {
    let chi = chromatic_number(g)?;
    let partitions: Vec<Partition> = enumerate_proper_partitions(g, chi).collect();
    let scored: Vec<(usize, MatchingResult)> = partitions
        .par_iter()
        .map(|p| {
            let rg = quotient(g, p).expect("enumerated partitions are proper");
            let m = multiplicity_one_matching(&rg);
            (m.size, m)
        })
        .collect();
    let best_idx = scored
        .iter()
        .enumerate()
        .max_by(|(i, (a, _)), (j, (b, _))| a.cmp(b).then(j.cmp(i)))
        .map(|(i, _)| i)
        .expect("a graph with n >= 1 has at least one proper chi-partition");
    Ok(ReducedMatching {
        m: scored[best_idx].0,
        partition: partitions[best_idx].clone(),
        matching: scored[best_idx].1.clone(),
    })
}

/// Checks whether `target` is a minimal colored-homomorphism image of `g`:
/// some colored homomorphism `g -> target` exists, and none exists into any
/// proper induced sub-multigraph of `target`.
pub fn is_reduced(target: &ColoredMultigraph, g: &ColoredMultigraph) -> Result<bool, Error> {
    let k = target.n();
    if k > 20 {
        return Err(Error::domain(format!(
            "minimality check enumerates 2^{k} induced subgraphs; targets are capped at 20 vertices"
        )));
    }
    if hom_exists(g, target)?.is_none() {
        return Ok(false);
    }
    // Proper nonempty vertex subsets of the target.
    for subset in 1u32..(1 << k) - 1 {
        let verts: Vec<usize> = (0..k).filter(|&v| subset >> v & 1 == 1).collect();
        let sub = target.induced(&verts);
        if hom_exists(g, &sub)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::enumerate_proper_partitions;

    fn c5_rrrrb() -> ColoredMultigraph {
        ColoredMultigraph::new(5, 2, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 2)])
            .unwrap()
    }

    fn mono_k(k: usize) -> ColoredMultigraph {
        let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v, 1)));
        ColoredMultigraph::new(k, 2, edges).unwrap()
    }

    fn k3_all_colors() -> ColoredMultigraph {
        let edges = (0..3)
            .flat_map(|u| (u + 1..3).map(move |v| (u, v)))
            .flat_map(|(u, v)| [(u, v, 1), (u, v, 2)]);
        ColoredMultigraph::new(3, 2, edges).unwrap()
    }

    #[test]
    fn identity_quotient_of_k3() {
        let g = mono_k(3);
        let p = Partition::new(vec![vec![0], vec![1], vec![2]], 3).unwrap();
        let rg = quotient(&g, &p).unwrap();
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(rg.colorset(x, y), &[1]);
        }
    }

    #[test]
    fn c5_three_class_quotient() {
        let g = c5_rrrrb();
        let p = Partition::new(vec![vec![0, 2], vec![1, 4], vec![3]], 5).unwrap();
        let rg = quotient(&g, &p).unwrap();
        assert_eq!(rg.colorset(0, 1), &[1, 2]);
        assert_eq!(rg.colorset(0, 2), &[1]);
        assert_eq!(rg.colorset(1, 2), &[1]);
        assert_eq!(multiplicity_one_matching(&rg).size, 1);
    }

    #[test]
    fn empty_quotient() {
        let g = ColoredMultigraph::empty(4, 2);
        let p = Partition::new(vec![vec![0, 1], vec![2, 3]], 4).unwrap();
        let rg = quotient(&g, &p).unwrap();
        assert_eq!(rg.base().n(), 2);
        assert_eq!(rg.base().total_edges(), 0);
    }

    #[test]
    fn improper_partition_names_edge() {
        let g = mono_k(3);
        let p = Partition::new(vec![vec![0, 1], vec![2]], 3).unwrap();
        assert_eq!(
            quotient(&g, &p),
            Err(Error::ImproperPartition {
                class: 0,
                u: 0,
                v: 1
            })
        );
    }

    #[test]
    fn mono_k4_matching() {
        let g = mono_k(4);
        let p = Partition::new((0..4).map(|v| vec![v]).collect(), 4).unwrap();
        let rg = quotient(&g, &p).unwrap();
        assert_eq!(multiplicity_one_matching(&rg).size, 2);
    }

    #[test]
    fn all_colors_k3_has_no_single_pairs() {
        let g = k3_all_colors();
        let p = Partition::new((0..3).map(|v| vec![v]).collect(), 3).unwrap();
        let rg = quotient(&g, &p).unwrap();
        assert_eq!(multiplicity_one_matching(&rg).size, 0);
    }

    #[test]
    fn reduced_max_matching_values() {
        assert_eq!(reduced_max_matching(&mono_k(4)).unwrap().m, 2);
        assert_eq!(reduced_max_matching(&k3_all_colors()).unwrap().m, 0);
        assert_eq!(reduced_max_matching(&c5_rrrrb()).unwrap().m, 1);
    }

    #[test]
    fn quotient_map_is_a_hom_witness() {
        let g = c5_rrrrb();
        for p in enumerate_proper_partitions(&g, 3) {
            let rg = quotient(&g, &p).unwrap();
            assert!(hom_exists(&g, rg.base()).unwrap().is_some());
        }
    }

    #[test]
    fn is_reduced_on_chi_quotient() {
        let g = mono_k(3);
        let p = Partition::new((0..3).map(|v| vec![v]).collect(), 3).unwrap();
        let rg = quotient(&g, &p).unwrap();
        assert!(is_reduced(rg.base(), &g).unwrap());
    }

    #[test]
    fn is_reduced_rejects_oversized_target() {
        let k4 = mono_k(4);
        let k3 = mono_k(3);
        assert!(!is_reduced(&k4, &k3).unwrap());
    }

    #[test]
    fn t2_is_reduced_for_c5() {
        let t2 = crate::constructions::t2();
        assert!(is_reduced(&t2, &c5_rrrrb()).unwrap());
    }
}
