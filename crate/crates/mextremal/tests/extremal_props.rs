//! The extremal search against full enumeration, plus its structural
//! invariants.

mod common;

use common::*;
use mextremal::constructions::{t1, t2};
use mextremal::contains_colored;
use mextremal::extremal::{max_edges_avoiding, mex_exact};

#[test]
fn symmetry_breaking_sound_for_mex() {
    let families: Vec<Vec<mextremal::ColoredMultigraph>> = vec![
        vec![rb_path()],
        vec![single_red_edge()],
        vec![double_edge()],
        vec![mono_k(3)],
        vec![t1(), t2()],
    ];
    for n in 2..=4 {
        for patterns in &families {
            let fast = mex_exact(n, 2, patterns).unwrap();
            let slow = naive_mex(n, 2, patterns);
            assert_eq!(fast.value, slow, "mex mismatch at n = {n}, {patterns:?}");
            assert!(fast.exhaustive);
        }
    }
}

#[test]
fn symmetry_breaking_sound_for_max_edges() {
    let families: Vec<Vec<mextremal::ColoredMultigraph>> = vec![
        vec![rb_path()],
        vec![double_edge()],
        vec![t1(), t2()],
        vec![mono_k(3)],
    ];
    for n in 2..=4 {
        for patterns in &families {
            let fast = max_edges_avoiding(n, 2, patterns).unwrap();
            let slow = naive_max_edges(n, 2, patterns);
            assert_eq!(fast.value, slow, "max-edges mismatch at n = {n}");
        }
    }
}

#[test]
fn witnesses_avoid_patterns_and_attain_value() {
    let cases: Vec<(usize, Vec<mextremal::ColoredMultigraph>)> = vec![
        (4, vec![rb_path()]),
        (5, vec![mono_k(3)]),
        (4, vec![t1(), t2()]),
    ];
    for (n, patterns) in cases {
        let res = mex_exact(n, 2, &patterns).unwrap();
        assert_eq!(res.witness.min_color_edges(), res.value);
        for p in &patterns {
            assert!(contains_colored(&res.witness, p).unwrap().is_none());
            assert!(!naive_hom(p, &res.witness));
        }
        let tot = max_edges_avoiding(n, 2, &patterns).unwrap();
        assert_eq!(tot.witness.total_edges(), tot.value);
        for p in &patterns {
            assert!(!naive_hom(p, &tot.witness));
        }
    }
}

#[test]
fn anti_monotone_in_the_pattern() {
    // rb_path embeds into both triangles; the single red edge into the red K3.
    let pairs = [
        (rb_path(), t1()),
        (rb_path(), t2()),
        (single_red_edge(), mono_k(3)),
    ];
    for n in 3..=5 {
        for (small, large) in &pairs {
            assert!(contains_colored(large, small).unwrap().is_some());
            let a = mex_exact(n, 2, std::slice::from_ref(small)).unwrap().value;
            let b = mex_exact(n, 2, std::slice::from_ref(large)).unwrap().value;
            assert!(a <= b, "n = {n}: mex[{a}] > mex[{b}]");
        }
    }
}

#[test]
fn color_permutation_equivariance() {
    let patterns = [rb_path(), t2(), single_red_edge(), c5_rrrrb()];
    for n in 3..=5 {
        for p in &patterns {
            let swapped = p.permute_colors(&[2, 1]).unwrap();
            assert_eq!(
                mex_exact(n, 2, std::slice::from_ref(p)).unwrap().value,
                mex_exact(n, 2, &[swapped]).unwrap().value,
                "n = {n}"
            );
        }
    }
}

#[test]
fn claim_bound_on_double_triangle_free_graphs() {
    for n in 3..=4 {
        let value = max_edges_avoiding(n, 2, &[t1(), t2()]).unwrap().value;
        assert!(2 * value <= n * n, "e = {value} exceeds n^2/2 at n = {n}");
    }
}

#[test]
fn no_patterns_means_full_multigraph() {
    let res = max_edges_avoiding(3, 2, &[]).unwrap();
    assert_eq!(res.value, 6);
    let res = mex_exact(3, 2, &[]).unwrap();
    assert_eq!(res.value, 3);
}

#[test]
fn three_color_searches_match_oracle() {
    let red_edge_r3 = mextremal::ColoredMultigraph::new(2, 3, [(0, 1, 1)]).unwrap();
    let path_r3 = mextremal::ColoredMultigraph::new(3, 3, [(0, 1, 1), (1, 2, 2)]).unwrap();
    for n in 2..=3 {
        for pats in [vec![red_edge_r3.clone()], vec![path_r3.clone()]] {
            assert_eq!(
                mex_exact(n, 3, &pats).unwrap().value,
                naive_mex(n, 3, &pats),
                "mex at n = {n}"
            );
            assert_eq!(
                max_edges_avoiding(n, 3, &pats).unwrap().value,
                naive_max_edges(n, 3, &pats),
                "max edges at n = {n}"
            );
        }
    }
}

#[test]
fn tiny_hosts() {
    let res = mex_exact(1, 2, &[rb_path()]).unwrap();
    assert_eq!(res.value, 0);
    assert!(res.exhaustive);
    let res = mex_exact(0, 2, &[rb_path()]).unwrap();
    assert_eq!(res.value, 0);
}
