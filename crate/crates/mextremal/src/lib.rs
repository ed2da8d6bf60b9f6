//! Desk-scale tools for multicolor extremal graph problems.
//!
//! The library represents r-edge-colored multigraphs (each vertex pair
//! carries a subset of the colors) and provides:
//!
//! * colored copy and homomorphism searches, blow-ups, file formats
//!   ([`graph`], [`io`]);
//! * exact chromatic numbers and streams of proper vertex partitions
//!   ([`coloring`]);
//! * quotient graphs and the reduced maximum matching number M(G)
//!   ([`reduced`]);
//! * exhaustive extremal searches with symmetry breaking: the largest
//!   balanced color classes, or the largest total edge count, over hosts
//!   avoiding a family of forbidden colored patterns ([`extremal`]);
//! * generators for the explicit construction families ([`constructions`]);
//! * exact rational bound evaluation and per-graph reports ([`bounds`]);
//! * a randomized structure-finding pipeline for dense hosts ([`pipeline`]).
//!
//! Everything is deterministic: searches fix their exploration order and all
//! randomized procedures take explicit seeds.
//!
//! # Example
//!
//! ```
//! use mextremal::constructions::cycle_pattern;
//! use mextremal::extremal::mex_exact;
//! use mextremal::reduced::reduced_max_matching;
//! use mextremal::{bounds, ColoredMultigraph};
//!
//! // The odd cycle with four red edges and one blue edge.
//! let c5 = cycle_pattern(5, "RRRRB")?;
//! assert_eq!(reduced_max_matching(&c5)?.m, 1);
//! let report = bounds::report(&c5, None)?;
//! assert_eq!(bounds::format_rational(report.theorem_upper), "241/324");
//!
//! // Largest balanced color classes on 6 vertices avoiding a bicolored path.
//! let path = ColoredMultigraph::new(3, 2, [(0, 1, 1), (1, 2, 2)])?;
//! let result = mex_exact(6, 2, &[path])?;
//! assert_eq!(result.value, 3);
//! assert!(result.exhaustive);
//! # Ok::<(), mextremal::Error>(())
//! ```

pub mod bounds;
pub mod coloring;
pub mod constructions;
mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod pipeline;
pub mod reduced;

pub use error::Error;
pub use graph::{contains_colored, hom_exists, ColoredMultigraph, Embedding, HomWitness};
