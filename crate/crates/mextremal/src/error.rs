//! Shared error type for the whole library.

use thiserror::Error;

/// Everything that can go wrong across the library.
///
/// Variants carry enough context to name the offending object (edge, color,
/// class, line) so that callers can print actionable messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge {{{vertex},{vertex}}} in color {color}")]
    Loop { vertex: usize, color: usize },

    #[error("vertex out of range on edge {{{u},{v}}} color {color} (n = {n})")]
    VertexOutOfRange {
        u: usize,
        v: usize,
        color: usize,
        n: usize,
    },

    #[error("color {color} out of range on edge {{{u},{v}}} (r = {r})")]
    ColorOutOfRange {
        u: usize,
        v: usize,
        color: usize,
        r: usize,
    },

    #[error("duplicate edge {{{u},{v}}} in color {color}")]
    DuplicateEdge { u: usize, v: usize, color: usize },

    #[error("color counts differ: {left} vs {right}")]
    ColorCountMismatch { left: usize, right: usize },

    #[error("syntax error on line {line}: {message}")]
    SyntaxError { line: usize, message: String },

    #[error("graph has no vertices")]
    EmptyVertexSet,

    #[error("partition is invalid: {message}")]
    InvalidPartition { message: String },

    #[error("partition class {class} is not independent: edge {{{u},{v}}} lies inside it")]
    ImproperPartition { class: usize, u: usize, v: usize },

    #[error("partition has {got} classes, expected {expected}")]
    PartitionClassCount { expected: usize, got: usize },

    #[error("partition class {class} contains core edge {{{u},{v}}}")]
    PartitionNotProperForCore { class: usize, u: usize, v: usize },

    #[error("pattern {index} has no edges")]
    PatternHasNoEdge { index: usize },

    #[error("r = {r} must be even and at least 2")]
    OddR { r: usize },

    #[error("color word has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("cycle length {got} is below 3")]
    CycleTooShort { got: usize },

    #[error("invalid color character {ch:?} at position {index}")]
    InvalidColorChar { index: usize, ch: char },

    #[error("graph is not a complete bipartite graph with equal sides")]
    NotCompleteBipartite,

    #[error("exact subset check would enumerate {pairs} pairs (limit 10^7); use sampled mode")]
    ExactCheckTooLarge { pairs: u128 },

    #[error("matching of size {m} does not fit on {vertices} vertices")]
    MatchingTooLarge { m: usize, vertices: usize },

    #[error("chi = {chi} is below 2")]
    ChiTooSmall { chi: usize },

    #[error("M = {m} is out of range for chi = {chi} (must be at most chi/2)")]
    MOutOfRange { m: usize, chi: usize },

    #[error("parameters outside supported regime: 10*{m} > {k}")]
    RegimeViolation { k: usize, m: usize },

    #[error("{message}")]
    Domain { message: String },
}

impl Error {
    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain {
            message: message.into(),
        }
    }

    /// The variant name, for error reporting that must survive rewording.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Loop { .. } => "Loop",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::ColorOutOfRange { .. } => "ColorOutOfRange",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::ColorCountMismatch { .. } => "ColorCountMismatch",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::EmptyVertexSet => "EmptyVertexSet",
            Error::InvalidPartition { .. } => "InvalidPartition",
            Error::ImproperPartition { .. } => "ImproperPartition",
            Error::PartitionClassCount { .. } => "PartitionClassCount",
            Error::PartitionNotProperForCore { .. } => "PartitionNotProperForCore",
            Error::PatternHasNoEdge { .. } => "PatternHasNoEdge",
            Error::OddR { .. } => "OddR",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::CycleTooShort { .. } => "CycleTooShort",
            Error::InvalidColorChar { .. } => "InvalidColorChar",
            Error::NotCompleteBipartite => "NotCompleteBipartite",
            Error::ExactCheckTooLarge { .. } => "ExactCheckTooLarge",
            Error::MatchingTooLarge { .. } => "MatchingTooLarge",
            Error::ChiTooSmall { .. } => "ChiTooSmall",
            Error::MOutOfRange { .. } => "MOutOfRange",
            Error::RegimeViolation { .. } => "RegimeViolation",
            Error::Domain { .. } => "Domain",
        }
    }
}
