//! Text and JSON file formats for colored multigraphs.
//!
//! Text format, one graph per file:
//!
//! ```text
//! # comment
//! n 5
//! r 2
//! e 0 1 1
//! e 1 2 2
//! ```
//!
//! Edge lines require `0 <= u < v < n` and `1 <= c <= r`; duplicate
//! `(u, v, c)` lines are an error. A `#` starts a comment anywhere in a line.
//!
//! JSON format: `{"n": N, "r": R, "edges": [[u, v, c], ...]}` with the same
//! constraints. `parse(serialize(g)) == g` in both formats.

use crate::error::Error;
use crate::graph::ColoredMultigraph;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    r: usize,
    edges: Vec<(usize, usize, usize)>,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::SyntaxError {
        line,
        message: message.into(),
    }
}

/// Parses the text format.
pub fn parse_text(input: &str) -> Result<ColoredMultigraph, Error> {
    let mut n: Option<usize> = None;
    let mut r: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap();
        match tag {
            "n" => {
                if n.is_some() {
                    return Err(syntax(lineno, "repeated n line"));
                }
                n = Some(parse_field(lineno, parts.next(), "vertex count")?);
            }
            "r" => {
                if n.is_none() {
                    return Err(syntax(lineno, "r line before n line"));
                }
                if r.is_some() {
                    return Err(syntax(lineno, "repeated r line"));
                }
                r = Some(parse_field(lineno, parts.next(), "color count")?);
            }
            "e" => {
                if n.is_none() || r.is_none() {
                    return Err(syntax(lineno, "edge line before n and r lines"));
                }
                let u: usize = parse_field(lineno, parts.next(), "edge endpoint")?;
                let v: usize = parse_field(lineno, parts.next(), "edge endpoint")?;
                let c: usize = parse_field(lineno, parts.next(), "edge color")?;
                if u >= v {
                    return Err(syntax(lineno, format!("edge requires u < v, got {u} {v}")));
                }
                edges.push((u, v, c));
            }
            other => {
                return Err(syntax(lineno, format!("unknown line tag {other:?}")));
            }
        }
        if let Some(extra) = parts.next() {
            return Err(syntax(lineno, format!("trailing token {extra:?}")));
        }
    }
    let n = n.ok_or_else(|| syntax(input.lines().count().max(1), "missing n line"))?;
    let r = r.ok_or_else(|| syntax(input.lines().count().max(1), "missing r line"))?;
    ColoredMultigraph::new(n, r, edges)
}

fn parse_field(line: usize, field: Option<&str>, what: &str) -> Result<usize, Error> {
    let text = field.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    text.parse()
        .map_err(|_| syntax(line, format!("invalid {what} {text:?}")))
}

/// Serializes to the text format, edges sorted by `(u, v, c)`.
pub fn serialize_text(g: &ColoredMultigraph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    writeln!(out, "r {}", g.r()).unwrap();
    for (u, v, c) in g.all_edges() {
        writeln!(out, "e {u} {v} {c}").unwrap();
    }
    out
}

/// Parses the JSON format.
pub fn parse_json(input: &str) -> Result<ColoredMultigraph, Error> {
    let raw: GraphJson = serde_json::from_str(input).map_err(|e| Error::SyntaxError {
        line: e.line(),
        message: e.to_string(),
    })?;
    for &(u, v, _) in &raw.edges {
        if u >= v {
            return Err(syntax(1, format!("edge requires u < v, got {u} {v}")));
        }
    }
    ColoredMultigraph::new(raw.n, raw.r, raw.edges)
}

/// Serializes to the JSON format, edges sorted by `(u, v, c)`.
pub fn serialize_json(g: &ColoredMultigraph) -> String {
    let raw = GraphJson {
        n: g.n(),
        r: g.r(),
        edges: g.all_edges(),
    };
    serde_json::to_string(&raw).expect("graph serialization cannot fail")
}

/// Parses either format, deciding by the first non-whitespace byte.
pub fn parse_auto(input: &str) -> Result<ColoredMultigraph, Error> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}
