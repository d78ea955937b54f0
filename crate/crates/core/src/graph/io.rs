//! Text formats for bigraphs.
//!
//! Canonical edge list:
//!
//! ```text
//! # comments run to end of line
//! bigraph <nx> <ny>
//! <i> <j>
//! ```
//!
//! Serialization writes the header and the edges in lexicographic order, one
//! per line, each terminated by `\n`, and nothing else. The JSON form is
//! `{"nx": .., "ny": .., "edges": [[i, j], ..]}`.

use super::Bigraph;
use crate::bitset::BitSet;
use crate::error::ParseError;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    /// Duplicate edges are an error.
    Strict,
    /// Duplicate edges are merged.
    #[default]
    Lenient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    EdgeList,
    Json,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    nx: usize,
    ny: usize,
    edges: Vec<[usize; 2]>,
}

/// Parses either format; text whose first non-blank character is `{` is JSON.
pub fn parse_bigraph(text: &str, mode: ParseMode) -> Result<Bigraph, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text, mode)
    } else {
        parse_edge_list(text, mode)
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::new(line, format!("{what}: expected a non-negative integer, found {tok:?}")))
}

pub fn parse_edge_list(text: &str, mode: ParseMode) -> Result<Bigraph, ParseError> {
    let mut dims: Option<(usize, usize)> = None;
    let mut rows: Vec<BitSet> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match dims {
            None => {
                if toks.len() != 3 || toks[0] != "bigraph" {
                    return Err(ParseError::new(line, format!("expected header `bigraph <nx> <ny>`, found {content:?}")));
                }
                let nx = parse_usize(toks[1], line, "nx")?;
                let ny = parse_usize(toks[2], line, "ny")?;
                rows = vec![BitSet::new(ny); nx];
                dims = Some((nx, ny));
            }
            Some((nx, ny)) => {
                if toks.len() != 2 {
                    return Err(ParseError::new(line, format!("expected `<i> <j>`, found {content:?}")));
                }
                let i = parse_usize(toks[0], line, "x index")?;
                let j = parse_usize(toks[1], line, "y index")?;
                if i >= nx || j >= ny {
                    return Err(ParseError::new(line, format!("edge ({i}, {j}) out of range for {nx}x{ny}")));
                }
                if !rows[i].insert(j) && mode == ParseMode::Strict {
                    return Err(ParseError::new(line, format!("duplicate edge ({i}, {j})")));
                }
            }
        }
    }
    match dims {
        Some((_, ny)) => Ok(Bigraph::from_x_rows(ny, rows)),
        None => Err(ParseError::new(last_line.max(1), "missing `bigraph <nx> <ny>` header")),
    }
}

fn parse_json(text: &str, mode: ParseMode) -> Result<Bigraph, ParseError> {
    let jg: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.to_string()))?;
    let mut rows = vec![BitSet::new(jg.ny); jg.nx];
    for (k, [i, j]) in jg.edges.iter().copied().enumerate() {
        if i >= jg.nx || j >= jg.ny {
            return Err(ParseError::new(1, format!("edge #{k} ({i}, {j}) out of range for {}x{}", jg.nx, jg.ny)));
        }
        if !rows[i].insert(j) && mode == ParseMode::Strict {
            return Err(ParseError::new(1, format!("duplicate edge ({i}, {j})")));
        }
    }
    Ok(Bigraph::from_x_rows(jg.ny, rows))
}

/// Canonical edge-list text.
pub fn serialize_bigraph(g: &Bigraph) -> String {
    let mut out = String::with_capacity(16 + g.edge_count() * 8);
    writeln!(out, "bigraph {} {}", g.nx(), g.ny()).unwrap();
    for (i, j) in g.edges() {
        writeln!(out, "{i} {j}").unwrap();
    }
    out
}

/// Compact JSON, edges in lexicographic order.
pub fn serialize_bigraph_json(g: &Bigraph) -> String {
    serde_json::to_string(&JsonGraph {
        nx: g.nx(),
        ny: g.ny(),
        edges: g.edges().map(|(i, j)| [i, j]).collect(),
    })
    .expect("plain struct serializes")
}

pub fn serialize(g: &Bigraph, format: Format) -> String {
    match format {
        Format::EdgeList => serialize_bigraph(g),
        Format::Json => {
            let mut s = serialize_bigraph_json(g);
            s.push('\n');
            s
        }
    }
}
