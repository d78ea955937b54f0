//! Certificates produced by the solvers: alternating cycles and paths that
//! can be re-checked against the graph they claim to live in.

use super::{Bigraph, Side};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    X(usize),
    Y(usize),
}

impl Vertex {
    pub fn side(self) -> Side {
        match self {
            Vertex::X(_) => Side::X,
            Vertex::Y(_) => Side::Y,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Vertex::X(i) | Vertex::Y(i) => i,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side(), self.index())
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let tag = match self {
            Vertex::X(_) => "x",
            Vertex::Y(_) => "y",
        };
        (tag, self.index()).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (tag, i): (String, usize) = Deserialize::deserialize(deserializer)?;
        match tag.as_str() {
            "x" => Ok(Vertex::X(i)),
            "y" => Ok(Vertex::Y(i)),
            other => Err(de::Error::custom(format!("unknown vertex side {other:?}"))),
        }
    }
}

fn edge_between(g: &Bigraph, a: Vertex, b: Vertex) -> bool {
    match (a, b) {
        (Vertex::X(i), Vertex::Y(j)) | (Vertex::Y(j), Vertex::X(i)) => i < g.nx() && j < g.ny() && g.has_edge(i, j),
        _ => false,
    }
}

fn check_distinct_and_in_range(g: &Bigraph, seq: &[Vertex]) -> Result<()> {
    let mut seen_x = BitSet::new(g.nx());
    let mut seen_y = BitSet::new(g.ny());
    for &v in seq {
        let (seen, n) = match v {
            Vertex::X(_) => (&mut seen_x, g.nx()),
            Vertex::Y(_) => (&mut seen_y, g.ny()),
        };
        if v.index() >= n {
            return Err(Error::InvalidInput(format!("witness vertex {v} out of range")));
        }
        if !seen.insert(v.index()) {
            return Err(Error::InvalidInput(format!("witness repeats vertex {v}")));
        }
    }
    Ok(())
}

/// A cycle `x_0 y_0 x_1 y_1 … x_{m-1} y_{m-1}` closed by `y_{m-1} x_0`.
///
/// `ys[i]` joins `xs[i]` to `xs[(i + 1) % m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWitness {
    xs: Vec<usize>,
    ys: Vec<usize>,
}

impl CycleWitness {
    pub fn new(xs: Vec<usize>, ys: Vec<usize>) -> Result<Self> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "cycle needs m >= 2 alternating vertices per side, got {} x and {} y",
                xs.len(),
                ys.len()
            )));
        }
        Ok(Self { xs, ys })
    }

    /// Parses an alternating sequence that starts on the X side.
    pub fn from_sequence(seq: &[Vertex]) -> Result<Self> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (k, v) in seq.iter().enumerate() {
            match (k % 2, v) {
                (0, Vertex::X(i)) => xs.push(*i),
                (1, Vertex::Y(j)) => ys.push(*j),
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "cycle sequence must alternate x, y, … (position {k} is {v})"
                    )))
                }
            }
        }
        Self::new(xs, ys)
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    pub fn ys(&self) -> &[usize] {
        &self.ys
    }

    /// Number of X-vertices (half the cycle length).
    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn sequence(&self) -> Vec<Vertex> {
        self.xs
            .iter()
            .zip(&self.ys)
            .flat_map(|(&x, &y)| [Vertex::X(x), Vertex::Y(y)])
            .collect()
    }

    pub fn x_set(&self, nx: usize) -> BitSet {
        BitSet::from_indices(nx, self.xs.iter().copied())
    }

    /// Whether the cycle traverses edge `x–y`.
    pub fn uses_edge(&self, x: usize, y: usize) -> bool {
        let m = self.xs.len();
        (0..m).any(|i| self.ys[i] == y && (self.xs[i] == x || self.xs[(i + 1) % m] == x))
    }

    /// Consecutive `(x, y)` edges of the cycle.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.xs.len();
        (0..m).flat_map(move |i| [(self.xs[i], self.ys[i]), (self.xs[(i + 1) % m], self.ys[i])])
    }

    /// Checks distinctness and that every consecutive pair is an edge of `g`.
    pub fn validate(&self, g: &Bigraph) -> Result<()> {
        let seq = self.sequence();
        check_distinct_and_in_range(g, &seq)?;
        for k in 0..seq.len() {
            let (a, b) = (seq[k], seq[(k + 1) % seq.len()]);
            if !edge_between(g, a, b) {
                return Err(Error::InvalidInput(format!("cycle step {a}–{b} is not an edge")));
            }
        }
        Ok(())
    }

    /// Validates and additionally requires `V(C) ∩ X = target` (exact) or `⊇ target`.
    pub fn validate_cover(&self, g: &Bigraph, target: &BitSet, exact: bool) -> Result<()> {
        self.validate(g)?;
        let got = self.x_set(g.nx());
        let ok = if exact { &got == target } else { target.is_subset(&got) };
        if !ok {
            return Err(Error::InvalidInput(format!(
                "cycle covers X-set {:?}, wanted {} {:?}",
                got,
                if exact { "exactly" } else { "a superset of" },
                target
            )));
        }
        Ok(())
    }
}

impl Serialize for CycleWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            cycle: Vec<Vertex>,
        }
        Repr { cycle: self.sequence() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycleWitness {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            cycle: Vec<Vertex>,
        }
        let r = Repr::deserialize(deserializer)?;
        CycleWitness::from_sequence(&r.cycle).map_err(de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathKind {
    #[serde(rename = "Y-Y")]
    YY,
    #[serde(rename = "X-X")]
    XX,
    #[serde(rename = "X-Y")]
    XY,
}

/// An alternating path, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathWitness {
    path: Vec<Vertex>,
}

impl PathWitness {
    pub fn new(path: Vec<Vertex>) -> Result<Self> {
        if path.is_empty() {
            return Err(Error::InvalidInput("path must contain at least one vertex".into()));
        }
        if path.windows(2).any(|w| w[0].side() == w[1].side()) {
            return Err(Error::InvalidInput("path must alternate sides".into()));
        }
        Ok(Self { path })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.path
    }

    pub fn first(&self) -> Vertex {
        self.path[0]
    }

    pub fn last(&self) -> Vertex {
        self.path[self.path.len() - 1]
    }

    pub fn is_trivial(&self) -> bool {
        self.path.len() == 1
    }

    pub fn kind(&self) -> PathKind {
        match (self.first().side(), self.last().side()) {
            (Side::Y, Side::Y) => PathKind::YY,
            (Side::X, Side::X) => PathKind::XX,
            _ => PathKind::XY,
        }
    }

    pub fn reversed(&self) -> PathWitness {
        let mut path = self.path.clone();
        path.reverse();
        PathWitness { path }
    }

    pub fn x_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.path.iter().filter_map(|v| match v {
            Vertex::X(i) => Some(*i),
            Vertex::Y(_) => None,
        })
    }

    pub fn y_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.path.iter().filter_map(|v| match v {
            Vertex::Y(j) => Some(*j),
            Vertex::X(_) => None,
        })
    }

    pub fn validate(&self, g: &Bigraph, allow_trivial: bool) -> Result<()> {
        if self.is_trivial() && !allow_trivial {
            return Err(Error::InvalidInput("trivial path not permitted here".into()));
        }
        check_distinct_and_in_range(g, &self.path)?;
        for w in self.path.windows(2) {
            if !edge_between(g, w[0], w[1]) {
                return Err(Error::InvalidInput(format!("path step {}–{} is not an edge", w[0], w[1])));
            }
        }
        Ok(())
    }
}

/// Pairwise vertex-disjoint paths.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PathSystem {
    pub paths: Vec<PathWitness>,
}

impl PathSystem {
    pub fn new(paths: Vec<PathWitness>) -> Self {
        Self { paths }
    }

    pub fn x_cover(&self, nx: usize) -> BitSet {
        BitSet::from_indices(nx, self.paths.iter().flat_map(|p| p.x_vertices()))
    }

    /// Validates every path, pairwise disjointness, and (optionally) that the
    /// union of X-vertices equals `cover`.
    pub fn validate(&self, g: &Bigraph, allow_trivial: bool, cover: Option<&BitSet>) -> Result<()> {
        for p in &self.paths {
            p.validate(g, allow_trivial)?;
        }
        let all: Vec<Vertex> = self.paths.iter().flat_map(|p| p.vertices().iter().copied()).collect();
        check_distinct_and_in_range(g, &all)?;
        if let Some(target) = cover {
            let got = self.x_cover(g.nx());
            if &got != target {
                return Err(Error::InvalidInput(format!("path system covers {got:?}, expected {target:?}")));
            }
        }
        Ok(())
    }
}
