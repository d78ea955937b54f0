//! Bipartite graphs with a fixed ordered partition `(X, Y)`.
//!
//! Adjacency is held twice, once per side, as packed bit sets; the two
//! copies are built together and never diverge because a [`Bigraph`] is
//! immutable once constructed. Edits such as [`Bigraph::with_edge`] return a
//! new graph.

mod connectivity;
pub mod io;
mod witness;

pub use connectivity::is_two_connected;
pub(crate) use connectivity::is_two_connected_within;
pub use witness::{CycleWitness, PathKind, PathSystem, PathWitness, Vertex};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "x",
            Side::Y => "y",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bigraph {
    nx: usize,
    ny: usize,
    adj_x: Vec<BitSet>,
    adj_y: Vec<BitSet>,
}

impl fmt::Debug for Bigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bigraph({}x{}; ", self.nx, self.ny)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

impl Bigraph {
    pub fn empty(nx: usize, ny: usize) -> Self {
        Self {
            nx,
            ny,
            adj_x: vec![BitSet::new(ny); nx],
            adj_y: vec![BitSet::new(nx); ny],
        }
    }

    pub fn complete(nx: usize, ny: usize) -> Self {
        Self {
            nx,
            ny,
            adj_x: vec![BitSet::full(ny); nx],
            adj_y: vec![BitSet::full(nx); ny],
        }
    }

    /// Builds a graph from `(x, y)` pairs. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(nx: usize, ny: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj_x = vec![BitSet::new(ny); nx];
        for (i, j) in edges {
            if i >= nx || j >= ny {
                return Err(Error::InvalidInput(format!(
                    "edge ({i}, {j}) out of range for {nx}x{ny} bigraph"
                )));
            }
            adj_x[i].insert(j);
        }
        Ok(Self::from_x_rows(ny, adj_x))
    }

    /// Builds the mirror side from X-rows. Every row must have universe `ny`.
    pub(crate) fn from_x_rows(ny: usize, adj_x: Vec<BitSet>) -> Self {
        let nx = adj_x.len();
        let mut adj_y = vec![BitSet::new(nx); ny];
        for (i, row) in adj_x.iter().enumerate() {
            debug_assert_eq!(row.universe(), ny);
            for j in row {
                adj_y[j].insert(i);
            }
        }
        Self { nx, ny, adj_x, adj_y }
    }

    #[inline]
    pub fn nx(&self) -> usize {
        self.nx
    }

    #[inline]
    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn side_len(&self, side: Side) -> usize {
        match side {
            Side::X => self.nx,
            Side::Y => self.ny,
        }
    }

    /// Neighbours of X-vertex `i`, as a subset of Y.
    #[inline]
    pub fn adj_x(&self, i: usize) -> &BitSet {
        &self.adj_x[i]
    }

    /// Neighbours of Y-vertex `j`, as a subset of X.
    #[inline]
    pub fn adj_y(&self, j: usize) -> &BitSet {
        &self.adj_y[j]
    }

    pub fn adj(&self, side: Side, i: usize) -> &BitSet {
        match side {
            Side::X => &self.adj_x[i],
            Side::Y => &self.adj_y[i],
        }
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.nx && self.adj_x[i].contains(j)
    }

    #[inline]
    pub fn deg_x(&self, i: usize) -> usize {
        self.adj_x[i].count()
    }

    #[inline]
    pub fn deg_y(&self, j: usize) -> usize {
        self.adj_y[j].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj_x.iter().map(BitSet::count).sum()
    }

    /// Maximum degree over both sides; 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        let dx = (0..self.nx).map(|i| self.deg_x(i)).max().unwrap_or(0);
        let dy = (0..self.ny).map(|j| self.deg_y(j)).max().unwrap_or(0);
        dx.max(dy)
    }

    /// Edges in lexicographic `(x, y)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj_x
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |j| (i, j)))
    }

    pub fn with_edge(&self, i: usize, j: usize) -> Result<Bigraph> {
        self.check_pair(i, j)?;
        let mut rows = self.adj_x.clone();
        rows[i].insert(j);
        Ok(Self::from_x_rows(self.ny, rows))
    }

    pub fn without_edge(&self, i: usize, j: usize) -> Result<Bigraph> {
        self.check_pair(i, j)?;
        let mut rows = self.adj_x.clone();
        rows[i].remove(j);
        Ok(Self::from_x_rows(self.ny, rows))
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i >= self.nx || j >= self.ny {
            return Err(Error::InvalidInput(format!(
                "pair ({i}, {j}) out of range for {}x{} bigraph",
                self.nx, self.ny
            )));
        }
        Ok(())
    }

    /// `G[X ∪ Y \ {y}]`, with Y re-indexed densely (indices above `j` shift down).
    pub fn without_y(&self, j: usize) -> Result<Bigraph> {
        if j >= self.ny {
            return Err(Error::InvalidInput(format!("y{j} out of range")));
        }
        let keep = BitSet::from_indices(self.ny, (0..self.ny).filter(|&k| k != j));
        Ok(self.induce(&BitSet::full(self.nx), &keep).0)
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = if self.nx > 0 { self.deg_x(0) } else if self.ny > 0 { self.deg_y(0) } else { 0 };
        let all = (0..self.nx).all(|i| self.deg_x(i) == d) && (0..self.ny).all(|j| self.deg_y(j) == d);
        all.then_some(d)
    }

    /// Mirror consistency: `j ∈ adj_x[i] ⇔ i ∈ adj_y[j]`.
    pub fn is_mirror_consistent(&self) -> bool {
        self.adj_x.len() == self.nx
            && self.adj_y.len() == self.ny
            && (0..self.nx).all(|i| (0..self.ny).all(|j| self.adj_x[i].contains(j) == self.adj_y[j].contains(i)))
    }

    /// Validates and normalises a vertex set to this graph's side universe.
    pub(crate) fn members(&self, s: &VertexSet) -> Result<BitSet> {
        let n = self.side_len(s.side);
        let mut out = BitSet::new(n);
        for v in s.iter() {
            if v >= n {
                return Err(Error::InvalidInput(format!(
                    "{}{v} out of range (side has {n} vertices)",
                    s.side
                )));
            }
            out.insert(v);
        }
        Ok(out)
    }

    /// Induced subgraph on bit-set selections; returns index maps back to `self`.
    pub(crate) fn induce(&self, sx: &BitSet, sy: &BitSet) -> (Bigraph, Vec<usize>, Vec<usize>) {
        let xmap = sx.to_vec();
        let ymap = sy.to_vec();
        let mut rows = Vec::with_capacity(xmap.len());
        for &i in &xmap {
            let mut row = BitSet::new(ymap.len());
            for (k, &j) in ymap.iter().enumerate() {
                if self.adj_x[i].contains(j) {
                    row.insert(k);
                }
            }
            rows.push(row);
        }
        (Bigraph::from_x_rows(ymap.len(), rows), xmap, ymap)
    }
}

/// A subset of one side of a bigraph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    side: Side,
    members: BitSet,
}

impl VertexSet {
    pub fn new(side: Side, universe: usize) -> Self {
        Self {
            side,
            members: BitSet::new(universe),
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(side: Side, universe: usize, indices: I) -> Self {
        Self {
            side,
            members: BitSet::from_indices(universe, indices),
        }
    }

    pub fn from_bitset(side: Side, members: BitSet) -> Self {
        Self { side, members }
    }

    /// The whole side of `g`.
    pub fn all(g: &Bigraph, side: Side) -> Self {
        Self {
            side,
            members: BitSet::full(g.side_len(side)),
        }
    }

    pub fn xs<I: IntoIterator<Item = usize>>(g: &Bigraph, indices: I) -> Self {
        Self::from_indices(Side::X, g.nx(), indices)
    }

    pub fn ys<I: IntoIterator<Item = usize>>(g: &Bigraph, indices: I) -> Self {
        Self::from_indices(Side::Y, g.ny(), indices)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.side == other.side && self.iter().all(|v| other.contains(v))
    }
}

/// `Λ^i(S)`: the vertices on the other side adjacent to at least `i` members of `s`.
pub fn neighborhood_at_least(g: &Bigraph, s: &VertexSet, i: usize) -> Result<VertexSet> {
    if i == 0 {
        return Err(Error::Domain("neighbourhood threshold must be positive".into()));
    }
    let members = g.members(s)?;
    let other = s.side().opposite();
    let n_other = g.side_len(other);
    let out = match i {
        1 | 2 => {
            let mut once = BitSet::new(n_other);
            let mut twice = BitSet::new(n_other);
            for v in &members {
                BitSet::fold_twice(&mut once, &mut twice, g.adj(s.side(), v));
            }
            if i == 1 {
                once
            } else {
                twice
            }
        }
        _ => BitSet::from_indices(
            n_other,
            (0..n_other).filter(|&u| g.adj(other, u).intersection_count(&members) >= i),
        ),
    };
    Ok(VertexSet::from_bitset(other, out))
}

/// `Λ²(S)` for an X-subset given as a bit set; the hot path of every checker.
#[inline]
pub(crate) fn super_neighborhood(g: &Bigraph, s: &BitSet) -> BitSet {
    let mut once = BitSet::new(g.ny());
    let mut twice = BitSet::new(g.ny());
    for v in s {
        BitSet::fold_twice(&mut once, &mut twice, g.adj_x(v));
    }
    twice
}

/// Subgraph induced by `sx ∪ sy`, plus maps from new to parent indices.
pub fn induced_subgraph(g: &Bigraph, sx: &VertexSet, sy: &VertexSet) -> Result<(Bigraph, Vec<usize>, Vec<usize>)> {
    if sx.side() != Side::X || sy.side() != Side::Y {
        return Err(Error::InvalidInput("induced_subgraph expects an X-set and a Y-set".into()));
    }
    let bx = g.members(sx)?;
    let by = g.members(sy)?;
    Ok(g.induce(&bx, &by))
}

/// Edge `(i, j)` is present exactly when it is absent from `g`.
pub fn bipartite_complement(g: &Bigraph) -> Bigraph {
    let rows = g.adj_x.iter().map(BitSet::complement).collect();
    Bigraph::from_x_rows(g.ny, rows)
}
