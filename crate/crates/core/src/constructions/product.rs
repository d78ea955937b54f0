//! The bipartite (tensor) product `G × H`: `(x, x') ~ (y, y')` iff `x ~ y`
//! in `G` and `x' ~ y'` in `H`. Pairs are laid out row-major, so `(i, i')`
//! becomes X-index `i · H.nx + i'` and `(j, j')` becomes `j · H.ny + j'`.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Bigraph;
use serde::Serialize;

/// Default cap on the size of either side of a product.
pub const PRODUCT_SIDE_LIMIT: usize = 1 << 20;

/// Factor dimensions of a product, for projecting indices back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductLayout {
    pub g_nx: usize,
    pub g_ny: usize,
    pub h_nx: usize,
    pub h_ny: usize,
}

impl ProductLayout {
    pub fn of(g: &Bigraph, h: &Bigraph) -> Self {
        Self {
            g_nx: g.nx(),
            g_ny: g.ny(),
            h_nx: h.nx(),
            h_ny: h.ny(),
        }
    }

    pub fn x_index(&self, i: usize, i2: usize) -> usize {
        i * self.h_nx + i2
    }

    pub fn x_coords(&self, x: usize) -> (usize, usize) {
        (x / self.h_nx, x % self.h_nx)
    }

    pub fn y_index(&self, j: usize, j2: usize) -> usize {
        j * self.h_ny + j2
    }

    pub fn y_coords(&self, y: usize) -> (usize, usize) {
        (y / self.h_ny, y % self.h_ny)
    }

    /// `# product <g.nx> <g.ny> <h.nx> <h.ny>`, a comment line the edge-list
    /// parser skips.
    pub fn header(&self) -> String {
        format!("# product {} {} {} {}\n", self.g_nx, self.g_ny, self.h_nx, self.h_ny)
    }
}

pub fn bipartite_product(g: &Bigraph, h: &Bigraph) -> Result<Bigraph> {
    bipartite_product_with_limit(g, h, PRODUCT_SIDE_LIMIT)
}

pub fn bipartite_product_with_limit(g: &Bigraph, h: &Bigraph, limit: usize) -> Result<Bigraph> {
    let dims = |a: usize, b: usize, side: &str| {
        a.checked_mul(b)
            .filter(|&n| n <= limit)
            .ok_or_else(|| Error::Resource(format!("product {side}-side {a}·{b} exceeds the limit of {limit}")))
    };
    let nx = dims(g.nx(), h.nx(), "X")?;
    let ny = dims(g.ny(), h.ny(), "Y")?;
    let layout = ProductLayout::of(g, h);
    let mut rows = Vec::with_capacity(nx);
    for i in 0..g.nx() {
        for i2 in 0..h.nx() {
            let mut row = BitSet::new(ny);
            for j in g.adj_x(i).iter() {
                for j2 in h.adj_x(i2).iter() {
                    row.insert(layout.y_index(j, j2));
                }
            }
            rows.push(row);
        }
    }
    Ok(Bigraph::from_x_rows(ny, rows))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerReport {
    pub n: usize,
    pub d: usize,
    /// `ln d / ln n`, when `n > 1` and `d > 0`.
    pub log_n_d: Option<f64>,
}

/// `G^{×k}` and its `(n, Δ, log_n Δ)`.
pub fn iterated_product(g: &Bigraph, k: usize) -> Result<(Bigraph, PowerReport)> {
    if k == 0 {
        return Err(Error::Domain("product power needs k >= 1".into()));
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = bipartite_product(&acc, g)?;
    }
    let n = acc.nx();
    let d = acc.max_degree();
    let log_n_d = (n > 1 && d > 0).then(|| (d as f64).ln() / (n as f64).ln());
    Ok((acc, PowerReport { n, d, log_n_d }))
}
