//! Turning near-cycles into cycles that cover X: pivoting a covering Y–Y
//! path shut, and removing a virtual edge from a covering cycle.

use crate::error::{Error, Result};
use crate::graph::{Bigraph, CycleWitness, PathKind, PathWitness, Vertex};
use serde::Serialize;

/// Splits a Y–Y path `y_1 x_1 y_2 … x_n y_{n+1}` into its two sides.
fn split_yy(p: &PathWitness) -> (Vec<usize>, Vec<usize>) {
    (p.x_vertices().collect(), p.y_vertices().collect())
}

fn require_covering(g: &Bigraph, xs: &[usize], what: &str) -> Result<()> {
    if xs.len() != g.nx() {
        return Err(Error::InvalidInput(format!(
            "{what} visits {} of the {} X-vertices",
            xs.len(),
            g.nx()
        )));
    }
    Ok(())
}

/// Pivot rotation of a Y–Y path that covers X.
///
/// With `P = y_1 x_1 … x_n y_{n+1}`, look for `1 ≤ i < n` with `x_{i+1}`
/// adjacent to `y_1` and `x_i` adjacent to `y_{n+1}`, and return
/// `y_1 x_1 … x_i y_{n+1} x_n … x_{i+1} y_1`, which drops `y_{i+1}`. Such an
/// `i` always exists when `deg(y_1) + deg(y_{n+1}) ≥ n + 2`; otherwise the
/// search still runs and `None` means there is no pivot.
pub fn rotate_path_to_cycle(g: &Bigraph, p: &PathWitness) -> Result<Option<CycleWitness>> {
    p.validate(g, false)?;
    if p.kind() != PathKind::YY {
        return Err(Error::InvalidInput("rotation needs a Y–Y path".into()));
    }
    let (xs, ys) = split_yy(p);
    require_covering(g, &xs, "path")?;
    Ok(rotate_parts(g, &xs, &ys))
}

fn rotate_parts(g: &Bigraph, xs: &[usize], ys: &[usize]) -> Option<CycleWitness> {
    let n = xs.len();
    let (first, last) = (ys[0], ys[n]);
    // 0-based: pivot k = i - 1, ranging over 0..n-1.
    let k = (0..n.saturating_sub(1)).find(|&k| g.has_edge(xs[k + 1], first) && g.has_edge(xs[k], last))?;
    // Cycle from x_1: x_1 y_2 … x_i y_{n+1} x_n y_n … x_{i+1} y_1.
    let mut cx = Vec::with_capacity(n);
    let mut cy = Vec::with_capacity(n);
    for j in 0..=k {
        cx.push(xs[j]);
        cy.push(if j < k { ys[j + 1] } else { last });
    }
    for j in (k + 1..n).rev() {
        cx.push(xs[j]);
        cy.push(if j > k + 1 { ys[j] } else { first });
    }
    CycleWitness::new(cx, cy).ok()
}

/// How an absorption was achieved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AbsorbRoute {
    /// The cycle never used the virtual edge.
    Unchanged,
    /// x had a neighbour y' off the cycle; the path `y … x y'` was rotated shut.
    OffPathNeighbor,
    /// All of x's neighbours lie on the path; a counting pivot closed it.
    CountingPivot,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Absorption {
    pub cycle: Option<CycleWitness>,
    pub route: Option<AbsorbRoute>,
    /// `deg(x) + deg(y) ≥ n + 1` in the graph without the virtual edge.
    pub pair_degree_sum_ok: bool,
    /// `deg(y') > (n + 1)/2` for every `y'`.
    pub y_degrees_ok: bool,
}

/// Given a cycle covering X in `g + xy`, finds one in `g`.
///
/// Removing `xy` from the cycle leaves `P = y_1 x_1 y_2 … y_n x_n` with
/// `y_1 = y`, `x_n = x`. If x has a neighbour off `P`, extending by it gives a
/// Y–Y path to rotate; failing that, look for `2 ≤ i < n` with `y_i ∈ Λ(x)`
/// and `x_i ∈ Λ(y)`, giving `y_1 x_1 … x_{i-1} y_i x_n y_n … x_i y_1`.
pub fn absorb_virtual_edge(g: &Bigraph, x: usize, y: usize, c: &CycleWitness) -> Result<Absorption> {
    if x >= g.nx() || y >= g.ny() {
        return Err(Error::InvalidInput(format!("virtual edge ({x}, {y}) out of range")));
    }
    if g.has_edge(x, y) {
        return Err(Error::InvalidInput(format!("({x}, {y}) is already an edge")));
    }
    let plus = g.with_edge(x, y)?;
    c.validate(&plus)?;
    require_covering(g, c.xs(), "cycle")?;
    let n = g.nx();
    let pair_degree_sum_ok = g.deg_x(x) + g.deg_y(y) > n;
    let y_degrees_ok = (0..g.ny()).all(|j| 2 * g.deg_y(j) > n + 1);
    let mut out = Absorption {
        cycle: None,
        route: None,
        pair_degree_sum_ok,
        y_degrees_ok,
    };
    if !c.uses_edge(x, y) {
        out.cycle = Some(c.clone());
        out.route = Some(AbsorbRoute::Unchanged);
        return Ok(out);
    }
    let (px, py) = open_at(c, x, y);
    let on_path: Vec<bool> = {
        let mut v = vec![false; g.ny()];
        py.iter().for_each(|&j| v[j] = true);
        v
    };
    if let Some(y2) = g.adj_x(x).iter().find(|&j| !on_path[j]) {
        let mut ys = py.clone();
        ys.push(y2);
        if let Some(cyc) = rotate_parts(g, &px, &ys) {
            out.cycle = Some(cyc);
            out.route = Some(AbsorbRoute::OffPathNeighbor);
            return Ok(out);
        }
    }
    // 0-based: i - 1 = k in 1..n-1; y_i = py[k], x_i = px[k].
    if let Some(k) = (1..n.saturating_sub(1)).find(|&k| g.has_edge(x, py[k]) && g.has_edge(px[k], y)) {
        let mut cx = Vec::with_capacity(n);
        let mut cy = Vec::with_capacity(n);
        // y_1 x_1 y_2 … x_{i-1}, then y_i x_n, then y_n x_{n-1} … y_{i+1} x_i, then y_1.
        for j in 0..k {
            cx.push(px[j]);
            cy.push(if j + 1 < k { py[j + 1] } else { py[k] });
        }
        for j in (k..n).rev() {
            cx.push(px[j]);
            cy.push(if j > k { py[j] } else { py[0] });
        }
        out.cycle = Some(CycleWitness::new(cx, cy)?);
        out.route = Some(AbsorbRoute::CountingPivot);
    }
    Ok(out)
}

/// Reads `c` as the path `y_1 x_1 y_2 … y_n x_n` obtained by deleting the
/// edge `x–y` (`y_1 = y`, `x_n = x`).
fn open_at(c: &CycleWitness, x: usize, y: usize) -> (Vec<usize>, Vec<usize>) {
    let seq = c.sequence();
    let len = seq.len();
    let xi = seq.iter().position(|&v| v == Vertex::X(x)).expect("edge on cycle");
    let forward = seq[(xi + 1) % len] == Vertex::Y(y);
    // Walk away from x so that y comes first and x last.
    let order: Vec<Vertex> = if forward {
        (0..len).map(|k| seq[(xi + 1 + k) % len]).collect()
    } else {
        (0..len).map(|k| seq[(xi + len - 1 - k) % len]).collect()
    };
    let xs = order.iter().filter_map(|v| if let Vertex::X(i) = v { Some(*i) } else { None }).collect();
    let ys = order.iter().filter_map(|v| if let Vertex::Y(j) = v { Some(*j) } else { None }).collect();
    (xs, ys)
}
