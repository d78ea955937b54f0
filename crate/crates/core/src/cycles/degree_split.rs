//! Covering cycles when every y has degree 2, `n - 2`, `n - 1` or `n`.
//!
//! Degree-2 vertices (`Y_s`) act as edges of a multigraph on X. A minimum
//! collection of disjoint paths in it covers X; one path is closed through a
//! common neighbour, several are joined cyclically by a matching of the
//! intended endpoint pairs into the high-degree vertices `Y_l`.

use super::matching::{hall_violator, max_matching, MatchingInstance};
use super::require_dhp;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Bigraph, CycleWitness, PathSystem, PathWitness, Side, Vertex, VertexSet};
use crate::Budget;
use serde::Serialize;

/// Exact minimum path cover up to this many X-vertices.
pub const EXACT_PATH_COVER_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSplitReport {
    pub cycle: Option<CycleWitness>,
    /// The X–X paths through `Y_s`, in the final cyclic order and orientation.
    pub paths: PathSystem,
    pub m: usize,
    /// Whether `m` is a proven minimum (otherwise a greedy cover was used).
    pub m_exact: bool,
    /// Segment reversals applied by the local search.
    pub reversals: usize,
    /// `|E(F)|` after the local search.
    pub f_edges: usize,
    /// Intended pairs violating Hall's condition, when the matching fails.
    pub hall_violator: Option<Vec<(usize, usize)>>,
}

/// Multigraph on X: `link[a][b]` is the smallest `y ∈ Y_s` joining them.
struct SmallY {
    adj: Vec<u64>,
    link: Vec<Vec<Option<usize>>>,
}

impl SmallY {
    fn new(g: &Bigraph, small: &BitSet) -> Self {
        let n = g.nx();
        let mut link = vec![vec![None; n]; n];
        let mut adj = vec![0u64; n];
        for y in small.iter() {
            let ends = g.adj_y(y).to_vec();
            let (a, b) = (ends[0], ends[1]);
            if link[a][b].is_none() {
                link[a][b] = Some(y);
                link[b][a] = Some(y);
                if n <= 64 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        Self { adj, link }
    }

    fn joined(&self, a: usize, b: usize) -> bool {
        self.link[a][b].is_some()
    }
}

/// Minimum vertex-disjoint path cover by subset dynamic programming.
fn exact_path_cover(m: &SmallY, n: usize) -> Vec<Vec<usize>> {
    let full = (1usize << n) - 1;
    // ends[mask]: bitmask of vertices that can end a path covering exactly mask.
    let mut ends = vec![0u64; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in (0..n).filter(|&v| e >> v & 1 == 1) {
            let mut out = m.adj[v] & !(mask as u64);
            while out != 0 {
                let u = out.trailing_zeros() as usize;
                out &= out - 1;
                ends[mask | 1 << u] |= 1 << u;
            }
        }
    }
    let mut best = vec![u32::MAX; 1 << n];
    let mut choice = vec![0usize; 1 << n];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // Submasks of `mask` containing its lowest vertex.
        let mut sub = rest;
        loop {
            let piece = sub | low;
            if ends[piece] != 0 && best[mask ^ piece] != u32::MAX && best[mask ^ piece] + 1 < best[mask] {
                best[mask] = best[mask ^ piece] + 1;
                choice[mask] = piece;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut paths = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let piece = choice[mask];
        let mut p = trace_path(m, &ends, piece);
        if p[0] > *p.last().unwrap() {
            p.reverse();
        }
        paths.push(p);
        mask ^= piece;
    }
    paths.sort();
    paths
}

/// Recovers one Hamiltonian path of the piece from the `ends` table.
fn trace_path(m: &SmallY, ends: &[u64], piece: usize) -> Vec<usize> {
    let mut rev = Vec::new();
    let mut mask = piece;
    let mut v = ends[mask].trailing_zeros() as usize;
    loop {
        rev.push(v);
        let prev_mask = mask ^ (1 << v);
        if prev_mask == 0 {
            break;
        }
        let cand = ends[prev_mask] & m.adj[v];
        v = cand.trailing_zeros() as usize;
        mask = prev_mask;
    }
    rev.reverse();
    rev
}

/// Greedy: merge paths whose endpoints are joined until nothing merges.
fn greedy_path_cover(m: &SmallY, n: usize) -> Vec<Vec<usize>> {
    let mut paths: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    'outer: loop {
        for i in 0..paths.len() {
            for j in 0..paths.len() {
                if i == j {
                    continue;
                }
                let (a_end, b_start) = (*paths[i].last().unwrap(), paths[j][0]);
                let (b_end, a_start) = (*paths[j].last().unwrap(), paths[i][0]);
                let merged = if m.joined(a_end, b_start) {
                    Some([paths[i].clone(), paths[j].clone()].concat())
                } else if m.joined(a_end, b_end) {
                    Some([paths[i].clone(), paths[j].iter().rev().copied().collect()].concat())
                } else if m.joined(a_start, b_start) {
                    Some([paths[i].iter().rev().copied().collect(), paths[j].clone()].concat())
                } else {
                    None
                };
                if let Some(p) = merged {
                    let (lo, hi) = (i.min(j), i.max(j));
                    paths.remove(hi);
                    paths[lo] = p;
                    continue 'outer;
                }
            }
        }
        break;
    }
    paths
}

fn check_hypotheses(g: &Bigraph, budget: &Budget) -> Result<()> {
    let n = g.nx();
    if n < 2 {
        return Err(Error::Domain(format!("degree split requires |X| >= 2, got {n}")));
    }
    if let Some(y) = (0..g.ny()).find(|&y| {
        let d = g.deg_y(y);
        !(d == 2 || d + 2 == n || d + 1 == n || d == n)
    }) {
        return Err(Error::Domain(format!(
            "hypothesis deg(y) in {{2, n-2, n-1, n}} fails at y{y}: deg = {}",
            g.deg_y(y)
        )));
    }
    require_dhp(g, budget)
}

fn intended_pairs(order: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let m = order.len();
    (0..m).map(|i| (order[i].1, order[(i + 1) % m].0)).collect()
}

/// Builds a covering cycle by the minimum-path-cover / matching procedure.
pub fn solve_degree_split(g: &Bigraph, budget: &Budget) -> Result<DegreeSplitReport> {
    check_hypotheses(g, budget)?;
    let n = g.nx();
    let small = BitSet::from_indices(g.ny(), (0..g.ny()).filter(|&y| g.deg_y(y) == 2));
    let large = small.complement();
    let multi = SmallY::new(g, &small);
    let m_exact = n <= EXACT_PATH_COVER_LIMIT;
    let xpaths = if m_exact { exact_path_cover(&multi, n) } else { greedy_path_cover(&multi, n) };

    let to_witness = |p: &[usize]| -> Result<PathWitness> {
        let mut seq = vec![Vertex::X(p[0])];
        for w in p.windows(2) {
            seq.push(Vertex::Y(multi.link[w[0]][w[1]].expect("joined")));
            seq.push(Vertex::X(w[1]));
        }
        PathWitness::new(seq)
    };

    let mut report = DegreeSplitReport {
        cycle: None,
        paths: PathSystem::default(),
        m: xpaths.len(),
        m_exact,
        reversals: 0,
        f_edges: 0,
        hall_violator: None,
    };

    if xpaths.len() == 1 {
        let p = &xpaths[0];
        let w = to_witness(p)?;
        let on_path: BitSet = BitSet::from_indices(g.ny(), w.y_vertices());
        let (a, b) = (p[0], *p.last().unwrap());
        let mut closers = g.adj_x(a).intersection(g.adj_x(b));
        closers.difference_with(&on_path);
        report.paths = PathSystem::new(vec![w.clone()]);
        if let Some(y) = closers.first() {
            let mut seq = w.vertices().to_vec();
            seq.push(Vertex::Y(y));
            report.cycle = Some(CycleWitness::from_sequence(&seq)?);
        }
        return Ok(report);
    }

    // Cyclic order of oriented paths, each as (start, end) plus its body.
    let mut seq: Vec<Vec<usize>> = xpaths;
    let right = VertexSet::from_bitset(Side::Y, large);
    let ends = |s: &[Vec<usize>]| -> Vec<(usize, usize)> { s.iter().map(|p| (p[0], *p.last().unwrap())).collect() };
    let f_edges = |s: &[Vec<usize>]| -> Result<usize> {
        Ok(MatchingInstance::new(g, intended_pairs(&ends(s)), right.clone())?.edge_count())
    };
    let m = seq.len();
    let mut current = f_edges(&seq)?;
    'search: loop {
        for i in 0..m {
            for j in i..m {
                if i == 0 && j == m - 1 {
                    continue;
                }
                let mut cand = seq.clone();
                cand[i..=j].reverse();
                cand[i..=j].iter_mut().for_each(|p| p.reverse());
                let e = f_edges(&cand)?;
                if e > current {
                    seq = cand;
                    current = e;
                    report.reversals += 1;
                    continue 'search;
                }
            }
        }
        break;
    }
    report.f_edges = current;
    let witnesses: Vec<PathWitness> = seq.iter().map(|p| to_witness(p)).collect::<Result<_>>()?;
    report.paths = PathSystem::new(witnesses.clone());

    let inst = MatchingInstance::new(g, intended_pairs(&ends(&seq)), right)?;
    let matching = max_matching(&inst);
    if !matching.is_saturating() {
        let bad = hall_violator(&inst).expect("unsaturated matching has a violator");
        report.hall_violator = Some(bad.into_iter().map(|i| inst.left[i]).collect());
        return Ok(report);
    }
    let mut cyc = Vec::new();
    for (w, y) in witnesses.iter().zip(&matching.assignment) {
        cyc.extend_from_slice(w.vertices());
        cyc.push(Vertex::Y(y.expect("saturating")));
    }
    report.cycle = Some(CycleWitness::from_sequence(&cyc)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::pair_gadget;

    #[test]
    fn pair_gadgets() {
        for n in 2..=6 {
            let g = pair_gadget(n).unwrap();
            let r = solve_degree_split(&g, &Budget::default()).unwrap();
            assert_eq!(r.m, 1);
            r.cycle.unwrap().validate_cover(&g, &BitSet::full(n), true).unwrap();
        }
    }

    #[test]
    fn complete() {
        let g = Bigraph::complete(5, 5);
        let r = solve_degree_split(&g, &Budget::default()).unwrap();
        assert_eq!(r.m, 5);
        r.cycle.unwrap().validate_cover(&g, &BitSet::full(5), true).unwrap();
    }

    #[test]
    fn exact_cover_is_minimum() {
        // Multigraph: path 0-1-2 and edge 3-4.
        let g = Bigraph::from_edges(5, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (3, 2), (4, 2)]).unwrap();
        let multi = SmallY::new(&g, &BitSet::full(3));
        let paths = exact_path_cover(&multi, 5);
        assert_eq!(paths, vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(greedy_path_cover(&multi, 5).len(), 2);
    }

    #[test]
    fn bad_degrees_rejected() {
        let g = Bigraph::from_edges(6, 1, (0..3).map(|x| (x, 0))).unwrap();
        let e = solve_degree_split(&g, &Budget::default()).unwrap_err();
        assert!(e.to_string().contains("deg(y)"));
    }
}
