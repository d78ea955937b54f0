//! Disjoint cycles whose X-vertices partition X.
//!
//! Equivalently, a subgraph in which every x has degree 2 and every y has
//! degree 0 or 2. Each x picks two Y-slots in turn; a max-flow relaxation
//! (Y-capacity 2, parity ignored) prunes, and parity is enforced as soon as
//! a y can no longer gain neighbours.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Bigraph, CycleWitness};
use crate::{Budget, Meter};

struct CoverSearch<'a> {
    g: &'a Bigraph,
    load: Vec<u8>,
    picks: Vec<(usize, usize)>,
    /// `remaining[y]`: unprocessed X-neighbours of y.
    remaining: Vec<usize>,
    meter: Meter,
}

impl CoverSearch<'_> {
    /// Can x in `from..` each take two distinct neighbours within residual capacity?
    fn flow_feasible(&self, from: usize) -> bool {
        let g = self.g;
        let nx = g.nx();
        let cap: Vec<usize> = self.load.iter().map(|&l| 2 - l as usize).collect();
        let mut used = vec![0usize; g.ny()];
        // owner[y] lists the x's currently routed through y.
        let mut owner: Vec<Vec<usize>> = vec![Vec::new(); g.ny()];
        let mut taken: Vec<BitSet> = vec![BitSet::new(g.ny()); nx];
        for x in from..nx {
            for _ in 0..2 {
                let mut seen_y = vec![false; g.ny()];
                if !route(g, x, &cap, &mut used, &mut owner, &mut taken, &mut seen_y) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, x: usize) -> Result<bool> {
        self.meter.tick()?;
        let g = self.g;
        if x == g.nx() {
            return Ok(self.load.iter().all(|&l| l != 1));
        }
        let nbrs: Vec<usize> = g.adj_x(x).iter().filter(|&y| self.load[y] < 2).collect();
        for y in g.adj_x(x).iter() {
            self.remaining[y] -= 1;
        }
        // Half-used y's first: they must be closed by someone.
        let mut options: Vec<(usize, usize)> = Vec::new();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                options.push((a, b));
            }
        }
        options.sort_by_key(|&(a, b)| (self.load[a] == 0) as u8 + (self.load[b] == 0) as u8);
        let mut found = false;
        for (a, b) in options {
            self.load[a] += 1;
            self.load[b] += 1;
            self.picks.push((a, b));
            let parity_ok = g.adj_x(x).iter().all(|y| self.load[y] != 1 || self.remaining[y] > 0);
            if parity_ok && self.flow_feasible(x + 1) && self.run(x + 1)? {
                found = true;
                break;
            }
            self.picks.pop();
            self.load[a] -= 1;
            self.load[b] -= 1;
        }
        if !found {
            for y in g.adj_x(x).iter() {
                self.remaining[y] += 1;
            }
        }
        Ok(found)
    }
}

fn route(
    g: &Bigraph,
    x: usize,
    cap: &[usize],
    used: &mut [usize],
    owner: &mut [Vec<usize>],
    taken: &mut [BitSet],
    seen_y: &mut [bool],
) -> bool {
    for y in g.adj_x(x).iter() {
        if seen_y[y] || taken[x].contains(y) || cap[y] == 0 {
            continue;
        }
        seen_y[y] = true;
        if used[y] < cap[y] {
            used[y] += 1;
            owner[y].push(x);
            taken[x].insert(y);
            return true;
        }
        // Try to reroute one of y's current owners elsewhere.
        for k in 0..owner[y].len() {
            let w = owner[y][k];
            taken[w].remove(y);
            if route(g, w, cap, used, owner, taken, seen_y) {
                owner[y][k] = x;
                taken[x].insert(y);
                return true;
            }
            taken[w].insert(y);
        }
    }
    false
}

/// Pairwise disjoint cycles covering X, or `None` if none exist.
pub fn find_disjoint_cycle_cover(g: &Bigraph, budget: &Budget) -> Result<Option<Vec<CycleWitness>>> {
    if g.nx() < 2 {
        return Err(Error::Domain(format!("disjoint cycle cover requires |X| >= 2, got {}", g.nx())));
    }
    let mut s = CoverSearch {
        g,
        load: vec![0; g.ny()],
        picks: Vec::with_capacity(g.nx()),
        remaining: (0..g.ny()).map(|y| g.deg_y(y)).collect(),
        meter: Meter::nodes(budget),
    };
    if !s.flow_feasible(0) || !s.run(0)? {
        return Ok(None);
    }
    Ok(Some(decompose(g, &s.picks)?))
}

/// Splits a degree-(2 on X, 0/2 on Y) selection into its cycles.
fn decompose(g: &Bigraph, picks: &[(usize, usize)]) -> Result<Vec<CycleWitness>> {
    let mut by_y: Vec<Vec<usize>> = vec![Vec::new(); g.ny()];
    for (x, &(a, b)) in picks.iter().enumerate() {
        by_y[a].push(x);
        by_y[b].push(x);
    }
    let mut done = vec![false; g.nx()];
    let mut cycles = Vec::new();
    for start in 0..g.nx() {
        if done[start] {
            continue;
        }
        let (mut xs, mut ys) = (Vec::new(), Vec::new());
        let mut x = start;
        let mut came_in = picks[start].1;
        loop {
            done[x] = true;
            xs.push(x);
            let (a, b) = picks[x];
            let out = if a == came_in { b } else { a };
            ys.push(out);
            let next = if by_y[out][0] == x { by_y[out][1] } else { by_y[out][0] };
            if next == start {
                break;
            }
            came_in = out;
            x = next;
        }
        cycles.push(CycleWitness::new(xs, ys)?);
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &Bigraph, cover: &[CycleWitness]) {
        let mut seen = BitSet::new(g.nx());
        let mut ys = BitSet::new(g.ny());
        for c in cover {
            c.validate(g).unwrap();
            for &x in c.xs() {
                assert!(seen.insert(x));
            }
            for &y in c.ys() {
                assert!(ys.insert(y));
            }
        }
        assert_eq!(seen.count(), g.nx());
    }

    #[test]
    fn complete_4x4() {
        let g = Bigraph::complete(4, 4);
        let cover = find_disjoint_cycle_cover(&g, &Budget::default()).unwrap().unwrap();
        check(&g, &cover);
    }

    #[test]
    fn two_blocks() {
        let mut edges = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                edges.push((x, y));
                edges.push((x + 2, y + 2));
            }
        }
        let g = Bigraph::from_edges(4, 4, edges).unwrap();
        let cover = find_disjoint_cycle_cover(&g, &Budget::default()).unwrap().unwrap();
        assert_eq!(cover.len(), 2);
        check(&g, &cover);
    }

    #[test]
    fn isolated_bad_pair() {
        let g = Bigraph::from_edges(4, 5, [(0, 0), (1, 0), (0, 1), (1, 2), (2, 3), (2, 4), (3, 3), (3, 4)]).unwrap();
        assert!(find_disjoint_cycle_cover(&g, &Budget::default()).unwrap().is_none());
    }
}
