//! Backtracking over cyclic orderings of X-vertices. Each consecutive pair
//! needs its own common Y-neighbour; the slot matcher keeps the partial
//! assignment feasible at every node.

use super::matching::SlotMatcher;
use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::{Bigraph, CycleWitness};
use crate::Meter;

struct CycleSearch<'a> {
    /// Local index → X-index; required vertices first, then optional ones.
    global: Vec<usize>,
    n_required: usize,
    /// Common neighbourhoods, `common[a][b]` over Y.
    common: Vec<Vec<BitSet>>,
    /// `link[a]`: local vertices sharing at least one Y-neighbour with `a`.
    link: Vec<BitSet>,
    order: Vec<usize>,
    used: BitSet,
    required_left: usize,
    matcher: SlotMatcher,
    meter: &'a mut Meter,
}

impl CycleSearch<'_> {
    fn is_required(&self, v: usize) -> bool {
        v < self.n_required
    }

    /// Every unused required vertex still needs two links among vertices a
    /// cycle could still attach it to (called with at least two placed).
    fn degrees_feasible(&self) -> bool {
        let mut open = self.used.complement();
        open.insert(self.order[0]);
        open.insert(*self.order.last().unwrap());
        (0..self.n_required)
            .filter(|&r| !self.used.contains(r))
            .all(|r| self.link[r].intersection_count(&open) >= 2)
    }

    fn close(&mut self) -> Result<Option<CycleWitness>> {
        let (first, last) = (self.order[0], *self.order.last().unwrap());
        if self.order.len() >= 3 && last < self.order[1] {
            return Ok(None);
        }
        if !self.matcher.try_push(self.common[last][first].clone()) {
            return Ok(None);
        }
        let xs = self.order.iter().map(|&v| self.global[v]).collect();
        let ys = self.matcher.assignment().to_vec();
        self.matcher.pop();
        CycleWitness::new(xs, ys).map(Some)
    }

    fn run(&mut self) -> Result<Option<CycleWitness>> {
        self.meter.tick()?;
        if self.required_left == 0 && self.order.len() >= 2 {
            if let Some(c) = self.close()? {
                return Ok(Some(c));
            }
        }
        let end = *self.order.last().unwrap();
        let last_required_above = (0..self.n_required).rev().find(|&r| !self.used.contains(r));
        let cands = self.link[end].to_vec();
        for cand in cands {
            if self.used.contains(cand) {
                continue;
            }
            // With x_1 fixed the closing vertex must exceed it, so some
            // larger candidate has to remain.
            if self.order.len() == 1 && self.global.len() == self.n_required && self.n_required >= 3 {
                match last_required_above {
                    Some(r) if r > cand => {}
                    _ => continue,
                }
            }
            if !self.matcher.try_push(self.common[end][cand].clone()) {
                continue;
            }
            self.order.push(cand);
            self.used.insert(cand);
            if self.is_required(cand) {
                self.required_left -= 1;
            }
            let found = if self.degrees_feasible() { self.run()? } else { None };
            if self.is_required(cand) {
                self.required_left += 1;
            }
            self.used.remove(cand);
            self.order.pop();
            self.matcher.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// A cycle whose X-vertices include all of `required` and otherwise only
/// members of `optional`. One node of `meter` per search node.
pub(crate) fn search_cycle(
    g: &Bigraph,
    required: &BitSet,
    optional: &BitSet,
    meter: &mut Meter,
) -> Result<Option<CycleWitness>> {
    let mut global: Vec<usize> = required.iter().collect();
    let n_required = global.len();
    if n_required < 1 {
        return Ok(None);
    }
    global.extend(optional.iter().filter(|&v| !required.contains(v)));
    let n = global.len();
    let common: Vec<Vec<BitSet>> = (0..n)
        .map(|a| (0..n).map(|b| g.adj_x(global[a]).intersection(g.adj_x(global[b]))).collect())
        .collect();
    let link: Vec<BitSet> = (0..n)
        .map(|a| BitSet::from_indices(n, (0..n).filter(|&b| b != a && !common[a][b].is_empty())))
        .collect();
    if (0..n_required).any(|r| link[r].is_empty()) {
        meter.tick()?;
        return Ok(None);
    }
    let mut s = CycleSearch {
        global,
        n_required,
        common,
        link,
        order: vec![0],
        used: BitSet::from_indices(n, [0]),
        required_left: n_required - 1,
        matcher: SlotMatcher::new(g.ny()),
        meter,
    };
    s.run()
}

/// A cycle `C` with `V(C) ∩ X = xs` exactly.
pub(crate) fn exact_cycle(g: &Bigraph, xs: &BitSet, meter: &mut Meter) -> Result<Option<CycleWitness>> {
    search_cycle(g, xs, &BitSet::new(g.nx()), meter)
}
