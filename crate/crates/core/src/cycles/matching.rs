//! Augmenting-path matchings, both the public pairs-to-Y instance and the
//! incremental slot matcher the backtracking solvers use as a feasibility
//! test.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Bigraph, Side, VertexSet};

const FREE: usize = usize::MAX;

/// Intended pairs of X-vertices on the left, a set of Y-vertices on the right,
/// and a pair adjacent to `y` exactly when `y` is a common neighbour of both
/// members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingInstance {
    pub left: Vec<(usize, usize)>,
    pub right: VertexSet,
    adjacency: Vec<BitSet>,
}

impl MatchingInstance {
    pub fn new(g: &Bigraph, left: Vec<(usize, usize)>, right: VertexSet) -> Result<Self> {
        if right.side() != Side::Y || right.bits().universe() != g.ny() {
            return Err(Error::InvalidInput("right side must be a Y-set of the same graph".into()));
        }
        let mut adjacency = Vec::with_capacity(left.len());
        for &(a, b) in &left {
            if a >= g.nx() || b >= g.nx() {
                return Err(Error::InvalidInput(format!("intended pair ({a}, {b}) out of range")));
            }
            let mut row = g.adj_x(a).intersection(g.adj_x(b));
            row.intersect_with(right.bits());
            adjacency.push(row);
        }
        Ok(Self { left, right, adjacency })
    }

    /// Y-vertices adjacent to the `i`-th pair.
    pub fn neighbours(&self, i: usize) -> &BitSet {
        &self.adjacency[i]
    }

    /// `|E(F)|`.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BitSet::count).sum()
    }
}

/// `assignment[i]` is the Y-vertex matched to pair `i`, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub assignment: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.assignment.iter().flatten().count()
    }

    pub fn is_saturating(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }
}

fn augment(adj: &[BitSet], u: usize, seen: &mut [bool], match_r: &mut [usize], match_l: &mut [usize]) -> bool {
    if let Some(r) = adj[u].iter().find(|&r| match_r[r] == FREE && !seen[r]) {
        seen[r] = true;
        match_r[r] = u;
        match_l[u] = r;
        return true;
    }
    for r in adj[u].iter() {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if match_r[r] == FREE || augment(adj, match_r[r], seen, match_r, match_l) {
            match_r[r] = u;
            match_l[u] = r;
            return true;
        }
    }
    false
}

fn kuhn(adj: &[BitSet], n_right: usize) -> (Vec<usize>, Vec<usize>) {
    let mut match_r = vec![FREE; n_right];
    let mut match_l = vec![FREE; adj.len()];
    let mut seen = vec![false; n_right];
    for u in 0..adj.len() {
        seen.iter_mut().for_each(|s| *s = false);
        augment(adj, u, &mut seen, &mut match_r, &mut match_l);
    }
    (match_l, match_r)
}

/// Maximum matching by repeated augmenting-path search.
pub fn max_matching(inst: &MatchingInstance) -> Matching {
    let (match_l, _) = kuhn(&inst.adjacency, inst.right.bits().universe());
    Matching {
        assignment: match_l.into_iter().map(|r| (r != FREE).then_some(r)).collect(),
    }
}

/// A set `S` of left indices with `|Λ(S)| < |S|`, or `None` if a saturating
/// matching exists. `S` is everything alternating-reachable from the first
/// unmatched pair of a maximum matching.
pub fn hall_violator(inst: &MatchingInstance) -> Option<Vec<usize>> {
    let n_right = inst.right.bits().universe();
    let (match_l, match_r) = kuhn(&inst.adjacency, n_right);
    let root = match_l.iter().position(|&r| r == FREE)?;
    let mut in_s = vec![false; inst.left.len()];
    let mut seen_r = vec![false; n_right];
    let mut stack = vec![root];
    in_s[root] = true;
    while let Some(u) = stack.pop() {
        for r in inst.adjacency[u].iter() {
            if seen_r[r] {
                continue;
            }
            seen_r[r] = true;
            // Every reachable right vertex is matched, else the matching would not be maximum.
            let w = match_r[r];
            if !in_s[w] {
                in_s[w] = true;
                stack.push(w);
            }
        }
    }
    Some((0..inst.left.len()).filter(|&i| in_s[i]).collect())
}

/// Stack-shaped incremental matching of "slots" (admissible Y-sets) to
/// distinct Y-vertices. Every pushed slot stays matched; a push that cannot
/// be matched is rejected and leaves the state untouched.
#[derive(Debug)]
pub(crate) struct SlotMatcher {
    slots: Vec<BitSet>,
    slot_y: Vec<usize>,
    match_y: Vec<usize>,
    seen: Vec<bool>,
}

impl SlotMatcher {
    pub(crate) fn new(ny: usize) -> Self {
        Self {
            slots: Vec::new(),
            slot_y: Vec::new(),
            match_y: vec![FREE; ny],
            seen: vec![false; ny],
        }
    }

    pub(crate) fn try_push(&mut self, slot: BitSet) -> bool {
        if slot.is_empty() {
            return false;
        }
        let u = self.slots.len();
        self.slots.push(slot);
        self.slot_y.push(FREE);
        self.seen.iter_mut().for_each(|s| *s = false);
        if augment(&self.slots, u, &mut self.seen, &mut self.match_y, &mut self.slot_y) {
            true
        } else {
            self.slots.pop();
            self.slot_y.pop();
            false
        }
    }

    pub(crate) fn pop(&mut self) {
        let y = self.slot_y.pop().expect("pop on empty matcher");
        self.slots.pop();
        self.match_y[y] = FREE;
    }

    /// Current Y-vertex of every slot, in push order.
    pub(crate) fn assignment(&self) -> &[usize] {
        &self.slot_y
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_instance_saturates() {
        let g = Bigraph::complete(4, 4);
        let inst = MatchingInstance::new(&g, vec![(0, 1), (1, 2), (2, 3), (3, 0)], VertexSet::all(&g, Side::Y)).unwrap();
        assert!(max_matching(&inst).is_saturating());
        assert_eq!(hall_violator(&inst), None);
        assert_eq!(inst.edge_count(), 16);
    }

    #[test]
    fn shared_single_neighbour() {
        let g = Bigraph::from_edges(3, 2, [(0, 0), (1, 0), (2, 0), (0, 1)]).unwrap();
        let inst = MatchingInstance::new(&g, vec![(0, 1), (1, 2)], VertexSet::all(&g, Side::Y)).unwrap();
        assert_eq!(max_matching(&inst).size(), 1);
        assert_eq!(hall_violator(&inst), Some(vec![0, 1]));
    }

    #[test]
    fn slot_matcher_rejects_and_restores() {
        let mut m = SlotMatcher::new(3);
        assert!(m.try_push(BitSet::from_indices(3, [0, 1])));
        assert!(m.try_push(BitSet::from_indices(3, [0])));
        assert_eq!(m.assignment(), &[1, 0]);
        assert!(!m.try_push(BitSet::from_indices(3, [0, 1])));
        assert_eq!(m.assignment().len(), 2);
        assert!(m.try_push(BitSet::from_indices(3, [1, 2])));
        m.pop();
        m.pop();
        assert!(m.try_push(BitSet::from_indices(3, [0])));
        assert!(!m.try_push(BitSet::new(3)));
    }
}
