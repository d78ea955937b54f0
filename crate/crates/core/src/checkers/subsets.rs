//! Lexicographic walk over the k-subsets of X with `Λ²` maintained
//! incrementally along the prefix: moving from one subset to the next only
//! refolds the suffix that changed.

use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::Bigraph;
use crate::Meter;

struct Walk<'a, F> {
    g: &'a Bigraph,
    k: usize,
    members: Vec<usize>,
    once: Vec<BitSet>,
    twice: Vec<BitSet>,
    meter: &'a mut Meter,
    visit: F,
}

impl<T, F> Walk<'_, F>
where
    F: FnMut(&[usize], &BitSet) -> Result<Option<T>>,
{
    fn run(&mut self, start: usize, depth: usize) -> Result<Option<T>> {
        let n = self.g.nx();
        let last = n + depth + 1 - self.k;
        for v in start..last {
            let (lo, hi) = self.once.split_at_mut(depth + 1);
            hi[0].clone_from(&lo[depth]);
            let (tlo, thi) = self.twice.split_at_mut(depth + 1);
            thi[0].clone_from(&tlo[depth]);
            BitSet::fold_twice(&mut hi[0], &mut thi[0], self.g.adj_x(v));
            self.members.push(v);
            let found = if depth + 1 == self.k {
                self.meter.tick()?;
                (self.visit)(&self.members, &self.twice[depth + 1])?
            } else {
                self.run(v + 1, depth + 1)?
            };
            self.members.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Calls `visit(S, Λ²(S))` for every `S ⊆ X` with `|S| = k`, in lexicographic
/// order, stopping at the first `Some`. Each visited subset costs one tick.
pub(crate) fn find_k_subset<T, F>(g: &Bigraph, k: usize, meter: &mut Meter, visit: F) -> Result<Option<T>>
where
    F: FnMut(&[usize], &BitSet) -> Result<Option<T>>,
{
    if k == 0 || k > g.nx() {
        return Ok(None);
    }
    let mut walk = Walk {
        g,
        k,
        members: Vec::with_capacity(k),
        once: vec![BitSet::new(g.ny()); k + 1],
        twice: vec![BitSet::new(g.ny()); k + 1],
        meter,
        visit,
    };
    walk.run(0, 0)
}

/// Same walk over all sizes `k_min..=k_max`, smallest first.
pub(crate) fn find_subset<T, F>(g: &Bigraph, k_min: usize, k_max: usize, meter: &mut Meter, mut visit: F) -> Result<Option<T>>
where
    F: FnMut(&[usize], &BitSet) -> Result<Option<T>>,
{
    for k in k_min..=k_max.min(g.nx()) {
        if let Some(t) = find_k_subset(g, k, meter, &mut visit)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}
