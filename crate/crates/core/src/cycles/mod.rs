//! Constructive solvers for cycles that cover X-vertices.
//!
//! Every solver returns a witness that re-validates against its input graph,
//! `None` when it has proved that no witness exists (or, for the pipeline
//! solvers, a report naming the stage that failed), and
//! [`Error::BudgetExceeded`](crate::Error::BudgetExceeded) when it ran out of
//! search nodes.

mod cover;
mod degree_split;
mod high_degree;
mod lemmas;
mod matching;
mod search;

pub use cover::find_disjoint_cycle_cover;
pub use degree_split::{solve_degree_split, DegreeSplitReport};
pub use high_degree::{solve_high_degree, HighDegreeReport, HighDegreeStage};
pub use lemmas::{absorb_virtual_edge, rotate_path_to_cycle, AbsorbRoute, Absorption};
pub use matching::{hall_violator, max_matching, Matching, MatchingInstance};

pub(crate) use search::exact_cycle;

use crate::bitset::BitSet;
use crate::checkers::{check_dhp, subsets};
use crate::error::{Error, Result};
use crate::graph::{Bigraph, CycleWitness, Side, VertexSet};
use crate::{Budget, Meter};

/// Above this many X-vertices the dHp precondition of the pipeline solvers
/// is only checked on pairs.
pub const DHP_VERIFY_LIMIT: usize = 20;

/// A cycle through every vertex of `xs`: with `exact_x` no other X-vertex may
/// appear, otherwise extra X-vertices are allowed. The search is exhaustive.
pub fn find_cycle_covering(g: &Bigraph, xs: &VertexSet, exact_x: bool, budget: &Budget) -> Result<Option<CycleWitness>> {
    if xs.side() != Side::X {
        return Err(Error::InvalidInput("covering target must be an X-set".into()));
    }
    let target = g.members(xs)?;
    if target.count() < 2 {
        return Err(Error::Domain(format!("a covering cycle needs |xs| >= 2, got {}", target.count())));
    }
    let mut meter = Meter::nodes(budget);
    let optional = if exact_x { BitSet::new(g.nx()) } else { BitSet::full(g.nx()) };
    search::search_cycle(g, &target, &optional, &mut meter)
}

/// dHp as a solver precondition: exact up to [`DHP_VERIFY_LIMIT`], pairs only above.
pub(crate) fn require_dhp(g: &Bigraph, budget: &Budget) -> Result<()> {
    let bad = if g.nx() <= DHP_VERIFY_LIMIT {
        check_dhp(g, budget)?.witness.map(|w| w.s)
    } else {
        let mut meter = Meter::subsets(budget);
        subsets::find_k_subset(g, 2, &mut meter, |s, t| Ok((t.count() < 2).then(|| s.to_vec())))?
    };
    match bad {
        None => Ok(()),
        Some(s) => Err(Error::Domain(format!("hypothesis dHp fails: S = {s:?} has too few super-neighbours"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::builtin_biplane;

    #[test]
    fn cube_is_hamiltonian() {
        let g = builtin_biplane(1).unwrap();
        let all = VertexSet::all(&g, Side::X);
        let c = find_cycle_covering(&g, &all, true, &Budget::default()).unwrap().unwrap();
        c.validate_cover(&g, all.bits(), true).unwrap();
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn path_graph_has_none() {
        let g = Bigraph::from_edges(2, 1, [(0, 0), (1, 0)]).unwrap();
        let all = VertexSet::all(&g, Side::X);
        assert!(find_cycle_covering(&g, &all, false, &Budget::default()).unwrap().is_none());
    }

    #[test]
    fn target_checks() {
        let g = Bigraph::complete(3, 3);
        assert!(find_cycle_covering(&g, &VertexSet::xs(&g, [0]), true, &Budget::default()).is_err());
        assert!(find_cycle_covering(&g, &VertexSet::ys(&g, [0, 1]), true, &Budget::default()).is_err());
    }

    #[test]
    fn budget_is_reported() {
        let g = Bigraph::complete(8, 7);
        let all = VertexSet::all(&g, Side::X);
        let e = find_cycle_covering(&g, &all, true, &Budget { subsets: 0, nodes: 50 }).unwrap_err();
        assert!(e.is_budget());
    }
}
