//! Toolkit for the double Hall property (dHp) of bipartite graphs.
//!
//! A bigraph `G = (X, Y)` is dHp when every `S ⊆ X` with `|S| ≥ 2` has at
//! least `|S|` vertices of `Y` adjacent to two or more members of `S`. The
//! crate provides
//!
//! * [`graph`]: the [`Bigraph`] value type, neighbourhood algebra, witnesses
//!   and the canonical text formats;
//! * [`checkers`]: exact, certificate-producing decision procedures for dHp,
//!   the super-neighbourhood property, supercyclicity and related predicates;
//! * [`cycles`]: constructive solvers for cycles covering prescribed
//!   X-sets, disjoint cycle covers, path rotation and edge absorption, and the
//!   degree-restricted joiners built on Hall matchings;
//! * [`constructions`]: pair gadgets, biplanes, bipartite products, padding;
//! * [`random`]: a seeded `G(n, n, p)` laboratory around the dHp threshold.
//!
//! Every exponential search runs under a [`Budget`] and reports
//! [`Error::BudgetExceeded`] rather than guessing.

pub mod bitset;
pub mod checkers;
pub mod constructions;
pub mod cycles;
mod error;
pub mod graph;
pub mod random;

pub use bitset::BitSet;
pub use error::{Error, ParseError, Result};
pub use graph::{Bigraph, CycleWitness, PathKind, PathSystem, PathWitness, Side, Vertex, VertexSet};

/// Work limits for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of vertex subsets a checker may examine.
    pub subsets: u64,
    /// Maximum number of backtracking nodes a solver may expand.
    pub nodes: u64,
}

impl Budget {
    pub const DEFAULT_SUBSETS: u64 = 1 << 24;
    pub const DEFAULT_NODES: u64 = 100_000_000;

    pub fn unlimited() -> Self {
        Self {
            subsets: u64::MAX,
            nodes: u64::MAX,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            subsets: Self::DEFAULT_SUBSETS,
            nodes: Self::DEFAULT_NODES,
        }
    }
}

/// Counts work against one limit.
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    unit: &'static str,
}

impl Meter {
    pub(crate) fn subsets(budget: &Budget) -> Self {
        Self {
            used: 0,
            limit: budget.subsets,
            unit: "subsets",
        }
    }

    pub(crate) fn nodes(budget: &Budget) -> Self {
        Self {
            used: 0,
            limit: budget.nodes,
            unit: "search nodes",
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded {
                examined: self.limit,
                limit: self.limit,
                unit: self.unit,
            });
        }
        Ok(())
    }
}
