//! The maximum-degree bound `n ≤ C(d, 2) + 1` for dHp bigraphs.

use super::check_dhp;
use crate::error::{Error, Result};
use crate::graph::Bigraph;
use crate::Budget;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeBoundReport {
    pub n: usize,
    pub max_degree: usize,
    pub bound: usize,
    pub tight: bool,
}

/// Reports `n = |X|`, `d = Δ(G)` and `C(d, 2) + 1`.
///
/// With `verify` set, dHp is checked first and a non-dHp input is a domain
/// error. Otherwise the caller vouches for dHp. Either way `n > bound`
/// contradicts the degree theorem and is reported as a contract violation.
pub fn check_degree_bound(g: &Bigraph, verify: bool, budget: &Budget) -> Result<DegreeBoundReport> {
    if verify && !check_dhp(g, budget)?.holds {
        return Err(Error::Domain("degree bound requires a dHp bigraph".into()));
    }
    let n = g.nx();
    let d = g.max_degree();
    let bound = d * d.saturating_sub(1) / 2 + 1;
    if n > bound {
        let how = if verify { "verified" } else { "asserted" };
        return Err(Error::ContractViolation(format!(
            "{how} dHp bigraph has n = {n} > C({d}, 2) + 1 = {bound}"
        )));
    }
    Ok(DegreeBoundReport {
        n,
        max_degree: d,
        bound,
        tight: n == bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_biplane, pair_gadget};

    #[test]
    fn biplanes_are_tight() {
        let b = Budget::default();
        let r = check_degree_bound(&builtin_biplane(1).unwrap(), true, &b).unwrap();
        assert_eq!((r.n, r.max_degree, r.bound, r.tight), (4, 3, 4, true));
        let r = check_degree_bound(&builtin_biplane(2).unwrap(), true, &b).unwrap();
        assert_eq!((r.n, r.max_degree, r.bound, r.tight), (7, 4, 7, true));
    }

    #[test]
    fn pair_gadget_is_loose() {
        let r = check_degree_bound(&pair_gadget(3).unwrap(), true, &Budget::default()).unwrap();
        assert_eq!((r.n, r.max_degree, r.bound, r.tight), (3, 4, 7, false));
    }

    #[test]
    fn false_assertion_is_caught() {
        let star = Bigraph::from_edges(3, 1, [(0, 0), (1, 0), (2, 0)]).unwrap();
        assert!(matches!(check_degree_bound(&star, true, &Budget::default()), Err(Error::Domain(_))));
        assert!(matches!(
            check_degree_bound(&Bigraph::empty(3, 3), false, &Budget::default()),
            Err(Error::ContractViolation(_))
        ));
    }
}
