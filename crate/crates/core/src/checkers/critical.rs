//! Supercyclicity and the extremal-counterexample predicates built on it.

use super::{require_nx, snp_failure, subsets, Clause, Property, Reason, Verdict, Witness};
use crate::bitset::BitSet;
use crate::cycles::exact_cycle;
use crate::error::Result;
use crate::graph::{super_neighborhood, Bigraph};
use crate::{Budget, Meter};

/// Smallest `X' ⊆ X`, `|X'| ≥ 3`, with no cycle `C` such that `V(C) ∩ X = X'`.
fn smallest_uncyclable(g: &Bigraph, subsets_meter: &mut Meter, nodes: &mut Meter) -> Result<Option<Vec<usize>>> {
    subsets::find_subset(g, 3, g.nx(), subsets_meter, |s, _| {
        let sx = BitSet::from_indices(g.nx(), s.iter().copied());
        Ok(exact_cycle(g, &sx, nodes)?.is_none().then(|| s.to_vec()))
    })
}

/// Every `X' ⊆ X` with `|X'| ≥ 3` is the exact X-trace of some cycle.
pub fn check_supercyclic(g: &Bigraph, budget: &Budget) -> Result<Verdict> {
    require_nx(g, 3, "supercyclic")?;
    let mut sm = Meter::subsets(budget);
    let mut nm = Meter::nodes(budget);
    Ok(match smallest_uncyclable(g, &mut sm, &mut nm)? {
        None => Verdict::pass(Property::Supercyclic),
        Some(s) => Verdict::fail(Property::Supercyclic, Witness::new(Reason::NoCoveringCycle, s, Vec::new())),
    })
}

/// Clauses are tested cheapest first: `Λ²(X) = Y`, then snp, then the cycle clauses.
fn critical_failure(g: &Bigraph, sm: &mut Meter, nm: &mut Meter) -> Result<Option<Witness>> {
    let covered = super_neighborhood(g, &BitSet::full(g.nx()));
    if covered.count() != g.ny() {
        let missing = covered.complement().to_vec();
        return Ok(Some(
            Witness::new(Reason::SuperNeighborhoodMissesY, Vec::new(), missing).with_clause(Clause::Lambda2CoversY),
        ));
    }
    if let Some(w) = snp_failure(g, sm)? {
        return Ok(Some(w.with_clause(Clause::Snp)));
    }
    // The smallest X' without an exact cycle settles both cycle clauses:
    // they hold iff that X' is X itself.
    match smallest_uncyclable(g, sm, nm)? {
        None => Ok(Some(
            Witness::new(Reason::Supercyclic, Vec::new(), Vec::new()).with_clause(Clause::NotSupercyclic),
        )),
        Some(s) if s.len() < g.nx() => Ok(Some(
            Witness::new(Reason::NoCoveringCycle, s, Vec::new()).with_clause(Clause::ProperSubsetsSupercyclic),
        )),
        Some(_) => Ok(None),
    }
}

/// snp, not supercyclic, `Λ²(X) = Y`, and every proper `X'` (`|X'| ≥ 3`)
/// induces a supercyclic `G[X' ∪ Y]`.
pub fn check_critical(g: &Bigraph, budget: &Budget) -> Result<Verdict> {
    require_nx(g, 3, "critical")?;
    let mut sm = Meter::subsets(budget);
    let mut nm = Meter::nodes(budget);
    Ok(match critical_failure(g, &mut sm, &mut nm)? {
        None => Verdict::pass(Property::Critical),
        Some(w) => Verdict::fail(Property::Critical, w),
    })
}

/// Critical, and `G + xy` is supercyclic for every non-adjacent `x ∈ X`, `y ∈ Y`.
pub fn check_saturated_critical(g: &Bigraph, budget: &Budget) -> Result<Verdict> {
    require_nx(g, 3, "saturated critical")?;
    let mut sm = Meter::subsets(budget);
    let mut nm = Meter::nodes(budget);
    if let Some(w) = critical_failure(g, &mut sm, &mut nm)? {
        return Ok(Verdict::fail(Property::SaturatedCritical, w));
    }
    for x in 0..g.nx() {
        for y in 0..g.ny() {
            if g.has_edge(x, y) {
                continue;
            }
            let plus = g.with_edge(x, y)?;
            if let Some(s) = smallest_uncyclable(&plus, &mut sm, &mut nm)? {
                let mut w = Witness::new(Reason::NotSaturated, s, Vec::new()).with_clause(Clause::Saturation);
                w.edge = Some((x, y));
                return Ok(Verdict::fail(Property::SaturatedCritical, w));
            }
        }
    }
    Ok(Verdict::pass(Property::SaturatedCritical))
}

/// snp, and `G[X ∪ Y \ {y}]` is not snp for any `y ∈ Y`.
pub fn check_snp_minimal(g: &Bigraph, budget: &Budget) -> Result<Verdict> {
    require_nx(g, 3, "snp-minimal")?;
    let mut sm = Meter::subsets(budget);
    if let Some(w) = snp_failure(g, &mut sm)? {
        return Ok(Verdict::fail(Property::SnpMinimal, w.with_clause(Clause::Snp)));
    }
    for y in 0..g.ny() {
        let minus = g.without_y(y)?;
        if snp_failure(&minus, &mut sm)?.is_none() {
            let mut w = Witness::new(Reason::RemovableY, Vec::new(), Vec::new()).with_clause(Clause::Minimality);
            w.y = Some(y);
            return Ok(Verdict::fail(Property::SnpMinimal, w));
        }
    }
    Ok(Verdict::pass(Property::SnpMinimal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_biplane, pair_gadget};

    fn c6() -> Bigraph {
        Bigraph::from_edges(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn supercyclic_examples() {
        let b = Budget::default();
        assert!(check_supercyclic(&Bigraph::complete(3, 3), &b).unwrap().holds);
        assert!(check_supercyclic(&pair_gadget(4).unwrap(), &b).unwrap().holds);
        assert!(check_supercyclic(&builtin_biplane(1).unwrap(), &b).unwrap().holds);
    }

    #[test]
    fn supercyclic_failure_reports_smallest_set() {
        // x3 hangs off a single y: every X' containing it fails; the smallest is {0,1,3}.
        let g = Bigraph::from_edges(4, 3, Bigraph::complete(3, 3).edges().chain([(3, 0)])).unwrap();
        let v = check_supercyclic(&g, &Budget::default()).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.s, vec![0, 1, 3]);
        assert!(w.reverify(&g, &Budget::default()).unwrap());
    }

    #[test]
    fn critical_clauses() {
        let b = Budget::default();
        let v = check_critical(&Bigraph::complete(3, 3), &b).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.as_ref().unwrap().clause, Some(Clause::NotSupercyclic));

        let cube = builtin_biplane(1).unwrap();
        let v = check_critical(&cube, &b).unwrap();
        assert_eq!(v.witness.as_ref().unwrap().reason, Reason::Supercyclic);

        let with_isolated = Bigraph::from_edges(3, 4, Bigraph::complete(3, 3).edges()).unwrap();
        let v = check_critical(&with_isolated, &b).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.clause, Some(Clause::Lambda2CoversY));
        assert_eq!(w.t, vec![3]);
        assert!(w.reverify(&with_isolated, &b).unwrap());

        let star = Bigraph::from_edges(3, 1, [(0, 0), (1, 0), (2, 0)]).unwrap();
        let v = check_critical(&star, &b).unwrap();
        assert_eq!(v.witness.unwrap().clause, Some(Clause::Snp));
    }

    #[test]
    fn saturated_critical_implies_critical() {
        let b = Budget::default();
        for g in [Bigraph::complete(3, 3), c6(), pair_gadget(3).unwrap()] {
            let sat = check_saturated_critical(&g, &b).unwrap();
            let crit = check_critical(&g, &b).unwrap();
            assert!(!sat.holds && !crit.holds);
            assert_eq!(sat.witness.unwrap().clause, crit.witness.unwrap().clause);
        }
    }

    #[test]
    fn snp_minimal_examples() {
        let b = Budget::default();
        assert!(check_snp_minimal(&c6(), &b).unwrap().holds);
        let v = check_snp_minimal(&pair_gadget(3).unwrap(), &b).unwrap();
        let w = v.witness.unwrap();
        assert_eq!((w.reason, w.y), (Reason::RemovableY, Some(0)));
        assert!(w.reverify(&pair_gadget(3).unwrap(), &b).unwrap());
        let star = Bigraph::from_edges(3, 1, [(0, 0), (1, 0), (2, 0)]).unwrap();
        assert_eq!(check_snp_minimal(&star, &b).unwrap().witness.unwrap().clause, Some(Clause::Snp));
    }
}
