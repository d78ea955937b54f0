//! Worked instances for each module, checked against independent oracles
//! where the answer is not obvious.

mod common;

use common::*;
use dhp_core::checkers::{
    check_critical, check_degree_bound, check_dhp, check_snp, check_supercyclic, find_minimal_obstacle,
};
use dhp_core::constructions::{
    biplane_from_difference_set, builtin_biplane, design_to_bigraph, import_design, iterated_product, pad_with_universal,
    pair_gadget, serialize_design, strip_padding, verify_design,
};
use dhp_core::cycles::{absorb_virtual_edge, find_cycle_covering, solve_degree_split, solve_high_degree, AbsorbRoute};
use dhp_core::graph::io::{parse_bigraph, serialize_bigraph, ParseMode};
use dhp_core::random::{
    chernoff_degree_check, check_hamiltonian, poisson_gof, sample_gnnp, surrogate_dhp, threshold_p, ThresholdKind,
};
use dhp_core::{BitSet, Bigraph, Budget, CycleWitness, Side, VertexSet};
use rand::SeedableRng;
use rand_distr::{Distribution, Poisson};

fn b() -> Budget {
    Budget::default()
}

#[test]
fn parse_examples() {
    let g = parse_bigraph("bigraph 2 2\n0 0\n0 1\n1 0\n1 1", ParseMode::Strict).unwrap();
    assert_eq!(g, Bigraph::complete(2, 2));
    let g = parse_bigraph("bigraph 1 0", ParseMode::Strict).unwrap();
    assert_eq!((g.nx(), g.ny(), g.edge_count()), (1, 0, 0));
    let cube = builtin_biplane(1).unwrap();
    assert_eq!(parse_bigraph(&serialize_bigraph(&cube), ParseMode::Strict).unwrap(), cube);
    let e = parse_bigraph("bigraph 2 2\n0 0\n0 0\n", ParseMode::Strict).unwrap_err();
    assert_eq!(e.line, 3);
}

#[test]
fn dhp_examples() {
    assert!(check_dhp(&Bigraph::complete(2, 2), &b()).unwrap().holds);
    let v = check_dhp(&Bigraph::from_edges(2, 1, [(0, 0), (1, 0)]).unwrap(), &b()).unwrap();
    assert_eq!(v.witness.unwrap().s, vec![0, 1]);
    assert!(check_dhp(&builtin_biplane(1).unwrap(), &b()).unwrap().holds);
}

#[test]
fn snp_and_supercyclic_examples() {
    assert!(check_snp(&pair_gadget(3).unwrap(), &b()).unwrap().holds);
    let star = Bigraph::from_edges(3, 1, [(0, 0), (1, 0), (2, 0)]).unwrap();
    assert!(!check_snp(&star, &b()).unwrap().holds);
    assert!(check_supercyclic(&Bigraph::complete(3, 3), &b()).unwrap().holds);
    assert!(check_supercyclic(&pair_gadget(4).unwrap(), &b()).unwrap().holds);
    assert!(!check_critical(&Bigraph::complete(3, 3), &b()).unwrap().holds);
    assert!(!check_critical(&builtin_biplane(1).unwrap(), &b()).unwrap().holds);
    let isolated_y = Bigraph::from_edges(3, 4, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)]).unwrap();
    assert!(!check_critical(&isolated_y, &b()).unwrap().holds);
}

#[test]
fn supercyclic_agrees_with_cycle_oracle() {
    let mut r = rng(40);
    for _ in 0..150 {
        let g = random_bigraph(&mut r, 5, 6, 0.7);
        let want = (0u32..32).filter(|m| m.count_ones() >= 3).all(|m| {
            // A cycle through exactly X' is a covering cycle of X' with all of Y.
            let keep: Vec<usize> = (0..5).filter(|&x| m >> x & 1 == 1).collect();
            let edges = g.edges().filter_map(|(x, y)| keep.iter().position(|&k| k == x).map(|i| (i, y)));
            covering_cycle_oracle(&Bigraph::from_edges(keep.len(), g.ny(), edges).unwrap())
        });
        assert_eq!(check_supercyclic(&g, &b()).unwrap().holds, want);
    }
}

#[test]
fn obstacle_examples() {
    assert!(find_minimal_obstacle(&Bigraph::complete(4, 4), 4, &b()).unwrap().is_none());
    let g = Bigraph::from_edges(2, 1, [(0, 0), (1, 0)]).unwrap();
    let o = find_minimal_obstacle(&g, 2, &b()).unwrap().unwrap();
    assert_eq!((o.s.to_vec(), o.t.to_vec(), o.minimal), (vec![0, 1], vec![0], true));
    let o = find_minimal_obstacle(&Bigraph::empty(3, 3), 3, &b()).unwrap().unwrap();
    assert_eq!((o.s.len(), o.t.len()), (2, 0));
}

#[test]
fn degree_bound_examples() {
    let r = check_degree_bound(&builtin_biplane(1).unwrap(), true, &b()).unwrap();
    assert_eq!((r.n, r.max_degree, r.bound, r.tight), (4, 3, 4, true));
    let r = check_degree_bound(&builtin_biplane(2).unwrap(), true, &b()).unwrap();
    assert_eq!((r.n, r.max_degree, r.bound, r.tight), (7, 4, 7, true));
    let r = check_degree_bound(&pair_gadget(3).unwrap(), true, &b()).unwrap();
    assert_eq!((r.n, r.max_degree, r.bound, r.tight), (3, 4, 7, false));
}

#[test]
fn covering_cycle_examples() {
    let k = Bigraph::complete(2, 2);
    let c = find_cycle_covering(&k, &VertexSet::all(&k, Side::X), true, &b()).unwrap().unwrap();
    assert_eq!((c.xs(), c.ys()), (&[0, 1][..], &[0, 1][..]));
    let cube = builtin_biplane(1).unwrap();
    let c = check_hamiltonian(&cube, 16, &b()).unwrap().unwrap();
    assert_eq!(c.len(), 4);
    let path = Bigraph::from_edges(2, 1, [(0, 0), (1, 0)]).unwrap();
    assert!(find_cycle_covering(&path, &VertexSet::all(&path, Side::X), true, &b()).unwrap().is_none());
}

#[test]
fn absorb_reroutes_k33_minus_edge() {
    let g = Bigraph::complete(3, 3).without_edge(0, 0).unwrap();
    let c = CycleWitness::new(vec![0, 1, 2], vec![2, 1, 0]).unwrap();
    assert!(c.uses_edge(0, 0));
    let a = absorb_virtual_edge(&g, 0, 0, &c).unwrap();
    let cyc = a.cycle.unwrap();
    cyc.validate_cover(&g, &BitSet::full(3), true).unwrap();
    assert_ne!(a.route, Some(AbsorbRoute::Unchanged));
}

#[test]
fn high_degree_k1_n4() {
    // x0 misses y3; every y misses at most one x.
    let mut edges: Vec<(usize, usize)> = (0..4).flat_map(|x| (0..5).map(move |y| (x, y))).collect();
    edges.retain(|&e| e != (0, 3) && e != (1, 4));
    let g = Bigraph::from_edges(4, 5, edges).unwrap();
    assert!(dhp_oracle(&g));
    let rep = solve_high_degree(&g, 1, &b()).unwrap();
    rep.cycle.unwrap().validate_cover(&g, &BitSet::full(4), true).unwrap();
    assert!(covering_cycle_oracle(&g));
}

#[test]
fn degree_split_mixed_instance() {
    let gadget = pair_gadget(6).unwrap();
    let mut edges: Vec<(usize, usize)> = gadget.edges().collect();
    let base = gadget.ny();
    edges.extend((0..6).flat_map(|x| (0..3).map(move |k| (x, base + k))));
    let g = Bigraph::from_edges(6, base + 3, edges).unwrap();
    let rep = solve_degree_split(&g, &b()).unwrap();
    rep.cycle.unwrap().validate_cover(&g, &BitSet::full(6), true).unwrap();
    assert!(covering_cycle_oracle(&g));
}

#[test]
fn designs_round_trip_and_powers() {
    let spec = biplane_from_difference_set(11, &[1, 3, 4, 5, 9]).unwrap();
    let g = design_to_bigraph(&spec);
    assert_eq!(g, builtin_biplane(3).unwrap());
    let back = import_design(&serialize_design(&spec)).unwrap();
    assert_eq!(verify_design(&design_to_bigraph(&back)).unwrap(), verify_design(&g).unwrap());
    let (_, rep) = iterated_product(&builtin_biplane(1).unwrap(), 3).unwrap();
    assert_eq!((rep.n, rep.d), (64, 27));
    let l = rep.log_n_d.unwrap();
    assert!((l - 27f64.ln() / 64f64.ln()).abs() < 1e-12);
}

#[test]
fn padding_strips_to_paths() {
    let g = pair_gadget(4).unwrap();
    let padded = pad_with_universal(&g, 6).unwrap();
    let c = find_cycle_covering(&padded, &VertexSet::all(&padded, Side::X), true, &b()).unwrap().unwrap();
    let ps = strip_padding(&padded, &c, 4).unwrap();
    ps.validate(&g, false, Some(&BitSet::full(4))).unwrap();
}

#[test]
fn threshold_arithmetic() {
    let t = threshold_p(10, 0.0, ThresholdKind::Dhp).unwrap();
    let direct = ((2.0 * 10f64.ln() + 10f64.ln().ln()) / 10.0).sqrt();
    assert!((t.p - direct).abs() < 1e-15 && (t.p - 0.7375).abs() < 1e-4);
}

#[test]
fn poisson_synthetic() {
    let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let pois = Poisson::new(1.0).unwrap();
    let samples: Vec<usize> = (0..10_000).map(|_| pois.sample(&mut r) as usize).collect();
    let rep = poisson_gof(&samples, 1.0).unwrap();
    assert!(rep.tv < 0.03, "tv = {}", rep.tv);
    assert!((rep.mean - 1.0).abs() < 0.05);
}

#[test]
fn chernoff_at_threshold() {
    let t = threshold_p(300, 0.0, ThresholdKind::Dhp).unwrap();
    let violations = (0..100)
        .filter(|&s| !chernoff_degree_check(&sample_gnnp(300, t.p, s).unwrap(), t.p).within_bound)
        .count();
    assert!(violations <= 3, "{violations} seeds above (1 + δ) np");
}

#[test]
fn surrogate_vs_exact_small_n() {
    let mut disagree = 0;
    for s in 0..1000u64 {
        let n = 8 + (s % 9) as usize;
        let t = threshold_p(n, 0.0, ThresholdKind::Dhp).unwrap();
        let g = sample_gnnp(n, t.p, s).unwrap();
        let sur = surrogate_dhp(&g).unwrap();
        let exact = check_dhp(&g, &b()).unwrap().holds;
        assert!(!exact || sur, "dHp implies the surrogate");
        disagree += usize::from(sur != exact);
    }
    assert!(disagree <= 20, "{disagree} disagreements in 1000");
}

#[test]
fn snp_implies_supercyclic_exhaustively() {
    for ny in [3usize, 4] {
        let mut snp = 0;
        for mask in 0u32..1 << (3 * ny) {
            let g = Bigraph::from_edges(3, ny, (0..3 * ny).filter(|b| mask >> b & 1 == 1).map(|b| (b / ny, b % ny))).unwrap();
            if check_snp(&g, &b()).unwrap().holds {
                snp += 1;
                assert!(check_supercyclic(&g, &b()).unwrap().holds, "3x{ny} graph {mask:#b}");
            }
        }
        assert!(snp > 0);
    }
}
