//! Seeded `G(n, n, p)` experiments around the dHp threshold.
//!
//! Edge `(i, j)` is present iff `u_ij < p`, where `u_ij` is the `j`-th 64-bit
//! word of ChaCha8 stream `i` under the key derived from the sample seed. It
//! depends on `(seed, i, j)` alone, so one seed couples samples at different
//! `p` and `n`: raising `p` only adds edges. Logarithms are natural throughout.

mod stats;
mod sweep;

pub use stats::{chernoff_degree_check, poisson_gof, wald_halfwidth, ChernoffReport, GofRow, PoissonGof};
pub use sweep::{derive_trial_seed, run_sweep, CellReport, Measures, SweepConfig, SweepReport, TrialRecord};

use crate::bitset::BitSet;
use crate::checkers::Obstacle;
use crate::cycles::find_cycle_covering;
use crate::error::{Error, Result};
use crate::graph::{Bigraph, CycleWitness, Side, VertexSet};
use crate::Budget;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Default largest n for exact dHp and Hamiltonicity measurements.
pub const SMALL_N_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdKind {
    /// `p = sqrt((2 ln n + ln ln n + c) / n)`.
    Dhp,
    /// `p = (ln n + ln ln n + c) / n`.
    Hamiltonian,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdParams {
    pub n: usize,
    pub c: f64,
    pub p: f64,
    pub kind: ThresholdKind,
    /// The raw formula fell outside `[0, 1]` and was clamped.
    pub clamped: bool,
}

pub fn threshold_p(n: usize, c: f64, kind: ThresholdKind) -> Result<ThresholdParams> {
    if n < 3 {
        return Err(Error::Domain(format!("threshold needs n >= 3 so that ln ln n > 0, got {n}")));
    }
    let ln = (n as f64).ln();
    let raw = match kind {
        ThresholdKind::Dhp => {
            let r = (2.0 * ln + ln.ln() + c) / n as f64;
            if r < 0.0 { -1.0 } else { r.sqrt() }
        }
        ThresholdKind::Hamiltonian => (ln + ln.ln() + c) / n as f64,
    };
    let p = raw.clamp(0.0, 1.0);
    Ok(ThresholdParams {
        n,
        c,
        p,
        kind,
        clamped: p != raw,
    })
}

/// 53-bit uniform in `[0, 1)`.
fn unit(u: u64) -> f64 {
    (u >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// `G(n, n, p)`: each of the `n²` edges independently with probability `p`.
pub fn sample_gnnp(n: usize, p: f64, seed: u64) -> Result<Bigraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("edge probability must lie in [0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..n)
        .map(|i| {
            rng.set_stream(i as u64);
            rng.set_word_pos(0);
            BitSet::from_indices(n, (0..n).filter(|_| unit(rng.next_u64()) < p))
        })
        .collect();
    Ok(Bigraph::from_x_rows(n, rows))
}

/// `(n0, n1)`: X-pairs with zero and with exactly one common neighbour.
pub fn count_bad_pairs(g: &Bigraph) -> (usize, usize) {
    let (mut n0, mut n1) = (0, 0);
    for a in 0..g.nx() {
        for b in a + 1..g.nx() {
            match g.adj_x(a).intersection_count(g.adj_x(b)) {
                0 => n0 += 1,
                1 => n1 += 1,
                _ => {}
            }
        }
    }
    (n0, n1)
}

/// The lexicographically first minimal obstacle with `|S| = 3`.
///
/// `(S, Λ²(S))` with `|S| = 3` is a minimal obstacle exactly when the three
/// pairs of `S` share the same two common neighbours and nothing else: a
/// pair with fewer than two would be a smaller obstacle, and `|Λ²(S)| ≤ 2`
/// forces every pairwise common set into the same two vertices. Only pairs
/// with exactly two common neighbours need to be visited.
pub fn scan_obstacles_size3(g: &Bigraph) -> Result<Option<Obstacle>> {
    if g.nx() < 3 {
        return Err(Error::Domain(format!("size-3 obstacle scan needs |X| >= 3, got {}", g.nx())));
    }
    let n = g.nx();
    for a in 0..n {
        let twos: Vec<(usize, BitSet)> = (a + 1..n)
            .filter_map(|b| {
                let c = g.adj_x(a).intersection(g.adj_x(b));
                (c.count() == 2).then_some((b, c))
            })
            .collect();
        for (i, (b, cb)) in twos.iter().enumerate() {
            for (c, cc) in &twos[i + 1..] {
                if cb == cc && &g.adj_x(*b).intersection(g.adj_x(*c)) == cb {
                    return Ok(Some(Obstacle {
                        s: VertexSet::xs(g, [a, *b, *c]),
                        t: VertexSet::from_bitset(Side::Y, cb.clone()),
                        minimal: true,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// No bad pair and no size-3 minimal obstacle. Implied by dHp; at finite n
/// it can miss obstacles with `|S| ≥ 4`.
pub fn surrogate_dhp(g: &Bigraph) -> Result<bool> {
    Ok(count_bad_pairs(g) == (0, 0) && scan_obstacles_size3(g)?.is_none())
}

/// A Hamiltonian cycle (length `2n`) by exact search; `None` when there is none.
pub fn check_hamiltonian(g: &Bigraph, limit: usize, budget: &Budget) -> Result<Option<CycleWitness>> {
    if g.nx() > limit || g.ny() > limit {
        return Err(Error::Resource(format!(
            "exact Hamiltonicity is capped at {limit} vertices per side, got {}x{}",
            g.nx(),
            g.ny()
        )));
    }
    if g.nx() != g.ny() || g.nx() < 2 {
        return Ok(None);
    }
    find_cycle_covering(g, &VertexSet::all(g, Side::X), true, budget)
}
