//! Grids of seeded trials over `(n, c)`.

use super::{
    check_hamiltonian, count_bad_pairs, poisson_gof, sample_gnnp, scan_obstacles_size3, threshold_p, wald_halfwidth,
    PoissonGof, ThresholdKind, SMALL_N_LIMIT,
};
use crate::checkers::{check_dhp, Obstacle};
use crate::error::{Error, Result};
use crate::Budget;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::str::FromStr;

/// Optional measurements. Pair counts and the maximum degree are always taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Measures {
    pub obstacle3: bool,
    pub exact: bool,
    pub hamiltonian: bool,
}

impl Default for Measures {
    fn default() -> Self {
        Self {
            obstacle3: true,
            exact: false,
            hamiltonian: false,
        }
    }
}

impl FromStr for Measures {
    type Err = Error;

    /// Comma list over `pair`, `obstacle3`, `exact`, `hamiltonian`, `maxdeg`.
    fn from_str(s: &str) -> Result<Self> {
        let mut m = Measures {
            obstacle3: false,
            exact: false,
            hamiltonian: false,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "pair" | "maxdeg" => {}
                "obstacle3" => m.obstacle3 = true,
                "exact" => m.exact = true,
                "hamiltonian" => m.hamiltonian = true,
                other => return Err(Error::Config(format!("unknown measure {other:?}"))),
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepConfig {
    pub n_list: Vec<usize>,
    pub c_list: Vec<f64>,
    pub trials: usize,
    pub master_seed: u64,
    pub measures: Measures,
    pub kind: ThresholdKind,
    /// Largest n for the exact dHp and Hamiltonicity measures.
    pub small_n_limit: usize,
    /// Reuse the same trial seeds in every c-cell of a given n.
    pub common_random_numbers: bool,
    /// Store every trial record in the report.
    pub keep_trials: bool,
    #[serde(skip)]
    pub budget: Budget,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n_list: vec![],
            c_list: vec![],
            trials: 0,
            master_seed: 0,
            measures: Measures::default(),
            kind: ThresholdKind::Dhp,
            small_n_limit: SMALL_N_LIMIT,
            common_random_numbers: true,
            keep_trials: false,
            budget: Budget::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub seed: u64,
    pub n: usize,
    pub p: f64,
    pub n0: usize,
    pub n1: usize,
    pub n_bad: usize,
    pub pair_ok: bool,
    pub obstacle3: Option<Obstacle>,
    /// `pair_ok` and no size-3 minimal obstacle; needs the obstacle3 measure.
    pub surrogate: Option<bool>,
    /// `None` when not measured or when the budget ran out.
    pub exact_dhp: Option<bool>,
    pub hamiltonian: Option<bool>,
    pub max_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellReport {
    pub n: usize,
    pub c: f64,
    pub p: f64,
    pub clamped: bool,
    pub trials: usize,
    pub pr_pair_ok: f64,
    pub ci_halfwidth: f64,
    pub mean_nbad: f64,
    pub var_nbad: f64,
    pub poisson: Option<PoissonGof>,
    pub pr_obstacle3: Option<f64>,
    pub pr_surrogate: Option<f64>,
    pub surrogate_ci_halfwidth: Option<f64>,
    pub pr_exact_dhp: Option<f64>,
    pub pr_hamiltonian: Option<f64>,
    /// Trials whose exact measurements ran out of budget.
    pub undecided: usize,
    /// Trials where the surrogate and the exact check disagree.
    pub surrogate_disagreements: usize,
    /// Mean of `max_degree / sqrt(2 n ln n)`.
    pub maxdeg_ratio_mean: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<TrialRecord>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub cells: Vec<CellReport>,
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    c: f64,
    p: f64,
    trials: usize,
    pr_pair_ok: f64,
    ci_halfwidth: f64,
    mean_nbad: f64,
    tv_poisson: Option<f64>,
    pr_obstacle3: Option<f64>,
    pr_exact_dhp: Option<f64>,
    pr_hamiltonian: Option<f64>,
    maxdeg_ratio_mean: f64,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for c in &self.cells {
            w.serialize(CsvRow {
                n: c.n,
                c: c.c,
                p: c.p,
                trials: c.trials,
                pr_pair_ok: c.pr_pair_ok,
                ci_halfwidth: c.ci_halfwidth,
                mean_nbad: c.mean_nbad,
                tv_poisson: c.poisson.as_ref().map(|g| g.tv),
                pr_obstacle3: c.pr_obstacle3,
                pr_exact_dhp: c.pr_exact_dhp,
                pr_hamiltonian: c.pr_hamiltonian,
                maxdeg_ratio_mean: c.maxdeg_ratio_mean,
            })
            .expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }
}

/// Seed of trial `i`: the first output word of ChaCha8 keyed by the 32-byte
/// little-endian encoding of `[master, n, c_index, i]`.
pub fn derive_trial_seed(master: u64, n: usize, c_index: usize, i: usize) -> u64 {
    let mut key = [0u8; 32];
    for (chunk, w) in key.chunks_exact_mut(8).zip([master, n as u64, c_index as u64, i as u64]) {
        chunk.copy_from_slice(&w.to_le_bytes());
    }
    ChaCha8Rng::from_seed(key).next_u64()
}

fn validate(config: &SweepConfig) -> Result<()> {
    if config.n_list.is_empty() || config.c_list.is_empty() {
        return Err(Error::Config("sweep needs at least one n and one c".into()));
    }
    if config.trials == 0 {
        return Err(Error::Config("sweep needs at least one trial per cell".into()));
    }
    if let Some(c) = config.c_list.iter().find(|c| !c.is_finite()) {
        return Err(Error::Config(format!("c must be finite, got {c}")));
    }
    for &n in &config.n_list {
        if n < 3 {
            return Err(Error::Config(format!("sweep needs n >= 3, got {n}")));
        }
        let exact = config.measures.exact || config.measures.hamiltonian;
        if exact && n > config.small_n_limit {
            return Err(Error::Config(format!(
                "exact measurements are limited to n <= {}, got n = {n}",
                config.small_n_limit
            )));
        }
    }
    Ok(())
}

fn budget_to_none(r: Result<bool>) -> Result<Option<bool>> {
    match r {
        Ok(b) => Ok(Some(b)),
        Err(e) if e.is_budget() => Ok(None),
        Err(e) => Err(e),
    }
}

fn run_trial(config: &SweepConfig, n: usize, p: f64, seed: u64) -> Result<TrialRecord> {
    let g = sample_gnnp(n, p, seed)?;
    let (n0, n1) = count_bad_pairs(&g);
    let pair_ok = n0 + n1 == 0;
    let m = config.measures;
    let obstacle3 = if m.obstacle3 { scan_obstacles_size3(&g)? } else { None };
    let exact_dhp = if m.exact {
        budget_to_none(check_dhp(&g, &config.budget).map(|v| v.holds))?
    } else {
        None
    };
    let hamiltonian = if m.hamiltonian {
        budget_to_none(check_hamiltonian(&g, config.small_n_limit, &config.budget).map(|c| c.is_some()))?
    } else {
        None
    };
    Ok(TrialRecord {
        seed,
        n,
        p,
        n0,
        n1,
        n_bad: n0 + n1,
        pair_ok,
        surrogate: m.obstacle3.then(|| pair_ok && obstacle3.is_none()),
        obstacle3,
        exact_dhp,
        hamiltonian,
        max_degree: g.max_degree(),
    })
}

fn fraction(records: &[TrialRecord], f: impl Fn(&TrialRecord) -> Option<bool>) -> Option<f64> {
    let decided: Vec<bool> = records.iter().filter_map(f).collect();
    (!decided.is_empty()).then(|| decided.iter().filter(|&&b| b).count() as f64 / decided.len() as f64)
}

fn summarize(config: &SweepConfig, n: usize, c: f64, p: f64, clamped: bool, records: Vec<TrialRecord>) -> Result<CellReport> {
    let t = records.len();
    let ok = records.iter().filter(|r| r.pair_ok).count();
    let bad: Vec<usize> = records.iter().map(|r| r.n_bad).collect();
    let mean = bad.iter().sum::<usize>() as f64 / t as f64;
    let var = bad.iter().map(|&b| (b as f64 - mean).powi(2)).sum::<f64>() / t as f64;
    let poisson = if t >= 100 { Some(poisson_gof(&bad, (-c).exp())?) } else { None };
    let m = config.measures;
    let surrogate_ok = records.iter().filter(|r| r.surrogate == Some(true)).count();
    let undecided = records
        .iter()
        .filter(|r| (m.exact && r.exact_dhp.is_none()) || (m.hamiltonian && r.hamiltonian.is_none()))
        .count();
    let surrogate_disagreements = records
        .iter()
        .filter(|r| matches!((r.surrogate, r.exact_dhp), (Some(a), Some(b)) if a != b))
        .count();
    let scale = (2.0 * n as f64 * (n as f64).ln()).sqrt();
    Ok(CellReport {
        n,
        c,
        p,
        clamped,
        trials: t,
        pr_pair_ok: ok as f64 / t as f64,
        ci_halfwidth: wald_halfwidth(ok, t),
        mean_nbad: mean,
        var_nbad: var,
        poisson,
        pr_obstacle3: m.obstacle3.then(|| records.iter().filter(|r| r.obstacle3.is_some()).count() as f64 / t as f64),
        pr_surrogate: m.obstacle3.then(|| surrogate_ok as f64 / t as f64),
        surrogate_ci_halfwidth: m.obstacle3.then(|| wald_halfwidth(surrogate_ok, t)),
        pr_exact_dhp: if m.exact { fraction(&records, |r| r.exact_dhp) } else { None },
        pr_hamiltonian: if m.hamiltonian { fraction(&records, |r| r.hamiltonian) } else { None },
        undecided,
        surrogate_disagreements,
        maxdeg_ratio_mean: records.iter().map(|r| r.max_degree as f64 / scale).sum::<f64>() / t as f64,
        records: config.keep_trials.then_some(records),
    })
}

/// Runs every `(n, c)` cell. Trials run in parallel; the report does not
/// depend on scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    validate(config)?;
    let mut cells = Vec::with_capacity(config.n_list.len() * config.c_list.len());
    for &n in &config.n_list {
        for (ci, &c) in config.c_list.iter().enumerate() {
            let th = threshold_p(n, c, config.kind)?;
            let c_key = if config.common_random_numbers { 0 } else { ci };
            let records = (0..config.trials)
                .into_par_iter()
                .map(|i| run_trial(config, n, th.p, derive_trial_seed(config.master_seed, n, c_key, i)))
                .collect::<Result<Vec<_>>>()?;
            cells.push(summarize(config, n, c, th.p, th.clamped, records)?);
        }
    }
    Ok(SweepReport {
        config: config.clone(),
        cells,
    })
}
