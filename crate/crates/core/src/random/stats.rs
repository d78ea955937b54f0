use crate::error::{Error, Result};
use crate::graph::Bigraph;
use serde::Serialize;

/// 95% normal-approximation half-width for a proportion.
pub fn wald_halfwidth(successes: usize, trials: usize) -> f64 {
    if trials == 0 {
        return 0.0;
    }
    let p = successes as f64 / trials as f64;
    1.96 * (p * (1.0 - p) / trials as f64).sqrt()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GofRow {
    /// `"0"`, `"1"`, `"2"`, `"3"` or `">=4"`.
    pub k: String,
    pub observed: f64,
    pub expected: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoissonGof {
    pub samples: usize,
    pub rate: f64,
    pub mean: f64,
    pub variance: f64,
    /// Total-variation distance between the empirical law and Poisson(rate).
    pub tv: f64,
    pub table: Vec<GofRow>,
}

fn poisson_pmf(rate: f64, upto: usize) -> Vec<f64> {
    let mut pmf = Vec::with_capacity(upto + 1);
    let mut term = (-rate).exp();
    for k in 0..=upto {
        pmf.push(term);
        term *= rate / (k + 1) as f64;
    }
    pmf
}

pub fn poisson_gof(samples: &[usize], rate: f64) -> Result<PoissonGof> {
    if samples.len() < 100 {
        return Err(Error::Domain(format!(
            "Poisson comparison needs at least 100 samples, got {}",
            samples.len()
        )));
    }
    if !(rate >= 0.0 && rate.is_finite()) {
        return Err(Error::Domain(format!("Poisson rate must be finite and non-negative, got {rate}")));
    }
    let total = samples.len() as f64;
    let max = *samples.iter().max().expect("non-empty");
    let mut counts = vec![0usize; max.max(4) + 1];
    for &s in samples {
        counts[s] += 1;
    }
    let emp: Vec<f64> = counts.iter().map(|&c| c as f64 / total).collect();
    let pmf = poisson_pmf(rate, emp.len() - 1);
    let covered: f64 = pmf.iter().sum();
    let tv = 0.5 * (emp.iter().zip(&pmf).map(|(a, b)| (a - b).abs()).sum::<f64>() + (1.0 - covered).max(0.0));
    let mean = samples.iter().sum::<usize>() as f64 / total;
    let variance = samples.iter().map(|&s| (s as f64 - mean).powi(2)).sum::<f64>() / total;
    let mut table: Vec<GofRow> = (0..4)
        .map(|k| GofRow {
            k: k.to_string(),
            observed: emp[k],
            expected: pmf[k],
        })
        .collect();
    table.push(GofRow {
        k: ">=4".into(),
        observed: emp[4..].iter().sum(),
        expected: (1.0 - pmf[..4].iter().sum::<f64>()).max(0.0),
    });
    Ok(PoissonGof {
        samples: samples.len(),
        rate,
        mean,
        variance,
        tv,
        table,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChernoffReport {
    pub n: usize,
    pub p: f64,
    pub max_degree: usize,
    pub np: f64,
    /// `max_degree / np`, when `np > 0`.
    pub ratio: Option<f64>,
    /// `3 (ln n / n)^{1/4}`.
    pub delta: f64,
    pub within_bound: bool,
}

/// Compares the maximum degree of a `G(n, n, p)` sample with `(1 + δ) np`.
pub fn chernoff_degree_check(g: &Bigraph, p: f64) -> ChernoffReport {
    let n = g.nx().max(g.ny());
    let np = n as f64 * p;
    let delta = if n > 1 {
        3.0 * ((n as f64).ln() / n as f64).powf(0.25)
    } else {
        0.0
    };
    let max_degree = g.max_degree();
    ChernoffReport {
        n,
        p,
        max_degree,
        np,
        ratio: (np > 0.0).then(|| max_degree as f64 / np),
        delta,
        within_bound: max_degree as f64 <= (1.0 + delta) * np + 1e-9,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gof_degenerate() {
        let r = poisson_gof(&[0; 200], 0.0).unwrap();
        assert!(r.tv < 1e-12);
        assert_eq!(r.table.len(), 5);
        assert_eq!(r.table[4].k, ">=4");
        assert!(poisson_gof(&[0; 99], 1.0).is_err());
    }

    #[test]
    fn gof_tail_mass_counts() {
        // All mass at 0 against rate 1: TV = 1 - e^{-1}.
        let r = poisson_gof(&[0; 100], 1.0).unwrap();
        assert!((r.tv - (1.0 - (-1.0f64).exp())).abs() < 1e-12);
        let r = poisson_gof(&[9; 100], 1.0).unwrap();
        assert!(r.tv > 0.99);
    }

    #[test]
    fn chernoff_extremes() {
        let r = chernoff_degree_check(&Bigraph::complete(9, 9), 1.0);
        assert_eq!((r.max_degree, r.ratio, r.within_bound), (9, Some(1.0), true));
        let r = chernoff_degree_check(&Bigraph::empty(9, 9), 0.0);
        assert_eq!((r.max_degree, r.ratio, r.within_bound), (0, None, true));
    }

    #[test]
    fn halfwidth() {
        assert_eq!(wald_halfwidth(0, 0), 0.0);
        assert!((wald_halfwidth(50, 100) - 0.098).abs() < 1e-12);
    }
}
