use std::fmt::Write as _;

use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use crate::constructions::base_a_f64;
use crate::error::{Error, Result};
use crate::graph::{gnp_random, Vertex};
use crate::seed::Seed;
use crate::verifier::Budget;

use super::montecarlo::{monte_carlo_success, ColoringScheme, ExperimentConfig, ExperimentResult, GraphFamily, SubsetSampling};
use super::stats::mean_var;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommonNeighborStats {
    pub n: usize,
    pub p: f64,
    pub k: usize,
    pub samples: usize,
    pub seed: Seed,
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    pub sample_variance: f64,
    /// `(n - k) p^k`.
    pub analytic_mean: f64,
    /// Standard deviation of Binomial(n - k, p^k).
    pub analytic_sd: f64,
    /// `2k^2 log_a n` with `a` from [`base_a_f64`].
    pub threshold: f64,
    pub fraction_meeting_threshold: f64,
}

/// Common-neighbour counts of `samples` random `k`-subsets of one `G(n, p)`.
pub fn common_neighbor_stats(n: usize, p: f64, k: usize, samples: usize, seed: Seed) -> Result<CommonNeighborStats> {
    if samples == 0 {
        return Err(Error::invalid("samples must be at least 1"));
    }
    if k < 3 || k > n {
        return Err(Error::invalid(format!("need 3 <= k <= n, got k={k}, n={n}")));
    }
    let g = gnp_random(n, p, seed.derive(0))?;
    let mut rng = seed.derive(1).rng();
    let mut counts = Vec::with_capacity(samples);
    let mut mark = vec![0usize; n];
    for _ in 0..samples {
        let s: Vec<Vertex> = sample(&mut rng, n, k).into_iter().map(|v| v as Vertex).collect();
        mark.iter_mut().for_each(|x| *x = 0);
        for &v in &s {
            for &(w, _) in g.neighbors(v) {
                mark[w as usize] += 1;
            }
        }
        // members of S are never adjacent to themselves, so they cannot reach k
        counts.push(mark.iter().filter(|&&c| c == k).count());
    }
    let xs: Vec<f64> = counts.iter().map(|&c| c as f64).collect();
    let (mean, sample_variance) = mean_var(&xs);
    let pk = p.powi(k as i32);
    let threshold = 2.0 * (k * k) as f64 * (n as f64).ln() / base_a_f64(k)?.ln();
    Ok(CommonNeighborStats {
        n,
        p,
        k,
        samples,
        seed,
        min: *counts.iter().min().unwrap(),
        max: *counts.iter().max().unwrap(),
        mean,
        sample_variance,
        analytic_mean: (n - k) as f64 * pk,
        analytic_sd: ((n - k) as f64 * pk * (1.0 - pk)).sqrt(),
        threshold,
        fraction_meeting_threshold: counts.iter().filter(|&&c| c as f64 >= threshold).count() as f64 / samples as f64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdProbability {
    /// `c (log_a n / n)^(1/k)` before capping.
    pub raw: f64,
    pub p: f64,
    pub saturated: bool,
}

/// `p(n) = min(1, c (log_a n / n)^(1/k))`, flagging when the cap applies.
pub fn threshold_probability(n: usize, k: usize, c: f64) -> Result<ThresholdProbability> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let log_a_n = (n as f64).ln() / base_a_f64(k)?.ln();
    let raw = c * (log_a_n / n as f64).powf(1.0 / k as f64);
    Ok(ThresholdProbability { raw, p: raw.min(1.0), saturated: raw >= 1.0 })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub k: usize,
    pub l: usize,
    pub c: f64,
    pub n_values: Vec<usize>,
    pub trials: usize,
    /// Subsets verified per sampled graph.
    pub subsets: usize,
    pub seed: Seed,
    pub budget: Budget,
    /// Also run each `n` at half the threshold probability.
    pub contrast: bool,
    /// Refuse points whose expected edge count exceeds this.
    pub max_expected_edges: f64,
}

impl SweepConfig {
    pub fn new(k: usize, l: usize, c: f64, n_values: Vec<usize>, trials: usize, seed: Seed) -> Self {
        SweepConfig {
            k,
            l,
            c,
            n_values,
            trials,
            subsets: 20,
            seed,
            budget: Budget::default(),
            contrast: false,
            max_expected_edges: 2.0e6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub n: usize,
    pub p: f64,
    pub threshold: ThresholdProbability,
    /// Run at half the threshold probability.
    pub contrast: bool,
    pub result: ExperimentResult,
}

/// Random 2-colourings of `G(n, p(n))` with sampled-subset verification, for
/// each `n`. Saturated points (`p(n)` capped at 1) sample complete graphs.
pub fn gnp_threshold_sweep(cfg: &SweepConfig) -> Result<Vec<SweepPoint>> {
    if cfg.c < 5.0 {
        return Err(Error::invalid(format!("c must be at least 5, got {}", cfg.c)));
    }
    let mut points = Vec::new();
    for (i, &n) in cfg.n_values.iter().enumerate() {
        let threshold = threshold_probability(n, cfg.k, cfg.c)?;
        let runs: &[bool] = if cfg.contrast { &[false, true] } else { &[false] };
        for &contrast in runs {
            let p = if contrast { 0.5 * threshold.p } else { threshold.p };
            let expected_edges = p * (n * (n - 1)) as f64 / 2.0;
            if expected_edges > cfg.max_expected_edges {
                return Err(Error::TooLarge(format!(
                    "G({n}, {p:.6}) has about {expected_edges:.0} edges, above the limit of {:.0}",
                    cfg.max_expected_edges
                )));
            }
            let mut ec = ExperimentConfig::new(
                GraphFamily::Gnp { n, p },
                cfg.k,
                cfg.l,
                ColoringScheme::Random { colors: 2 },
                cfg.trials,
                cfg.seed.derive(2 * i as u64 + u64::from(contrast)),
            );
            ec.subsets = SubsetSampling::Sampled { count: cfg.subsets };
            ec.budget = cfg.budget;
            let result = monte_carlo_success(&ec)?;
            points.push(SweepPoint { n, p, threshold, contrast, result });
        }
    }
    Ok(points)
}

pub const SWEEP_CSV_HEADER: &str = "n,p,k,l,trials,success_fraction,ci_low,ci_high,indeterminate_fraction,elapsed_ms";

pub fn sweep_csv(points: &[SweepPoint]) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for pt in points {
        let r = &pt.result;
        writeln!(
            out,
            "{},{:.6},{},{},{},{:.6},{:.6},{:.6},{:.6},{}",
            pt.n,
            pt.p,
            r.config.k,
            r.config.l,
            r.config.trials,
            r.success_fraction,
            r.ci_low,
            r.ci_high,
            r.indeterminate_fraction,
            r.elapsed_ms
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn common_neighbors_extremes() {
        let s = common_neighbor_stats(30, 1.0, 3, 10, Seed(1)).unwrap();
        assert_eq!((s.min, s.max), (27, 27));
        let s = common_neighbor_stats(30, 0.0, 3, 10, Seed(1)).unwrap();
        assert_eq!((s.min, s.max), (0, 0));
        assert!(common_neighbor_stats(30, 0.5, 3, 0, Seed(1)).is_err());
    }

    #[test]
    fn threshold_saturation() {
        let t = threshold_probability(100, 3, 5.0).unwrap();
        assert!(t.saturated && t.p == 1.0);
        let t = threshold_probability(1_000_000, 3, 5.0).unwrap();
        assert!(!t.saturated && t.p < 1.0);
        // c (ln n / (n ln a))^(1/k) by hand at n = 100, k = 3, c = 5
        let raw = 5.0 * ((100f64).ln() / (8.0f64 / 7.0).ln() / 100.0).cbrt();
        assert!((threshold_probability(100, 3, 5.0).unwrap().raw - raw).abs() < 1e-12);
    }

    #[test]
    fn sweep_csv_shape() {
        let mut cfg = SweepConfig::new(3, 1, 5.0, vec![8, 10], 3, Seed(2));
        cfg.subsets = 5;
        cfg.contrast = true;
        let pts = gnp_threshold_sweep(&cfg).unwrap();
        assert_eq!(pts.len(), 4);
        assert!(pts[0].threshold.saturated);
        assert_eq!(pts[1].p, 0.5);
        let csv = sweep_csv(&pts);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], SWEEP_CSV_HEADER);
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("8,1.000000,3,1,3,"));
    }

    #[test]
    fn sweep_rejects_small_c_and_huge_graphs() {
        assert!(gnp_threshold_sweep(&SweepConfig::new(3, 1, 4.0, vec![10], 1, Seed(0))).is_err());
        let cfg = SweepConfig::new(3, 1, 5.0, vec![10_000], 1, Seed(0));
        assert!(matches!(gnp_threshold_sweep(&cfg), Err(Error::TooLarge(_))));
    }
}
