use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{color_uniform_random, EdgeColoring};
use crate::colorings::{color_k3_l2, color_kn1_l2, color_spanning};
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, complete_graph, gnp_random, Graph};
use crate::seed::Seed;
use crate::verifier::{verify_coloring, Budget, SubsetMode, Verdict, VerifyOptions};

use super::stats::binomial_ci;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GraphFamily {
    Complete { n: usize },
    Bipartite { m: usize, n: usize },
    Gnp { n: usize, p: f64 },
}

impl GraphFamily {
    pub fn order(&self) -> usize {
        match *self {
            GraphFamily::Complete { n } | GraphFamily::Gnp { n, .. } => n,
            GraphFamily::Bipartite { m, n } => m + n,
        }
    }

    fn build(&self, seed: Seed) -> Result<Graph> {
        match *self {
            GraphFamily::Complete { n } => complete_graph(n),
            GraphFamily::Bipartite { m, n } => complete_bipartite(m, n),
            GraphFamily::Gnp { n, p } => gnp_random(n, p, seed),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ColoringScheme {
    Random { colors: u8 },
    K3l2,
    Kn1l2,
    Spanning,
}

impl ColoringScheme {
    fn is_random(&self) -> bool {
        matches!(self, ColoringScheme::Random { .. })
    }

    fn apply(&self, g: Arc<Graph>, family: &GraphFamily, seed: Seed) -> Result<EdgeColoring> {
        let n = match (self, family) {
            (ColoringScheme::Random { colors }, _) => return color_uniform_random(g, *colors, seed),
            (_, GraphFamily::Complete { n }) => *n,
            _ => return Err(Error::invalid("named colourings are defined on complete graphs only")),
        };
        match self {
            ColoringScheme::K3l2 => color_k3_l2(n),
            ColoringScheme::Kn1l2 => color_kn1_l2(n),
            ColoringScheme::Spanning => color_spanning(n),
            ColoringScheme::Random { .. } => unreachable!(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SubsetSampling {
    Exhaustive,
    Sampled { count: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub family: GraphFamily,
    pub k: usize,
    pub l: usize,
    pub scheme: ColoringScheme,
    pub trials: usize,
    pub subsets: SubsetSampling,
    pub seed: Seed,
    pub budget: Budget,
    /// Exhaustive subset iteration is refused above this order.
    pub max_exhaustive_vertices: usize,
    pub keep_verdicts: bool,
}

impl ExperimentConfig {
    pub fn new(family: GraphFamily, k: usize, l: usize, scheme: ColoringScheme, trials: usize, seed: Seed) -> Self {
        ExperimentConfig {
            family,
            k,
            l,
            scheme,
            trials,
            subsets: SubsetSampling::Exhaustive,
            seed,
            budget: Budget::default(),
            max_exhaustive_vertices: 24,
            keep_verdicts: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::invalid("trials must be at least 1"));
        }
        if let SubsetSampling::Sampled { count: 0 } = self.subsets {
            return Err(Error::invalid("sampled subset count must be at least 1"));
        }
        if let GraphFamily::Gnp { p, .. } = self.family {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::invalid(format!("p must lie in [0, 1], got {p}")));
            }
        }
        if self.l == 0 {
            return Err(Error::invalid("l must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    pub successes: usize,
    pub failures: usize,
    pub indeterminate: usize,
    pub success_fraction: f64,
    pub failure_fraction: f64,
    pub indeterminate_fraction: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub elapsed_ms: u64,
    /// What the number estimates, and at which finite scale.
    pub illustrates: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<Verdict>>,
}

/// Seed of trial `t`; graph, colouring and subset sample draw from
/// `derive(0)`, `derive(1)`, `derive(2)` of it.
pub fn trial_seed(master: Seed, t: usize) -> Seed {
    master.derive(t as u64)
}

/// Fraction of trials whose colouring passes verification. Indeterminate
/// verdicts are counted on their own, never as successes.
pub fn monte_carlo_success(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    cfg.validate()?;
    let started = Instant::now();
    let n = cfg.family.order();
    if matches!(cfg.subsets, SubsetSampling::Exhaustive) && n > cfg.max_exhaustive_vertices {
        return Err(Error::TooLarge(format!(
            "exhaustive subsets on {n} vertices exceed the cap of {}",
            cfg.max_exhaustive_vertices
        )));
    }
    let opts = VerifyOptions {
        budget: cfg.budget,
        stop_at_first_failure: true,
        max_exhaustive_vertices: cfg.max_exhaustive_vertices,
        ..VerifyOptions::default()
    };
    let deterministic = !cfg.scheme.is_random() && !matches!(cfg.family, GraphFamily::Gnp { .. });

    let run = |t: usize| -> Result<Verdict> {
        let seed = trial_seed(cfg.seed, t);
        let g = Arc::new(cfg.family.build(seed.derive(0))?);
        let coloring = cfg.scheme.apply(g, &cfg.family, seed.derive(1))?;
        let mode = match cfg.subsets {
            SubsetSampling::Exhaustive => SubsetMode::Exhaustive,
            SubsetSampling::Sampled { count } => SubsetMode::Sampled { count, seed: seed.derive(2) },
        };
        Ok(verify_coloring(&coloring, cfg.k, cfg.l, mode, &opts)?.verdict)
    };
    let verdicts: Vec<Verdict> = if deterministic && matches!(cfg.subsets, SubsetSampling::Exhaustive) {
        // every trial would repeat the same check
        let v = run(0)?;
        vec![v; cfg.trials]
    } else {
        (0..cfg.trials).into_par_iter().map(run).collect::<Result<_>>()?
    };

    let count = |v: Verdict| verdicts.iter().filter(|&&x| x == v).count();
    let (successes, failures, indeterminate) = (count(Verdict::Pass), count(Verdict::Fail), count(Verdict::Indeterminate));
    let trials = cfg.trials as f64;
    let ci = binomial_ci(successes, cfg.trials);
    Ok(ExperimentResult {
        config: cfg.clone(),
        successes,
        failures,
        indeterminate,
        success_fraction: successes as f64 / trials,
        failure_fraction: failures as f64 / trials,
        indeterminate_fraction: indeterminate as f64 / trials,
        ci_low: ci.low,
        ci_high: ci.high,
        elapsed_ms: started.elapsed().as_millis() as u64,
        illustrates: describe(cfg),
        verdicts: cfg.keep_verdicts.then_some(verdicts),
    })
}

fn describe(cfg: &ExperimentConfig) -> String {
    let graph = match cfg.family {
        GraphFamily::Complete { n } => format!("K_{n}"),
        GraphFamily::Bipartite { m, n } => format!("K_{{{m},{n}}}"),
        GraphFamily::Gnp { n, p } => format!("G({n}, {p:.6})"),
    };
    let what = match cfg.scheme {
        ColoringScheme::Random { colors } => format!("rate at which a uniform random {colors}-colouring"),
        ColoringScheme::K3l2 | ColoringScheme::Kn1l2 | ColoringScheme::Spanning => "whether the explicit colouring".to_string(),
    };
    format!(
        "{what} of {graph} gives every checked {k}-subset {l} internally disjoint proper trees; finite n = {order}, not a limit",
        k = cfg.k,
        l = cfg.l,
        order = cfg.family.order()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_gives_full_success() {
        let cfg = ExperimentConfig::new(GraphFamily::Complete { n: 6 }, 3, 2, ColoringScheme::K3l2, 1, Seed(0));
        let r = monte_carlo_success(&cfg).unwrap();
        assert_eq!(r.success_fraction, 1.0);
        assert_eq!(r.successes, 1);
    }

    #[test]
    fn pairs_succeed_under_any_coloring() {
        let cfg = ExperimentConfig::new(GraphFamily::Complete { n: 4 }, 2, 1, ColoringScheme::Random { colors: 2 }, 20, Seed(5));
        let r = monte_carlo_success(&cfg).unwrap();
        assert_eq!(r.success_fraction, 1.0);
    }

    #[test]
    fn reproducible_and_fractions_sum_to_one() {
        let mut cfg = ExperimentConfig::new(GraphFamily::Complete { n: 6 }, 3, 1, ColoringScheme::Random { colors: 2 }, 40, Seed(11));
        cfg.keep_verdicts = true;
        let a = monte_carlo_success(&cfg).unwrap();
        let b = monte_carlo_success(&cfg).unwrap();
        assert_eq!(a.verdicts, b.verdicts);
        assert_eq!(a.successes + a.failures + a.indeterminate, 40);
        assert!(a.ci_low <= a.success_fraction && a.success_fraction <= a.ci_high);
    }

    #[test]
    fn named_scheme_needs_complete_graph() {
        let cfg = ExperimentConfig::new(GraphFamily::Bipartite { m: 3, n: 3 }, 3, 1, ColoringScheme::K3l2, 1, Seed(0));
        assert!(monte_carlo_success(&cfg).is_err());
        let cfg = ExperimentConfig::new(GraphFamily::Complete { n: 6 }, 3, 1, ColoringScheme::K3l2, 0, Seed(0));
        assert!(monte_carlo_success(&cfg).is_err());
    }
}
