//! Seeded Monte Carlo experiments on random colourings and random graphs.
//!
//! Trial `t` of an experiment with master seed `s` uses `s.derive(t)`, so
//! results do not depend on thread count or scheduling.

mod montecarlo;
mod paths;
mod random_graphs;
mod stats;

pub use montecarlo::{
    monte_carlo_success, trial_seed, ColoringScheme, ExperimentConfig, ExperimentResult, GraphFamily, SubsetSampling,
};
pub use paths::{bipartite_n2, path_properness_rate, BipartiteN2, PathRate};
pub use random_graphs::{
    common_neighbor_stats, gnp_threshold_sweep, sweep_csv, threshold_probability, CommonNeighborStats, SweepConfig,
    SweepPoint, ThresholdProbability, SWEEP_CSV_HEADER,
};
pub use stats::{binomial_ci, mean_var, Interval, NORMAL_APPROX_MIN_TRIALS};
