use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rand::seq::index::sample;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::seed::Seed;

use super::{
    are_internally_disjoint, has_disjoint_proper_trees, is_proper_tree, kappa_complete_formula,
    max_disjoint_proper_trees, Budget, SearchExhausted, TreeWitness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl Verdict {
    /// 0 pass, 1 fail, 2 indeterminate.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Indeterminate => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubsetMode {
    Exhaustive,
    Sampled { count: usize, seed: Seed },
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub budget: Budget,
    pub keep_witnesses: bool,
    /// Skip the remaining subsets once one fails. The verdict is unchanged;
    /// `failures` and `subsets_checked` then cover only what was examined.
    pub stop_at_first_failure: bool,
    /// Largest `n` accepted in exhaustive mode.
    pub max_exhaustive_vertices: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Free-form identifiers echoed into the report.
    pub graph_id: Option<String>,
    pub coloring_id: Option<String>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: Budget::default(),
            keep_witnesses: false,
            stop_at_first_failure: false,
            max_exhaustive_vertices: 16,
            jobs: None,
            graph_id: None,
            coloring_id: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportParams {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub m: usize,
    pub colors: u8,
    pub mode: SubsetMode,
    pub graph_id: Option<String>,
    pub coloring_id: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    #[serde(rename = "S")]
    pub s: Vec<Vertex>,
    /// Best family size found; exact unless `achieved_exact` is false (a
    /// search that ran out of budget, or was skipped on early exit).
    pub achieved: usize,
    pub achieved_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    #[serde(rename = "S")]
    pub s: Vec<Vertex>,
    pub trees: Vec<TreeWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: ReportParams,
    pub verdict: Verdict,
    pub subsets_checked: usize,
    pub failures: Vec<Failure>,
    pub indeterminate: Vec<Vec<Vertex>>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessEntry>>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

enum SubsetResult {
    Pass(Option<Vec<TreeWitness>>),
    Fail(usize, bool),
    Indeterminate,
    Skipped,
}

/// Checks that every `k`-subset (or a seeded sample of them) has `l`
/// internally disjoint proper trees. Every witness family found is
/// re-validated before the subset counts as passing.
pub fn verify_coloring(coloring: &EdgeColoring, k: usize, l: usize, mode: SubsetMode, opts: &VerifyOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    let g = coloring.graph();
    let n = g.n();
    if k < 2 || k > n {
        return Err(Error::invalid(format!("need 2 <= k <= n, got k={k}, n={n}")));
    }
    if l < 1 {
        return Err(Error::invalid("l must be at least 1"));
    }
    let params = ReportParams {
        k,
        l,
        n,
        m: g.m(),
        colors: coloring.num_colors(),
        mode,
        graph_id: opts.graph_id.clone(),
        coloring_id: opts.coloring_id.clone(),
    };

    if g.is_complete() {
        let kappa = kappa_complete_formula(n, k)?;
        if l > kappa {
            return Ok(VerificationReport {
                params,
                verdict: Verdict::Fail,
                subsets_checked: 0,
                failures: Vec::new(),
                indeterminate: Vec::new(),
                elapsed_ms: started.elapsed().as_millis() as u64,
                notes: vec![format!(
                    "l = {l} exceeds kappa_{k}(K_{n}) = {kappa}: no k-subset can have l internally disjoint trees"
                )],
                witnesses: None,
            });
        }
    }

    let subsets = match mode {
        SubsetMode::Exhaustive => {
            if n > opts.max_exhaustive_vertices {
                return Err(Error::TooLarge(format!(
                    "exhaustive mode is capped at n <= {}, got {n}",
                    opts.max_exhaustive_vertices
                )));
            }
            combinations(n, k)
        }
        SubsetMode::Sampled { count, seed } => sample_subsets(n, k, count, seed),
    };

    let stop = AtomicBool::new(false);
    let check = |s: &Vec<Vertex>| -> Result<SubsetResult> {
        if opts.stop_at_first_failure && stop.load(Ordering::Relaxed) {
            return Ok(SubsetResult::Skipped);
        }
        match has_disjoint_proper_trees(coloring, s, l, &opts.budget)? {
            Ok(Some(family)) => {
                assert!(
                    family.iter().all(|w| is_proper_tree(coloring, w).unwrap_or(false))
                        && are_internally_disjoint(&family).unwrap_or(false)
                        && family.len() == l,
                    "search returned an invalid witness family for S = {s:?}"
                );
                Ok(SubsetResult::Pass(opts.keep_witnesses.then_some(family)))
            }
            Ok(None) => {
                stop.store(true, Ordering::Relaxed);
                if opts.stop_at_first_failure {
                    return Ok(SubsetResult::Fail(0, false));
                }
                let best = max_disjoint_proper_trees(coloring, s, l - 1, &opts.budget)?;
                Ok(SubsetResult::Fail(best.lower_bound(), best.exact_count().is_some()))
            }
            Err(SearchExhausted) => Ok(SubsetResult::Indeterminate),
        }
    };

    let results: Vec<Result<SubsetResult>> = match opts.jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
            pool.install(|| subsets.par_iter().map(check).collect())
        }
        None => subsets.par_iter().map(check).collect(),
    };

    let mut failures = Vec::new();
    let mut indeterminate = Vec::new();
    let mut witnesses = Vec::new();
    let mut checked = 0;
    for (s, r) in subsets.iter().zip(results) {
        let r = r?;
        if !matches!(r, SubsetResult::Skipped) {
            checked += 1;
        }
        match r {
            SubsetResult::Pass(Some(trees)) => witnesses.push(WitnessEntry { s: s.clone(), trees }),
            SubsetResult::Pass(None) => {}
            SubsetResult::Fail(achieved, achieved_exact) => failures.push(Failure { s: s.clone(), achieved, achieved_exact }),
            SubsetResult::Indeterminate => indeterminate.push(s.clone()),
            SubsetResult::Skipped => {}
        }
    }
    let verdict = if !failures.is_empty() {
        Verdict::Fail
    } else if !indeterminate.is_empty() {
        Verdict::Indeterminate
    } else {
        Verdict::Pass
    };
    Ok(VerificationReport {
        params,
        verdict,
        subsets_checked: checked,
        failures,
        indeterminate,
        elapsed_ms: started.elapsed().as_millis() as u64,
        notes: Vec::new(),
        witnesses: opts.keep_witnesses.then_some(witnesses),
    })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| i as Vertex).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn binomial_capped(n: usize, k: usize, cap: usize) -> usize {
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > cap as u128 {
            return cap + 1;
        }
    }
    acc as usize
}

/// `count` distinct uniformly drawn `k`-subsets, sorted; all of them when
/// `count >= C(n, k)`.
pub(crate) fn sample_subsets(n: usize, k: usize, count: usize, seed: Seed) -> Vec<Vec<Vertex>> {
    if binomial_capped(n, k, count) <= count {
        return combinations(n, k);
    }
    let mut rng = seed.rng();
    let mut seen = BTreeSet::new();
    while seen.len() < count {
        let mut s: Vec<Vertex> = sample(&mut rng, n, k).into_iter().map(|v| v as Vertex).collect();
        s.sort_unstable();
        seen.insert(s);
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{color_k3_l2, color_spanning};
    use crate::graph::complete_graph;
    use std::sync::Arc;

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 3).len(), 10);
        assert_eq!(combinations(4, 4), vec![vec![0, 1, 2, 3]]);
        assert_eq!(combinations(6, 1).len(), 6);
        assert_eq!(combinations(10, 3).last().unwrap(), &vec![7, 8, 9]);
    }

    #[test]
    fn sampling_is_seeded_and_distinct() {
        let a = sample_subsets(20, 3, 50, Seed(4));
        assert_eq!(a, sample_subsets(20, 3, 50, Seed(4)));
        assert_eq!(a.len(), 50);
        assert_eq!(sample_subsets(5, 2, 100, Seed(1)).len(), 10);
    }

    #[test]
    fn spanning_six_passes() {
        let c = color_spanning(6).unwrap();
        let r = verify_coloring(&c, 6, 3, SubsetMode::Exhaustive, &VerifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.subsets_checked, 1);
    }

    #[test]
    fn monochromatic_fails_with_counterexample() {
        let c = EdgeColoring::monochromatic(Arc::new(complete_graph(5).unwrap()));
        let r = verify_coloring(&c, 3, 1, SubsetMode::Exhaustive, &VerifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.failures.len(), 10);
        assert!(r.failures.iter().all(|f| f.achieved == 0 && f.achieved_exact));
    }

    #[test]
    fn early_exit_keeps_verdict() {
        let c = EdgeColoring::monochromatic(Arc::new(complete_graph(6).unwrap()));
        let o = VerifyOptions { stop_at_first_failure: true, jobs: Some(1), ..VerifyOptions::default() };
        let r = verify_coloring(&c, 3, 1, SubsetMode::Exhaustive, &o).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.subsets_checked, 1);
    }

    #[test]
    fn pairs_always_pass() {
        let c = EdgeColoring::monochromatic(Arc::new(complete_graph(6).unwrap()));
        let r = verify_coloring(&c, 2, 1, SubsetMode::Exhaustive, &VerifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.subsets_checked, 15);
    }

    #[test]
    fn l_above_kappa_fails_with_note() {
        let c = color_k3_l2(6).unwrap();
        let r = verify_coloring(&c, 6, 4, SubsetMode::Exhaustive, &VerifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn parameter_errors() {
        let c = color_k3_l2(6).unwrap();
        let o = VerifyOptions::default();
        assert!(verify_coloring(&c, 3, 0, SubsetMode::Exhaustive, &o).is_err());
        assert!(verify_coloring(&c, 1, 1, SubsetMode::Exhaustive, &o).is_err());
        assert!(verify_coloring(&c, 7, 1, SubsetMode::Exhaustive, &o).is_err());
        let big = color_k3_l2(17).unwrap();
        assert!(matches!(verify_coloring(&big, 3, 1, SubsetMode::Exhaustive, &o), Err(Error::TooLarge(_))));
    }

    #[test]
    fn witnesses_kept_on_request() {
        let c = color_k3_l2(5).unwrap();
        let o = VerifyOptions { keep_witnesses: true, ..VerifyOptions::default() };
        let r = verify_coloring(&c, 3, 2, SubsetMode::Exhaustive, &o).unwrap();
        let w = r.witnesses.as_ref().unwrap();
        assert_eq!(w.len(), 10);
        let json = r.to_json();
        assert!(json.contains("\"verdict\": \"pass\""));
        assert!(json.contains("\"elapsed_ms\""));
    }
}
