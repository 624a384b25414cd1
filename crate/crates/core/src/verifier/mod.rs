//! Ground truth: proper-tree and disjointness predicates, exact packing
//! search, whole-colouring verification and connectivity oracles.

mod oracle;
mod paths;
mod report;
mod search;
mod trees;
mod witness;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use oracle::{kappa_complete_formula, kappa_exact, two_color_tree_shape_oracle};
pub use report::{verify_coloring, Failure, SubsetMode, Verdict, VerificationReport, VerifyOptions, WitnessEntry};
pub use search::SearchExhausted;
pub use witness::{are_internally_disjoint, is_proper_tree, TreeWitness};

use paths::PathSearch;
use search::Limits;
use trees::TreeSearch;

/// Per-subset search limits. Exhaustion is reported, never read as "no".
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    /// Search nodes allowed for each decision query.
    pub node_limit: u64,
    /// Wall-clock ceiling per subset.
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { node_limit: 10_000_000, time_limit: None }
    }
}

/// Result of a maximum-packing query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackingOutcome {
    /// The maximum (capped at the target) with a witness family of that size.
    Exact { count: usize, family: Vec<TreeWitness> },
    /// The budget ran out; `family` certifies only the lower bound.
    Exhausted { lower_bound: usize, family: Vec<TreeWitness> },
}

impl PackingOutcome {
    pub fn exact_count(&self) -> Option<usize> {
        match self {
            PackingOutcome::Exact { count, .. } => Some(*count),
            PackingOutcome::Exhausted { .. } => None,
        }
    }

    pub fn family(&self) -> &[TreeWitness] {
        match self {
            PackingOutcome::Exact { family, .. } | PackingOutcome::Exhausted { family, .. } => family,
        }
    }

    pub fn lower_bound(&self) -> usize {
        match self {
            PackingOutcome::Exact { count, .. } => *count,
            PackingOutcome::Exhausted { lower_bound, .. } => *lower_bound,
        }
    }
}

pub(crate) fn normalize_terminals(g: &Graph, s: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut t = s.to_vec();
    t.sort_unstable();
    t.dedup();
    if t.len() < 2 {
        return Err(Error::invalid("terminal set needs at least two distinct vertices"));
    }
    if let Some(&v) = t.iter().find(|&&v| v as usize >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(t)
}

/// Abstracts the two engines for [`maximize`].
trait Decider {
    fn upper_bound(&self) -> usize;
    fn decide(&mut self, m: usize, limits: Limits) -> std::result::Result<Option<Vec<TreeWitness>>, SearchExhausted>;
}

struct PathDecider<'a> {
    search: PathSearch<'a>,
    terminals: Vec<Vertex>,
}

impl Decider for PathDecider<'_> {
    fn upper_bound(&self) -> usize {
        self.search.trivial_upper_bound()
    }

    fn decide(&mut self, m: usize, limits: Limits) -> std::result::Result<Option<Vec<TreeWitness>>, SearchExhausted> {
        let found = self.search.decide(m, limits)?;
        Ok(found.map(|ps| ps.iter().map(|p| TreeWitness::from_path(p, &self.terminals)).collect()))
    }
}

struct TreeDecider<'a> {
    search: TreeSearch<'a>,
    budget: Budget,
    enumerated: Option<std::result::Result<usize, SearchExhausted>>,
}

impl Decider for TreeDecider<'_> {
    fn upper_bound(&self) -> usize {
        self.search.trivial_upper_bound()
    }

    fn decide(&mut self, m: usize, limits: Limits) -> std::result::Result<Option<Vec<TreeWitness>>, SearchExhausted> {
        if self.enumerated.is_none() {
            let l = Limits::new(self.budget.node_limit, self.budget.time_limit);
            self.enumerated = Some(self.search.enumerate(l));
        }
        self.enumerated.unwrap()?;
        self.search.decide(m, limits)
    }
}

/// Exact maximum `<= target`, by one query at the target and, if that fails,
/// upward queries from 1 (families are closed under taking subsets).
fn maximize<D: Decider>(d: &mut D, target: usize, budget: &Budget) -> PackingOutcome {
    let limits = || Limits::new(budget.node_limit, budget.time_limit);
    let capped = target.min(d.upper_bound());
    if capped == 0 {
        return PackingOutcome::Exact { count: 0, family: Vec::new() };
    }
    let top = d.decide(capped, limits());
    if let Ok(Some(family)) = top {
        return PackingOutcome::Exact { count: capped, family };
    }
    let top_exhausted = top.is_err();
    let mut best = Vec::new();
    for m in 1..capped {
        match d.decide(m, limits()) {
            Ok(Some(f)) => best = f,
            Ok(None) => return PackingOutcome::Exact { count: m - 1, family: best },
            Err(SearchExhausted) => {
                return PackingOutcome::Exhausted { lower_bound: best.len(), family: best };
            }
        }
    }
    if top_exhausted {
        PackingOutcome::Exhausted { lower_bound: best.len(), family: best }
    } else {
        PackingOutcome::Exact { count: capped - 1, family: best }
    }
}

/// Decision query only: does a family of `m` proper `S`-trees exist?
pub fn has_disjoint_proper_trees(
    coloring: &EdgeColoring,
    s: &[Vertex],
    m: usize,
    budget: &Budget,
) -> Result<std::result::Result<Option<Vec<TreeWitness>>, SearchExhausted>> {
    let terminals = normalize_terminals(coloring.graph(), s)?;
    let limits = Limits::new(budget.node_limit, budget.time_limit);
    if m == 0 {
        return Ok(Ok(Some(Vec::new())));
    }
    if coloring.used_colors() <= 2 {
        let mut d = PathDecider { search: PathSearch::new(coloring, &terminals), terminals };
        if m > d.upper_bound() {
            return Ok(Ok(None));
        }
        Ok(d.decide(m, limits))
    } else {
        let mut d = TreeDecider { search: TreeSearch::new(coloring.graph(), Some(coloring), &terminals)?, budget: *budget, enumerated: None };
        if m > d.upper_bound() {
            return Ok(Ok(None));
        }
        Ok(d.decide(m, limits))
    }
}

/// Maximum number (capped at `target`) of internally disjoint proper `S`-trees.
///
/// Colourings using at most two colours go through the path search; others
/// through the general tree enumeration.
pub fn max_disjoint_proper_trees(coloring: &EdgeColoring, s: &[Vertex], target: usize, budget: &Budget) -> Result<PackingOutcome> {
    if coloring.used_colors() <= 2 {
        max_disjoint_proper_paths(coloring, s, target, budget)
    } else {
        max_disjoint_proper_trees_general(coloring, s, target, budget)
    }
}

/// Path-only search. Exact for colourings with at most two colours in use.
pub fn max_disjoint_proper_paths(coloring: &EdgeColoring, s: &[Vertex], target: usize, budget: &Budget) -> Result<PackingOutcome> {
    let terminals = normalize_terminals(coloring.graph(), s)?;
    if coloring.used_colors() > 2 {
        return Err(Error::invalid("path search is only exact for colourings with at most two colours"));
    }
    let mut d = PathDecider { search: PathSearch::new(coloring, &terminals), terminals };
    Ok(maximize(&mut d, target, budget))
}

/// General proper-tree search, independent of the path shortcut.
pub fn max_disjoint_proper_trees_general(coloring: &EdgeColoring, s: &[Vertex], target: usize, budget: &Budget) -> Result<PackingOutcome> {
    let terminals = normalize_terminals(coloring.graph(), s)?;
    let search = TreeSearch::new(coloring.graph(), Some(coloring), &terminals)?;
    let mut d = TreeDecider { search, budget: *budget, enumerated: None };
    Ok(maximize(&mut d, target, budget))
}

/// General tree search restricted to paths (maximum degree 2).
pub fn max_disjoint_proper_paths_by_tree_search(coloring: &EdgeColoring, s: &[Vertex], target: usize, budget: &Budget) -> Result<PackingOutcome> {
    let terminals = normalize_terminals(coloring.graph(), s)?;
    let search = TreeSearch::new(coloring.graph(), Some(coloring), &terminals)?.paths_only();
    let mut d = TreeDecider { search, budget: *budget, enumerated: None };
    Ok(maximize(&mut d, target, budget))
}

pub(crate) fn max_disjoint_trees_uncolored(g: &Graph, s: &[Vertex], target: usize, budget: &Budget) -> Result<PackingOutcome> {
    let terminals = normalize_terminals(g, s)?;
    let search = TreeSearch::new(g, None, &terminals)?;
    let mut d = TreeDecider { search, budget: *budget, enumerated: None };
    Ok(maximize(&mut d, target, budget))
}
