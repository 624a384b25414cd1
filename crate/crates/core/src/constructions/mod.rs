//! Girth-5 red graphs, the greedy alternating-path algorithm, the canonical
//! path families of the random-colouring arguments, and closed-form bounds.

mod bounds;
mod families;
mod girth5;
mod greedy;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::Result;
use crate::graph::Vertex;
use crate::ham::VertexSequence;
use crate::verifier::{are_internally_disjoint, is_proper_tree, TreeWitness};

pub use bounds::{base_a, base_a_f64, explicit_threshold, probabilistic_threshold, sauer_order_bound};
pub use families::{bipartite_max_cap, bipartite_path_family, canonical_max_cap, canonical_path_family, BipartiteCase};
pub use girth5::{girth5_library, girth5_min_degree_graph, GIRTH5_RETRIES};
pub use greedy::greedy_alternating_paths;

/// Paths through every vertex of `terminal_set`, meant to be internally disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub paths: Vec<VertexSequence>,
    pub terminal_set: Vec<Vertex>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn witnesses(&self) -> Vec<TreeWitness> {
        self.paths.iter().map(|p| TreeWitness::from_path(p, &self.terminal_set)).collect()
    }

    /// Every path is a tree spanning the terminals and the family is
    /// internally disjoint.
    pub fn is_internally_disjoint(&self) -> bool {
        let ws = self.witnesses();
        ws.iter().all(TreeWitness::is_tree) && are_internally_disjoint(&ws).unwrap_or(false)
    }

    /// Number of paths that are proper under `coloring`.
    pub fn count_proper(&self, coloring: &EdgeColoring) -> Result<usize> {
        let mut count = 0;
        for w in self.witnesses() {
            if is_proper_tree(coloring, &w)? {
                count += 1;
            }
        }
        Ok(count)
    }
}
