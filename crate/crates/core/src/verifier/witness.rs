use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Edge, Vertex};
use crate::ham::VertexSequence;

/// A candidate `S`-tree: an edge set plus the terminal set it must contain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeWitness {
    pub edges: Vec<Edge>,
    pub terminals: Vec<Vertex>,
}

impl TreeWitness {
    pub fn new(mut edges: Vec<Edge>, terminals: &[Vertex]) -> Self {
        edges.sort_unstable();
        let mut terminals = terminals.to_vec();
        terminals.sort_unstable();
        terminals.dedup();
        TreeWitness { edges, terminals }
    }

    pub fn from_path(path: &VertexSequence, terminals: &[Vertex]) -> Self {
        Self::new(path.edges(), terminals)
    }

    /// Vertices touched by the edges, plus the terminals.
    pub fn vertices(&self) -> BTreeSet<Vertex> {
        let mut out: BTreeSet<Vertex> = self.terminals.iter().copied().collect();
        for e in &self.edges {
            out.insert(e.u());
            out.insert(e.v());
        }
        out
    }

    /// Acyclic, connected and spanning every terminal.
    pub fn is_tree(&self) -> bool {
        let verts = self.vertices();
        if self.edges.len() + 1 != verts.len() {
            return false;
        }
        let index: HashMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let a = find(&mut parent, index[&e.u()]);
            let b = find(&mut parent, index[&e.v()]);
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        // |E| = |V| - 1 and acyclic implies connected
        true
    }

    pub fn max_degree(&self) -> usize {
        let mut deg: HashMap<Vertex, usize> = HashMap::new();
        for e in &self.edges {
            *deg.entry(e.u()).or_default() += 1;
            *deg.entry(e.v()).or_default() += 1;
        }
        deg.values().copied().max().unwrap_or(0)
    }
}

/// `true` iff `w` is a tree containing its terminals in which adjacent edges
/// have distinct colours. Errors if an edge of `w` is not in the graph.
pub fn is_proper_tree(coloring: &EdgeColoring, w: &TreeWitness) -> Result<bool> {
    let g = coloring.graph();
    let mut at_vertex: HashMap<Vertex, Vec<u8>> = HashMap::new();
    for e in &w.edges {
        let id = g.edge_id(e.u(), e.v()).ok_or(Error::EdgeAbsent(e.u(), e.v()))?;
        let c = coloring.color_of(id);
        for x in [e.u(), e.v()] {
            let seen = at_vertex.entry(x).or_default();
            if seen.contains(&c) {
                return Ok(false);
            }
            seen.push(c);
        }
    }
    Ok(w.is_tree())
}

/// Pairwise edge-disjoint, and any two trees share exactly the terminal set.
pub fn are_internally_disjoint(ws: &[TreeWitness]) -> Result<bool> {
    let Some(first) = ws.first() else {
        return Ok(true);
    };
    if ws.iter().any(|w| w.terminals != first.terminals) {
        return Err(Error::TerminalMismatch);
    }
    let terminals: BTreeSet<Vertex> = first.terminals.iter().copied().collect();
    let vertex_sets: Vec<BTreeSet<Vertex>> = ws.iter().map(TreeWitness::vertices).collect();
    let edge_sets: Vec<HashSet<Edge>> = ws.iter().map(|w| w.edges.iter().copied().collect()).collect();
    for i in 0..ws.len() {
        for j in i + 1..ws.len() {
            if !edge_sets[i].is_disjoint(&edge_sets[j]) {
                return Ok(false);
            }
            let shared: BTreeSet<Vertex> = vertex_sets[i].intersection(&vertex_sets[j]).copied().collect();
            if shared != terminals {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;
    use std::sync::Arc;

    fn path(vs: &[Vertex], s: &[Vertex]) -> TreeWitness {
        TreeWitness::from_path(&VertexSequence::path(vs.to_vec()), s)
    }

    #[test]
    fn proper_tree_examples() {
        let g = Arc::new(complete_graph(5).unwrap());
        let mono = EdgeColoring::monochromatic(g.clone());
        assert!(is_proper_tree(&mono, &path(&[0, 1], &[0, 1])).unwrap());
        assert!(!is_proper_tree(&mono, &path(&[0, 1, 2], &[0, 2])).unwrap());

        // 0-3-1-4-2 coloured 1,2,1,2
        let colored = EdgeColoring::from_fn(g, 2, |u, v| match (u, v) {
            (0, 3) | (1, 4) => 1,
            (1, 3) | (2, 4) => 2,
            _ => 1,
        })
        .unwrap();
        assert!(is_proper_tree(&colored, &path(&[0, 3, 1, 4, 2], &[0, 1, 2])).unwrap());
    }

    #[test]
    fn proper_tree_rejects_non_trees() {
        let g = Arc::new(complete_graph(4).unwrap());
        let c = EdgeColoring::from_fn(g, 3, |u, v| ((u + v) % 3 + 1) as u8).unwrap();
        // misses terminal 3
        assert!(!is_proper_tree(&c, &path(&[0, 1], &[0, 1, 3])).unwrap());
        // disconnected
        let w = TreeWitness::new(vec![Edge::new(0, 1), Edge::new(2, 3)], &[0, 3]);
        assert!(!is_proper_tree(&c, &w).unwrap());
    }

    #[test]
    fn absent_edge_is_error() {
        let g = Arc::new(crate::graph::path_graph(3).unwrap());
        let c = EdgeColoring::monochromatic(g);
        assert!(matches!(is_proper_tree(&c, &path(&[0, 2], &[0, 2])), Err(Error::EdgeAbsent(0, 2))));
    }

    #[test]
    fn disjointness_examples() {
        let s = [0, 1, 2];
        assert!(are_internally_disjoint(&[path(&[0, 3, 1, 4, 2], &s)]).unwrap());
        assert!(are_internally_disjoint(&[path(&[0, 3, 1, 4, 2], &s), path(&[0, 5, 1, 6, 2], &s)]).unwrap());
        // share internal vertex 3
        assert!(!are_internally_disjoint(&[path(&[0, 3, 1, 4, 2], &s), path(&[0, 5, 1, 3, 2], &s)]).unwrap());
        // share edge 0-1 but no extra vertex
        assert!(!are_internally_disjoint(&[path(&[0, 1, 2], &s), path(&[2, 0, 1], &s)]).unwrap());
        assert!(matches!(
            are_internally_disjoint(&[path(&[0, 1], &[0, 1]), path(&[0, 2], &[0, 2])]),
            Err(Error::TerminalMismatch)
        ));
    }
}
