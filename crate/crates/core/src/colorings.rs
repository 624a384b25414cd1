//! Explicit 2-edge-colourings of `K_n` and the red/blue colouring induced by a subgraph.
//!
//! Colour 1 doubles as "red" and colour 2 as "blue".

use std::collections::HashMap;
use std::sync::Arc;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{complete_graph, Edge, Graph, Vertex};
use crate::ham::{ham_cycle_decomposition, ham_path_decomposition, VertexSequence};

pub const RED: u8 = 1;
pub const BLUE: u8 = 2;

/// Colours along `seq` alternately, starting with `first`.
fn alternate(seq: &VertexSequence, first: u8, into: &mut HashMap<Edge, u8>) {
    let other = 3 - first;
    for (i, e) in seq.edges().into_iter().enumerate() {
        into.insert(e, if i % 2 == 0 { first } else { other });
    }
}

fn finish(n: usize, assigned: HashMap<Edge, u8>, rest: Option<u8>) -> Result<EdgeColoring> {
    let g = Arc::new(complete_graph(n)?);
    let colors = g
        .edges()
        .iter()
        .map(|e| assigned.get(e).copied().or(rest).expect("every edge coloured"))
        .collect();
    EdgeColoring::new(g, 2, colors)
}

/// Every 3-subset gets two internally disjoint proper trees.
///
/// The Hamiltonian cycle `0, 1, .., 2p-1` is coloured alternately starting
/// with colour 2 and all chords get colour 1. For odd `n` the last vertex
/// joins even vertices in colour 1 and odd vertices in colour 2.
pub fn color_k3_l2(n: usize) -> Result<EdgeColoring> {
    if n < 4 {
        return Err(Error::invalid(format!("k3l2 colouring needs n >= 4, got {n}")));
    }
    let even = n - n % 2;
    let mut assigned = HashMap::new();
    let cycle = VertexSequence::cycle((0..even as Vertex).collect());
    alternate(&cycle, BLUE, &mut assigned);
    if n % 2 == 1 {
        let extra = (n - 1) as Vertex;
        for v in 0..extra {
            assigned.insert(Edge::new(extra, v), if v % 2 == 0 { RED } else { BLUE });
        }
    }
    finish(n, assigned, Some(RED))
}

/// Every `(n-1)`-subset gets two internally disjoint proper trees.
///
/// Even `n`: each Walecki path is coloured 1, 2, 1, ... Odd `n`: each Walecki
/// cycle is listed from vertex 0 and coloured 1, 2, 1, ... along its odd
/// length, so both cycle edges at vertex 0 end up with colour 1.
pub fn color_kn1_l2(n: usize) -> Result<EdgeColoring> {
    if n < 4 {
        return Err(Error::invalid(format!("kn1l2 colouring needs n >= 4, got {n}")));
    }
    let mut assigned = HashMap::new();
    if n % 2 == 0 {
        for p in ham_path_decomposition(n)? {
            alternate(&p, RED, &mut assigned);
        }
    } else {
        for c in ham_cycle_decomposition(n)? {
            let c = c.rotated_to(0)?;
            alternate(&c, RED, &mut assigned);
            let first = Edge::new(c.vertices[0], c.vertices[1]);
            let last = Edge::new(c.vertices[0], *c.vertices.last().unwrap());
            assert_eq!(assigned[&first], assigned[&last], "edges at vertex 0 must match in {c}");
        }
    }
    finish(n, assigned, None)
}

/// Spanning colouring plus the `floor(n/2)` properly coloured Hamiltonian
/// paths it was built from.
///
/// For odd `n` the path inside each cycle drops the cycle's closing edge,
/// which then gets colour 1 like any other leftover.
pub fn color_spanning_with_paths(n: usize) -> Result<(EdgeColoring, Vec<VertexSequence>)> {
    if n < 2 {
        return Err(Error::invalid(format!("spanning colouring needs n >= 2, got {n}")));
    }
    let paths: Vec<VertexSequence> = if n % 2 == 0 {
        ham_path_decomposition(n)?
    } else {
        ham_cycle_decomposition(n)?
            .into_iter()
            .map(|c| VertexSequence::path(c.vertices))
            .collect()
    };
    let mut assigned = HashMap::new();
    for p in &paths {
        alternate(p, RED, &mut assigned);
    }
    Ok((finish(n, assigned, Some(RED))?, paths))
}

/// `floor(n/2)` edge-disjoint properly coloured spanning paths.
pub fn color_spanning(n: usize) -> Result<EdgeColoring> {
    color_spanning_with_paths(n).map(|(c, _)| c)
}

/// Colour 1 on the edges of `h`, colour 2 on its complement, inside `K_n`.
pub fn red_blue_from_subgraph(h: &Graph) -> Result<EdgeColoring> {
    let g = Arc::new(complete_graph(h.n())?);
    EdgeColoring::from_fn(g, 2, |u, v| if h.has_edge(u, v) { RED } else { BLUE })
}
