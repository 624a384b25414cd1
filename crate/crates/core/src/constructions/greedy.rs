use crate::coloring::EdgeColoring;
use crate::colorings::RED;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::ham::VertexSequence;

use super::PathFamily;

/// Builds `l` internally disjoint paths `v_1 w_1 v_2 ... w_{k-1} v_k` where
/// `v_1 < ... < v_k` is `S`, each `v_j w_j` is red and each `w_j v_{j+1}` blue.
///
/// `coloring` must be a 2-colouring of `K_n` whose red graph has girth at
/// least 5 and minimum degree at least `l(k-1) + k`; under those conditions
/// every extension step has a candidate. Each `w_j` is the smallest unused red
/// neighbour of `v_j` outside `S` that is not a red neighbour of `v_{j+1}`.
pub fn greedy_alternating_paths(coloring: &EdgeColoring, s: &[Vertex], l: usize) -> Result<PathFamily> {
    let g = coloring.graph();
    if !g.is_complete() || coloring.num_colors() != 2 {
        return Err(Error::invalid("greedy paths need a 2-colouring of a complete graph"));
    }
    let mut terminals = s.to_vec();
    terminals.sort_unstable();
    terminals.dedup();
    if terminals.len() != s.len() || terminals.len() < 3 {
        return Err(Error::invalid("S must be at least 3 distinct vertices"));
    }
    if let Some(&v) = terminals.iter().find(|&&v| v as usize >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let k = terminals.len();
    if l == 0 {
        return Ok(PathFamily { paths: Vec::new(), terminal_set: terminals });
    }

    let red = Graph::from_edges(
        g.n(),
        g.edges().iter().enumerate().filter(|&(id, _)| coloring.colors()[id] == RED).map(|(_, e)| (e.u(), e.v())),
    )?;
    let need = l * (k - 1) + k;
    if red.min_degree() < need {
        return Err(Error::invalid(format!("red minimum degree {} is below l(k-1)+k = {need}", red.min_degree())));
    }
    if !red.girth().at_least(5) {
        return Err(Error::invalid(format!("red graph has girth {}, need at least 5", red.girth())));
    }

    let mut blocked = vec![false; g.n()];
    for &v in &terminals {
        blocked[v as usize] = true;
    }
    let mut paths = Vec::with_capacity(l);
    for t in 0..l {
        let mut path = vec![terminals[0]];
        for pair in terminals.windows(2) {
            let (v, next) = (pair[0], pair[1]);
            let mut discarded = 0;
            let mut chosen = None;
            for &(w, _) in red.neighbors(v) {
                if blocked[w as usize] {
                    continue;
                }
                if red.has_edge(w, next) {
                    discarded += 1;
                    continue;
                }
                chosen = Some(w);
                break;
            }
            debug_assert!(discarded <= 1, "girth >= 5 allows one common red neighbour");
            let w = chosen.ok_or_else(|| Error::ExtensionFailed {
                path: t,
                at: v,
                reason: format!("no unused red neighbour of {v} has a blue edge to {next}"),
            })?;
            blocked[w as usize] = true;
            path.push(w);
            path.push(next);
        }
        paths.push(VertexSequence::path(path));
    }
    Ok(PathFamily { paths, terminal_set: terminals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::red_blue_from_subgraph;
    use crate::constructions::girth5_library;
    use crate::verifier::is_proper_tree;

    #[test]
    fn one_path_on_petersen_like_red_graph() {
        let red = girth5_library(5).unwrap();
        let c = red_blue_from_subgraph(&red).unwrap();
        let fam = greedy_alternating_paths(&c, &[0, 7, 19], 1).unwrap();
        assert_eq!(fam.len(), 1);
        let p = &fam.paths[0].vertices;
        assert_eq!(p.len(), 5);
        assert_eq!([p[0], p[2], p[4]], [0, 7, 19]);
        for (i, e) in fam.paths[0].edges().iter().enumerate() {
            let want = if i % 2 == 0 { RED } else { crate::colorings::BLUE };
            assert_eq!(c.color(e.u(), e.v()), Some(want));
        }
        assert!(fam.witnesses().iter().all(|w| is_proper_tree(&c, w).unwrap()));
    }

    #[test]
    fn zero_paths() {
        let c = red_blue_from_subgraph(&girth5_library(5).unwrap()).unwrap();
        assert!(greedy_alternating_paths(&c, &[1, 2, 3], 0).unwrap().is_empty());
    }

    #[test]
    fn preconditions_checked() {
        let c = red_blue_from_subgraph(&girth5_library(3).unwrap()).unwrap();
        // degree 3 < 1*2 + 3
        assert!(greedy_alternating_paths(&c, &[0, 1, 2], 1).is_err());
        let c = red_blue_from_subgraph(&girth5_library(5).unwrap()).unwrap();
        assert!(greedy_alternating_paths(&c, &[0, 1], 1).is_err());
        assert!(greedy_alternating_paths(&c, &[0, 1, 1], 1).is_err());
        // 5 < 2*2 + 3
        assert!(greedy_alternating_paths(&c, &[0, 1, 2], 2).is_err());
    }
}
