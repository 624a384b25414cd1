use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::ham::VertexSequence;

use super::PathFamily;

fn sorted_terminals(n: usize, s: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut t = s.to_vec();
    t.sort_unstable();
    t.dedup();
    if t.len() != s.len() {
        return Err(Error::invalid("S has repeated vertices"));
    }
    if t.len() < 2 {
        return Err(Error::invalid("S needs at least two vertices"));
    }
    if let Some(&v) = t.iter().find(|&&v| v as usize >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(t)
}

/// `floor((n - k)/(k - 1))`.
pub fn canonical_max_cap(n: usize, k: usize) -> usize {
    if k < 2 || n < k {
        0
    } else {
        (n - k) / (k - 1)
    }
}

/// `cap` paths `v_1 u_1 v_2 ... u_{k-1} v_k` through `S` (ascending) in `K_n`;
/// path `i` takes the `i`-th block of `k - 1` non-`S` vertices, ascending.
pub fn canonical_path_family(n: usize, s: &[Vertex], cap: usize) -> Result<PathFamily> {
    let terminals = sorted_terminals(n, s)?;
    let k = terminals.len();
    let max = canonical_max_cap(n, k);
    if cap > max {
        return Err(Error::CapTooLarge { cap, max });
    }
    let free: Vec<Vertex> = (0..n as Vertex).filter(|v| terminals.binary_search(v).is_err()).collect();
    let paths = free
        .chunks_exact(k - 1)
        .take(cap)
        .map(|block| {
            let mut p = Vec::with_capacity(2 * k - 1);
            for (j, &v) in terminals.iter().enumerate() {
                p.push(v);
                if j < k - 1 {
                    p.push(block[j]);
                }
            }
            VertexSequence::path(p)
        })
        .collect();
    Ok(PathFamily { paths, terminal_set: terminals })
}

/// Where `S` sits in the bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BipartiteCase {
    /// All of `S` in one class; paths of length `2k - 2`.
    OneClass,
    /// `r` vertices of `S` in the first class, the rest in the second; paths
    /// of length `2k - 1`.
    Split { r: usize },
}

fn split_terminals(g: &Graph, s: &[Vertex]) -> Result<(Vec<Vertex>, Vec<Vertex>, usize, usize)> {
    let (x, y) = g.bipartition().ok_or_else(|| Error::invalid("graph has no recorded bipartition"))?;
    let terminals = sorted_terminals(g.n(), s)?;
    let (sx, sy): (Vec<Vertex>, Vec<Vertex>) = terminals.iter().partition(|&&v| (v as usize) < x);
    Ok((sx, sy, x, y))
}

/// The case for `S` and the largest family the construction yields.
pub fn bipartite_max_cap(g: &Graph, s: &[Vertex]) -> Result<(BipartiteCase, usize)> {
    let (sx, sy, x, y) = split_terminals(g, s)?;
    let k = sx.len() + sy.len();
    let r = sx.len();
    if r == 0 || r == k {
        let other = if r == 0 { x } else { y };
        Ok((BipartiteCase::OneClass, other / (k - 1)))
    } else {
        Ok((BipartiteCase::Split { r }, ((x - r) / (k - r)).min((y - (k - r)) / r)))
    }
}

/// `cap` internally disjoint `S`-paths in a complete bipartite graph.
///
/// With `S` inside one class the path is `s_1 y_1 s_2 ... y_{k-1} s_k` with
/// the `y_j` from the other class. Otherwise, with `s_1..s_r` in the first
/// class `X` and `s_{r+1}..s_k` in `Y`, it is
/// `s_1 y_1 ... s_r y_r x_1 s_{r+1} x_2 ... s_{k-1} x_{k-r} s_k`.
/// Every path is checked edge by edge against `g`.
pub fn bipartite_path_family(g: &Graph, s: &[Vertex], cap: usize) -> Result<PathFamily> {
    let (case, max) = bipartite_max_cap(g, s)?;
    if cap > max {
        return Err(Error::CapTooLarge { cap, max });
    }
    let (sx, sy, x, _) = split_terminals(g, s)?;
    let k = sx.len() + sy.len();
    let is_terminal = |v: &Vertex| sx.contains(v) || sy.contains(v);
    let free_x: Vec<Vertex> = (0..x as Vertex).filter(|v| !is_terminal(v)).collect();
    let free_y: Vec<Vertex> = (x as Vertex..g.n() as Vertex).filter(|v| !is_terminal(v)).collect();

    let mut paths = Vec::with_capacity(cap);
    for i in 0..cap {
        let mut p = Vec::with_capacity(2 * k);
        match case {
            BipartiteCase::OneClass => {
                let (ss, free) = if sy.is_empty() { (&sx, &free_y) } else { (&sy, &free_x) };
                let block = &free[i * (k - 1)..(i + 1) * (k - 1)];
                for (j, &v) in ss.iter().enumerate() {
                    p.push(v);
                    if j < k - 1 {
                        p.push(block[j]);
                    }
                }
            }
            BipartiteCase::Split { r } => {
                let ys = &free_y[i * r..(i + 1) * r];
                let xs = &free_x[i * (k - r)..(i + 1) * (k - r)];
                for j in 0..r {
                    p.push(sx[j]);
                    p.push(ys[j]);
                }
                p.push(xs[0]);
                for j in 0..k - r {
                    p.push(sy[j]);
                    if j + 1 < k - r {
                        p.push(xs[j + 1]);
                    }
                }
            }
        }
        if let Some(w) = p.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::invalid(format!(
                "path pattern {case:?} with k={k} is not legal: {}-{} is not an edge",
                w[0], w[1]
            )));
        }
        paths.push(VertexSequence::path(p));
    }
    let mut terminal_set: Vec<Vertex> = sx.into_iter().chain(sy).collect();
    terminal_set.sort_unstable();
    Ok(PathFamily { paths, terminal_set })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_bipartite;

    #[test]
    fn canonical_examples() {
        let f = canonical_path_family(7, &[0, 1, 2], 2).unwrap();
        assert_eq!(f.paths[0].vertices, vec![0, 3, 1, 4, 2]);
        assert_eq!(f.paths[1].vertices, vec![0, 5, 1, 6, 2]);
        assert!(f.is_internally_disjoint());
        assert_eq!(canonical_max_cap(10, 3), 3);
        assert!(matches!(canonical_path_family(10, &[0, 1, 2], 4), Err(Error::CapTooLarge { cap: 4, max: 3 })));
        let f = canonical_path_family(5, &[0, 1], 3).unwrap();
        assert_eq!(f.paths.iter().map(|p| p.vertices.clone()).collect::<Vec<_>>(), vec![vec![0, 2, 1], vec![0, 3, 1], vec![0, 4, 1]]);
    }

    #[test]
    fn bipartite_one_class() {
        let g = complete_bipartite(3, 3).unwrap();
        let f = bipartite_path_family(&g, &[0, 1, 2], 1).unwrap();
        assert_eq!(f.paths[0].vertices, vec![0, 3, 1, 4, 2]);
        let f = bipartite_path_family(&g, &[3, 5], 3).unwrap();
        assert_eq!(f.paths[2].vertices, vec![3, 2, 5]);
        assert!(f.is_internally_disjoint());
    }

    #[test]
    fn bipartite_split() {
        let g = complete_bipartite(5, 5).unwrap();
        let f = bipartite_path_family(&g, &[0, 5], 1).unwrap();
        assert_eq!(f.paths[0].vertices, vec![0, 6, 1, 5]);
        assert_eq!(f.paths[0].edges().len(), 3);
        let g = complete_bipartite(9, 9).unwrap();
        assert_eq!(bipartite_max_cap(&g, &[0, 9, 10]).unwrap(), (BipartiteCase::Split { r: 1 }, 4));
        let f = bipartite_path_family(&g, &[0, 9, 10], 4).unwrap();
        assert!(f.is_internally_disjoint());
        assert!(f.paths.iter().all(|p| p.edges().len() == 5));
        assert!(bipartite_path_family(&g, &[0, 9, 10], 5).is_err());
    }

    #[test]
    fn needs_bipartition() {
        let g = crate::graph::complete_graph(6).unwrap();
        assert!(bipartite_path_family(&g, &[0, 1], 1).is_err());
    }
}
