use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::{max_disjoint_trees_uncolored, Budget, PackingOutcome};

/// `kappa(S)`: maximum number of internally disjoint `S`-trees in `g`, by
/// exhaustive packing. Intended for graphs with a handful of vertices.
pub fn kappa_exact(g: &Graph, s: &[Vertex], budget: &Budget) -> Result<PackingOutcome> {
    max_disjoint_trees_uncolored(g, s, usize::MAX, budget)
}

/// `kappa_k(K_n) = n - ceil(k/2)`.
pub fn kappa_complete_formula(n: usize, k: usize) -> Result<usize> {
    if k < 2 || k > n {
        return Err(Error::invalid(format!("need 2 <= k <= n, got k={k}, n={n}")));
    }
    Ok(n - k.div_ceil(2))
}

/// Enumerates every labelled tree on `2..=max_n` vertices (Prüfer codes) and
/// every 2-colouring of its edges; `true` iff each properly coloured one has
/// maximum degree at most 2.
pub fn two_color_tree_shape_oracle(max_n: usize) -> Result<bool> {
    if max_n > 8 {
        return Err(Error::invalid(format!("enumeration bound is 8 vertices, got {max_n}")));
    }
    for n in 2..=max_n {
        let mut code = vec![0usize; n.saturating_sub(2)];
        loop {
            let edges = prufer_decode(&code, n);
            for mask in 0u32..1 << (n - 1) {
                let mut seen = vec![[false; 2]; n];
                let mut degree = vec![0usize; n];
                let mut proper = true;
                for (i, &(a, b)) in edges.iter().enumerate() {
                    let c = (mask >> i & 1) as usize;
                    for x in [a, b] {
                        degree[x] += 1;
                        if std::mem::replace(&mut seen[x][c], true) {
                            proper = false;
                        }
                    }
                }
                if proper && degree.iter().any(|&d| d > 2) {
                    return Ok(false);
                }
            }
            if !next_code(&mut code, n) {
                break;
            }
        }
    }
    Ok(true)
}

fn next_code(code: &mut [usize], n: usize) -> bool {
    for digit in code.iter_mut().rev() {
        *digit += 1;
        if *digit < n {
            return true;
        }
        *digit = 0;
    }
    false
}

fn prufer_decode(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, Graph};

    #[test]
    fn formula_examples() {
        assert_eq!(kappa_complete_formula(6, 3).unwrap(), 4);
        assert_eq!(kappa_complete_formula(4, 2).unwrap(), 3);
        for n in 2..12 {
            assert_eq!(kappa_complete_formula(n, n).unwrap(), n / 2);
        }
        assert!(kappa_complete_formula(4, 5).is_err());
        assert!(kappa_complete_formula(4, 1).is_err());
    }

    #[test]
    fn prufer_counts() {
        // Cayley: n^(n-2) labelled trees, all distinct
        for n in 2..=6 {
            let mut code = vec![0usize; n - 2];
            let mut seen = std::collections::HashSet::new();
            loop {
                let mut e: Vec<_> = prufer_decode(&code, n).into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
                e.sort();
                assert_eq!(e.len(), n - 1);
                seen.insert(e);
                if !next_code(&mut code, n) {
                    break;
                }
            }
            assert_eq!(seen.len(), n.pow(n as u32 - 2));
        }
    }

    #[test]
    fn shape_oracle_small() {
        assert!(two_color_tree_shape_oracle(3).unwrap());
        assert!(two_color_tree_shape_oracle(4).unwrap());
        assert!(two_color_tree_shape_oracle(9).is_err());
    }

    #[test]
    fn kappa_examples() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(kappa_exact(&k4, &[0, 1], &Budget::default()).unwrap().exact_count(), Some(3));
        let disconnected = Graph::from_edges(4, [(0, 1)]).unwrap();
        assert_eq!(kappa_exact(&disconnected, &[0, 2], &Budget::default()).unwrap().exact_count(), Some(0));
    }
}
