//! Walecki decompositions of `K_n` into Hamiltonian paths (even `n`) or
//! Hamiltonian cycles (odd `n`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// Ordered list of distinct vertices, read as a cycle when `closed`.
///
/// For a cycle the stored order is its orientation: [`VertexSequence::segment`]
/// walks forward through the list and wraps at the end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSequence {
    pub vertices: Vec<Vertex>,
    pub closed: bool,
}

impl VertexSequence {
    pub fn path(vertices: Vec<Vertex>) -> Self {
        VertexSequence { vertices, closed: false }
    }

    pub fn cycle(vertices: Vec<Vertex>) -> Self {
        VertexSequence { vertices, closed: true }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive pairs, plus last-first when closed (and long enough to close).
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.vertices.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
        if self.closed && self.vertices.len() >= 3 {
            out.push(Edge::new(*self.vertices.last().unwrap(), self.vertices[0]));
        }
        out
    }

    pub fn ends(&self) -> Option<(Vertex, Vertex)> {
        Some((*self.vertices.first()?, *self.vertices.last()?))
    }

    /// Distinct vertices whose consecutive pairs are all edges of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in &self.vertices {
            if v as usize >= g.n() || std::mem::replace(&mut seen[v as usize], true) {
                return false;
            }
        }
        self.edges().iter().all(|e| g.has_edge(e.u(), e.v()))
    }

    pub fn is_hamiltonian_in(&self, g: &Graph) -> bool {
        self.len() == g.n() && self.is_valid_in(g)
    }

    /// Rotates a cycle so that `v` comes first. Orientation is kept.
    pub fn rotated_to(&self, v: Vertex) -> Result<VertexSequence> {
        let pos = self.position(v)?;
        let mut vertices = self.vertices[pos..].to_vec();
        vertices.extend_from_slice(&self.vertices[..pos]);
        Ok(VertexSequence { vertices, closed: self.closed })
    }

    fn position(&self, v: Vertex) -> Result<usize> {
        self.vertices.iter().position(|&x| x == v).ok_or(Error::NotOnCycle(v))
    }

    /// Open sub-walk from `s` to `t` following the stored orientation.
    pub fn segment(&self, s: Vertex, t: Vertex) -> Result<VertexSequence> {
        let i = self.position(s)?;
        let j = self.position(t)?;
        let len = self.vertices.len();
        let mut out = Vec::new();
        let mut k = i;
        loop {
            out.push(self.vertices[k]);
            if k == j {
                break;
            }
            k += 1;
            if k == len {
                if !self.closed {
                    return Err(Error::invalid(format!("{t} is before {s} on an open path")));
                }
                k = 0;
            }
        }
        Ok(VertexSequence::path(out))
    }
}

impl fmt::Display for VertexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.closed { "C" } else { "P" })?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Zig-zag path of `K_{2m}` starting at `start`: offsets `0, 1, -1, 2, -2, .., m`.
fn zigzag(start: usize, half: usize) -> Vec<Vertex> {
    let n = 2 * half;
    let mut out = Vec::with_capacity(n);
    out.push(start as Vertex);
    for j in 1..half {
        out.push(((start + j) % n) as Vertex);
        out.push(((start + n - j) % n) as Vertex);
    }
    out.push(((start + half) % n) as Vertex);
    out
}

/// `n/2` Hamiltonian paths partitioning `E(K_n)`; path `i` runs from `i` to `i + n/2`.
pub fn ham_path_decomposition(n: usize) -> Result<Vec<VertexSequence>> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::invalid(format!("path decomposition needs even n >= 2, got {n}")));
    }
    let half = n / 2;
    let paths: Vec<_> = (0..half).map(|i| VertexSequence::path(zigzag(i, half))).collect();

    let mut end_count = vec![0u8; n];
    for p in &paths {
        let (a, b) = p.ends().expect("non-empty");
        end_count[a as usize] += 1;
        end_count[b as usize] += 1;
    }
    assert!(end_count.iter().all(|&c| c == 1), "every vertex must end exactly one path");
    Ok(paths)
}

/// `(n-1)/2` Hamiltonian cycles partitioning `E(K_n)`, each listed from vertex 0.
///
/// Cycle `i` is the hub `n-1` followed by the zig-zag path `i` of `K_{n-1}`.
pub fn ham_cycle_decomposition(n: usize) -> Result<Vec<VertexSequence>> {
    if n < 3 || n % 2 != 1 {
        return Err(Error::invalid(format!("cycle decomposition needs odd n >= 3, got {n}")));
    }
    let half = (n - 1) / 2;
    let hub = (n - 1) as Vertex;
    (0..half)
        .map(|i| {
            let mut vertices = vec![hub];
            vertices.extend(zigzag(i, half));
            VertexSequence::cycle(vertices).rotated_to(0)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;
    use std::collections::HashSet;

    fn assert_partition(n: usize, seqs: &[VertexSequence]) {
        let g = complete_graph(n).unwrap();
        let mut seen = HashSet::new();
        for s in seqs {
            assert!(s.is_hamiltonian_in(&g), "{s} not Hamiltonian in K_{n}");
            for e in s.edges() {
                assert!(seen.insert(e), "edge {e} repeated");
            }
        }
        assert_eq!(seen.len(), g.m());
    }

    #[test]
    fn even_examples() {
        let d = ham_path_decomposition(2).unwrap();
        assert_eq!(d, vec![VertexSequence::path(vec![0, 1])]);

        let d = ham_path_decomposition(4).unwrap();
        assert_eq!(d[0].vertices, vec![0, 1, 3, 2]);
        assert_eq!(d[1].vertices, vec![1, 2, 0, 3]);
        assert_partition(4, &d);

        let d = ham_path_decomposition(10).unwrap();
        assert_eq!(d.len(), 5);
        assert_partition(10, &d);
        assert!(ham_path_decomposition(7).is_err());
        assert!(ham_path_decomposition(0).is_err());
    }

    #[test]
    fn odd_examples() {
        let d = ham_cycle_decomposition(3).unwrap();
        assert_eq!(d, vec![VertexSequence::cycle(vec![0, 1, 2])]);

        let d = ham_cycle_decomposition(5).unwrap();
        assert_eq!(d.len(), 2);
        assert_partition(5, &d);

        let d = ham_cycle_decomposition(9).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.iter().all(|c| c.len() == 9 && c.vertices[0] == 0));
        assert_partition(9, &d);
        assert!(ham_cycle_decomposition(8).is_err());
        assert!(ham_cycle_decomposition(1).is_err());
    }

    #[test]
    fn segment_examples() {
        let c = VertexSequence::cycle(vec![0, 1, 2, 3]);
        assert_eq!(c.segment(0, 2).unwrap().vertices, vec![0, 1, 2]);
        assert_eq!(c.segment(3, 1).unwrap().vertices, vec![3, 0, 1]);
        assert_eq!(c.segment(2, 2).unwrap().vertices, vec![2]);
        assert!(matches!(c.segment(0, 9), Err(Error::NotOnCycle(9))));
    }

    #[test]
    fn display_prefix() {
        assert_eq!(VertexSequence::cycle(vec![0, 1, 2]).to_string(), "C 0 1 2");
        assert_eq!(VertexSequence::path(vec![1, 0]).to_string(), "P 1 0");
    }
}
