use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::seed::Seed;

/// Total map from the edges of a graph to colours `1..=r`.
///
/// Adjacent edges may share a colour. Totality and range are checked when
/// the colouring is built, so every accessor can assume them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    graph: Arc<Graph>,
    num_colors: u8,
    colors: Vec<u8>,
}

impl EdgeColoring {
    /// `colors[i]` is the colour of edge id `i`.
    pub fn new(graph: Arc<Graph>, num_colors: u8, colors: Vec<u8>) -> Result<Self> {
        if num_colors == 0 {
            return Err(Error::invalid("a colouring needs at least one colour"));
        }
        if colors.len() != graph.m() {
            return Err(Error::IncompleteColoring { expected: graph.m(), got: colors.len() });
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > num_colors) {
            return Err(Error::ColorOutOfRange { color: c, num_colors });
        }
        Ok(EdgeColoring { graph, num_colors, colors })
    }

    pub fn from_fn<F>(graph: Arc<Graph>, num_colors: u8, mut f: F) -> Result<Self>
    where
        F: FnMut(Vertex, Vertex) -> u8,
    {
        let colors = graph.edges().iter().map(|e| f(e.u(), e.v())).collect();
        Self::new(graph, num_colors, colors)
    }

    pub fn monochromatic(graph: Arc<Graph>) -> Self {
        let m = graph.m();
        EdgeColoring { graph, num_colors: 1, colors: vec![1; m] }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn num_colors(&self) -> u8 {
        self.num_colors
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color_of(&self, id: EdgeId) -> u8 {
        self.colors[id as usize]
    }

    pub fn color(&self, a: Vertex, b: Vertex) -> Option<u8> {
        self.graph.edge_id(a, b).map(|id| self.color_of(id))
    }

    /// Number of edges carrying colour `c`.
    pub fn count(&self, c: u8) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }

    /// Distinct colours that actually occur.
    pub fn used_colors(&self) -> usize {
        let mut seen = [false; 256];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }
}

/// Each edge independently uniform over `1..=r`, drawn in edge-id order.
pub fn color_uniform_random(graph: Arc<Graph>, r: u8, seed: Seed) -> Result<EdgeColoring> {
    if r == 0 {
        return Err(Error::invalid("r must be at least 1"));
    }
    let mut rng = seed.rng();
    let colors = (0..graph.m()).map(|_| rng.random_range(1..=r)).collect();
    EdgeColoring::new(graph, r, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn totality_and_range_checked() {
        let g = Arc::new(complete_graph(3).unwrap());
        assert!(matches!(
            EdgeColoring::new(g.clone(), 2, vec![1, 2]),
            Err(Error::IncompleteColoring { expected: 3, got: 2 })
        ));
        assert!(matches!(
            EdgeColoring::new(g.clone(), 2, vec![1, 3, 1]),
            Err(Error::ColorOutOfRange { color: 3, .. })
        ));
        assert!(EdgeColoring::new(g.clone(), 2, vec![0, 1, 1]).is_err());
        let c = EdgeColoring::new(g, 2, vec![1, 2, 1]).unwrap();
        assert_eq!(c.color(2, 1), Some(1));
        assert_eq!(c.color(0, 2), Some(2));
    }

    #[test]
    fn uniform_random_examples() {
        let g = Arc::new(complete_graph(100).unwrap());
        let one = color_uniform_random(g.clone(), 1, Seed(9)).unwrap();
        assert_eq!(one.count(1), g.m());

        // Binomial(4950, 1/2): mean 2475, sd ~ 35.18
        let two = color_uniform_random(g.clone(), 2, Seed(9)).unwrap();
        let sd = (4950.0f64 * 0.25).sqrt();
        assert!((two.count(1) as f64 - 2475.0).abs() <= 4.0 * sd);
        assert_eq!(two, color_uniform_random(g, 2, Seed(9)).unwrap());
    }
}
