//! Two-colour proper-tree edge colourings.
//!
//! Builds explicit 2-edge-colourings of complete graphs in which every
//! `k`-subset of vertices is joined by `l` internally disjoint proper trees,
//! checks such colourings exactly by backtracking search, and runs the
//! random-colouring arguments for `K_n`, `K_{m,n}` and `G(n,p)` as seeded
//! Monte Carlo experiments.
//!
//! Vertices are `0..n`, colours are `1..=r`. A tree is *proper* when no two
//! adjacent edges share a colour; a family of `S`-trees is *internally
//! disjoint* when the trees are pairwise edge-disjoint and meet only in `S`.

pub mod coloring;
pub mod colorings;
pub mod constructions;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod ham;
pub mod io;
pub mod seed;
pub mod verifier;

pub use coloring::EdgeColoring;
pub use constructions::PathFamily;
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Girth, Graph, Vertex};
pub use ham::VertexSequence;
pub use seed::Seed;
pub use verifier::{Budget, TreeWitness, Verdict, VerificationReport};
