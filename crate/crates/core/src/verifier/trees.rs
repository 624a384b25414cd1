//! Exact search over general `S`-trees, for any number of colours or none.
//!
//! Every minimal `S`-tree (all leaves in `S`) is enumerated as a bitmask pair,
//! then a maximum internally disjoint packing is found by branch and bound.
//! Limited to graphs with at most 128 vertices and 128 edges.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Graph, Vertex};

use super::search::{Limits, NodeCounter, SearchExhausted};
use super::witness::TreeWitness;

#[derive(Clone, Copy, Debug)]
struct Candidate {
    edges: u128,
    nonterm: u128,
    size: u32,
}

pub(crate) struct TreeSearch<'a> {
    g: &'a Graph,
    colors: Option<&'a [u8]>,
    terminals: Vec<Vertex>,
    term_mask: u128,
    ss_mask: u128,
    k: usize,
    paths_only: bool,
    candidates: Vec<Candidate>,
    counter: NodeCounter,
}

impl<'a> TreeSearch<'a> {
    /// Proper trees of `coloring`, or plain trees of `g` when `coloring` is `None`.
    pub(crate) fn new(g: &'a Graph, coloring: Option<&'a EdgeColoring>, terminals: &[Vertex]) -> Result<Self> {
        if g.n() > 128 || g.m() > 128 {
            return Err(Error::TooLarge(format!("tree search handles <= 128 vertices and edges, got n={} m={}", g.n(), g.m())));
        }
        if coloring.is_some_and(|c| c.num_colors() > 64) {
            return Err(Error::TooLarge("tree search handles <= 64 colours".into()));
        }
        let term_mask = terminals.iter().fold(0u128, |m, &t| m | 1 << t);
        let ss_mask = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| term_mask >> e.u() & 1 == 1 && term_mask >> e.v() & 1 == 1)
            .fold(0u128, |m, (i, _)| m | 1 << i);
        Ok(TreeSearch {
            g,
            colors: coloring.map(EdgeColoring::colors),
            terminals: terminals.to_vec(),
            term_mask,
            ss_mask,
            k: terminals.len(),
            paths_only: false,
            candidates: Vec::new(),
            counter: NodeCounter::new(Limits::unlimited()),
        })
    }

    /// Only enumerate trees of maximum degree 2.
    pub(crate) fn paths_only(mut self) -> Self {
        self.paths_only = true;
        self
    }

    pub(crate) fn trivial_upper_bound(&self) -> usize {
        (self.g.n() - self.k) + self.ss_mask.count_ones() as usize / (self.k - 1)
    }

    /// Enumerates minimal `S`-trees. Must run before [`TreeSearch::decide`].
    pub(crate) fn enumerate(&mut self, limits: Limits) -> Result<usize, SearchExhausted> {
        self.counter = NodeCounter::new(limits);
        self.candidates.clear();
        let root = self.terminals[0];
        let mut state = Grow {
            in_tree: 1u128 << root,
            edges: 0,
            color_at: vec![0u64; self.g.n()],
            degree: vec![0u8; self.g.n()],
            banned: 0,
        };
        let mut frontier: Vec<EdgeId> = self.g.neighbors(root).iter().map(|&(_, id)| id).collect();
        let mut out = Vec::new();
        self.grow(&mut state, &mut frontier, &mut out)?;
        out.sort_by_key(|c: &Candidate| c.size);
        self.candidates = out;
        Ok(self.candidates.len())
    }

    fn grow(&mut self, st: &mut Grow, frontier: &mut Vec<EdgeId>, out: &mut Vec<Candidate>) -> Result<(), SearchExhausted> {
        self.counter.tick()?;
        let Some(id) = frontier.pop() else {
            self.emit(st, out);
            return Ok(());
        };
        let e = self.g.edge(id);
        let (u, w) = if st.in_tree >> e.u() & 1 == 1 { (e.u(), e.v()) } else { (e.v(), e.u()) };
        if st.in_tree >> w & 1 == 1 {
            // both ends already in the tree
            self.grow(st, frontier, out)?;
            frontier.push(id);
            return Ok(());
        }

        if self.can_attach(st, u, id) {
            let c = self.colors.map_or(0, |cs| cs[id as usize]);
            st.in_tree |= 1 << w;
            st.edges |= 1 << id;
            st.color_at[u as usize] |= color_bit(c);
            st.color_at[w as usize] |= color_bit(c);
            st.degree[u as usize] += 1;
            st.degree[w as usize] += 1;
            let before = frontier.len();
            for &(x, xid) in self.g.neighbors(w) {
                if st.in_tree >> x & 1 == 0 && st.banned >> xid & 1 == 0 {
                    frontier.push(xid);
                }
            }
            self.grow(st, frontier, out)?;
            frontier.truncate(before);
            st.degree[u as usize] -= 1;
            st.degree[w as usize] -= 1;
            st.color_at[u as usize] &= !color_bit(c);
            st.color_at[w as usize] &= !color_bit(c);
            st.edges &= !(1 << id);
            st.in_tree &= !(1 << w);
        }

        st.banned |= 1 << id;
        self.grow(st, frontier, out)?;
        st.banned &= !(1 << id);
        frontier.push(id);
        Ok(())
    }

    fn can_attach(&self, st: &Grow, u: Vertex, id: EdgeId) -> bool {
        if self.paths_only && st.degree[u as usize] >= 2 {
            return false;
        }
        match self.colors {
            Some(cs) => st.color_at[u as usize] & color_bit(cs[id as usize]) == 0,
            None => true,
        }
    }

    fn emit(&self, st: &Grow, out: &mut Vec<Candidate>) {
        if st.in_tree & self.term_mask != self.term_mask {
            return;
        }
        // minimal: every leaf is a terminal
        let leaf_ok = (0..self.g.n() as Vertex)
            .filter(|&v| st.in_tree >> v & 1 == 1 && st.degree[v as usize] == 1)
            .all(|v| self.term_mask >> v & 1 == 1);
        if !leaf_ok {
            return;
        }
        out.push(Candidate { edges: st.edges, nonterm: st.in_tree & !self.term_mask, size: st.edges.count_ones() });
    }

    pub(crate) fn decide(&mut self, m: usize, limits: Limits) -> Result<Option<Vec<TreeWitness>>, SearchExhausted> {
        self.counter = NodeCounter::new(limits);
        let mut chosen = Vec::new();
        if self.pack(0, m, 0, 0, &mut chosen)? {
            Ok(Some(chosen.iter().map(|&i| self.witness(&self.candidates[i])).collect()))
        } else {
            Ok(None)
        }
    }

    fn pack(&mut self, from: usize, m: usize, used_edges: u128, used_nonterm: u128, chosen: &mut Vec<usize>) -> Result<bool, SearchExhausted> {
        if chosen.len() == m {
            return Ok(true);
        }
        self.counter.tick()?;
        let nonterm_total = self.g.n() - self.k;
        let free_nonterm = nonterm_total - used_nonterm.count_ones() as usize;
        let free_ss = (self.ss_mask & !used_edges).count_ones() as usize;
        if chosen.len() + free_nonterm + free_ss / (self.k - 1) < m {
            return Ok(false);
        }
        for i in from..self.candidates.len() {
            if self.candidates.len() - i < m - chosen.len() {
                break;
            }
            let c = self.candidates[i];
            if c.edges & used_edges != 0 || c.nonterm & used_nonterm != 0 {
                continue;
            }
            chosen.push(i);
            if self.pack(i + 1, m, used_edges | c.edges, used_nonterm | c.nonterm, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    fn witness(&self, c: &Candidate) -> TreeWitness {
        let edges: Vec<Edge> = (0..self.g.m() as EdgeId).filter(|&i| c.edges >> i & 1 == 1).map(|i| self.g.edge(i)).collect();
        TreeWitness::new(edges, &self.terminals)
    }
}

struct Grow {
    in_tree: u128,
    edges: u128,
    color_at: Vec<u64>,
    degree: Vec<u8>,
    banned: u128,
}

fn color_bit(c: u8) -> u64 {
    if c == 0 {
        0
    } else {
        1 << (c - 1)
    }
}
