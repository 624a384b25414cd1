//! Exact search for internally disjoint proper `S`-paths in a 2-coloured graph.
//!
//! With two colours a proper tree has maximum degree 2, so it is a path; trimming
//! non-terminal ends keeps it proper, so only paths with both ends in `S` are
//! enumerated. Paths are built one at a time, each in canonical direction
//! (start < end) and the family in increasing `(start, first edge)` order.
//!
//! Pruning uses two counting bounds that hold for any remaining family:
//!
//! * every further tree needs a fresh non-terminal vertex or `k - 1` unused
//!   edges inside `S`;
//! * a terminal interior to a proper 2-coloured path uses one unused edge of
//!   each colour, and a terminal at an end uses one edge. That forces a
//!   minimum number of path ends at each terminal, and the family has only
//!   two ends per path.
//!
//! Paths whose terminal-to-terminal segments admit a colour-compatible chord
//! are skipped: shortcutting such a path frees vertices without touching
//! anything another path could use, so some maximum family avoids them.

use crate::coloring::EdgeColoring;
use crate::graph::{EdgeId, Graph, Vertex};
use crate::ham::VertexSequence;

use super::search::{Limits, NodeCounter, SearchExhausted};

pub(crate) struct PathSearch<'a> {
    g: &'a Graph,
    colors: &'a [u8],
    terminals: Vec<Vertex>,
    is_terminal: Vec<bool>,
    k: usize,
    ss_edges_total: usize,
    /// Degree bounds split edges into this colour and "the other one".
    first_color: u8,

    edge_used: Vec<bool>,
    nonterm_used: Vec<bool>,
    free_nonterm: usize,
    free_ss_edges: usize,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    path_edges: Vec<EdgeId>,
    covered: usize,
    family: Vec<Vec<Vertex>>,
    keys: Vec<(Vertex, EdgeId)>,
    counter: NodeCounter,
}

impl<'a> PathSearch<'a> {
    /// `terminals` must be sorted, distinct, at least two.
    pub(crate) fn new(coloring: &'a EdgeColoring, terminals: &[Vertex]) -> Self {
        let g = coloring.graph();
        let mut is_terminal = vec![false; g.n()];
        for &t in terminals {
            is_terminal[t as usize] = true;
        }
        let ss_edges_total = g
            .edges()
            .iter()
            .filter(|e| is_terminal[e.u() as usize] && is_terminal[e.v() as usize])
            .count();
        PathSearch {
            g,
            colors: coloring.colors(),
            terminals: terminals.to_vec(),
            is_terminal,
            k: terminals.len(),
            ss_edges_total,
            first_color: coloring.colors().first().copied().unwrap_or(1),
            edge_used: vec![false; g.m()],
            nonterm_used: vec![false; g.n()],
            free_nonterm: g.n() - terminals.len(),
            free_ss_edges: ss_edges_total,
            on_path: vec![false; g.n()],
            path: Vec::new(),
            path_edges: Vec::new(),
            covered: 0,
            family: Vec::new(),
            keys: Vec::new(),
            counter: NodeCounter::new(Limits::unlimited()),
        }
    }

    /// Static upper bound on any family size.
    pub(crate) fn trivial_upper_bound(&self) -> usize {
        (self.g.n() - self.k) + self.ss_edges_total / (self.k - 1)
    }

    /// Looks for `m` internally disjoint proper `S`-paths.
    pub(crate) fn decide(&mut self, m: usize, limits: Limits) -> Result<Option<Vec<VertexSequence>>, SearchExhausted> {
        self.reset(limits);
        if self.place(m)? {
            Ok(Some(self.family.iter().cloned().map(VertexSequence::path).collect()))
        } else {
            Ok(None)
        }
    }

    fn reset(&mut self, limits: Limits) {
        self.edge_used.iter_mut().for_each(|x| *x = false);
        self.nonterm_used.iter_mut().for_each(|x| *x = false);
        self.on_path.iter_mut().for_each(|x| *x = false);
        self.free_nonterm = self.g.n() - self.k;
        self.free_ss_edges = self.ss_edges_total;
        self.path.clear();
        self.path_edges.clear();
        self.covered = 0;
        self.family.clear();
        self.keys.clear();
        self.counter = NodeCounter::new(limits);
    }

    fn place(&mut self, remaining: usize) -> Result<bool, SearchExhausted> {
        if remaining == 0 {
            return Ok(true);
        }
        if !self.bounds_ok(remaining, None) {
            return Ok(false);
        }
        let min_start = self.keys.last().map_or(0, |&(s, _)| s);
        let starts: Vec<Vertex> = self.terminals[..self.k - 1].iter().copied().filter(|&s| s >= min_start).collect();
        for s in starts {
            self.on_path[s as usize] = true;
            self.path.push(s);
            self.covered = 1;
            let found = self.extend(s, None, remaining);
            self.path.pop();
            self.on_path[s as usize] = false;
            self.covered = 0;
            if found? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn extend(&mut self, tip: Vertex, last: Option<u8>, remaining: usize) -> Result<bool, SearchExhausted> {
        self.counter.tick()?;
        let start = self.path[0];
        if self.covered == self.k {
            if tip <= start {
                return Ok(false);
            }
            self.family.push(self.path.clone());
            self.keys.push((start, self.path_edges[0]));
            // the finished path's vertices stay reserved through nonterm_used
            let saved_on_path: Vec<Vertex> = self.path.clone();
            for &v in &saved_on_path {
                self.on_path[v as usize] = false;
            }
            let saved_path = std::mem::take(&mut self.path);
            let saved_edges = std::mem::take(&mut self.path_edges);
            let saved_cov = self.covered;
            self.covered = 0;
            let found = self.place(remaining - 1);
            self.path = saved_path;
            self.path_edges = saved_edges;
            self.covered = saved_cov;
            for &v in &saved_on_path {
                self.on_path[v as usize] = true;
            }
            if !matches!(found, Ok(true)) {
                self.family.pop();
                self.keys.pop();
            }
            return found;
        }
        if !self.bounds_ok(remaining, Some(tip)) {
            return Ok(false);
        }

        let prev_first = match self.keys.last() {
            Some(&(s, e)) if s == start && self.path.len() == 1 => Some(e),
            _ => None,
        };
        let uncovered: Vec<Vertex> =
            self.terminals.iter().copied().filter(|&t| !self.on_path[t as usize]).collect();
        let last_needed = if self.covered == self.k - 1 { Some(uncovered[0]) } else { None };

        let seg_start = self.path.iter().rposition(|&v| self.is_terminal[v as usize]).unwrap_or(0);

        let mut candidates: Vec<(u8, Vertex, EdgeId)> = Vec::new();
        for &(w, id) in self.g.neighbors(tip) {
            if self.edge_used[id as usize] || self.on_path[w as usize] {
                continue;
            }
            let c = self.colors[id as usize];
            if Some(c) == last {
                continue;
            }
            if self.has_shortcut(seg_start, w, c) {
                continue;
            }
            if let Some(pf) = prev_first {
                if id <= pf {
                    continue;
                }
            }
            let priority = if self.is_terminal[w as usize] {
                if last_needed == Some(w) && w <= start {
                    continue;
                }
                0
            } else {
                if self.nonterm_used[w as usize] {
                    continue;
                }
                let leads_on = uncovered.iter().any(|&t| {
                    self.g.edge_id(w, t).is_some_and(|e| !self.edge_used[e as usize] && self.colors[e as usize] != c)
                });
                if leads_on {
                    1
                } else {
                    2
                }
            };
            candidates.push((priority, w, id));
        }
        candidates.sort_unstable();

        for (_, w, id) in candidates {
            let c = self.colors[id as usize];
            let w_terminal = self.is_terminal[w as usize];
            let ss = w_terminal && self.is_terminal[tip as usize];
            self.edge_used[id as usize] = true;
            self.on_path[w as usize] = true;
            self.path.push(w);
            self.path_edges.push(id);
            if w_terminal {
                self.covered += 1;
            } else {
                self.nonterm_used[w as usize] = true;
                self.free_nonterm -= 1;
            }
            if ss {
                self.free_ss_edges -= 1;
            }

            let found = self.extend(w, Some(c), remaining);

            if ss {
                self.free_ss_edges += 1;
            }
            if w_terminal {
                self.covered -= 1;
            } else {
                self.nonterm_used[w as usize] = false;
                self.free_nonterm += 1;
            }
            self.path_edges.pop();
            self.path.pop();
            self.on_path[w as usize] = false;
            self.edge_used[id as usize] = false;
            if found? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Whether appending `w` by an edge of colour `c` leaves a chord from an
    /// earlier vertex of the current terminal-to-terminal segment to `w` that
    /// could replace the detour. The chord touches a non-terminal of this
    /// path, so no other path can need it, and the shorter path dominates.
    fn has_shortcut(&self, seg_start: usize, w: Vertex, c: u8) -> bool {
        let w_terminal = self.is_terminal[w as usize];
        let ends_here = w_terminal && self.covered + 1 == self.k;
        let tip_idx = self.path.len() - 1;
        for idx in seg_start..tip_idx {
            let x = self.path[idx];
            if w_terminal && self.is_terminal[x as usize] {
                continue;
            }
            let Some(e) = self.g.edge_id(x, w) else { continue };
            if self.edge_used[e as usize] {
                continue;
            }
            let s = self.colors[e as usize];
            let enter_ok = idx == 0 || self.colors[self.path_edges[idx - 1] as usize] != s;
            // with two colours the edge after `w` has the colour other than `c`
            let leave_ok = ends_here || s == c;
            if enter_ok && leave_ok {
                return true;
            }
        }
        false
    }

    /// `remaining` counts the path under construction when `tip` is set.
    fn bounds_ok(&self, remaining: usize, tip: Option<Vertex>) -> bool {
        let in_progress = tip.is_some();
        let after = if in_progress { remaining - 1 } else { remaining };

        if after > self.free_nonterm + self.free_ss_edges / (self.k - 1) {
            return false;
        }

        if in_progress {
            // the path ends at an uncovered terminal, which must exceed its start
            let start = self.path[0];
            if !self.terminals.iter().any(|&v| !self.on_path[v as usize] && v > start) {
                return false;
            }
        }

        let mut ends_available = 2 * after + usize::from(in_progress);
        for &v in &self.terminals {
            if Some(v) == tip {
                continue;
            }
            let need = if in_progress && !self.on_path[v as usize] { after + 1 } else { after };
            if need == 0 {
                continue;
            }
            let (d1, d2) = self.usable_degrees(v, tip);
            let lb = need.saturating_sub(d1.min(d2)).max((2 * need).saturating_sub(d1 + d2));
            if lb > need || lb > ends_available {
                return false;
            }
            ends_available -= lb;
        }
        true
    }

    fn usable_degrees(&self, v: Vertex, tip: Option<Vertex>) -> (usize, usize) {
        let (mut d1, mut d2) = (0, 0);
        for &(w, id) in self.g.neighbors(v) {
            if self.edge_used[id as usize] {
                continue;
            }
            let usable = self.is_terminal[w as usize] || !self.nonterm_used[w as usize] || Some(w) == tip;
            if usable {
                if self.colors[id as usize] == self.first_color {
                    d1 += 1;
                } else {
                    d2 += 1;
                }
            }
        }
        (d1, d2)
    }
}
