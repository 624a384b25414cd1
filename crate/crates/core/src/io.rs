//! Plain-text coloured-graph format.
//!
//! ```text
//! n m r
//! # bipartite x y        (only for bipartite graphs)
//! u v c                  (m lines, u < v, 1 <= c <= r; c absent when r = 0)
//! ```

use std::io::{BufRead, Write};
use std::sync::Arc;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A graph read from disk, with its colouring when the header has `r > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Arc<Graph>,
    pub coloring: Option<EdgeColoring>,
}

pub fn write_graph<W: Write>(out: &mut W, graph: &Graph) -> Result<()> {
    write_inner(out, graph, None)
}

pub fn write_coloring<W: Write>(out: &mut W, coloring: &EdgeColoring) -> Result<()> {
    write_inner(out, coloring.graph(), Some(coloring))
}

fn write_inner<W: Write>(out: &mut W, graph: &Graph, coloring: Option<&EdgeColoring>) -> Result<()> {
    let r = coloring.map_or(0, |c| c.num_colors());
    writeln!(out, "{} {} {}", graph.n(), graph.m(), r)?;
    if let Some((x, y)) = graph.bipartition() {
        writeln!(out, "# bipartite {x} {y}")?;
    }
    for (id, e) in graph.edges().iter().enumerate() {
        match coloring {
            Some(c) => writeln!(out, "{} {} {}", e.u(), e.v(), c.color_of(id as u32))?,
            None => writeln!(out, "{} {}", e.u(), e.v())?,
        }
    }
    Ok(())
}

pub fn to_string(coloring: &EdgeColoring) -> String {
    let mut buf = Vec::new();
    write_coloring(&mut buf, coloring).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ascii")
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| parse_err(lineno, format!("not a number: {t:?}"))))
        .collect()
}

pub fn read<R: BufRead>(input: R) -> Result<ColoredGraph> {
    let mut header: Option<(usize, usize, u8)> = None;
    let mut bipartite = None;
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            let mut words = rest.split_whitespace();
            if words.next() == Some("bipartite") {
                let sizes = numbers(&words.collect::<Vec<_>>().join(" "), lineno)?;
                match sizes[..] {
                    [x, y] => bipartite = Some((x as usize, y as usize)),
                    _ => return Err(parse_err(lineno, "expected `# bipartite x y`")),
                }
            }
            continue;
        }
        let nums = numbers(trimmed, lineno)?;
        match header {
            None => match nums[..] {
                [n, m, r] if r <= 255 => header = Some((n as usize, m as usize, r as u8)),
                _ => return Err(parse_err(lineno, "expected header `n m r` with r <= 255")),
            },
            Some((n, _, r)) => {
                let want = if r == 0 { 2 } else { 3 };
                if nums.len() != want {
                    return Err(parse_err(lineno, format!("expected {want} fields")));
                }
                let (u, v) = (nums[0], nums[1]);
                if u >= v || v as usize >= n {
                    return Err(parse_err(lineno, format!("need 0 <= u < v < {n}, got {u} {v}")));
                }
                edges.push((u as Vertex, v as Vertex));
                if r > 0 {
                    if nums[2] == 0 || nums[2] > r as u64 {
                        return Err(parse_err(lineno, format!("colour {} outside 1..={r}", nums[2])));
                    }
                    colors.push(((u as Vertex, v as Vertex), nums[2] as u8));
                }
            }
        }
    }
    let (n, m, r) = header.ok_or_else(|| parse_err(0, "missing header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header promises {m} edges, found {}", edges.len())));
    }
    let mut graph = Graph::from_edges(n, edges)?;
    if let Some((x, y)) = bipartite {
        graph = graph.with_bipartition(x, y)?;
    }
    let graph = Arc::new(graph);
    let coloring = if r == 0 {
        None
    } else {
        let mut by_id = vec![0u8; m];
        for ((u, v), c) in colors {
            let id = graph.edge_id(u, v).expect("edge was just inserted");
            by_id[id as usize] = c;
        }
        Some(EdgeColoring::new(graph.clone(), r, by_id)?)
    };
    Ok(ColoredGraph { graph, coloring })
}

pub fn from_str(s: &str) -> Result<ColoredGraph> {
    read(s.as_bytes())
}
