//! Core value types: simple undirected graphs with stable edge ids,
//! orientations, and edge colorings, plus the text formats for each.
//!
//! Edge-list format: one `u v` pair per line, `#` starts a comment line,
//! and an optional leading `n <count>` header declares trailing isolated
//! vertices. Orientations serialize as `u v` meaning the arc u -> v, and
//! colorings as `u v c`, both in edge-id order.

use crate::error::{Error, Result};
use std::fmt::Write as _;

/// Simple undirected graph. Vertices are dense ids `0..n`; edges keep the
/// id order in which they were added and algorithms refer to edges by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from a vertex count and edge list, rejecting
    /// self-loops, duplicate edges, and out-of-range endpoints.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::InvalidParam(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidParam(format!(
                    "duplicate edge {} {}",
                    key.0, key.1
                )));
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e` as stored.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Neighbors of `v` as `(neighbor, edge id)` pairs in insertion order.
    pub fn adj(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// The other endpoint of edge `e` relative to `v`.
    pub fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v { b } else { a }
    }

    /// Edge id joining `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, id)| id)
    }

    /// Copy of this graph with one edge removed; remaining edge ids shift
    /// down past the removed one.
    pub fn without_edge(&self, e: usize) -> Result<Graph> {
        if e >= self.m() {
            return Err(Error::EdgeOutOfRange(e));
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(id, _)| id != e)
            .map(|(_, &pair)| pair)
            .collect();
        Graph::new(self.n, edges)
    }
}

/// Direction of one edge relative to its stored `(u, v)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeDir {
    /// Arc u -> v.
    Forward,
    /// Arc v -> u.
    Backward,
}

/// An orientation assigns a direction to every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    dirs: Vec<EdgeDir>,
}

impl Orientation {
    pub fn new(g: &Graph, dirs: Vec<EdgeDir>) -> Result<Orientation> {
        if dirs.len() != g.m() {
            return Err(Error::OrientationMismatch(format!(
                "{} directions for {} edges",
                dirs.len(),
                g.m()
            )));
        }
        Ok(Orientation { dirs })
    }

    /// Orientation from a bitmask: bit `e` set means edge `e` is reversed.
    pub fn from_mask(g: &Graph, mask: u64) -> Orientation {
        let dirs = (0..g.m())
            .map(|e| {
                if mask >> e & 1 == 1 {
                    EdgeDir::Backward
                } else {
                    EdgeDir::Forward
                }
            })
            .collect();
        Orientation { dirs }
    }

    pub fn dir(&self, e: usize) -> EdgeDir {
        self.dirs[e]
    }

    /// The arc of edge `e` as `(from, to)`.
    pub fn arc(&self, g: &Graph, e: usize) -> (usize, usize) {
        let (u, v) = g.endpoints(e);
        match self.dirs[e] {
            EdgeDir::Forward => (u, v),
            EdgeDir::Backward => (v, u),
        }
    }

    /// Out-neighbor lists of the digraph induced by this orientation.
    pub fn out_adj(&self, g: &Graph) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); g.n()];
        for e in 0..g.m() {
            let (a, b) = self.arc(g, e);
            out[a].push(b);
        }
        out
    }

    /// In-neighbor lists of the digraph induced by this orientation.
    pub fn in_adj(&self, g: &Graph) -> Vec<Vec<usize>> {
        let mut inn = vec![Vec::new(); g.n()];
        for e in 0..g.m() {
            let (a, b) = self.arc(g, e);
            inn[b].push(a);
        }
        inn
    }
}

/// An edge coloring with color ids forming the contiguous range
/// `0..color_count`. Adjacent edges may share a color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<u32>,
    color_count: u32,
}

impl EdgeColoring {
    pub fn new(g: &Graph, colors: Vec<u32>) -> Result<EdgeColoring> {
        if colors.len() != g.m() {
            return Err(Error::ColoringMismatch(format!(
                "{} colors for {} edges",
                colors.len(),
                g.m()
            )));
        }
        let mut used: Vec<bool> = Vec::new();
        for &c in &colors {
            let c = c as usize;
            if c >= used.len() {
                used.resize(c + 1, false);
            }
            used[c] = true;
        }
        if let Some(gap) = used.iter().position(|&u| !u) {
            return Err(Error::ColoringMismatch(format!(
                "color ids are not contiguous: {gap} unused"
            )));
        }
        let color_count = used.len() as u32;
        Ok(EdgeColoring {
            colors,
            color_count,
        })
    }

    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_count(&self) -> u32 {
        self.color_count
    }
}

/// Parses the edge-list format. Vertex count is `1 + max id seen` unless a
/// larger `n <count>` header appears as the first data line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut header_n: Option<usize> = None;
    let mut saw_data = false;
    let mut max_id: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !saw_data && tokens.len() == 2 && tokens[0] == "n" {
            let count = tokens[1].parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("malformed vertex count {:?}", tokens[1]),
            })?;
            header_n = Some(count);
            saw_data = true;
            continue;
        }
        saw_data = true;
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two vertex ids, got {} tokens", tokens.len()),
            });
        }
        let mut pair = [0usize; 2];
        for (slot, tok) in pair.iter_mut().zip(&tokens) {
            *slot = tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("malformed token {tok:?}"),
            })?;
        }
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
        {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("duplicate edge {u} {v}"),
            });
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }

    let implied = max_id.map_or(0, |m| m + 1);
    let n = match header_n {
        Some(h) if h < implied => {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header n {h} smaller than 1 + max vertex id {implied}"),
            });
        }
        Some(h) => h,
        None => implied,
    };
    Graph::new(n, edges)
}

/// Serializes a graph so that `parse_graph` reproduces it exactly. The
/// `n <count>` header is emitted only when needed for isolated vertices.
pub fn serialize_graph(g: &Graph) -> String {
    let implied = g
        .edges()
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    if g.n() > implied {
        let _ = writeln!(out, "n {}", g.n());
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// One line per edge, `u v` meaning arc u -> v, in edge-id order.
pub fn serialize_orientation(g: &Graph, o: &Orientation) -> String {
    let mut out = String::new();
    for e in 0..g.m() {
        let (a, b) = o.arc(g, e);
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Parses an orientation file against its graph: line `i` must name the
/// endpoints of edge `i`, in either order.
pub fn parse_orientation(g: &Graph, text: &str) -> Result<Orientation> {
    let mut dirs = Vec::with_capacity(g.m());
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let e = dirs.len();
        if e >= g.m() {
            return Err(Error::OrientationMismatch(format!(
                "more lines than edges ({})",
                g.m()
            )));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two vertex ids, got {} tokens", tokens.len()),
            });
        }
        let a = tokens[0].parse::<usize>().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("malformed token {:?}", tokens[0]),
        })?;
        let b = tokens[1].parse::<usize>().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("malformed token {:?}", tokens[1]),
        })?;
        let (u, v) = g.endpoints(e);
        let dir = if (a, b) == (u, v) {
            EdgeDir::Forward
        } else if (a, b) == (v, u) {
            EdgeDir::Backward
        } else {
            return Err(Error::OrientationMismatch(format!(
                "line {line_no}: arc {a} {b} does not match edge {e} = {{{u}, {v}}}"
            )));
        };
        dirs.push(dir);
    }
    if dirs.len() != g.m() {
        return Err(Error::OrientationMismatch(format!(
            "{} arcs for {} edges",
            dirs.len(),
            g.m()
        )));
    }
    Ok(Orientation { dirs })
}

/// One line per edge, `u v colorid`, in edge-id order.
pub fn serialize_coloring(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = String::new();
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(out, "{u} {v} {}", c.color(e));
    }
    out
}

/// Parses a coloring file against its graph; color ids must form a
/// contiguous range starting at 0.
pub fn parse_coloring(g: &Graph, text: &str) -> Result<EdgeColoring> {
    let mut colors = Vec::with_capacity(g.m());
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let e = colors.len();
        if e >= g.m() {
            return Err(Error::ColoringMismatch(format!(
                "more lines than edges ({})",
                g.m()
            )));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `u v color`, got {} tokens", tokens.len()),
            });
        }
        let parse = |tok: &str| -> Result<usize> {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("malformed token {tok:?}"),
            })
        };
        let a = parse(tokens[0])?;
        let b = parse(tokens[1])?;
        let col = parse(tokens[2])? as u32;
        let (u, v) = g.endpoints(e);
        if (a, b) != (u, v) && (a, b) != (v, u) {
            return Err(Error::ColoringMismatch(format!(
                "line {line_no}: pair {a} {b} does not match edge {e} = {{{u}, {v}}}"
            )));
        }
        colors.push(col);
    }
    if colors.len() != g.m() {
        return Err(Error::ColoringMismatch(format!(
            "{} colors for {} edges",
            colors.len(),
            g.m()
        )));
    }
    EdgeColoring::new(g, colors)
}
