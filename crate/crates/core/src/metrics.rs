//! BFS-based distance machinery: eccentricities, radius, diameter, centers,
//! k-step neighborhoods, girth, bridges, and bipartiteness.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::VecDeque;

/// Sentinel for an unreachable vertex or an absent cycle. Serialized as the
/// string "inf" by report code.
pub const INF: u32 = u32::MAX;

/// Formats a distance-like value, mapping the sentinel to "inf".
pub fn fmt_dist(d: u32) -> String {
    if d == INF {
        "inf".to_string()
    } else {
        d.to_string()
    }
}

/// Single-source BFS result: hop distances and tree parents.
#[derive(Debug, Clone)]
pub struct DistanceProfile {
    pub source: usize,
    pub dist: Vec<u32>,
    pub parent: Vec<Option<usize>>,
}

/// Exact unweighted shortest-path distances from `s`.
pub fn bfs(g: &Graph, s: usize) -> DistanceProfile {
    assert!(s < g.n(), "source {} out of range", s);
    let mut dist = vec![INF; g.n()];
    let mut parent = vec![None; g.n()];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.adj(v) {
            if dist[w] == INF {
                dist[w] = dist[v] + 1;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    DistanceProfile {
        source: s,
        dist,
        parent,
    }
}

/// Eccentricity of every vertex, or `NotConnected` if some pair is
/// unreachable. The per-source sweeps run in parallel.
pub fn eccentricities(g: &Graph) -> Result<Vec<u32>> {
    if g.n() == 0 {
        return Err(Error::NotConnected);
    }
    let eccs: Vec<u32> = (0..g.n())
        .into_par_iter()
        .map(|s| bfs(g, s).dist.into_iter().max().unwrap())
        .collect();
    if eccs.contains(&INF) {
        return Err(Error::NotConnected);
    }
    Ok(eccs)
}

/// Radius, diameter, and the set of centers of a connected graph.
pub fn radius_diameter_centers(g: &Graph) -> Result<(u32, u32, Vec<usize>)> {
    let eccs = eccentricities(g)?;
    let rad = *eccs.iter().min().unwrap();
    let diam = *eccs.iter().max().unwrap();
    let centers = eccs
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e == rad)
        .map(|(v, _)| v)
        .collect();
    Ok((rad, diam, centers))
}

/// Vertices at distance exactly `k` (open) or at most `k` (closed) from `u`.
pub fn k_step_neighborhood(g: &Graph, u: usize, k: u32, closed: bool) -> Vec<usize> {
    let profile = bfs(g, u);
    (0..g.n())
        .filter(|&v| {
            let d = profile.dist[v];
            d != INF && if closed { d <= k } else { d == k }
        })
        .collect()
}

/// All cut-edges, as sorted edge ids. Empty iff every component is
/// bridgeless, i.e. every edge lies on a cycle.
pub fn bridges(g: &Graph) -> Vec<usize> {
    struct Dfs<'a> {
        g: &'a Graph,
        order: Vec<u32>,
        low: Vec<u32>,
        next: u32,
        out: Vec<usize>,
    }
    impl Dfs<'_> {
        fn run(&mut self, v: usize, parent_edge: Option<usize>) {
            self.order[v] = self.next;
            self.low[v] = self.next;
            self.next += 1;
            for &(w, e) in self.g.adj(v) {
                if Some(e) == parent_edge {
                    continue;
                }
                if self.order[w] == u32::MAX {
                    self.run(w, Some(e));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] > self.order[v] {
                        self.out.push(e);
                    }
                } else {
                    self.low[v] = self.low[v].min(self.order[w]);
                }
            }
        }
    }
    let mut dfs = Dfs {
        g,
        order: vec![u32::MAX; g.n()],
        low: vec![u32::MAX; g.n()],
        next: 0,
        out: Vec::new(),
    };
    for v in 0..g.n() {
        if dfs.order[v] == u32::MAX {
            dfs.run(v, None);
        }
    }
    dfs.out.sort_unstable();
    dfs.out
}

/// Length of a shortest cycle, or `INF` for forests. Runs one BFS per
/// vertex and closes cycles over non-tree edges.
pub fn girth(g: &Graph) -> u32 {
    let mut best = INF;
    for s in 0..g.n() {
        let profile = bfs(g, s);
        for e in 0..g.m() {
            let (u, v) = g.endpoints(e);
            if profile.dist[u] == INF || profile.dist[v] == INF {
                continue;
            }
            // Skip BFS tree edges; they close no cycle.
            if profile.parent[u] == Some(v) || profile.parent[v] == Some(u) {
                continue;
            }
            let cand = profile.dist[u] + profile.dist[v] + 1;
            best = best.min(cand);
        }
    }
    best
}

/// Outcome of the BFS 2-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// The two parts, each sorted ascending.
    Bipartite(Vec<usize>, Vec<usize>),
    /// Witness odd cycle as a vertex sequence.
    OddCycle(Vec<usize>),
}

/// 2-colors the graph by BFS parity, or returns an odd-cycle witness.
/// Disconnected graphs are colored per component.
pub fn bipartition(g: &Graph) -> Bipartition {
    let mut side = vec![u8::MAX; g.n()];
    let mut parent = vec![None; g.n()];
    let mut depth = vec![0u32; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in g.adj(v) {
                if side[w] == u8::MAX {
                    side[w] = side[v] ^ 1;
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return Bipartition::OddCycle(odd_cycle_witness(v, w, &parent, &depth));
                }
            }
        }
    }
    let part = |p: u8| (0..g.n()).filter(|&v| side[v] == p).collect();
    Bipartition::Bipartite(part(0), part(1))
}

fn odd_cycle_witness(u: usize, v: usize, parent: &[Option<usize>], depth: &[u32]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a].unwrap();
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b].unwrap();
        right.push(b);
    }
    while a != b {
        a = parent[a].unwrap();
        b = parent[b].unwrap();
        left.push(a);
        right.push(b);
    }
    // left ends at the meeting vertex; splice the right side back, skipping
    // the duplicated meeting vertex.
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
