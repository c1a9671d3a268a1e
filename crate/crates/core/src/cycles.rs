//! Cycle parameters: the smallest bound eta such that every edge lies on a
//! cycle of length at most eta, and the size zeta of a largest isometric
//! cycle (exact, by exhaustive induced-cycle enumeration at small scale).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{self, INF, bfs};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::VecDeque;

/// Serializes as the number itself, or the string "inf" for the sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaybeInf(pub u32);

impl Serialize for MaybeInf {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0 == INF {
            ser.serialize_str("inf")
        } else {
            ser.serialize_u32(self.0)
        }
    }
}

/// Length of a shortest cycle through edge `e`: `1 + d_{G-e}(u, v)`, or
/// `INF` when `e` is a bridge.
pub fn shortest_cycle_through_edge(g: &Graph, e: usize) -> u32 {
    let (u, v) = g.endpoints(e);
    let mut dist = vec![INF; g.n()];
    let mut queue = VecDeque::new();
    dist[u] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &(w, edge) in g.adj(x) {
            if edge != e && dist[w] == INF {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
        }
    }
    if dist[v] == INF { INF } else { dist[v] + 1 }
}

/// Smallest integer such that every edge lies on a cycle of that length or
/// shorter; `INF` iff some bridge exists.
pub fn eta(g: &Graph) -> u32 {
    (0..g.m())
        .into_par_iter()
        .map(|e| shortest_cycle_through_edge(g, e))
        .max()
        .unwrap_or(INF)
}

/// Per-edge shortest-cycle summary, serializable as JSON.
#[derive(Debug, Clone, Serialize)]
pub struct CycleCoverReport {
    pub eta: MaybeInf,
    pub per_edge_cycle_len: Vec<MaybeInf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_cycles: Option<Vec<Option<Vec<usize>>>>,
}

/// Builds the per-edge report; witness cycles are stored only on request.
/// A witness for edge `{u, v}` is a vertex sequence starting at `u` and
/// ending at `v`, closed by the edge itself.
pub fn cycle_cover_report(g: &Graph, with_witnesses: bool) -> CycleCoverReport {
    let per_edge: Vec<u32> = (0..g.m())
        .into_par_iter()
        .map(|e| shortest_cycle_through_edge(g, e))
        .collect();
    let eta = per_edge.iter().copied().max().unwrap_or(INF);
    let witness_cycles =
        with_witnesses.then(|| (0..g.m()).map(|e| witness_cycle(g, e)).collect::<Vec<_>>());
    CycleCoverReport {
        eta: MaybeInf(eta),
        per_edge_cycle_len: per_edge.into_iter().map(MaybeInf).collect(),
        witness_cycles,
    }
}

fn witness_cycle(g: &Graph, e: usize) -> Option<Vec<usize>> {
    let (u, v) = g.endpoints(e);
    let mut dist = vec![INF; g.n()];
    let mut parent = vec![None; g.n()];
    let mut queue = VecDeque::new();
    dist[u] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &(w, edge) in g.adj(x) {
            if edge != e && dist[w] == INF {
                dist[w] = dist[x] + 1;
                parent[w] = Some(x);
                queue.push_back(w);
            }
        }
    }
    if dist[v] == INF {
        return None;
    }
    let mut path = vec![v];
    let mut cur = v;
    while let Some(p) = parent[cur] {
        path.push(p);
        cur = p;
    }
    path.reverse();
    debug_assert_eq!(path[0], u);
    Some(path)
}

/// True iff for every pair of vertices on the cycle, the distance along the
/// cycle equals the distance in the graph.
pub fn is_isometric_cycle(g: &Graph, cycle: &[usize]) -> Result<bool> {
    validate_cycle(g, cycle)?;
    let len = cycle.len() as u32;
    for (i, &u) in cycle.iter().enumerate() {
        let profile = bfs(g, u);
        for (j, &v) in cycle.iter().enumerate().skip(i + 1) {
            let along = (j - i) as u32;
            let cyc_dist = along.min(len - along);
            if profile.dist[v] != cyc_dist {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn validate_cycle(g: &Graph, cycle: &[usize]) -> Result<()> {
    if cycle.len() < 3 {
        return Err(Error::NotACycle(format!(
            "{} vertices, need at least 3",
            cycle.len()
        )));
    }
    let mut seen = std::collections::HashSet::new();
    for &v in cycle {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(Error::NotACycle(format!("repeated vertex {v}")));
        }
    }
    for i in 0..cycle.len() {
        let u = cycle[i];
        let v = cycle[(i + 1) % cycle.len()];
        if g.edge_between(u, v).is_none() {
            return Err(Error::NotACycle(format!("missing edge {u} {v}")));
        }
    }
    Ok(())
}

/// Exact size of a largest isometric cycle, by exhaustive enumeration of
/// induced cycles (every isometric cycle is induced). Guarded by `max_n`;
/// the default cap in callers is 14.
pub fn zeta_bruteforce(g: &Graph, max_n: usize) -> Result<u32> {
    if g.n() > max_n {
        return Err(Error::TooLargeForZeta { n: g.n(), max_n });
    }
    if g.n() > 64 {
        return Err(Error::TooLargeForZeta {
            n: g.n(),
            max_n: 64,
        });
    }
    let br = metrics::bridges(g);
    if !br.is_empty() {
        return Err(Error::Bridged(br));
    }

    let n = g.n();
    let adj_mask: Vec<u64> = (0..n)
        .map(|v| g.adj(v).iter().fold(0u64, |acc, &(w, _)| acc | (1u64 << w)))
        .collect();
    let dist: Vec<Vec<u32>> = (0..n).map(|s| bfs(g, s).dist).collect();

    let mut best = 0u32;
    let mut path: Vec<usize> = Vec::with_capacity(n);

    // Depth-first enumeration of induced cycles, each counted once: the
    // start is the cycle's smallest vertex and the second vertex is smaller
    // than the closing vertex.
    fn extend(
        adj_mask: &[u64],
        dist: &[Vec<u32>],
        path: &mut Vec<usize>,
        path_mask: u64,
        banned: u64,
        best: &mut u32,
    ) {
        let s = path[0];
        let last = *path.last().unwrap();
        let above = !((1u64 << s) | ((1u64 << s) - 1));
        // Closure: adjacent to both the last vertex and the start, not
        // adjacent to any interior vertex, direction-deduped.
        if path.len() >= 2 {
            let mut close = adj_mask[last] & adj_mask[s] & above & !path_mask & !banned;
            while close != 0 {
                let w = close.trailing_zeros() as usize;
                close &= close - 1;
                if path[1] < w {
                    let len = (path.len() + 1) as u32;
                    if len > *best {
                        path.push(w);
                        if isometric_in(dist, path) {
                            *best = len;
                        }
                        path.pop();
                    }
                }
            }
        }
        // Extension: adjacent to the last vertex only.
        let mut cand = adj_mask[last] & above & !path_mask & !banned;
        if path.len() >= 2 {
            cand &= !adj_mask[s];
        }
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let new_banned = if last == s {
                banned
            } else {
                banned | adj_mask[last]
            };
            path.push(w);
            extend(
                adj_mask,
                dist,
                path,
                path_mask | (1u64 << w),
                new_banned,
                best,
            );
            path.pop();
        }
    }

    fn isometric_in(dist: &[Vec<u32>], cycle: &[usize]) -> bool {
        let len = cycle.len() as u32;
        for (i, &u) in cycle.iter().enumerate() {
            for (j, &v) in cycle.iter().enumerate().skip(i + 1) {
                let along = (j - i) as u32;
                if dist[u][v] != along.min(len - along) {
                    return false;
                }
            }
        }
        true
    }

    for s in 0..n {
        path.clear();
        path.push(s);
        extend(&adj_mask, &dist, &mut path, 1u64 << s, 0, &mut best);
    }
    debug_assert!(
        best >= 3,
        "bridgeless graph must contain an isometric cycle"
    );
    Ok(best)
}
