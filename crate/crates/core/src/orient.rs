//! Layered strong-orientation construction: from a center outward, orient
//! compatible ears as directed paths (closed ears as directed cycles), then
//! complete the remaining edges from lower BFS layers to higher ones.
//! The result is strong with radius at most `sum_i min(2i, eta - 1)` from
//! the center and diameter at most twice that.

use crate::ears::{self, HullGrowth};
use crate::error::{Error, Result};
use crate::graph::{EdgeDir, Graph, Orientation};
use crate::metrics::{self, INF};
use crate::oracles;
use serde::{Deserialize, Serialize};

/// The layered bounds: radius bound `sum_{i=1..rad} min(2i, eta - 1)` and
/// diameter bound twice that.
pub fn orientation_bounds(rad: u32, eta: u32) -> (u32, u32) {
    debug_assert!(rad == 0 || eta >= 3);
    let rad_bound: u32 = (1..=rad).map(|i| (2 * i).min(eta - 1)).sum();
    (rad_bound, 2 * rad_bound)
}

/// One oriented ear in the trace; vertices are listed in arc order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EarRecord {
    pub vertices: Vec<usize>,
    pub legs: (usize, usize),
    pub closed: bool,
    /// Edges first committed by this ear (shared terminal segments belong
    /// to the earlier ear).
    pub new_edges: Vec<usize>,
    /// True when the terminal-segment rewrite repaired the search result.
    pub fallback: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrientLayer {
    pub i: u32,
    pub ears: Vec<EarRecord>,
}

/// Full record of the layered construction, enabling bound audits.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrientTrace {
    pub center: usize,
    pub radius: u32,
    pub eta: u32,
    pub layers: Vec<OrientLayer>,
    pub completed_edges: Vec<usize>,
    pub bounds: Bounds,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct Bounds {
    pub rad: u32,
    pub diam: u32,
}

fn ear_record(g: &Graph, grown: &ears::GrownEar) -> EarRecord {
    EarRecord {
        vertices: grown.ear.vertices().to_vec(),
        legs: grown.ear.leg_edges(g),
        closed: grown.ear.closed(),
        new_edges: grown.new_edges.clone(),
        fallback: grown.fallback,
    }
}

pub(crate) fn trace_from_growth(g: &Graph, growth: &HullGrowth) -> (Vec<OrientLayer>, Vec<usize>) {
    let layers = growth
        .layers
        .iter()
        .enumerate()
        .map(|(idx, layer)| OrientLayer {
            i: idx as u32 + 1,
            ears: layer.iter().map(|ge| ear_record(g, ge)).collect(),
        })
        .collect();
    let completed = (0..g.m())
        .filter(|&e| growth.committed[e].is_none())
        .collect();
    (layers, completed)
}

/// Direction of the completion pass: from the endpoint closer to the
/// center, ties from the smaller vertex id.
fn completion_dir(g: &Graph, dist: &[u32], e: usize) -> EdgeDir {
    let (u, v) = g.endpoints(e);
    let from_u = dist[u] < dist[v] || (dist[u] == dist[v] && u < v);
    if from_u {
        EdgeDir::Forward
    } else {
        EdgeDir::Backward
    }
}

/// Builds a strong orientation of a connected bridgeless graph together
/// with its construction trace.
pub fn orient(g: &Graph) -> Result<(Orientation, OrientTrace)> {
    let growth = ears::grow_hull(g)?;
    let (layers, completed_edges) = trace_from_growth(g, &growth);

    let mut dirs: Vec<EdgeDir> = Vec::with_capacity(g.m());
    for e in 0..g.m() {
        let dir = match growth.committed[e] {
            Some(arc) => {
                if arc == g.endpoints(e) {
                    EdgeDir::Forward
                } else {
                    EdgeDir::Backward
                }
            }
            None => completion_dir(g, &growth.dist, e),
        };
        dirs.push(dir);
    }
    let (rad_bound, diam_bound) = orientation_bounds(growth.radius, growth.eta.max(3));
    let trace = OrientTrace {
        center: growth.center,
        radius: growth.radius,
        eta: growth.eta,
        layers,
        completed_edges,
        bounds: Bounds {
            rad: rad_bound,
            diam: diam_bound,
        },
    };
    Ok((Orientation::new(g, dirs)?, trace))
}

/// Audit of an orientation against its trace and the layered bounds.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct OrientationReport {
    pub strong: bool,
    pub rad: Option<u32>,
    pub diam: Option<u32>,
    pub center_ecc_out: Option<u32>,
    pub center_ecc_in: Option<u32>,
    pub rad_bound: u32,
    pub diam_bound: u32,
    pub layer_lengths_ok: bool,
    pub edges_partitioned: bool,
    pub arcs_match_trace: bool,
    pub pass: bool,
}

/// Verifies that the orientation is strong, matches the trace, satisfies
/// the per-layer ear budgets, and meets the layered bounds. Failures are
/// report content, not errors; errors mean the trace does not fit the graph.
pub fn verify_orientation_bounds(
    g: &Graph,
    o: &Orientation,
    trace: &OrientTrace,
) -> Result<OrientationReport> {
    if trace.center >= g.n() {
        return Err(Error::TraceMismatch(format!(
            "center {} out of range",
            trace.center
        )));
    }
    let mut owner = vec![false; g.m()];
    let mut layer_lengths_ok = true;
    let mut arcs_match_trace = true;
    for layer in &trace.layers {
        let budget = HullGrowth::layer_budget(trace.radius, trace.eta.max(3), layer.i);
        for rec in &layer.ears {
            if rec.vertices.len() < 3 {
                return Err(Error::TraceMismatch(
                    "ear with fewer than 3 vertices".into(),
                ));
            }
            let len = rec.vertices.len() - 1;
            if len as u32 > budget {
                layer_lengths_ok = false;
            }
            for w in rec.vertices.windows(2) {
                let e = g.edge_between(w[0], w[1]).ok_or_else(|| {
                    Error::TraceMismatch(format!("ear edge {} {} missing", w[0], w[1]))
                })?;
                if o.arc(g, e) != (w[0], w[1]) {
                    arcs_match_trace = false;
                }
            }
            for &e in &rec.new_edges {
                if e >= g.m() {
                    return Err(Error::TraceMismatch(format!("edge {e} out of range")));
                }
                if owner[e] {
                    return Err(Error::TraceMismatch(format!("edge {e} owned twice")));
                }
                owner[e] = true;
            }
        }
    }
    for &e in &trace.completed_edges {
        if e >= g.m() {
            return Err(Error::TraceMismatch(format!("edge {e} out of range")));
        }
        if owner[e] {
            return Err(Error::TraceMismatch(format!("edge {e} owned twice")));
        }
        owner[e] = true;
    }
    let edges_partitioned = owner.iter().all(|&b| b);

    let strong = oracles::is_strongly_connected(g, o);
    let (rad, diam) = match oracles::directed_rad_diam(g, o) {
        Some((r, d)) => (Some(r), Some(d)),
        None => (None, None),
    };
    let (ecc_out, ecc_in) = if strong {
        let out = oracles::directed_ecc_out(g, o, trace.center);
        let inn = oracles::directed_ecc_in(g, o, trace.center);
        (Some(out), Some(inn))
    } else {
        (None, None)
    };
    let pass = strong
        && edges_partitioned
        && layer_lengths_ok
        && arcs_match_trace
        && diam.is_some_and(|d| d <= trace.bounds.diam)
        && ecc_out.is_some_and(|e| e <= trace.bounds.rad)
        && ecc_in.is_some_and(|e| e <= trace.bounds.rad);
    Ok(OrientationReport {
        strong,
        rad,
        diam,
        center_ecc_out: ecc_out,
        center_ecc_in: ecc_in,
        rad_bound: trace.bounds.rad,
        diam_bound: trace.bounds.diam,
        layer_lengths_ok,
        edges_partitioned,
        arcs_match_trace,
        pass,
    })
}

/// Extends an orientation of a bridgeless spanning subgraph to the larger
/// graph by the completion rule. Used to check that adding arcs never
/// increases directed distances.
pub fn extend_orientation(
    g: &Graph,
    sub_edges: &[usize],
    sub_orientation: &[(usize, usize)],
) -> Result<Orientation> {
    if sub_edges.len() != sub_orientation.len() {
        return Err(Error::OrientationMismatch(
            "subgraph arc count mismatch".into(),
        ));
    }
    let eccs = metrics::eccentricities(g)?;
    let rad = *eccs.iter().min().unwrap();
    let center = eccs.iter().position(|&e| e == rad).unwrap();
    let dist = metrics::bfs(g, center).dist;
    let mut dirs: Vec<Option<EdgeDir>> = vec![None; g.m()];
    for (&e, &(a, b)) in sub_edges.iter().zip(sub_orientation) {
        let (u, v) = g.endpoints(e);
        let dir = if (a, b) == (u, v) {
            EdgeDir::Forward
        } else if (a, b) == (v, u) {
            EdgeDir::Backward
        } else {
            return Err(Error::OrientationMismatch(format!(
                "arc ({a}, {b}) does not match edge {e}"
            )));
        };
        dirs[e] = Some(dir);
    }
    let dirs = dirs
        .into_iter()
        .enumerate()
        .map(|(e, d)| d.unwrap_or_else(|| completion_dir(g, &dist, e)))
        .collect();
    Orientation::new(g, dirs)
}

/// Directed distances restricted to a subset of arcs; `INF` when
/// unreachable. Used by the monotonicity checks.
pub fn arc_subset_distances(g: &Graph, o: &Orientation, arcs: &[usize]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); g.n()];
    for &e in arcs {
        let (a, b) = o.arc(g, e);
        out[a].push(b);
    }
    (0..g.n())
        .map(|s| {
            let mut dist = vec![INF; g.n()];
            let mut queue = std::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &out[v] {
                    if dist[w] == INF {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
        .collect()
}
