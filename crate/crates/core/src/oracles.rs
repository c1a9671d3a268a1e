//! Independent ground truth: strong connectivity, directed radius and
//! diameter, exhaustive minimum oriented diameter, exact rainbow
//! connectivity, and exact rainbow connection number for tiny graphs.
//! These never share code paths with the constructions they check.

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph, Orientation};
use crate::metrics::{self, INF};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};

fn directed_bfs(adj: &[Vec<usize>], s: usize) -> Vec<u32> {
    let mut dist = vec![INF; adj.len()];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == INF {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// True iff one vertex reaches all others and is reached by all others.
pub fn is_strongly_connected(g: &Graph, o: &Orientation) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let out = o.out_adj(g);
    if directed_bfs(&out, 0).contains(&INF) {
        return false;
    }
    let inn = o.in_adj(g);
    directed_bfs(&inn, 0).iter().all(|&d| d != INF)
}

/// Exact directed radius (minimum out-eccentricity) and diameter via
/// all-source directed BFS; `None` when some ordered pair is unreachable.
pub fn directed_rad_diam(g: &Graph, o: &Orientation) -> Option<(u32, u32)> {
    if g.n() == 0 {
        return None;
    }
    let out = o.out_adj(g);
    let eccs: Vec<u32> = (0..g.n())
        .into_par_iter()
        .map(|s| directed_bfs(&out, s).into_iter().max().unwrap())
        .collect();
    if eccs.contains(&INF) {
        return None;
    }
    Some((
        eccs.iter().copied().min().unwrap(),
        eccs.iter().copied().max().unwrap(),
    ))
}

/// Maximum directed distance from `v` to any vertex.
pub fn directed_ecc_out(g: &Graph, o: &Orientation, v: usize) -> u32 {
    directed_bfs(&o.out_adj(g), v).into_iter().max().unwrap()
}

/// Maximum directed distance from any vertex to `v`.
pub fn directed_ecc_in(g: &Graph, o: &Orientation, v: usize) -> u32 {
    directed_bfs(&o.in_adj(g), v).into_iter().max().unwrap()
}

/// Result of the exhaustive orientation sweep.
#[derive(Debug, Clone, Serialize)]
pub struct OrientationSearchResult {
    pub best_diam: u32,
    pub best_rad: u32,
    #[serde(skip)]
    pub best_orientation: Orientation,
    pub strong_count: u64,
    pub enumerated: u64,
}

/// Exact minimum oriented diameter (and radius) over all `2^m`
/// orientations of a bridgeless connected graph. The bitmask range is
/// partitioned across threads and merged with a deterministic tie-break on
/// the mask value, so parallel and serial runs agree exactly.
pub fn optimal_oriented_diameter(g: &Graph, max_edges: usize) -> Result<OrientationSearchResult> {
    let m = g.m();
    if m > max_edges {
        return Err(Error::TooManyEdges { m, max_edges });
    }
    if m > 62 {
        return Err(Error::TooManyEdges { m, max_edges: 62 });
    }
    metrics::radius_diameter_centers(g)?;
    let br = metrics::bridges(g);
    if !br.is_empty() {
        return Err(Error::Bridged(br));
    }

    let n = g.n();
    let edges = g.edges().to_vec();
    let total: u64 = 1u64 << m;
    let chunk: u64 = 1u64 << m.saturating_sub(8).min(16);
    let starts: Vec<u64> = (0..total).step_by(chunk.max(1) as usize).collect();

    #[derive(Clone, Copy)]
    struct Best {
        diam: u32,
        diam_mask: u64,
        rad: u32,
        rad_mask: u64,
        strong: u64,
    }
    let identity = Best {
        diam: INF,
        diam_mask: 0,
        rad: INF,
        rad_mask: 0,
        strong: 0,
    };
    let merge = |a: Best, b: Best| Best {
        diam: a.diam.min(b.diam),
        diam_mask: match a.diam.cmp(&b.diam) {
            std::cmp::Ordering::Less => a.diam_mask,
            std::cmp::Ordering::Greater => b.diam_mask,
            std::cmp::Ordering::Equal => a.diam_mask.min(b.diam_mask),
        },
        rad: a.rad.min(b.rad),
        rad_mask: match a.rad.cmp(&b.rad) {
            std::cmp::Ordering::Less => a.rad_mask,
            std::cmp::Ordering::Greater => b.rad_mask,
            std::cmp::Ordering::Equal => a.rad_mask.min(b.rad_mask),
        },
        strong: a.strong + b.strong,
    };

    let best = starts
        .par_iter()
        .map(|&start| {
            let end = (start + chunk).min(total);
            let mut local = identity;
            let mut out_mask = vec![0u64; n];
            for mask in start..end {
                for v in out_mask.iter_mut() {
                    *v = 0;
                }
                for (e, &(u, v)) in edges.iter().enumerate() {
                    if mask >> e & 1 == 0 {
                        out_mask[u] |= 1 << v;
                    } else {
                        out_mask[v] |= 1 << u;
                    }
                }
                if let Some((rad, diam)) = mask_rad_diam(&out_mask) {
                    local.strong += 1;
                    if diam < local.diam || (diam == local.diam && mask < local.diam_mask) {
                        local.diam = diam;
                        local.diam_mask = mask;
                    }
                    if rad < local.rad || (rad == local.rad && mask < local.rad_mask) {
                        local.rad = rad;
                        local.rad_mask = mask;
                    }
                }
            }
            local
        })
        .reduce(|| identity, merge);

    if best.strong == 0 {
        return Err(Error::Internal(
            "no strong orientation found for a bridgeless graph".into(),
        ));
    }
    Ok(OrientationSearchResult {
        best_diam: best.diam,
        best_rad: best.rad,
        best_orientation: Orientation::from_mask(g, best.diam_mask),
        strong_count: best.strong,
        enumerated: total,
    })
}

/// Per-source frontier-expansion BFS over adjacency bitmasks; returns
/// (radius, diameter) or `None` when not strong.
fn mask_rad_diam(out_mask: &[u64]) -> Option<(u32, u32)> {
    let n = out_mask.len();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut rad = INF;
    let mut diam = 0;
    for s in 0..n {
        let mut visited = 1u64 << s;
        let mut frontier = visited;
        let mut depth = 0u32;
        let mut ecc = 0u32;
        while visited != full {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= out_mask[v];
            }
            next &= !visited;
            if next == 0 {
                return None;
            }
            depth += 1;
            ecc = depth;
            visited |= next;
            frontier = next;
        }
        rad = rad.min(ecc);
        diam = diam.max(ecc);
    }
    Some((rad, diam))
}

/// Outcome of the exact rainbow-connectivity check.
#[derive(Debug, Clone, Serialize)]
pub struct RainbowCheck {
    pub connected: bool,
    /// Smallest failing ordered pair, when not rainbow connected.
    pub failing_pair: Option<(usize, usize)>,
}

/// Exact rainbow connectivity by per-pair search over (vertex, used color
/// set) states. Capped at `max_colors` (18 keeps the state space at desk
/// scale).
pub fn is_rainbow_connected(g: &Graph, c: &EdgeColoring, max_colors: u32) -> Result<RainbowCheck> {
    if c.color_count() > max_colors {
        return Err(Error::TooManyColors {
            count: c.color_count(),
            max: max_colors,
        });
    }
    if c.colors().len() != g.m() {
        return Err(Error::ColoringMismatch("edge count mismatch".into()));
    }
    if g.n() <= 1 {
        return Ok(RainbowCheck {
            connected: true,
            failing_pair: None,
        });
    }
    let colors = c.color_count() as usize;
    let failing: Vec<Option<(usize, usize)>> = (0..g.n())
        .into_par_iter()
        .map(|s| {
            let missing = rainbow_reach(g, c, colors, s);
            missing.map(|t| (s, t))
        })
        .collect();
    let failing_pair = failing.into_iter().flatten().min();
    Ok(RainbowCheck {
        connected: failing_pair.is_none(),
        failing_pair,
    })
}

/// Smallest vertex not reachable from `s` by a rainbow path, if any.
fn rainbow_reach(g: &Graph, c: &EdgeColoring, colors: usize, s: usize) -> Option<usize> {
    let n = g.n();
    let masks = 1usize << colors;
    let mut visited = vec![0u64; (n * masks).div_ceil(64)];
    let mut reached = vec![false; n];
    let mut reached_count = 1;
    reached[s] = true;
    let mut queue = VecDeque::new();
    let state = |v: usize, mask: usize| v * masks + mask;
    let test_and_set = |bits: &mut [u64], idx: usize| -> bool {
        let (w, b) = (idx / 64, idx % 64);
        let was = bits[w] >> b & 1 == 1;
        bits[w] |= 1 << b;
        was
    };
    test_and_set(&mut visited, state(s, 0));
    queue.push_back((s, 0usize));
    while let Some((v, mask)) = queue.pop_front() {
        if reached_count == n {
            return None;
        }
        for &(w, e) in g.adj(v) {
            let bit = 1usize << c.color(e);
            if mask & bit != 0 {
                continue;
            }
            let nm = mask | bit;
            if !test_and_set(&mut visited, state(w, nm)) {
                if !reached[w] {
                    reached[w] = true;
                    reached_count += 1;
                }
                queue.push_back((w, nm));
            }
        }
    }
    if reached_count == n {
        None
    } else {
        (0..n).find(|&t| !reached[t])
    }
}

/// A shortest rainbow path from `x` to `y` under the coloring, as a vertex
/// sequence, or `None` when no rainbow path exists.
pub fn rainbow_witness(
    g: &Graph,
    c: &EdgeColoring,
    max_colors: u32,
    x: usize,
    y: usize,
) -> Result<Option<Vec<usize>>> {
    if c.color_count() > max_colors {
        return Err(Error::TooManyColors {
            count: c.color_count(),
            max: max_colors,
        });
    }
    if x >= g.n() {
        return Err(Error::VertexOutOfRange(x));
    }
    if y >= g.n() {
        return Err(Error::VertexOutOfRange(y));
    }
    if x == y {
        return Ok(Some(vec![x]));
    }
    let mut parent: HashMap<(usize, u32), (usize, u32)> = HashMap::new();
    let mut queue = VecDeque::new();
    parent.insert((x, 0), (x, 0));
    queue.push_back((x, 0u32));
    while let Some((v, mask)) = queue.pop_front() {
        for &(w, e) in g.adj(v) {
            let bit = 1u32 << c.color(e);
            if mask & bit != 0 {
                continue;
            }
            let key = (w, mask | bit);
            if parent.contains_key(&key) {
                continue;
            }
            parent.insert(key, (v, mask));
            if w == y {
                let mut path = vec![w];
                let mut cur = key;
                while parent[&cur] != cur {
                    cur = parent[&cur];
                    path.push(cur.0);
                }
                path.reverse();
                return Ok(Some(path));
            }
            queue.push_back(key);
        }
    }
    Ok(None)
}

/// Witness rainbow paths for every vertex pair; `None` marks a pair with
/// no rainbow path under the coloring.
pub fn rainbow_witnesses(
    g: &Graph,
    c: &EdgeColoring,
    max_colors: u32,
) -> Result<Vec<((usize, usize), Option<Vec<usize>>)>> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            out.push(((x, y), rainbow_witness(g, c, max_colors, x, y)?));
        }
    }
    Ok(out)
}

/// Exact rainbow connection number for tiny graphs: the smallest `k` such
/// that some `k`-coloring is rainbow connected, searching colorings in
/// canonical first-use order to divide out color renaming. Starts at the
/// diameter, which is always a lower bound.
pub fn exact_rc(g: &Graph, max_edges: usize) -> Result<u32> {
    let m = g.m();
    if m > max_edges {
        return Err(Error::TooManyEdges { m, max_edges });
    }
    if g.n() <= 1 {
        return Ok(0);
    }
    let (_, diam, _) = metrics::radius_diameter_centers(g)?;
    for k in diam..=m as u32 {
        if some_rainbow_coloring(g, k) {
            return Ok(k);
        }
    }
    Err(Error::Internal(
        "no rainbow coloring found with one color per edge".into(),
    ))
}

/// Tries every canonical coloring with at most `k` colors (each new color
/// id is the smallest unused one) and reports whether one is rainbow
/// connected with exactly `k` colors in range.
fn some_rainbow_coloring(g: &Graph, k: u32) -> bool {
    fn rec(g: &Graph, k: u32, colors: &mut Vec<u32>, used: u32) -> bool {
        if colors.len() == g.m() {
            if used != k {
                return false;
            }
            let coloring = EdgeColoring::new(g, colors.clone()).unwrap();
            let check = is_rainbow_connected(g, &coloring, k.max(1)).unwrap();
            return check.connected;
        }
        let limit = (used + 1).min(k);
        for c in 0..limit {
            colors.push(c);
            let next_used = used.max(c + 1);
            // Prune: the remaining edges must be able to introduce the
            // missing colors.
            let remaining = (g.m() - colors.len()) as u32;
            if k - next_used <= remaining && rec(g, k, colors, next_used) {
                return true;
            }
            colors.pop();
        }
        false
    }
    if k == 0 {
        return g.m() == 0;
    }
    if k > g.m() as u32 {
        return false;
    }
    rec(g, k, &mut Vec::with_capacity(g.m()), 0)
}
