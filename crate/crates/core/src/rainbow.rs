//! Layered rainbow edge-coloring: the same hull growth as the orienter,
//! with each layer's ears colored symmetrically from fresh per-layer color
//! pools. Total colors stay within `sum_i min(2i + 1, eta)`, and every
//! vertex pair gets a rainbow path extractable from the trace alone.

use crate::ears::{self, HullGrowth};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// The layered color bound `sum_{i=1..rad} min(2i + 1, eta)`.
pub fn color_bound(rad: u32, eta: u32) -> u32 {
    debug_assert!(rad == 0 || eta >= 3);
    (1..=rad).map(|i| (2 * i + 1).min(eta)).sum()
}

/// Colors for an ear of `len` edges: `alpha_1 .. alpha_ceil(len/2)` then
/// `beta_floor(len/2) .. beta_1`. Positions already committed by earlier
/// ears must agree with the pattern.
pub fn symmetric_colors(
    len: usize,
    alpha: &[u32],
    beta: &[u32],
    committed: &[Option<u32>],
) -> Result<Vec<u32>> {
    let need_alpha = len.div_ceil(2);
    let need_beta = len / 2;
    if alpha.len() < need_alpha {
        return Err(Error::PoolTooSmall {
            need: need_alpha,
            have: alpha.len(),
        });
    }
    if beta.len() < need_beta {
        return Err(Error::PoolTooSmall {
            need: need_beta,
            have: beta.len(),
        });
    }
    let pattern: Vec<u32> = (1..=len)
        .map(|j| {
            if j <= need_alpha {
                alpha[j - 1]
            } else {
                beta[len - j]
            }
        })
        .collect();
    for (pos, slot) in committed.iter().enumerate() {
        if let Some(c) = slot
            && *c != pattern[pos]
        {
            return Err(Error::ColorConflict {
                edge: pos,
                committed: *c,
                pattern: pattern[pos],
            });
        }
    }
    Ok(pattern)
}

/// One colored ear in the trace; `colors` follow the stored vertex order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoredEarRecord {
    pub vertices: Vec<usize>,
    pub legs: (usize, usize),
    pub closed: bool,
    pub colors: Vec<u32>,
    pub new_edges: Vec<usize>,
    pub fallback: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColorLayer {
    pub i: u32,
    pub pool_alpha: Vec<u32>,
    pub pool_beta: Vec<u32>,
    pub ears: Vec<ColoredEarRecord>,
}

/// Full record of the coloring construction.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColorTrace {
    pub center: usize,
    pub radius: u32,
    pub eta: u32,
    pub layers: Vec<ColorLayer>,
    /// Color reused on every edge never placed on an ear.
    pub completion_color: u32,
    pub total_colors: u32,
}

/// A rainbow path between one vertex pair, with its edge colors.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RainbowCertificate {
    pub x: usize,
    pub y: usize,
    pub path: Vec<usize>,
    pub colors: Vec<u32>,
}

/// Colors a connected bridgeless graph so that every vertex pair is joined
/// by a rainbow path, using at most `color_bound(rad, eta)` colors. Alpha
/// pool ids sit at even offsets and beta ids at odd offsets within each
/// layer's range before compaction.
pub fn rainbow_color(g: &Graph) -> Result<(EdgeColoring, ColorTrace)> {
    let growth = ears::grow_hull(g)?;
    let radius = growth.radius;
    let eta = growth.eta.max(3);

    let budgets: Vec<u32> = (1..=radius)
        .map(|i| HullGrowth::layer_budget(radius, eta, i))
        .collect();
    let mut bases = Vec::with_capacity(budgets.len());
    let mut acc = 0u32;
    for &b in &budgets {
        bases.push(acc);
        acc += b;
    }

    let mut provisional: Vec<Option<u32>> = vec![None; g.m()];
    let mut patterns: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut pools: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for (li, layer) in growth.layers.iter().enumerate() {
        let m_i = budgets[li] as usize;
        let base = bases[li];
        let alpha: Vec<u32> = (0..m_i.div_ceil(2)).map(|k| base + 2 * k as u32).collect();
        let beta: Vec<u32> = (0..m_i / 2).map(|k| base + 2 * k as u32 + 1).collect();
        let mut layer_patterns = Vec::new();
        for grown in layer {
            let ids = grown.ear.edge_ids(g);
            let committed: Vec<Option<u32>> = ids.iter().map(|&id| provisional[id]).collect();
            let pattern = symmetric_colors(ids.len(), &alpha, &beta, &committed)?;
            for (&id, &c) in ids.iter().zip(&pattern) {
                provisional[id] = Some(c);
            }
            layer_patterns.push(pattern);
        }
        patterns.push(layer_patterns);
        pools.push((alpha, beta));
    }
    let completion_provisional = 0u32;
    for slot in provisional.iter_mut() {
        if slot.is_none() {
            *slot = Some(completion_provisional);
        }
    }

    // Compact provisional ids into the dense range 0..total, preserving
    // order so the even/odd pool layout stays auditable.
    let mut used: Vec<u32> = provisional
        .iter()
        .map(|c| c.unwrap())
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    used.sort_unstable();
    let remap = |c: u32| used.binary_search(&c).unwrap() as u32;
    let final_colors: Vec<u32> = provisional.iter().map(|c| remap(c.unwrap())).collect();
    let total_colors = used.len() as u32;
    let bound = color_bound(radius, eta);
    if g.m() > 0 && total_colors > bound {
        return Err(Error::Internal(format!(
            "coloring used {total_colors} colors, bound {bound}"
        )));
    }

    let mut layers = Vec::new();
    for (li, layer_patterns) in patterns.into_iter().enumerate() {
        let (alpha, beta) = &pools[li];
        let keep = |pool: &[u32]| -> Vec<u32> {
            pool.iter()
                .filter(|c| used.binary_search(c).is_ok())
                .map(|&c| remap(c))
                .collect()
        };
        let ears_rec = layer_patterns
            .into_iter()
            .enumerate()
            .map(|(ei, pattern)| {
                let grown = &growth.layers[li][ei];
                ColoredEarRecord {
                    vertices: grown.ear.vertices().to_vec(),
                    legs: grown.ear.leg_edges(g),
                    closed: grown.ear.closed(),
                    colors: pattern.iter().map(|&c| remap(c)).collect(),
                    new_edges: grown.new_edges.clone(),
                    fallback: grown.fallback,
                }
            })
            .collect();
        layers.push(ColorLayer {
            i: li as u32 + 1,
            pool_alpha: keep(alpha),
            pool_beta: keep(beta),
            ears: ears_rec,
        });
    }

    let trace = ColorTrace {
        center: growth.center,
        radius,
        eta: growth.eta,
        layers,
        completion_color: if g.m() > 0 {
            remap(completion_provisional)
        } else {
            0
        },
        total_colors,
    };
    Ok((EdgeColoring::new(g, final_colors)?, trace))
}

/// Per-vertex placement data rebuilt from a trace.
struct TraceIndex {
    layer_of: Vec<u32>,
    /// (layer index, ear index, position) of each non-center vertex.
    host: Vec<Option<(usize, usize, usize)>>,
    edge_color: Vec<u32>,
}

fn index_trace(g: &Graph, t: &ColorTrace) -> Result<TraceIndex> {
    if t.center >= g.n() {
        return Err(Error::TraceMismatch(format!(
            "center {} out of range",
            t.center
        )));
    }
    let mut layer_of = vec![u32::MAX; g.n()];
    let mut host = vec![None; g.n()];
    let mut edge_color = vec![None; g.m()];
    layer_of[t.center] = 0;
    for (li, layer) in t.layers.iter().enumerate() {
        for (ei, rec) in layer.ears.iter().enumerate() {
            if rec.vertices.len() < 3 || rec.colors.len() != rec.vertices.len() - 1 {
                return Err(Error::TraceMismatch("malformed ear record".into()));
            }
            for (pos, w) in rec.vertices.windows(2).enumerate() {
                let e = g.edge_between(w[0], w[1]).ok_or_else(|| {
                    Error::TraceMismatch(format!("ear edge {} {} missing", w[0], w[1]))
                })?;
                match edge_color[e] {
                    None => edge_color[e] = Some(rec.colors[pos]),
                    Some(c) if c == rec.colors[pos] => {}
                    Some(c) => {
                        return Err(Error::TraceMismatch(format!(
                            "edge {e} colored {c} and {}",
                            rec.colors[pos]
                        )));
                    }
                }
            }
            for pos in 1..rec.vertices.len() - 1 {
                let v = rec.vertices[pos];
                if layer_of[v] == u32::MAX {
                    layer_of[v] = li as u32 + 1;
                    host[v] = Some((li, ei, pos));
                }
            }
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| layer_of[v] == u32::MAX) {
        return Err(Error::TraceMismatch(format!(
            "vertex {v} not covered by trace"
        )));
    }
    let edge_color = edge_color
        .into_iter()
        .map(|c| c.unwrap_or(t.completion_color))
        .collect();
    Ok(TraceIndex {
        layer_of,
        host,
        edge_color,
    })
}

/// Extracts a rainbow path between `x` and `y` from the construction
/// trace: endpoints exit along ear halves whose color ranges cannot
/// collide, joined through the inner hull by recursion on layers.
pub fn extract_certificate(
    g: &Graph,
    t: &ColorTrace,
    x: usize,
    y: usize,
) -> Result<RainbowCertificate> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange(x));
    }
    if y >= g.n() {
        return Err(Error::VertexOutOfRange(y));
    }
    if x == y {
        return Err(Error::InvalidParam(
            "certificate needs two distinct vertices".into(),
        ));
    }
    let idx = index_trace(g, t)?;
    let walk = rainbow_walk(g, t, &idx, x, y)?;
    let path = simplify_walk(walk);
    let mut colors = Vec::with_capacity(path.len().saturating_sub(1));
    let mut seen = HashSet::new();
    for w in path.windows(2) {
        let e = g.edge_between(w[0], w[1]).ok_or_else(|| {
            Error::Internal(format!("certificate edge {} {} missing", w[0], w[1]))
        })?;
        let c = idx.edge_color[e];
        if !seen.insert(c) {
            return Err(Error::Internal(format!("certificate repeats color {c}")));
        }
        colors.push(c);
    }
    Ok(RainbowCertificate { x, y, path, colors })
}

/// Sub-walk of an ear from interior position `pos` back to its first foot.
fn exit_via_start(rec: &ColoredEarRecord, pos: usize) -> Vec<usize> {
    let mut v = rec.vertices[..=pos].to_vec();
    v.reverse();
    v
}

/// Sub-walk of an ear from interior position `pos` on to its last foot.
fn exit_via_end(rec: &ColoredEarRecord, pos: usize) -> Vec<usize> {
    rec.vertices[pos..].to_vec()
}

fn rainbow_walk(
    g: &Graph,
    t: &ColorTrace,
    idx: &TraceIndex,
    x: usize,
    y: usize,
) -> Result<Vec<usize>> {
    if x == y {
        return Ok(vec![x]);
    }
    let lx = idx.layer_of[x];
    let ly = idx.layer_of[y];
    if lx == 0 && ly == 0 {
        return Err(Error::TraceMismatch(
            "two distinct vertices at layer 0".into(),
        ));
    }
    if lx == ly {
        let (plx, pex, px) = idx.host[x].unwrap();
        let (ply, pey, py) = idx.host[y].unwrap();
        let rec_x = &t.layers[plx].ears[pex];
        if (plx, pex) == (ply, pey) {
            // Same ear: any subpath is rainbow since all of an ear's colors
            // are distinct.
            let (lo, hi) = (px.min(py), px.max(py));
            let mut seg = rec_x.vertices[lo..=hi].to_vec();
            if px > py {
                seg.reverse();
            }
            return Ok(seg);
        }
        let rec_y = &t.layers[ply].ears[pey];
        // Both on top-layer ears: one endpoint exits toward its
        // pattern-start foot (low alpha colors), the other toward its
        // pattern-end foot (low beta colors). The position comparison picks
        // the preferred pairing; the swapped pairing covers the remaining
        // configurations.
        let build = |x_via_start: bool| -> Result<Vec<usize>> {
            let (head, x_foot) = if x_via_start {
                (exit_via_start(rec_x, px), rec_x.vertices[0])
            } else {
                (exit_via_end(rec_x, px), *rec_x.vertices.last().unwrap())
            };
            let (mut tail, y_foot) = if x_via_start {
                (exit_via_end(rec_y, py), *rec_y.vertices.last().unwrap())
            } else {
                (exit_via_start(rec_y, py), rec_y.vertices[0])
            };
            let hull = rainbow_walk(g, t, idx, x_foot, y_foot)?;
            let mut walk = head;
            extend_walk(&mut walk, hull);
            tail.reverse();
            extend_walk(&mut walk, tail);
            Ok(walk)
        };
        let prefer_start_first = px <= py;
        let first = build(prefer_start_first)?;
        if colors_distinct(g, idx, &first) {
            return Ok(first);
        }
        let second = build(!prefer_start_first)?;
        if colors_distinct(g, idx, &second) {
            return Ok(second);
        }
        Err(Error::Internal(format!(
            "no rainbow routing for pair ({x}, {y})"
        )))
    } else {
        // Exactly one endpoint sits on the deeper layer; send it to the
        // nearer foot of its host ear and recurse inside the hull, whose
        // colors come from strictly earlier pools.
        let (deep, shallow, deep_first) = if lx > ly { (x, y, true) } else { (y, x, false) };
        let (pl, pe, pos) = idx.host[deep].unwrap();
        let rec = &t.layers[pl].ears[pe];
        let len = rec.vertices.len() - 1;
        let exit = if pos <= len - pos {
            exit_via_start(rec, pos)
        } else {
            exit_via_end(rec, pos)
        };
        let foot = *exit.last().unwrap();
        let hull = rainbow_walk(g, t, idx, foot, shallow)?;
        let mut walk = exit;
        extend_walk(&mut walk, hull);
        if !deep_first {
            walk.reverse();
        }
        Ok(walk)
    }
}

fn extend_walk(walk: &mut Vec<usize>, piece: Vec<usize>) {
    debug_assert_eq!(walk.last(), piece.first());
    walk.extend_from_slice(&piece[1..]);
}

fn colors_distinct(g: &Graph, idx: &TraceIndex, walk: &[usize]) -> bool {
    let mut seen = HashSet::new();
    for w in walk.windows(2) {
        match g.edge_between(w[0], w[1]) {
            Some(e) => {
                if !seen.insert(idx.edge_color[e]) {
                    return false;
                }
            }
            None => return false,
        }
    }
    true
}

/// Shortcuts repeated vertices out of a walk; the surviving edges are a
/// subset, so pairwise-distinct colors are preserved.
fn simplify_walk(walk: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    for &v in &walk {
        if let Some(at) = out.iter().position(|&w| w == v) {
            out.truncate(at);
        }
        out.push(v);
    }
    out
}
