//! Ears relative to a growing hull: legs, shortest ears through a leg, and
//! ear selection compatible with directions or colors committed by earlier
//! ears. Also hosts the layered hull-growth loop shared by the orientation
//! and coloring constructions.
//!
//! A hull-ear is a path whose only hull vertices are its two feet; it is
//! closed when the feet coincide. Committed edges are traversable by a new
//! ear only as one contiguous terminal segment whose arcs all run the same
//! way, which keeps every ear orientable as a directed path and colorable
//! by the symmetric pattern without conflicts.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{self, INF, bfs};
use std::collections::VecDeque;

/// A path `u_0, ..., u_k` with both feet in the hull and interior outside
/// it. Vertices are stored so that any committed edges' arcs run forward
/// along the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ear {
    vertices: Vec<usize>,
}

impl Ear {
    pub fn new(vertices: Vec<usize>) -> Ear {
        debug_assert!(vertices.len() >= 3);
        Ear { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn closed(&self) -> bool {
        self.vertices[0] == *self.vertices.last().unwrap()
    }

    pub fn feet(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Interior vertices with their positions along the ear.
    pub fn interior(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices[1..self.vertices.len() - 1]
            .iter()
            .enumerate()
            .map(|(i, &v)| (i + 1, v))
    }

    /// Edge ids along the ear, in sequence order.
    pub fn edge_ids(&self, g: &Graph) -> Vec<usize> {
        self.vertices
            .windows(2)
            .map(|w| g.edge_between(w[0], w[1]).expect("ear edge missing"))
            .collect()
    }

    /// The two end edges.
    pub fn leg_edges(&self, g: &Graph) -> (usize, usize) {
        let ids = self.edge_ids(g);
        (ids[0], *ids.last().unwrap())
    }

    /// Checks the ear-shape invariants against a hull.
    pub fn validate(&self, g: &Graph, h: &[bool]) -> Result<()> {
        let len = self.length();
        if len < 2 || (self.closed() && len < 3) {
            return Err(Error::Internal(format!("ear too short: length {len}")));
        }
        let (a, b) = self.feet();
        if !h[a] || !h[b] {
            return Err(Error::Internal("ear foot outside hull".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for (_, v) in self.interior() {
            if h[v] {
                return Err(Error::Internal(format!("interior vertex {v} in hull")));
            }
            if !seen.insert(v) {
                return Err(Error::Internal(format!("repeated interior vertex {v}")));
            }
        }
        for w in self.vertices.windows(2) {
            if g.edge_between(w[0], w[1]).is_none() {
                return Err(Error::Internal(format!("missing edge {} {}", w[0], w[1])));
            }
        }
        Ok(())
    }
}

/// All edges with exactly one endpoint in `h`, sorted by id. Returns the
/// empty set when `h` covers every vertex.
pub fn legs(g: &Graph, h: &[bool]) -> Vec<usize> {
    (0..g.m())
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            h[u] != h[v]
        })
        .collect()
}

/// Hull state plus the arcs committed by previously chosen ears.
#[derive(Debug, Clone)]
pub struct EarContext {
    h: Vec<bool>,
    committed: Vec<Option<(usize, usize)>>,
    ears: Vec<Ear>,
}

impl EarContext {
    pub fn new(g: &Graph, hull: &[usize]) -> EarContext {
        let mut h = vec![false; g.n()];
        for &v in hull {
            h[v] = true;
        }
        EarContext {
            h,
            committed: vec![None; g.m()],
            ears: Vec::new(),
        }
    }

    pub fn hull(&self) -> &[bool] {
        &self.h
    }

    pub fn is_committed(&self, e: usize) -> bool {
        self.committed[e].is_some()
    }

    pub fn committed_arc(&self, e: usize) -> Option<(usize, usize)> {
        self.committed[e]
    }

    pub fn ears(&self) -> &[Ear] {
        &self.ears
    }

    pub fn absorb(&mut self, v: usize) {
        self.h[v] = true;
    }

    fn has_commitments(&self) -> bool {
        self.ears.iter().any(|e| e.length() > 0)
    }

    /// Commits an ear: every edge gains the arc running forward along the
    /// stored sequence; edges already committed must agree. Returns the
    /// newly committed edge ids.
    pub fn commit(&mut self, g: &Graph, ear: &Ear) -> Result<Vec<usize>> {
        let mut fresh = Vec::new();
        for w in ear.vertices().windows(2) {
            let (a, b) = (w[0], w[1]);
            let e = g
                .edge_between(a, b)
                .ok_or_else(|| Error::Internal(format!("missing edge {a} {b}")))?;
            match self.committed[e] {
                None => {
                    self.committed[e] = Some((a, b));
                    fresh.push(e);
                }
                Some(arc) if arc == (a, b) => {}
                Some(arc) => {
                    return Err(Error::Internal(format!(
                        "arc conflict on edge {e}: committed {arc:?}, ear wants ({a}, {b})"
                    )));
                }
            }
        }
        self.ears.push(ear.clone());
        Ok(fresh)
    }
}

/// A shortest hull-ear containing leg `e`, found by BFS from the non-hull
/// endpoint with hull vertices usable only as the terminal foot. Ties break
/// to the lexicographically smallest vertex sequence.
pub fn optimal_ear(g: &Graph, h: &[bool], e: usize) -> Result<Ear> {
    let (y, x) = leg_endpoints(g, h, e)?;
    let mut dist = vec![INF; g.n()];
    let mut queue = VecDeque::new();
    dist[x] = 0;
    queue.push_back(x);
    while let Some(v) = queue.pop_front() {
        if h[v] {
            continue;
        }
        for &(w, edge) in g.adj(v) {
            if edge == e || dist[w] != INF {
                continue;
            }
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    let steps = (0..g.n())
        .filter(|&z| h[z] && dist[z] != INF)
        .map(|z| dist[z])
        .min()
        .ok_or(Error::BridgeLeg(e))?;

    // Backward-prune layers to vertices that reach a closest foot, then walk
    // forward greedily for the lexicographically smallest sequence.
    let mut good: Vec<Vec<bool>> = vec![vec![false; g.n()]; steps as usize + 1];
    for z in 0..g.n() {
        if h[z] && dist[z] == steps {
            good[steps as usize][z] = true;
        }
    }
    for t in (1..steps).rev() {
        let t = t as usize;
        for v in 0..g.n() {
            if h[v] || dist[v] != t as u32 {
                continue;
            }
            good[t][v] = g
                .adj(v)
                .iter()
                .any(|&(w, edge)| edge != e && good[t + 1][w]);
        }
    }
    let mut seq = vec![y, x];
    let mut cur = x;
    for t in 1..=steps as usize {
        let next = g
            .adj(cur)
            .iter()
            .filter(|&&(w, edge)| edge != e && good[t][w])
            .map(|&(w, _)| w)
            .min()
            .ok_or_else(|| Error::Internal("ear reconstruction dead end".into()))?;
        seq.push(next);
        cur = next;
    }
    Ok(Ear::new(seq))
}

/// A compatible ear chosen against already-committed edges.
#[derive(Debug, Clone)]
pub struct CompatibleEar {
    pub ear: Ear,
    /// Number of committed edges shared with earlier ears; they form one
    /// contiguous terminal run of the ear.
    pub committed_overlap: usize,
    /// True when the terminal-segment rewrite had to repair the search
    /// result; logged into construction traces.
    pub fallback: bool,
}

const FREE: usize = 0;
const WITH: usize = 1;
const AGAINST: usize = 2;

/// Shortest ear through leg `e` whose overlap with committed edges is empty
/// or a single contiguous terminal segment containing the far foot, with
/// coherent arcs. Matches the optimal ear length; a segment-rewrite
/// fallback repairs the rare case where the constrained search falls short.
pub fn compatible_ear(g: &Graph, ctx: &EarContext, e: usize) -> Result<CompatibleEar> {
    let opt = optimal_ear(g, ctx.hull(), e)?;
    if !ctx.has_commitments() {
        return Ok(CompatibleEar {
            ear: opt,
            committed_overlap: 0,
            fallback: false,
        });
    }
    let h = ctx.hull();
    let (y, x) = leg_endpoints(g, h, e)?;

    let start_phase = match ctx.committed_arc(e) {
        None => FREE,
        Some(arc) if arc == (y, x) => WITH,
        Some(_) => AGAINST,
    };

    // BFS over (vertex, phase) states: Free while on uncommitted edges, then
    // riding committed edges with a fixed sense until a hull vertex ends the
    // ear. Minimal state walks are vertex-simple.
    let n = g.n();
    let mut dist = vec![[INF; 3]; n];
    let mut queue = VecDeque::new();
    dist[x][start_phase] = 0;
    queue.push_back((x, start_phase));
    while let Some((v, p)) = queue.pop_front() {
        if h[v] {
            continue;
        }
        let d = dist[v][p];
        for &(w, edge) in g.adj(v) {
            if edge == e {
                continue;
            }
            let Some(np) = next_phase(ctx, p, v, w, edge) else {
                continue;
            };
            if dist[w][np] == INF {
                dist[w][np] = d + 1;
                queue.push_back((w, np));
            }
        }
    }
    let best = (0..n)
        .filter(|&z| h[z])
        .flat_map(|z| dist[z].iter().copied())
        .filter(|&d| d != INF)
        .min();

    let (seq, final_phase) = match best {
        Some(steps) if steps as usize + 1 == opt.length() => {
            reconstruct_state_path(g, ctx, e, y, x, start_phase, &dist, steps)?
        }
        _ => {
            let ear = segment_rewrite(g, ctx, &opt)?;
            let overlap = ear
                .edge_ids(g)
                .iter()
                .filter(|&&id| ctx.is_committed(id))
                .count();
            return Ok(CompatibleEar {
                ear,
                committed_overlap: overlap,
                fallback: true,
            });
        }
    };

    let mut ear = Ear::new(seq);
    if final_phase == AGAINST {
        let mut v = ear.vertices().to_vec();
        v.reverse();
        ear = Ear::new(v);
    }
    let overlap = ear
        .edge_ids(g)
        .iter()
        .filter(|&&id| ctx.is_committed(id))
        .count();
    if ear.length() != opt.length() {
        return Err(Error::Internal(format!(
            "compatible ear length {} differs from optimal {}",
            ear.length(),
            opt.length()
        )));
    }
    Ok(CompatibleEar {
        ear,
        committed_overlap: overlap,
        fallback: false,
    })
}

fn leg_endpoints(g: &Graph, h: &[bool], e: usize) -> Result<(usize, usize)> {
    if e >= g.m() {
        return Err(Error::EdgeOutOfRange(e));
    }
    let (u, v) = g.endpoints(e);
    match (h[u], h[v]) {
        (true, false) => Ok((u, v)),
        (false, true) => Ok((v, u)),
        _ => Err(Error::NotALeg(e)),
    }
}

fn next_phase(ctx: &EarContext, p: usize, v: usize, w: usize, edge: usize) -> Option<usize> {
    match ctx.committed_arc(edge) {
        None => (p == FREE).then_some(FREE),
        Some(arc) => {
            let with_arc = arc == (v, w);
            match p {
                FREE => Some(if with_arc { WITH } else { AGAINST }),
                WITH if with_arc => Some(WITH),
                AGAINST if !with_arc => Some(AGAINST),
                _ => None,
            }
        }
    }
}

/// Lexicographically smallest vertex sequence among minimum-length state
/// walks from the leg to a hull foot.
#[allow(clippy::too_many_arguments)]
fn reconstruct_state_path(
    g: &Graph,
    ctx: &EarContext,
    e: usize,
    y: usize,
    x: usize,
    start_phase: usize,
    dist: &[[u32; 3]],
    steps: u32,
) -> Result<(Vec<usize>, usize)> {
    let h = ctx.hull();
    let n = g.n();
    let total = steps as usize;
    let mut good: Vec<Vec<[bool; 3]>> = vec![vec![[false; 3]; n]; total + 1];
    for z in 0..n {
        if h[z] {
            for p in 0..3 {
                if dist[z][p] == steps {
                    good[total][z][p] = true;
                }
            }
        }
    }
    for t in (1..total).rev() {
        for v in 0..n {
            if h[v] {
                continue;
            }
            for p in 0..3 {
                if dist[v][p] != t as u32 {
                    continue;
                }
                let ok = g.adj(v).iter().any(|&(w, edge)| {
                    edge != e && next_phase(ctx, p, v, w, edge).is_some_and(|np| good[t + 1][w][np])
                });
                good[t][v][p] = ok;
            }
        }
    }

    let mut seq = vec![y, x];
    let mut alive = [false; 3];
    alive[start_phase] = true;
    let mut cur = x;
    for t in 1..=total {
        let mut chosen: Option<usize> = None;
        let mut next_alive = [false; 3];
        for &(w, edge) in g.adj(cur) {
            if edge == e {
                continue;
            }
            if let Some(c) = chosen
                && w > c
            {
                continue;
            }
            let mut phases = [false; 3];
            let mut any = false;
            for p in 0..3 {
                if !alive[p] {
                    continue;
                }
                if let Some(np) = next_phase(ctx, p, cur, w, edge)
                    && good[t][w][np]
                {
                    phases[np] = true;
                    any = true;
                }
            }
            if any {
                match chosen {
                    Some(c) if c == w => {
                        for p in 0..3 {
                            next_alive[p] |= phases[p];
                        }
                    }
                    _ => {
                        chosen = Some(w);
                        next_alive = phases;
                    }
                }
            }
        }
        let w = chosen.ok_or_else(|| Error::Internal("state path dead end".into()))?;
        seq.push(w);
        alive = next_alive;
        cur = w;
    }
    let final_phase = (0..3)
        .find(|&p| alive[p])
        .ok_or_else(|| Error::Internal("no final phase".into()))?;
    Ok((seq, final_phase))
}

/// Terminal-segment repair: rewrites an optimal ear whose committed overlap
/// is not yet a single terminal run by splicing in the equal-length tail of
/// the committed ear it crosses. Equal tail lengths follow from both ears
/// being shortest for their legs.
fn segment_rewrite(g: &Graph, ctx: &EarContext, opt: &Ear) -> Result<Ear> {
    let mut ear = opt.clone();
    for _ in 0..=g.m() {
        let ids = ear.edge_ids(g);
        let committed: Vec<bool> = ids.iter().map(|&id| ctx.is_committed(id)).collect();
        if committed.iter().all(|&c| !c) {
            return Ok(ear);
        }
        let runs = contiguous_runs(&committed);
        if runs.len() == 1 {
            let (start, end) = runs[0];
            if end == ids.len() - 1 || start == 0 {
                return normalize_direction(g, ctx, ear);
            }
        }
        // Rewrite the run closest to the far end into a full tail.
        let &(_, run_end) = runs.last().unwrap();
        let junction = ear.vertices()[run_end + 1];
        let tail_len = ear.length() - (run_end + 1);
        let owner = ctx
            .ears()
            .iter()
            .find(|candidate| candidate.edge_ids(g).contains(&ids[run_end]))
            .ok_or_else(|| Error::Internal("committed edge without owner ear".into()))?;
        let pos = owner
            .vertices()
            .iter()
            .position(|&v| v == junction)
            .ok_or_else(|| Error::Internal("junction not on owner ear".into()))?;
        let to_end = owner.length() - pos;
        let replacement: Vec<usize> = if to_end == tail_len {
            owner.vertices()[pos..].to_vec()
        } else if pos == tail_len {
            let mut r = owner.vertices()[..=pos].to_vec();
            r.reverse();
            r
        } else {
            return Err(Error::Internal(
                "no equal-length committed tail for rewrite".into(),
            ));
        };
        let mut vertices = ear.vertices()[..=run_end + 1].to_vec();
        vertices.extend_from_slice(&replacement[1..]);
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices[..vertices.len() - 1] {
            if !seen.insert(v) {
                return Err(Error::Internal("rewrite produced a non-simple ear".into()));
            }
        }
        ear = Ear::new(vertices);
    }
    Err(Error::Internal(
        "ear overlap rewrite did not converge".into(),
    ))
}

fn contiguous_runs(flags: &[bool]) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut start = None;
    for (i, &f) in flags.iter().enumerate() {
        match (f, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                runs.push((s, i - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        runs.push((s, flags.len() - 1));
    }
    runs
}

fn normalize_direction(g: &Graph, ctx: &EarContext, ear: Ear) -> Result<Ear> {
    let mut forward = true;
    let mut backward = true;
    for w in ear.vertices().windows(2) {
        let edge = g.edge_between(w[0], w[1]).unwrap();
        if let Some(arc) = ctx.committed_arc(edge) {
            if arc != (w[0], w[1]) {
                forward = false;
            }
            if arc != (w[1], w[0]) {
                backward = false;
            }
        }
    }
    if forward {
        Ok(ear)
    } else if backward {
        let mut v = ear.vertices().to_vec();
        v.reverse();
        Ok(Ear::new(v))
    } else {
        Err(Error::Internal("incoherent committed arcs on ear".into()))
    }
}

/// One committed ear inside a layer of the growth.
#[derive(Debug, Clone)]
pub struct GrownEar {
    pub ear: Ear,
    pub committed_overlap: usize,
    pub fallback: bool,
    /// Edge ids first committed by this ear.
    pub new_edges: Vec<usize>,
}

/// The layered growth shared by the orientation and coloring constructions:
/// center, BFS layers, the ears committed per layer, and where each vertex
/// joined the hull.
#[derive(Debug, Clone)]
pub struct HullGrowth {
    pub center: usize,
    pub radius: u32,
    pub eta: u32,
    pub dist: Vec<u32>,
    pub layers: Vec<Vec<GrownEar>>,
    /// Layer at which each vertex entered the hull (0 for the center).
    pub vertex_layer: Vec<u32>,
    /// For non-center vertices: (layer index, ear index, position) of the
    /// first ear that absorbed the vertex.
    pub host: Vec<Option<(usize, usize, usize)>>,
    /// Arcs committed along ears, forward along each stored sequence.
    pub committed: Vec<Option<(usize, usize)>>,
}

impl HullGrowth {
    /// Layer budget: at layer `i`, every chosen ear satisfies
    /// `length <= min(2 (radius - i + 1) + 1, eta)`.
    pub fn layer_budget(radius: u32, eta: u32, i: u32) -> u32 {
        (2 * (radius - i + 1) + 1).min(eta)
    }
}

/// Grows the hull from the lexicographically smallest center outward.
/// Fails on disconnected or bridged inputs.
pub fn grow_hull(g: &Graph) -> Result<HullGrowth> {
    let eccs = metrics::eccentricities(g)?;
    let br = metrics::bridges(g);
    if !br.is_empty() {
        return Err(Error::Bridged(br));
    }
    let radius = *eccs.iter().min().unwrap();
    let center = eccs.iter().position(|&e| e == radius).unwrap();
    let eta = if g.m() == 0 { 0 } else { crate::cycles::eta(g) };
    let dist = bfs(g, center).dist;

    let mut ctx = EarContext::new(g, &[center]);
    let mut committed_deg = vec![0u32; g.n()];
    let mut vertex_layer = vec![u32::MAX; g.n()];
    let mut host = vec![None; g.n()];
    vertex_layer[center] = 0;
    let mut layers: Vec<Vec<GrownEar>> = Vec::new();

    for i in 1..=radius {
        let budget = HullGrowth::layer_budget(radius, eta, i);
        let mut layer: Vec<GrownEar> = Vec::new();
        loop {
            let pick = (0..g.n()).find(|&v| dist[v] == i && !ctx.hull()[v] && committed_deg[v] < 2);
            let Some(x) = pick else { break };
            debug_assert_eq!(committed_deg[x], 0, "picked vertex already on an ear");
            let y = g
                .adj(x)
                .iter()
                .filter(|&&(w, _)| ctx.hull()[w])
                .map(|&(w, _)| w)
                .min()
                .ok_or_else(|| Error::Internal(format!("vertex {x} has no hull neighbor")))?;
            let leg = g.edge_between(x, y).unwrap();
            let chosen = compatible_ear(g, &ctx, leg)?;
            if chosen.ear.length() as u32 > budget {
                return Err(Error::Internal(format!(
                    "layer {i} ear of length {} exceeds budget {budget}",
                    chosen.ear.length()
                )));
            }
            chosen.ear.validate(g, ctx.hull())?;
            let new_edges = ctx.commit(g, &chosen.ear)?;
            for &edge in &new_edges {
                let (a, b) = g.endpoints(edge);
                committed_deg[a] += 1;
                committed_deg[b] += 1;
            }
            let ear_idx = layer.len();
            for (pos, v) in chosen.ear.interior() {
                if vertex_layer[v] == u32::MAX {
                    vertex_layer[v] = i;
                    host[v] = Some((i as usize - 1, ear_idx, pos));
                }
            }
            layer.push(GrownEar {
                ear: chosen.ear,
                committed_overlap: chosen.committed_overlap,
                fallback: chosen.fallback,
                new_edges,
            });
        }
        for v in 0..g.n() {
            if !ctx.hull()[v] && committed_deg[v] >= 2 {
                ctx.absorb(v);
            }
        }
        for v in 0..g.n() {
            if dist[v] <= i && !ctx.hull()[v] {
                return Err(Error::Internal(format!(
                    "vertex {v} at distance {} missing from hull after layer {i}",
                    dist[v]
                )));
            }
        }
        layers.push(layer);
    }

    let committed = (0..g.m()).map(|e| ctx.committed_arc(e)).collect();
    Ok(HullGrowth {
        center,
        radius,
        eta,
        dist,
        layers,
        vertex_layer,
        host,
        committed,
    })
}
