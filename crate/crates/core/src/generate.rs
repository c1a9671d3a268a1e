//! Graph families: the extremal examples driving the bound checks, seeded
//! random corpora for property testing, and a few named small graphs.
//!
//! Each family asserts its advertised structural parameters on generation
//! and fails loudly when a parameter does not hold.

use crate::cycles;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics;
use rand::RngExt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Family selector with per-family parameters, mirrored by the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    TriangleTree {
        depth: u32,
    },
    ExtremalRc {
        r: u32,
        eta: u32,
        copies: Option<u64>,
    },
    WheelExample {
        r: u32,
        k: u32,
    },
    RandomBridgeless {
        n: usize,
        extra_ears: usize,
        seed: u64,
    },
    BipartiteDense {
        n: usize,
        m: usize,
        seed: u64,
    },
    DisconnectedCounterexample {
        n: usize,
        m: usize,
    },
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::TriangleTree { depth } => gen_triangle_tree(depth),
        FamilySpec::ExtremalRc { r, eta, copies } => gen_extremal_rc(r, eta, copies),
        FamilySpec::WheelExample { r, k } => gen_wheel_example(r, k),
        FamilySpec::RandomBridgeless {
            n,
            extra_ears,
            seed,
        } => gen_random_bridgeless(n, extra_ears, seed),
        FamilySpec::BipartiteDense { n, m, seed } => gen_bipartite_dense(n, m, seed),
        FamilySpec::DisconnectedCounterexample { n, m } => gen_disconnected_counterexample(n, m),
    }
}

struct Builder {
    next: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Builder {
        Builder {
            next: 0,
            edges: Vec::new(),
        }
    }
    fn vertex(&mut self) -> usize {
        let v = self.next;
        self.next += 1;
        v
    }
    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }
    /// Path of `len` edges from `a` to `b` through fresh interior vertices.
    fn path(&mut self, a: usize, b: usize, len: usize) {
        let mut prev = a;
        for _ in 1..len {
            let v = self.vertex();
            self.edge(prev, v);
            prev = v;
        }
        self.edge(prev, b);
    }
    fn finish(self) -> Result<Graph> {
        Graph::new(self.next, self.edges)
    }
}

fn assert_param(name: &str, measured: u32, expected: u32) -> Result<()> {
    if measured != expected {
        return Err(Error::InvalidParam(format!(
            "generated graph has {name} = {measured}, expected {expected}"
        )));
    }
    Ok(())
}

fn assert_bridgeless(g: &Graph) -> Result<()> {
    let br = metrics::bridges(g);
    if br.is_empty() {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "generator produced bridges {br:?}"
        )))
    }
}

/// Binary tree of triangles: a rooted triangle whose two non-root corners
/// each carry the previous depth's tree, doubled by gluing two copies at
/// their roots. Radius equals the depth and every edge lies on a triangle,
/// yet every strong orientation has radius 2*depth and diameter 4*depth.
pub fn gen_triangle_tree(depth: u32) -> Result<Graph> {
    if !(1..=8).contains(&depth) {
        return Err(Error::InvalidParam(format!(
            "triangle_tree depth {depth} outside 1..=8"
        )));
    }
    fn attach(b: &mut Builder, root: usize, depth: u32) {
        let u1 = b.vertex();
        let u2 = b.vertex();
        b.edge(root, u1);
        b.edge(u1, u2);
        b.edge(u2, root);
        if depth > 1 {
            attach(b, u1, depth - 1);
            attach(b, u2, depth - 1);
        }
    }
    let mut b = Builder::new();
    let root = b.vertex();
    attach(&mut b, root, depth);
    attach(&mut b, root, depth);
    let g = b.finish()?;
    assert_bridgeless(&g)?;
    let (rad, _, _) = metrics::radius_diameter_centers(&g)?;
    assert_param("radius", rad, depth)?;
    assert_param("eta", cycles::eta(&g), 3)?;
    Ok(g)
}

/// Number of colors the layered bound allows: sum over layers of
/// `min(2 i + 1, eta)`.
fn layered_color_bound(rad: u32, eta: u32) -> u64 {
    (1..=rad as u64).map(|i| (2 * i + 1).min(eta as u64)).sum()
}

/// The rainbow-extremal family: a chain `x_0 ... x_r` where consecutive
/// chain vertices are joined both by an edge and by a parallel path of
/// length `min(2 i, eta - 1)`, with `copies` copies glued at `x_0`. The
/// default copy count is the pigeonhole-tight `bound^r + 1`.
pub fn gen_extremal_rc(r: u32, eta: u32, copies: Option<u64>) -> Result<Graph> {
    if r < 1 {
        return Err(Error::InvalidParam("extremal_rc needs r >= 1".into()));
    }
    if !(3..=2 * r + 1).contains(&eta) {
        return Err(Error::InvalidParam(format!(
            "extremal_rc needs 3 <= eta <= 2r + 1, got eta = {eta}, r = {r}"
        )));
    }
    let bound = layered_color_bound(r, eta);
    let copies = copies.unwrap_or_else(|| bound.pow(r).saturating_add(1));
    if copies < 1 {
        return Err(Error::InvalidParam("copies must be at least 1".into()));
    }
    // One copy has 1 + sum(1 + len(P_i) - 1) vertices; cap the composite.
    let per_copy: u64 = (1..=r as u64)
        .map(|i| 1 + (2 * i).min(eta as u64 - 1) - 1)
        .sum();
    let total = 1 + copies * per_copy;
    if total > 1_000_000 {
        return Err(Error::InvalidParam(format!(
            "extremal_rc composite would have {total} vertices; override copies"
        )));
    }

    let mut b = Builder::new();
    let hub = b.vertex();
    for _ in 0..copies {
        let mut prev = hub;
        for i in 1..=r {
            let xi = b.vertex();
            b.edge(prev, xi);
            let len = (2 * i).min(eta - 1) as usize;
            b.path(prev, xi, len);
            prev = xi;
        }
    }
    let g = b.finish()?;
    assert_bridgeless(&g)?;
    assert_param("eta", cycles::eta(&g), eta)?;
    if eta == 3 {
        // With eta = 3 every parallel path has length 2 and the hub
        // eccentricity equals r.
        let profile = metrics::bfs(&g, hub);
        let ecc = profile.dist.iter().copied().max().unwrap();
        assert_param("hub eccentricity", ecc, r)?;
    }
    Ok(g)
}

/// The wheel-derived family with radius r, diameter 2r, and every edge on a
/// triangle: a hub joined to k rim vertices, each rim edge subdivided into
/// a path of length r, and an apex vertex added over every edge.
///
/// Subdividing the rim (rather than the spokes) is what makes the
/// advertised parameters hold: apexes over the deepest rim edges sit at
/// distance exactly r from the hub, and opposite deep apexes are 2r apart
/// with every connecting route passing the hub.
pub fn gen_wheel_example(r: u32, k: u32) -> Result<Graph> {
    if r < 3 {
        return Err(Error::InvalidParam("wheel_example needs r >= 3".into()));
    }
    if k < 2 * r {
        return Err(Error::InvalidParam(format!(
            "wheel_example needs k >= 2r, got k = {k}, r = {r}"
        )));
    }
    let mut b = Builder::new();
    let hub = b.vertex();
    let rim: Vec<usize> = (0..k).map(|_| b.vertex()).collect();
    for &u in &rim {
        b.edge(hub, u);
    }
    for i in 0..k as usize {
        let a = rim[i];
        let c = rim[(i + 1) % k as usize];
        b.path(a, c, r as usize);
    }
    let base_edges = b.edges.clone();
    for &(x, y) in &base_edges {
        let apex = b.vertex();
        b.edge(apex, x);
        b.edge(apex, y);
    }
    let g = b.finish()?;
    assert_bridgeless(&g)?;
    let (rad, diam, _) = metrics::radius_diameter_centers(&g)?;
    assert_param("radius", rad, r)?;
    assert_param("diameter", diam, 2 * r)?;
    assert_param("eta", cycles::eta(&g), 3)?;
    Ok(g)
}

/// Random bridgeless graph: a seed cycle, then random ears (paths between
/// existing vertices through fresh interiors) until all `n` vertices are
/// used, then `extra_ears` more single-edge ears. Every edge lies on a
/// cycle by construction.
pub fn gen_random_bridgeless(n: usize, extra_ears: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParam("random_bridgeless needs n >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
    let cycle_len = rng.random_range(3..=n.min(8));
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut in_graph: Vec<usize> = order[..cycle_len].to_vec();
    for i in 0..cycle_len {
        edges.push((in_graph[i], in_graph[(i + 1) % cycle_len]));
    }
    let mut pool: Vec<usize> = order[cycle_len..].to_vec();

    while !pool.is_empty() {
        let want = rng.random_range(2..=5usize);
        let interior = (want - 1).min(pool.len());
        let a = in_graph[rng.random_range(0..in_graph.len())];
        let b = loop {
            let cand = in_graph[rng.random_range(0..in_graph.len())];
            if cand != a {
                break cand;
            }
        };
        let mut prev = a;
        for _ in 0..interior {
            let v = pool.pop().unwrap();
            edges.push((prev, v));
            in_graph.push(v);
            prev = v;
        }
        edges.push((prev, b));
    }

    let mut added = 0;
    let mut attempts = 0;
    while added < extra_ears && attempts < extra_ears * 20 + 100 {
        attempts += 1;
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if edges.iter().any(|&(u, v)| (u.min(v), u.max(v)) == key) {
            continue;
        }
        edges.push((a, b));
        added += 1;
    }

    let g = Graph::new(n, edges)?;
    assert_bridgeless(&g)?;
    metrics::radius_diameter_centers(&g)?;
    Ok(g)
}

/// Random bipartite graph on parts of sizes `n` and `m` where every left
/// degree exceeds `ceil(m/2)` and every right degree exceeds `ceil(n/2)`.
pub fn gen_bipartite_dense(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParam(
            "bipartite_dense needs n, m >= 2".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let left_target = m.div_ceil(2) + 1;
    let right_target = n.div_ceil(2) + 1;
    let mut has = vec![vec![false; m]; n];

    for l in 0..n {
        let mut rights: Vec<usize> = (0..m).collect();
        for i in (1..m).rev() {
            let j = rng.random_range(0..=i);
            rights.swap(i, j);
        }
        for &rt in rights.iter().take(left_target) {
            has[l][rt] = true;
        }
    }
    for rt in 0..m {
        loop {
            let deg = (0..n).filter(|&l| has[l][rt]).count();
            if deg >= right_target {
                break;
            }
            let l = rng.random_range(0..n);
            has[l][rt] = true;
        }
    }

    let mut edges = Vec::new();
    for (l, row) in has.iter().enumerate() {
        for (rt, &present) in row.iter().enumerate() {
            if present {
                edges.push((l, n + rt));
            }
        }
    }
    let g = Graph::new(n + m, edges)?;
    for l in 0..n {
        if g.degree(l) <= m.div_ceil(2) {
            return Err(Error::Internal(format!("left degree too small at {l}")));
        }
    }
    for rt in 0..m {
        if g.degree(n + rt) <= n.div_ceil(2) {
            return Err(Error::Internal(format!("right degree too small at {rt}")));
        }
    }
    assert_bridgeless(&g)?;
    metrics::radius_diameter_centers(&g)?;
    Ok(g)
}

/// Disjoint union of two complete bipartite graphs K_{n/2, m/2}: the
/// disconnected counterexample showing the degree conditions are tight.
pub fn gen_disconnected_counterexample(n: usize, m: usize) -> Result<Graph> {
    if !n.is_multiple_of(2) || !m.is_multiple_of(2) || n < 2 || m < 2 {
        return Err(Error::InvalidParam(
            "disconnected_counterexample needs even n, m >= 2".into(),
        ));
    }
    let (a, b) = (n / 2, m / 2);
    let mut edges = Vec::new();
    for block in 0..2 {
        let base = block * (a + b);
        for i in 0..a {
            for j in 0..b {
                edges.push((base + i, base + a + j));
            }
        }
    }
    Graph::new(n + m, edges)
}

// Named small graphs used throughout the tests and the harness.

pub fn cycle(n: usize) -> Graph {
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, edges).unwrap()
}

pub fn path_graph(n: usize) -> Graph {
    let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Graph::new(a + b, edges).unwrap()
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let edges = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (5, 7),
        (7, 9),
        (9, 6),
        (6, 8),
        (8, 5),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
    ];
    Graph::new(10, edges).unwrap()
}

/// The octahedron K_{2,2,2}; a maximal planar graph.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if !(i / 2 == j / 2) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(6, edges).unwrap()
}
