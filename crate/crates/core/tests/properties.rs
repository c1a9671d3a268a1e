//! Cross-module invariants: serialization round trips, metric identities,
//! ear-length bounds along hull growth, and monotonicity of the
//! orientation completion pass.

mod common;

use earspan::cycles::{self, shortest_cycle_through_edge};
use earspan::ears;
use earspan::error::Error;
use earspan::generate::{self, gen_random_bridgeless};
use earspan::graph::{
    EdgeColoring, Graph, Orientation, parse_coloring, parse_graph, parse_orientation,
    serialize_coloring, serialize_graph, serialize_orientation,
};
use earspan::metrics::{self, INF};
use earspan::oracles;
use earspan::orient::{self, arc_subset_distances, extend_orientation};
use earspan::rainbow;
use proptest::prelude::*;

/// Arbitrary simple graph on up to `max_n` vertices from an edge bitmask.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> (bit % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Graph::new(n, edges).unwrap()
    })
}

proptest! {
    #[test]
    fn graph_round_trip(g in arb_graph(11)) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn orientation_round_trip(g in arb_graph(11), mask in any::<u64>()) {
        let o = Orientation::from_mask(&g, mask);
        let back = parse_orientation(&g, &serialize_orientation(&g, &o)).unwrap();
        for e in 0..g.m() {
            prop_assert_eq!(o.arc(&g, e), back.arc(&g, e));
        }
    }

    #[test]
    fn coloring_round_trip(g in arb_graph(11), raw in prop::collection::vec(0u32..6, 0..64)) {
        // Normalize to first-use-contiguous ids.
        let mut map = std::collections::HashMap::new();
        let colors: Vec<u32> = (0..g.m())
            .map(|e| {
                let r = raw.get(e).copied().unwrap_or(0);
                let next = map.len() as u32;
                *map.entry(r).or_insert(next)
            })
            .collect();
        let c = EdgeColoring::new(&g, colors).unwrap();
        let back = parse_coloring(&g, &serialize_coloring(&g, &c)).unwrap();
        prop_assert_eq!(c, back);
    }

    #[test]
    fn bfs_satisfies_triangle_inequality(g in arb_graph(12), s in 0usize..12, w in 0usize..12) {
        let s = s % g.n();
        let w = w % g.n();
        let from_s = metrics::bfs(&g, s).dist;
        let from_w = metrics::bfs(&g, w).dist;
        for v in 0..g.n() {
            if from_s[w] != INF && from_w[v] != INF {
                prop_assert!(from_s[v] <= from_s[w] + from_w[v]);
            }
        }
    }

    #[test]
    fn bridges_empty_iff_every_edge_on_cycle(g in arb_graph(10)) {
        let bridgeless = metrics::bridges(&g).is_empty();
        let covered = (0..g.m()).all(|e| shortest_cycle_through_edge(&g, e) != INF);
        prop_assert_eq!(bridgeless, covered);
    }

    #[test]
    fn bridges_match_removal_oracle(g in arb_graph(9)) {
        // Independent check: an edge is a bridge iff removing it splits its
        // component, measured by counting reachable vertices.
        let reach = |g: &Graph, s: usize| metrics::bfs(g, s).dist.iter().filter(|&&d| d != INF).count();
        let expected: Vec<usize> = (0..g.m())
            .filter(|&e| {
                let (u, _) = g.endpoints(e);
                let before = reach(&g, u);
                let after = reach(&g.without_edge(e).unwrap(), u);
                after < before
            })
            .collect();
        prop_assert_eq!(metrics::bridges(&g), expected);
    }
}

#[test]
fn radius_diameter_sandwich_on_corpus() {
    for g in common::corpus_200().iter().take(80) {
        let (rad, diam, centers) = metrics::radius_diameter_centers(g).unwrap();
        assert!(rad <= diam && diam <= 2 * rad, "rad {rad} diam {diam}");
        assert!(!centers.is_empty());
    }
}

#[test]
fn eta_at_least_girth_and_at_most_zeta_small() {
    let mut checked = 0;
    for seed in 0..200u64 {
        let n = 4 + (seed as usize % 9);
        let g = gen_random_bridgeless(n, seed as usize % 4, 900 + seed).unwrap();
        if g.n() > 12 {
            continue;
        }
        let eta = cycles::eta(&g);
        assert!(eta >= metrics::girth(&g));
        assert!(eta <= cycles::zeta_bruteforce(&g, 12).unwrap());
        checked += 1;
    }
    assert!(checked >= 100, "only {checked} small instances");
}

#[test]
fn deleting_an_edge_never_shortens_other_edges_cycles() {
    for seed in 0..30u64 {
        let g = gen_random_bridgeless(6 + (seed as usize % 15), 2, 300 + seed).unwrap();
        if g.n() > 20 {
            continue;
        }
        let victim = (seed as usize * 7) % g.m();
        let reduced = g.without_edge(victim).unwrap();
        for e in 0..g.m() {
            if e == victim {
                continue;
            }
            let mapped = if e < victim { e } else { e - 1 };
            assert!(
                shortest_cycle_through_edge(&reduced, mapped) >= shortest_cycle_through_edge(&g, e)
            );
        }
    }
}

#[test]
fn optimal_ears_meet_distance_budget_from_closed_neighborhoods() {
    // For the closed neighborhood N_i[u] of a center u with i <= rad - 1,
    // every leg admits an ear of length at most min(2 (rad - i) + 1, eta).
    let mut legs_checked = 0usize;
    for seed in 0..40u64 {
        let g =
            gen_random_bridgeless(6 + (seed as usize % 35), seed as usize % 6, 40 + seed).unwrap();
        let eccs = metrics::eccentricities(&g).unwrap();
        let rad = *eccs.iter().min().unwrap();
        let center = eccs.iter().position(|&e| e == rad).unwrap();
        let eta = cycles::eta(&g);
        let dist = metrics::bfs(&g, center).dist;
        for i in 0..rad {
            let mut h = vec![false; g.n()];
            for v in 0..g.n() {
                if dist[v] <= i {
                    h[v] = true;
                }
            }
            for e in ears::legs(&g, &h) {
                let ear = ears::optimal_ear(&g, &h, e).unwrap();
                let budget = (2 * (rad - i) + 1).min(eta);
                assert!(
                    ear.length() as u32 <= budget,
                    "seed {seed} layer {i}: ear length {} over budget {budget}",
                    ear.length()
                );
                legs_checked += 1;
            }
        }
    }
    assert!(legs_checked > 200, "only {legs_checked} legs exercised");
}

#[test]
fn construction_never_needs_the_rewrite_fallback() {
    for (idx, g) in common::corpus_200().iter().enumerate() {
        let (_, trace) = orient::orient(g).unwrap();
        for layer in &trace.layers {
            for rec in &layer.ears {
                assert!(!rec.fallback, "corpus graph {idx} activated the fallback");
            }
        }
    }
}

#[test]
fn completion_pass_never_increases_directed_distances() {
    for seed in 0..20u64 {
        let g =
            gen_random_bridgeless(5 + (seed as usize % 25), seed as usize % 5, 77 + seed).unwrap();
        if g.n() > 30 {
            continue;
        }
        let (o, trace) = orient::orient(&g).unwrap();
        let ear_edges: Vec<usize> = (0..g.m())
            .filter(|e| !trace.completed_edges.contains(e))
            .collect();
        let partial = arc_subset_distances(&g, &o, &ear_edges);
        let all: Vec<usize> = (0..g.m()).collect();
        let full = arc_subset_distances(&g, &o, &all);
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert!(full[u][v] <= partial[u][v]);
            }
        }
    }
}

#[test]
fn orienting_a_spanning_subgraph_bounds_the_supergraph() {
    // Completing a strong orientation of a bridgeless spanning subgraph
    // onto extra edges never worsens the directed diameter.
    for seed in 0..15u64 {
        let n = 6 + (seed as usize % 20);
        let h = gen_random_bridgeless(n, 1, 500 + seed).unwrap();
        if h.n() > 30 {
            continue;
        }
        // Superset graph: add a few extra edges deterministically.
        let mut edges = h.edges().to_vec();
        let mut added = 0;
        'outer: for u in 0..n {
            for v in u + 1..n {
                if added >= 3 {
                    break 'outer;
                }
                if h.edge_between(u, v).is_none() && (u + v + seed as usize).is_multiple_of(3) {
                    edges.push((u, v));
                    added += 1;
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let (oh, _) = orient::orient(&h).unwrap();
        let sub_edges: Vec<usize> = (0..h.m()).collect();
        let sub_arcs: Vec<(usize, usize)> = sub_edges.iter().map(|&e| oh.arc(&h, e)).collect();
        let mapped: Vec<usize> = h
            .edges()
            .iter()
            .map(|&(u, v)| g.edge_between(u, v).unwrap())
            .collect();
        let extended = extend_orientation(&g, &mapped, &sub_arcs).unwrap();

        let restricted = arc_subset_distances(&g, &extended, &mapped);
        let h_diam = (0..g.n())
            .flat_map(|u| restricted[u].iter().copied())
            .max()
            .unwrap();
        let (_, ext_diam) = oracles::directed_rad_diam(&g, &extended).unwrap();
        assert!(ext_diam <= h_diam, "seed {seed}: {ext_diam} > {h_diam}");
    }
}

#[test]
fn layered_bounds_dominate_reference_bounds() {
    for seed in 0..60u64 {
        let g =
            gen_random_bridgeless(4 + (seed as usize % 10), seed as usize % 3, 600 + seed).unwrap();
        let b = earspan::harness::reference_bounds(&g).unwrap();
        assert!(b.layered_rad <= b.quad_rad);
        assert!(2 * b.layered_rad <= b.quad_diam);
        if let Some(iso) = b.isometric_colors {
            assert!(b.layered_colors <= iso);
        }
    }
}

#[test]
fn grow_hull_ears_validate_and_partition_edges() {
    for g in common::corpus_200().iter().take(60) {
        let growth = ears::grow_hull(g).unwrap();
        let mut owned = vec![false; g.m()];
        for layer in &growth.layers {
            for grown in layer {
                for &e in &grown.new_edges {
                    assert!(!owned[e]);
                    owned[e] = true;
                }
            }
        }
        let committed = owned.iter().filter(|&&b| b).count();
        let arcs = growth.committed.iter().filter(|a| a.is_some()).count();
        assert_eq!(committed, arcs);
    }
}

#[test]
fn single_vertex_and_k2_edge_cases() {
    let single = parse_graph("n 1\n").unwrap();
    assert!(orient::orient(&single).is_ok());
    assert!(rainbow::rainbow_color(&single).is_ok());
    let k2 = generate::path_graph(2);
    assert!(matches!(orient::orient(&k2), Err(Error::Bridged(_))));
    assert!(matches!(
        rainbow::rainbow_color(&k2),
        Err(Error::Bridged(_))
    ));
}

/// Every connected bridgeless graph on at most 6 vertices, exhaustively:
/// the orientation is strong within bounds and never beats the exhaustive
/// optimum, the coloring stays within its bound and is confirmed by both
/// certificates and the subset-search oracle, and the exact rainbow
/// connection number never exceeds the construction's color count.
#[test]
fn exhaustive_sweep_of_all_small_bridgeless_graphs() {
    let mut swept = 0usize;
    for n in 3..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::new(n, edges).unwrap();
            if metrics::bfs(&g, 0).dist.iter().any(|&d| d == INF)
                || !metrics::bridges(&g).is_empty()
            {
                continue;
            }
            swept += 1;

            let (o, trace) = orient::orient(&g).unwrap();
            let rep = orient::verify_orientation_bounds(&g, &o, &trace).unwrap();
            assert!(rep.pass, "mask {mask} n {n}: {rep:?}");

            let (coloring, ct) = rainbow::rainbow_color(&g).unwrap();
            assert!(ct.total_colors <= rainbow::color_bound(ct.radius, ct.eta.max(3)));
            for x in 0..n {
                for y in x + 1..n {
                    let cert = rainbow::extract_certificate(&g, &ct, x, y)
                        .unwrap_or_else(|e| panic!("mask {mask} n {n} pair ({x},{y}): {e}"));
                    let mut seen = std::collections::HashSet::new();
                    for (w, &c) in cert.path.windows(2).zip(&cert.colors) {
                        let e = g.edge_between(w[0], w[1]).unwrap();
                        assert_eq!(coloring.color(e), c);
                        assert!(seen.insert(c));
                    }
                }
            }
            assert!(
                oracles::is_rainbow_connected(&g, &coloring, 18)
                    .unwrap()
                    .connected,
                "mask {mask} n {n}"
            );

            if g.m() <= 10 {
                let best = oracles::optimal_oriented_diameter(&g, 10).unwrap();
                assert!(best.best_diam <= rep.diam.unwrap());
                let rc = oracles::exact_rc(&g, 10).unwrap();
                assert!(rc <= ct.total_colors);
            }
        }
    }
    println!("swept {swept} connected bridgeless graphs");
    assert!(swept > 10_000, "swept only {swept} graphs");
}

#[test]
fn construction_is_deterministic() {
    for g in common::corpus_200().iter().take(30) {
        let (o1, t1) = orient::orient(g).unwrap();
        let (o2, t2) = orient::orient(g).unwrap();
        assert_eq!(t1, t2);
        for e in 0..g.m() {
            assert_eq!(o1.arc(g, e), o2.arc(g, e));
        }
        let (c1, ct1) = rainbow::rainbow_color(g).unwrap();
        let (c2, ct2) = rainbow::rainbow_color(g).unwrap();
        assert_eq!(ct1, ct2);
        assert_eq!(c1, c2);
    }
}

/// Heavy randomized stress beyond the standard corpus; run explicitly with
/// `cargo test -p earspan --test properties -- --ignored`.
#[test]
#[ignore]
fn stress_two_thousand_random_graphs() {
    for seed in 0..2000u64 {
        let n = 4 + (seed as usize * 11) % 77;
        let extra = (seed as usize * 3) % 41;
        let g = gen_random_bridgeless(n, extra, 100_000 + seed).unwrap();
        let (o, trace) = orient::orient(&g).unwrap();
        let rep = orient::verify_orientation_bounds(&g, &o, &trace).unwrap();
        assert!(rep.pass, "seed {seed}: {rep:?}");
        let (coloring, ct) = rainbow::rainbow_color(&g).unwrap();
        assert!(ct.total_colors <= rainbow::color_bound(ct.radius, ct.eta.max(3)));
        for layer in &ct.layers {
            for rec in &layer.ears {
                assert!(!rec.fallback, "seed {seed} activated the fallback");
            }
        }
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                let cert = rainbow::extract_certificate(&g, &ct, x, y)
                    .unwrap_or_else(|e| panic!("seed {seed} pair ({x},{y}): {e}"));
                let mut seen = std::collections::HashSet::new();
                for (w, &c) in cert.path.windows(2).zip(&cert.colors) {
                    let e = g.edge_between(w[0], w[1]).unwrap();
                    assert_eq!(coloring.color(e), c);
                    assert!(seen.insert(c), "seed {seed}: repeated color");
                }
            }
        }
    }
}

/// Along every trace ear, the directed distances within the ear's own arcs
/// are exactly the positions, so every interior vertex sits within
/// length - 1 of both feet in both directions.
#[test]
fn trace_ears_carry_two_way_distance_guarantees() {
    for g in common::corpus_200().iter().take(60) {
        let (o, trace) = orient::orient(g).unwrap();
        for layer in &trace.layers {
            for rec in &layer.ears {
                let len = rec.vertices.len() - 1;
                let ear_arcs: Vec<usize> = rec
                    .vertices
                    .windows(2)
                    .map(|w| g.edge_between(w[0], w[1]).unwrap())
                    .collect();
                let dist = arc_subset_distances(g, &o, &ear_arcs);
                let start = rec.vertices[0];
                let end = *rec.vertices.last().unwrap();
                for (pos, &x) in rec.vertices.iter().enumerate().skip(1) {
                    if pos == len {
                        continue;
                    }
                    assert_eq!(dist[start][x] as usize, pos);
                    assert_eq!(dist[x][end] as usize, len - pos);
                    assert!(pos <= len - 1 && len - pos <= len - 1);
                }
            }
        }
    }
}

/// Hypothesis-gated theorem checks never report a failure on the corpus;
/// the Petersen graph exercises the k-step-neighborhood path for real.
#[test]
fn harness_reports_never_fail_on_corpus() {
    use earspan::harness::{Hypotheses, Status, full_report};
    for g in common::corpus_200().iter().take(30) {
        let report = full_report(g, None, false).unwrap();
        assert!(
            report.theorems.iter().all(|e| e.status != Status::Fail),
            "{report}"
        );
    }
    let report = full_report(&generate::petersen(), None, false).unwrap();
    let k2 = report
        .theorems
        .iter()
        .find(|e| e.name == "k_neighborhood_oriented_radius_k2")
        .unwrap();
    assert_eq!(k2.hypotheses, Hypotheses::Hold);
    assert_eq!(k2.status, Status::Pass);
    assert_eq!(k2.bound, Some(16));
}

/// Triangle inequality against corpus-scale graphs, not just tiny ones.
#[test]
fn triangle_inequality_holds_on_corpus_graphs() {
    for (i, g) in common::corpus_200().iter().take(12).enumerate() {
        let s = i % g.n();
        let w = (3 * i + 1) % g.n();
        let from_s = metrics::bfs(g, s).dist;
        let from_w = metrics::bfs(g, w).dist;
        for v in 0..g.n() {
            assert!(from_s[v] <= from_s[w] + from_w[v]);
        }
    }
}
