//! Shared deterministic corpus for the property and acceptance suites.

use earspan::Graph;
use earspan::generate::gen_random_bridgeless;

/// 200 seeded random bridgeless graphs with n <= 60 and m <= 150. The
/// first 40 are small (n <= 10) so that the exhaustive oracles have a
/// meaningful subset to run on; the rest sweep up to the size cap.
pub fn corpus_200() -> Vec<Graph> {
    let mut graphs = Vec::with_capacity(200);
    let mut seed = 0u64;
    while graphs.len() < 200 {
        let idx = graphs.len();
        let (n, extra) = if idx < 40 {
            (4 + (seed as usize * 7 + idx) % 7, (seed as usize) % 3)
        } else {
            (4 + (seed as usize * 13 + idx) % 57, (seed as usize) % 13)
        };
        seed += 1;
        let g = gen_random_bridgeless(n, extra, seed).expect("corpus generation");
        if g.m() <= 150 {
            graphs.push(g);
        }
    }
    graphs
}
