//! Strong orientations and rainbow edge-colorings of bridgeless graphs.
//!
//! Both constructions grow a hull from a center outward along shortest
//! ears, which keeps the oriented radius within `sum_i min(2i, eta - 1)`
//! and the number of colors within `sum_i min(2i + 1, eta)`, where eta is
//! the smallest bound such that every edge lies on a cycle that short.
//! Exhaustive oracles, extremal-family generators, and a theorem harness
//! verify the bounds end to end.

pub mod cycles;
pub mod ears;
pub mod error;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod metrics;
pub mod oracles;
pub mod orient;
pub mod rainbow;

pub use error::{Error, Result};
pub use graph::{EdgeColoring, EdgeDir, Graph, Orientation};
