//! Inputs shared by the benchmarks.

use addprod_core::graph::{complete_edges, SumGraph};
use addprod_core::presets::Preset;
use addprod_core::selftest::random_sum_graph;
use addprod_core::rng;

/// Named sum graphs of increasing size.
pub fn fixtures() -> Vec<(&'static str, SumGraph)> {
    vec![
        ("t3", Preset::T3.sum_graph()),
        ("c4c4c4", Preset::C4C4C4.sum_graph()),
        ("c3c2c2", Preset::C3C2C2.sum_graph()),
        ("k6-edges", SumGraph::edge_atoms(6, &complete_edges(6)).unwrap()),
    ]
}

/// Deterministic random sum graph with `n <= 5`, `c <= 3`.
pub fn random_small(seed: u64) -> SumGraph {
    random_sum_graph(&mut rng::stream(seed, 0), 5, 3)
}
