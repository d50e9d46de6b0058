//! Shared instance builders for the benchmarks.

use mwis_core::lab::gen;
use mwis_core::WeightedGraph;

pub fn glued_instance(n: usize) -> WeightedGraph {
    gen::compose_glued(0xBE7C4, (n / 22).max(2), 22, n)
}

pub fn substitution_instance(n: usize) -> WeightedGraph {
    gen::compose_substitution(0xBE7C5, n)
}

pub fn dense_in_class(n: usize) -> WeightedGraph {
    let mut rng = gen::rng_for(0xBE7C6);
    let g = gen::corpus_graph(
        &mut rng,
        mwis_core::patterns::GraphClass::P5BullFree,
        n,
    );
    let weights = gen::gen_weights(&mut rng, g.vertex_count(), 0, 100);
    WeightedGraph::new(g, weights)
}
