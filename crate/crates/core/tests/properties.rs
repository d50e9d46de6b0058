//! Property tests for the algebraic invariants the modules promise.

use mwis_core::bitset::VertexSet;
use mwis_core::cliquesep;
use mwis_core::graph::Graph;
use mwis_core::lab::suites::audit_md_tree;
use mwis_core::modular;
use mwis_core::patterns;
use mwis_core::pipeline::nearly_reduce;
use mwis_core::solvers::{mwis_oracle, Solution, SolverError};
use mwis_core::WeightedGraph;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

fn weighted_strategy(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        proptest::collection::vec(0i64..=100, n)
            .prop_map(move |weights| WeightedGraph::new(g.clone(), weights))
    })
}

fn subset_of(g: &Graph, bits: &[bool]) -> VertexSet {
    VertexSet::from_iter(
        g.vertex_count(),
        g.vertices().filter(|&v| bits.get(v).copied().unwrap_or(false)),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn neighborhood_vertex_anti_partition(g in graph_strategy(12)) {
        for v in g.vertices() {
            let nb = g.neighbors(v);
            let anti = g.anti_neighborhood_of(v);
            prop_assert!(!nb.contains(v));
            prop_assert!(nb.is_disjoint_from(&anti));
            prop_assert!(!anti.contains(v));
            prop_assert_eq!(nb.len() + anti.len() + 1, g.vertex_count());
        }
    }

    #[test]
    fn induced_subgraph_preserves_adjacency(
        g in graph_strategy(12),
        bits in proptest::collection::vec(any::<bool>(), 12),
    ) {
        let s = subset_of(&g, &bits);
        let (sub, map) = g.induced(&s);
        // exhaustive pair audit through the relabeling map
        for a in 0..sub.vertex_count() {
            for b in a + 1..sub.vertex_count() {
                prop_assert_eq!(sub.has_edge(a, b), g.has_edge(map[a], map[b]));
            }
        }
    }

    #[test]
    fn contact_set_algebra(
        g in graph_strategy(12),
        bits in proptest::collection::vec(any::<bool>(), 12),
    ) {
        let u = subset_of(&g, &bits);
        if u.is_empty() {
            return Ok(());
        }
        let anti = g.anti_neighborhood(&u);
        if anti.is_empty() {
            prop_assert!(g.contact_set(&u).is_err());
            return Ok(());
        }
        let contacts = g.contact_set(&u).unwrap();
        prop_assert!(contacts.is_subset_of(&g.neighborhood_of_set(&u)));
        for c in contacts.iter() {
            prop_assert!(g.neighbors(c).intersects(&anti));
        }
        // independent recomputation by direct set algebra
        let direct = g
            .neighborhood_of_set(&u)
            .intersection(&g.neighborhood_of_set(&anti));
        prop_assert_eq!(contacts, direct);
    }

    #[test]
    fn weakly_chordal_matches_its_complement(g in graph_strategy(9)) {
        prop_assert_eq!(
            patterns::is_weakly_chordal(&g).is_ok(),
            patterns::is_weakly_chordal(&g.complement()).is_ok()
        );
    }

    #[test]
    fn nearly_reduce_is_an_identity_for_exact_bases(wg in weighted_strategy(10)) {
        let mut base = |b: &WeightedGraph, _m: &[usize]| -> Result<Solution, SolverError> {
            mwis_oracle(b, 10_000_000)
        };
        let reduced = nearly_reduce(&wg, &mut base).unwrap();
        let direct = mwis_oracle(&wg, 10_000_000).unwrap();
        prop_assert_eq!(reduced.value, direct.value);
    }

    #[test]
    fn modular_combine_is_exact(wg in weighted_strategy(11)) {
        let tree = modular::modular_decomposition(&wg.graph);
        let mut prime = |q: &WeightedGraph| mwis_oracle(q, 10_000_000);
        let combined = modular::combine_md(&tree, &wg, &mut prime).unwrap();
        let direct = mwis_oracle(&wg, 10_000_000).unwrap();
        prop_assert_eq!(combined.value, direct.value);
        prop_assert!(audit_md_tree(&wg.graph));
    }

    #[test]
    fn separator_recombination_is_exact(wg in weighted_strategy(11)) {
        let mut atom = |a: &WeightedGraph, _m: &[usize]| mwis_oracle(a, 10_000_000);
        let (sol, _) = cliquesep::solve_with_separators(&wg, &mut atom).unwrap();
        let direct = mwis_oracle(&wg, 10_000_000).unwrap();
        prop_assert_eq!(sol.value, direct.value);
    }

    #[test]
    fn hole_witnesses_audit_and_match_parity(g in graph_strategy(10)) {
        if let Some(h) =
            patterns::find_hole(&g, 5, patterns::CycleParity::Any, patterns::DEFAULT_BUDGET)
                .unwrap()
        {
            prop_assert!(patterns::audit_cycle(&g, &h));
            prop_assert!(h.len() >= 5);
        }
        if let Some(h) =
            patterns::find_hole(&g, 5, patterns::CycleParity::Odd, patterns::DEFAULT_BUDGET)
                .unwrap()
        {
            prop_assert!(patterns::audit_cycle(&g, &h));
            prop_assert_eq!(h.len() % 2, 1);
        }
    }
}
