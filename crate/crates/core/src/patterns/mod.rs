//! Forbidden-subgraph detection and graph-class recognition.

pub mod classes;
pub mod fixed;
pub mod holes;

pub use classes::{
    bipartition, in_class, in_class_default, is_bipartite, is_bipartite_chain, is_chordal,
    is_chordal_bipartite, is_cobipartite_chain, is_perfect, is_weakly_chordal, validate_peo,
    BasePredicate, ChainOrder, GraphClass, Violation, WeaklyChordalEvidence,
};
pub use fixed::{audit_witness, find_induced, PatternKind};
pub use holes::{
    audit_cycle, find_antihole, find_hole, find_induced_cycle, CycleParity, SearchError,
    DEFAULT_BUDGET,
};

use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// A found structure: which shape, and the host vertices realizing it in
/// canonical labeling order (cycle order for holes and anti-holes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureWitness {
    Fixed {
        kind: PatternKind,
        vertices: Vec<usize>,
    },
    Hole(Vec<usize>),
    AntiHole(Vec<usize>),
}

impl StructureWitness {
    pub fn vertices(&self) -> &[usize] {
        match self {
            StructureWitness::Fixed { vertices, .. } => vertices,
            StructureWitness::Hole(v) | StructureWitness::AntiHole(v) => v,
        }
    }

    /// Independent edge-by-edge audit against the canonical shape.
    pub fn audit(&self, g: &Graph) -> bool {
        match self {
            StructureWitness::Fixed { kind, vertices } => audit_witness(g, *kind, vertices),
            StructureWitness::Hole(v) => v.len() >= 5 && audit_cycle(g, v),
            StructureWitness::AntiHole(v) => v.len() >= 5 && audit_cycle(&g.complement(), v),
        }
    }
}

/// Convenience wrapper matching the recognizer surface: find a fixed
/// pattern and package the witness.
pub fn find_fixed_pattern(g: &Graph, kind: PatternKind) -> Option<StructureWitness> {
    find_induced(g, kind).map(|vertices| StructureWitness::Fixed { kind, vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn witnesses_audit() {
        let w = find_fixed_pattern(&dart(), PatternKind::Dart).unwrap();
        assert!(w.audit(&dart()));

        let h = find_hole(&cycle(6), 5, CycleParity::Any, DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert!(StructureWitness::Hole(h).audit(&cycle(6)));

        let a = find_antihole(&cycle(7).complement(), 5, CycleParity::Any, DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert!(StructureWitness::AntiHole(a).audit(&cycle(7).complement()));
    }

    #[test]
    fn antihole_parity_matches_complement_hole_parity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let n = rng.random_range(5..=10);
            let p = rng.random_range(0.2..0.8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = crate::graph::Graph::build(n, &edges).unwrap();
            let via_antihole = find_antihole(&g, 5, CycleParity::Odd, DEFAULT_BUDGET)
                .unwrap()
                .is_some();
            let via_complement = find_hole(&g.complement(), 5, CycleParity::Odd, DEFAULT_BUDGET)
                .unwrap()
                .is_some();
            assert_eq!(via_antihole, via_complement);
        }
    }
}
