//! Graph-class recognizers built on the pattern and hole detectors.

use super::fixed::{self, PatternKind};
use super::holes::{self, CycleParity, SearchError, DEFAULT_BUDGET};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Why a graph fails a class membership test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    Pattern { kind: String, vertices: Vec<usize> },
    Hole(Vec<usize>),
    OddHole(Vec<usize>),
    AntiHole(Vec<usize>),
    OddAntiHole(Vec<usize>),
    OddCycle(Vec<usize>),
    NotBipartite(Vec<usize>),
}

impl Violation {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Violation::Pattern { vertices, .. } => vertices,
            Violation::Hole(v)
            | Violation::OddHole(v)
            | Violation::AntiHole(v)
            | Violation::OddAntiHole(v)
            | Violation::OddCycle(v)
            | Violation::NotBipartite(v) => v,
        }
    }
}

fn pattern_violation(kind: PatternKind, vertices: Vec<usize>) -> Violation {
    Violation::Pattern {
        kind: kind.name().to_string(),
        vertices,
    }
}

/// Chordality via maximum cardinality search. On success returns a perfect
/// elimination ordering; on failure a chordless cycle of length >= 4.
pub fn is_chordal(g: &Graph) -> Result<Vec<usize>, Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    // MCS: repeatedly take the unvisited vertex with the most visited
    // neighbors, ties to the least id. Reversed visit order is a PEO
    // candidate; validation below is what certifies chordality.
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        visit_order.push(v);
        for u in g.neighbors(v).iter() {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    let peo: Vec<usize> = visit_order.into_iter().rev().collect();
    if validate_peo(g, &peo) {
        Ok(peo)
    } else {
        // Not chordal, so a C4 or a hole exists; extract one as evidence.
        if let Some(w) = fixed::find_induced(g, PatternKind::C4) {
            return Err(w);
        }
        let hole = holes::find_hole(g, 5, CycleParity::Any, DEFAULT_BUDGET)
            .expect("length-any hole search is budget-free")
            .expect("non-chordal graphs contain a C4 or a hole");
        Err(hole)
    }
}

/// Checks that each vertex's later neighbors in `order` form a clique.
pub fn validate_peo(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > i).collect();
        if let Some(&first) = later.iter().min_by_key(|&&u| pos[u]) {
            for &u in &later {
                if u != first && !g.has_edge(first, u) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeaklyChordalEvidence {
    Hole(Vec<usize>),
    AntiHole(Vec<usize>),
}

/// Weakly chordal = hole-free and anti-hole-free.
pub fn is_weakly_chordal(g: &Graph) -> Result<(), WeaklyChordalEvidence> {
    if let Some(h) = holes::find_hole(g, 5, CycleParity::Any, DEFAULT_BUDGET).unwrap() {
        return Err(WeaklyChordalEvidence::Hole(h));
    }
    if let Some(h) = holes::find_antihole(g, 5, CycleParity::Any, DEFAULT_BUDGET).unwrap() {
        return Err(WeaklyChordalEvidence::AntiHole(h));
    }
    Ok(())
}

/// Perfection via the odd-hole / odd-anti-hole characterization. Exact but
/// budgeted: the parity searches backtrack.
pub fn is_perfect(g: &Graph, budget: u64) -> Result<Result<(), Violation>, SearchError> {
    if let Some(h) = holes::find_hole(g, 5, CycleParity::Odd, budget)? {
        return Ok(Err(Violation::OddHole(h)));
    }
    if let Some(h) = holes::find_antihole(g, 5, CycleParity::Odd, budget)? {
        return Ok(Err(Violation::OddAntiHole(h)));
    }
    Ok(Ok(()))
}

/// Proper 2-coloring (side 0 contains the least vertex of each component),
/// or an odd cycle as evidence.
pub fn bipartition(g: &Graph) -> Result<Vec<u8>, Vec<usize>> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v).iter() {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return Err(odd_cycle_from(&parent, u, v));
                }
            }
        }
    }
    Ok(color)
}

fn odd_cycle_from(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = ancestors(u);
    let pv = ancestors(v);
    let in_pu: std::collections::HashSet<usize> = pu.iter().copied().collect();
    let meet = *pv.iter().find(|x| in_pu.contains(x)).unwrap();
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != meet).collect();
    cycle.push(meet);
    let mut tail: Vec<usize> = pv.iter().copied().take_while(|&x| x != meet).collect();
    tail.reverse();
    cycle.extend(tail);
    cycle
}

pub fn is_bipartite(g: &Graph) -> Result<Vec<u8>, Vec<usize>> {
    bipartition(g)
}

/// Chordal bipartite = bipartite and hole-free (C4s allowed).
pub fn is_chordal_bipartite(g: &Graph) -> Result<(), Violation> {
    match bipartition(g) {
        Err(cycle) => Err(Violation::NotBipartite(cycle)),
        Ok(_) => match holes::find_hole(g, 5, CycleParity::Any, DEFAULT_BUDGET).unwrap() {
            Some(h) => Err(Violation::Hole(h)),
            None => Ok(()),
        },
    }
}

/// A bipartite chain order: one side sorted so neighborhoods increase
/// under inclusion.
#[derive(Debug, Clone)]
pub struct ChainOrder {
    pub color: Vec<u8>,
    /// Side-0 vertices, neighborhoods nested ascending.
    pub side: Vec<usize>,
}

/// Bipartite chain = bipartite with one side's neighborhoods totally
/// ordered by inclusion; equivalently bipartite and 2K2-free.
pub fn is_bipartite_chain(g: &Graph) -> Result<ChainOrder, Violation> {
    let color = match bipartition(g) {
        Ok(c) => c,
        Err(cycle) => return Err(Violation::NotBipartite(cycle)),
    };
    let mut side: Vec<usize> = g.vertices().filter(|&v| color[v] == 0).collect();
    side.sort_by_key(|&v| (g.degree(v), v));
    for w in side.windows(2) {
        let (a, b) = (w[0], w[1]);
        if !g.neighbors(a).is_subset_of(g.neighbors(b)) {
            // Incomparable pair: extract the 2K2 it spans.
            let y = g.neighbors(a).difference(g.neighbors(b)).first().unwrap();
            let y2 = g.neighbors(b).difference(g.neighbors(a)).first().unwrap();
            return Err(pattern_violation(PatternKind::TwoK2, vec![a, y, b, y2]));
        }
    }
    Ok(ChainOrder { color, side })
}

/// Complement of a bipartite chain graph.
pub fn is_cobipartite_chain(g: &Graph) -> Result<ChainOrder, Violation> {
    is_bipartite_chain(&g.complement())
}

/// The forbidden-subgraph classes the solver pipelines accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    DartFree,
    BullFree,
    HoleFree,
    OddHoleFree,
    P5Free,
    HoleDartFree,
    OddHoleDartFree,
    HoleBullFree,
    OddHoleBullFree,
    P5BullFree,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::DartFree => "dart-free",
            GraphClass::BullFree => "bull-free",
            GraphClass::HoleFree => "hole-free",
            GraphClass::OddHoleFree => "odd-hole-free",
            GraphClass::P5Free => "p5-free",
            GraphClass::HoleDartFree => "hole-dart-free",
            GraphClass::OddHoleDartFree => "odd-hole-dart-free",
            GraphClass::HoleBullFree => "hole-bull-free",
            GraphClass::OddHoleBullFree => "odd-hole-bull-free",
            GraphClass::P5BullFree => "p5-bull-free",
        }
    }

    pub fn parse(s: &str) -> Option<GraphClass> {
        Some(match s {
            "dart-free" => GraphClass::DartFree,
            "bull-free" => GraphClass::BullFree,
            "hole-free" => GraphClass::HoleFree,
            "odd-hole-free" => GraphClass::OddHoleFree,
            "p5-free" => GraphClass::P5Free,
            "hole-dart-free" => GraphClass::HoleDartFree,
            "odd-hole-dart-free" => GraphClass::OddHoleDartFree,
            "hole-bull-free" => GraphClass::HoleBullFree,
            "odd-hole-bull-free" => GraphClass::OddHoleBullFree,
            "p5-bull-free" => GraphClass::P5BullFree,
            _ => return None,
        })
    }

    /// Component checks, run in order; the first violation wins.
    fn components(self) -> (Option<CycleParity>, &'static [PatternKind]) {
        match self {
            GraphClass::DartFree => (None, &[PatternKind::Dart]),
            GraphClass::BullFree => (None, &[PatternKind::Bull]),
            GraphClass::HoleFree => (Some(CycleParity::Any), &[]),
            GraphClass::OddHoleFree => (Some(CycleParity::Odd), &[]),
            GraphClass::P5Free => (None, &[PatternKind::P5]),
            GraphClass::HoleDartFree => (Some(CycleParity::Any), &[PatternKind::Dart]),
            GraphClass::OddHoleDartFree => (Some(CycleParity::Odd), &[PatternKind::Dart]),
            GraphClass::HoleBullFree => (Some(CycleParity::Any), &[PatternKind::Bull]),
            GraphClass::OddHoleBullFree => (Some(CycleParity::Odd), &[PatternKind::Bull]),
            GraphClass::P5BullFree => (None, &[PatternKind::P5, PatternKind::Bull]),
        }
    }
}

/// Class membership with the first violating witness.
pub fn in_class(g: &Graph, class: GraphClass, budget: u64) -> Result<Result<(), Violation>, SearchError> {
    let (hole_parity, patterns) = class.components();
    if let Some(parity) = hole_parity {
        if let Some(h) = holes::find_hole(g, 5, parity, budget)? {
            return Ok(Err(match parity {
                CycleParity::Any => Violation::Hole(h),
                CycleParity::Odd => Violation::OddHole(h),
            }));
        }
    }
    for &kind in patterns {
        if let Some(w) = fixed::find_induced(g, kind) {
            return Ok(Err(pattern_violation(kind, w)));
        }
    }
    Ok(Ok(()))
}

/// Membership ignoring budget errors is never allowed; this helper is for
/// callers that know the graph is small enough for the default budget.
pub fn in_class_default(g: &Graph, class: GraphClass) -> Result<(), Violation> {
    in_class(g, class, DEFAULT_BUDGET).expect("default budget exhausted; graph too large")
}

/// Weaker named predicates used by the pipelines when dispatching
/// anti-neighborhood subproblems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasePredicate {
    Clique,
    ChordalBipartite,
    Chordal,
    WeaklyChordal,
    Perfect,
    BipartiteChain,
    CoBipartiteChain,
}

impl BasePredicate {
    pub fn name(self) -> &'static str {
        match self {
            BasePredicate::Clique => "clique",
            BasePredicate::ChordalBipartite => "chordal-bipartite",
            BasePredicate::Chordal => "chordal",
            BasePredicate::WeaklyChordal => "weakly-chordal",
            BasePredicate::Perfect => "perfect",
            BasePredicate::BipartiteChain => "bipartite-chain",
            BasePredicate::CoBipartiteChain => "co-bipartite-chain",
        }
    }

    pub fn holds(self, g: &Graph) -> bool {
        match self {
            BasePredicate::Clique => g.is_clique(&g.full_set()),
            BasePredicate::ChordalBipartite => is_chordal_bipartite(g).is_ok(),
            BasePredicate::Chordal => is_chordal(g).is_ok(),
            BasePredicate::WeaklyChordal => is_weakly_chordal(g).is_ok(),
            BasePredicate::Perfect => matches!(is_perfect(g, DEFAULT_BUDGET), Ok(Ok(()))),
            BasePredicate::BipartiteChain => is_bipartite_chain(g).is_ok(),
            BasePredicate::CoBipartiteChain => is_cobipartite_chain(g).is_ok(),
        }
    }
}

/// True iff `s` induces a clique in `g`; exposed for separator audits.
pub fn clique_in(g: &Graph, s: &VertexSet) -> bool {
    g.is_clique(s)
}
