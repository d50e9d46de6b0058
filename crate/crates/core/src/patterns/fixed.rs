//! Induced search for the fixed five-or-fewer-vertex patterns.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// The fixed forbidden subgraphs the recognizers work with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    P3,
    P4,
    P5,
    C4,
    C5,
    Diamond,
    Dart,
    Bull,
    Gem,
    House,
    /// Two independent edges (2K2); used by the chain-graph recognizer.
    TwoK2,
}

impl PatternKind {
    pub fn vertex_count(self) -> usize {
        match self {
            PatternKind::P3 => 3,
            PatternKind::P4 | PatternKind::C4 | PatternKind::Diamond | PatternKind::TwoK2 => 4,
            _ => 5,
        }
    }

    /// Canonical edge list on `0..vertex_count()`.
    ///
    /// Dart and bull follow the a,b,c,d,e labeling: dart has edges
    /// ab,ac,ad,bd,cd,de and bull has edges ab,bc,cd,be,ce. The house is a
    /// C4 `0,1,2,3` plus vertex 4 seeing the adjacent pair 1,2.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            PatternKind::P3 => &[(0, 1), (1, 2)],
            PatternKind::P4 => &[(0, 1), (1, 2), (2, 3)],
            PatternKind::P5 => &[(0, 1), (1, 2), (2, 3), (3, 4)],
            PatternKind::C4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            PatternKind::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            PatternKind::Diamond => &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)],
            PatternKind::Dart => &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (3, 4)],
            PatternKind::Bull => &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)],
            PatternKind::Gem => &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
            PatternKind::House => &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (2, 4)],
            PatternKind::TwoK2 => &[(0, 1), (2, 3)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::P3 => "P3",
            PatternKind::P4 => "P4",
            PatternKind::P5 => "P5",
            PatternKind::C4 => "C4",
            PatternKind::C5 => "C5",
            PatternKind::Diamond => "diamond",
            PatternKind::Dart => "dart",
            PatternKind::Bull => "bull",
            PatternKind::Gem => "gem",
            PatternKind::House => "house",
            PatternKind::TwoK2 => "2K2",
        }
    }
}

/// Role order anchored on the highest-degree role, ties by canonical index.
fn search_order(kind: PatternKind) -> Vec<usize> {
    let k = kind.vertex_count();
    let mut deg = vec![0usize; k];
    for &(u, v) in kind.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&r| (std::cmp::Reverse(deg[r]), r));
    order
}

/// Finds the first (in deterministic search order) induced copy of `kind`
/// in `g`, returned as host vertices in canonical role order.
pub fn find_induced(g: &Graph, kind: PatternKind) -> Option<Vec<usize>> {
    let k = kind.vertex_count();
    let n = g.vertex_count();
    if n < k {
        return None;
    }
    let order = search_order(kind);
    let mut adj = vec![vec![false; k]; k];
    for &(u, v) in kind.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut assignment = vec![usize::MAX; k];
    let mut used = VertexSet::empty(n);
    // per-depth candidate scratch keeps the hot loop allocation-free
    let mut scratch = vec![VertexSet::empty(n); k];
    let full = g.full_set();
    if place(g, &order, &adj, &full, 0, &mut assignment, &mut used, &mut scratch) {
        Some(assignment)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    order: &[usize],
    adj: &[Vec<bool>],
    full: &VertexSet,
    depth: usize,
    assignment: &mut Vec<usize>,
    used: &mut VertexSet,
    scratch: &mut [VertexSet],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let role = order[depth];
    // Candidates: all unused vertices, constrained by each placed role.
    let (cands, rest) = scratch.split_first_mut().expect("one buffer per depth");
    cands.clone_from(full);
    cands.subtract(used);
    for &earlier in &order[..depth] {
        let host = assignment[earlier];
        if adj[role][earlier] {
            cands.intersect_with(g.neighbors(host));
        } else {
            cands.subtract(g.neighbors(host));
        }
        if cands.is_empty() {
            return false;
        }
    }
    for v in cands.iter() {
        assignment[role] = v;
        used.insert(v);
        if place(g, order, adj, full, depth + 1, assignment, used, rest) {
            return true;
        }
        used.remove(v);
        assignment[role] = usize::MAX;
    }
    false
}

/// Checks that `vertices` (in canonical role order) induce exactly `kind`.
pub fn audit_witness(g: &Graph, kind: PatternKind, vertices: &[usize]) -> bool {
    let k = kind.vertex_count();
    if vertices.len() != k {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !vertices.iter().all(|v| seen.insert(*v)) {
        return false;
    }
    let mut want = vec![vec![false; k]; k];
    for &(u, v) in kind.edges() {
        want[u][v] = true;
        want[v][u] = true;
    }
    for i in 0..k {
        for j in i + 1..k {
            if g.has_edge(vertices[i], vertices[j]) != want[i][j] {
                return false;
            }
        }
    }
    true
}
