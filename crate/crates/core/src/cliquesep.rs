//! Clique-separator decomposition into atoms and the divide-and-conquer
//! solve over it.
//!
//! A minimal elimination ordering (MCS-M) is computed first; scanning it,
//! the first eliminated vertex whose higher fill-neighborhood is a clique
//! in the original graph and separates it yields a clique separator. If no
//! vertex qualifies the graph is an atom. Splitting recurses on
//! `component ∪ S` and `rest ∪ S`.
//!
//! Recombining across a separator S with far part G2 solved first:
//! with `β = α(G2 − S)` and `β_v = w(v) + α(G2 ∩ A(v))`, the near part is
//! re-solved with adjusted weights `w'(v) = β_v − β` on S (nonpositive
//! ones deleted), and `α(G) = α'(G1) + β`. Far-side queries recurse into
//! this same driver and are memoized by (vertex set, weights).

use crate::bitset::VertexSet;
use crate::graph::{Graph, WeightedGraph};
use crate::solvers::{Solution, SolverError};
use std::collections::HashMap;

/// A minimal-fill elimination ordering: eliminating `order[0]` first adds
/// exactly the `fill` edges, every one of which is necessary.
#[derive(Debug, Clone)]
pub struct MinimalOrder {
    pub order: Vec<usize>,
    pub fill: Vec<(usize, usize)>,
}

/// MCS-M restricted to `within`: picks the unnumbered vertex of maximum
/// weight (ties to least id), then bumps every unnumbered vertex reachable
/// through strictly lighter unnumbered internal vertices, recording fill.
pub fn minimal_order_within(g: &Graph, within: &VertexSet) -> MinimalOrder {
    let n = g.vertex_count();
    let mut weight: Vec<i64> = vec![0; n];
    let mut unnumbered = within.clone();
    let mut selection = Vec::with_capacity(within.len());
    let mut fill = Vec::new();

    while let Some(first) = unnumbered.first() {
        let mut v = first;
        for u in unnumbered.iter() {
            if weight[u] > weight[v] {
                v = u;
            }
        }
        unnumbered.remove(v);
        selection.push(v);

        // Bottleneck search from v: mm[u] = least achievable maximum
        // internal weight on a v-u path through unnumbered vertices.
        const UNSEEN: i64 = i64::MAX;
        let mut mm: Vec<i64> = vec![UNSEEN; n];
        for u in g.neighbors(v).intersection(&unnumbered).iter() {
            mm[u] = i64::MIN;
        }
        let mut done = VertexSet::empty(n);
        loop {
            let mut best: Option<usize> = None;
            for u in unnumbered.iter() {
                if !done.contains(u) && mm[u] != UNSEEN {
                    match best {
                        None => best = Some(u),
                        Some(b) if mm[u] < mm[b] => best = Some(u),
                        _ => {}
                    }
                }
            }
            let Some(u) = best else { break };
            done.insert(u);
            let through = mm[u].max(weight[u]);
            for w in g.neighbors(u).intersection(&unnumbered).iter() {
                if !done.contains(w) && through < mm[w] {
                    mm[w] = through;
                }
            }
        }
        for u in unnumbered.iter() {
            if mm[u] != UNSEEN && mm[u] < weight[u] {
                weight[u] += 1;
                if !g.has_edge(u, v) {
                    fill.push((u.min(v), u.max(v)));
                }
            }
        }
    }
    selection.reverse();
    MinimalOrder {
        order: selection,
        fill,
    }
}

pub fn minimal_order(g: &Graph) -> MinimalOrder {
    minimal_order_within(g, &g.full_set())
}

/// First clique separator found by the elimination scan, as
/// `(separator, component-of-scan-vertex)`, or None when `G[within]` is an
/// atom. The separator is trimmed to the component's outer boundary so
/// both split sides stay connected.
pub fn find_clique_separator(g: &Graph, within: &VertexSet) -> Option<(VertexSet, VertexSet)> {
    let n = g.vertex_count();
    let mo = minimal_order_within(g, within);
    let mut fill_adj: Vec<VertexSet> = vec![VertexSet::empty(n); n];
    for &(a, b) in &mo.fill {
        fill_adj[a].insert(b);
        fill_adj[b].insert(a);
    }
    let mut elim_pos = vec![usize::MAX; n];
    for (i, &v) in mo.order.iter().enumerate() {
        elim_pos[v] = i;
    }
    for (i, &v) in mo.order.iter().enumerate() {
        let mut higher = g.neighbors(v).union(&fill_adj[v]);
        higher.intersect_with(within);
        let mut cand = VertexSet::empty(n);
        for u in higher.iter() {
            if elim_pos[u] > i {
                cand.insert(u);
            }
        }
        if cand.is_empty() || !g.is_clique(&cand) {
            continue;
        }
        let mut rest = within.clone();
        rest.subtract(&cand);
        let comp = g
            .components_within(&rest)
            .into_iter()
            .find(|c| c.contains(v))
            .expect("scan vertex survives separator removal");
        let mut outside = within.clone();
        outside.subtract(&cand);
        outside.subtract(&comp);
        if outside.is_empty() {
            continue;
        }
        // boundary of the component: the separator vertices it actually sees
        let mut sep = g.neighborhood_of_set(&comp);
        sep.intersect_with(&cand);
        if sep.is_empty() {
            continue;
        }
        return Some((sep, comp));
    }
    None
}

#[derive(Debug, Clone)]
pub enum AtomNode {
    Leaf {
        atom: VertexSet,
    },
    Split {
        separator: VertexSet,
        near: VertexSet,
        far: VertexSet,
        near_child: usize,
        far_child: usize,
    },
}

/// Binary clique-separator tree; leaves are atoms covering all vertices
/// and edges.
#[derive(Debug, Clone)]
pub struct AtomDecomposition {
    pub nodes: Vec<AtomNode>,
    pub root: usize,
}

impl AtomDecomposition {
    pub fn atoms(&self) -> Vec<&VertexSet> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                AtomNode::Leaf { atom } => Some(atom),
                _ => None,
            })
            .collect()
    }

    pub fn separators(&self) -> Vec<&VertexSet> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                AtomNode::Split { separator, .. } => Some(separator),
                _ => None,
            })
            .collect()
    }
}

/// Decomposes a connected graph by clique separators.
pub fn decompose(g: &Graph) -> AtomDecomposition {
    assert!(g.is_connected(), "decompose expects a connected graph");
    let mut nodes = Vec::new();
    let root = decompose_rec(g, g.full_set(), &mut nodes);
    AtomDecomposition { nodes, root }
}

fn decompose_rec(g: &Graph, within: VertexSet, nodes: &mut Vec<AtomNode>) -> usize {
    match find_clique_separator(g, &within) {
        None => {
            nodes.push(AtomNode::Leaf { atom: within });
            nodes.len() - 1
        }
        Some((sep, comp)) => {
            let near = comp.union(&sep);
            let mut far = within.clone();
            far.subtract(&comp);
            let near_child = decompose_rec(g, near.clone(), nodes);
            let far_child = decompose_rec(g, far.clone(), nodes);
            nodes.push(AtomNode::Split {
                separator: sep,
                near,
                far,
                near_child,
                far_child,
            });
            nodes.len() - 1
        }
    }
}

/// Far-side answers for one separator: `without` is the optimum avoiding
/// the whole separator; `with_vertex[i]` pairs each separator vertex `v`
/// with the optimum of the far side restricted to `A(v)`.
#[derive(Debug, Clone)]
pub struct FarQueries {
    pub without: Solution,
    pub with_vertex: Vec<(usize, Solution)>,
}

/// Adjusted near-side problem: weights `β_v − β` on separator vertices,
/// nonpositive ones deleted, and the additive constant `β`.
pub struct AdjustedNear {
    pub keep: VertexSet,
    pub weights: Vec<i64>,
    pub beta: i64,
}

pub fn combine_over_separator(
    host_weights: &[i64],
    near: &VertexSet,
    far: &FarQueries,
) -> AdjustedNear {
    let beta = far.without.value;
    let mut keep = near.clone();
    let mut weights = host_weights.to_vec();
    for &(v, ref sol) in &far.with_vertex {
        let adjusted = host_weights[v] + sol.value - beta;
        if adjusted <= 0 {
            keep.remove(v);
        } else {
            weights[v] = adjusted;
        }
    }
    AdjustedNear { keep, weights, beta }
}

#[derive(Debug, Default, Clone, Copy)]
pub struct SeparatorStats {
    pub splits: usize,
    pub atom_count: usize,
    pub max_atom_size: usize,
}

type Memo = HashMap<(Vec<u64>, Vec<i64>), Solution>;

fn memo_key(set: &VertexSet, weights: &[i64]) -> (Vec<u64>, Vec<i64>) {
    let ws: Vec<i64> = set.iter().map(|v| weights[v]).collect();
    (set.words().to_vec(), ws)
}

/// Exact MWIS by clique-separator divide and conquer. The atom solver
/// receives each atom as an induced weighted graph plus its map back to
/// host ids and must be exact on atoms.
pub fn solve_with_separators<F>(
    wg: &WeightedGraph,
    atom_solver: &mut F,
) -> Result<(Solution, SeparatorStats), SolverError>
where
    F: FnMut(&WeightedGraph, &[usize]) -> Result<Solution, SolverError>,
{
    let mut stats = SeparatorStats::default();
    let mut memo: Memo = HashMap::new();
    let set = wg.graph.full_set();
    let sol = go(
        &wg.graph,
        &wg.weights,
        &set,
        atom_solver,
        &mut stats,
        &mut memo,
    )?;
    Ok((sol, stats))
}

fn go<F>(
    g: &Graph,
    weights: &[i64],
    set: &VertexSet,
    atom_solver: &mut F,
    stats: &mut SeparatorStats,
    memo: &mut Memo,
) -> Result<Solution, SolverError>
where
    F: FnMut(&WeightedGraph, &[usize]) -> Result<Solution, SolverError>,
{
    let n = g.vertex_count();
    if set.is_empty() {
        return Ok(Solution::empty(n));
    }
    let comps = g.components_within(set);
    if comps.len() > 1 {
        let mut value = 0;
        let mut out = VertexSet::empty(n);
        for comp in comps {
            let sol = go(g, weights, &comp, atom_solver, stats, memo)?;
            value += sol.value;
            out.union_with(&sol.set);
        }
        return Ok(Solution { value, set: out });
    }

    let key = memo_key(set, weights);
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }

    let sol = match find_clique_separator(g, set) {
        None => {
            stats.atom_count += 1;
            stats.max_atom_size = stats.max_atom_size.max(set.len());
            let wg = WeightedGraph::new(
                g.induced(set).0,
                set.iter().map(|v| weights[v]).collect(),
            );
            let map: Vec<usize> = set.iter().collect();
            let local = atom_solver(&wg, &map)?.audited(&wg);
            local.translated(&map, n)
        }
        Some((sep, comp)) => {
            stats.splits += 1;
            let near = comp.union(&sep);
            let mut far = set.clone();
            far.subtract(&comp);

            let mut far_minus_sep = far.clone();
            far_minus_sep.subtract(&sep);
            let without = go(g, weights, &far_minus_sep, atom_solver, stats, memo)?;
            let mut with_vertex = Vec::new();
            for v in sep.iter() {
                let mut q = far.clone();
                q.subtract(&g.closed_neighborhood(v));
                let sub = go(g, weights, &q, atom_solver, stats, memo)?;
                with_vertex.push((v, sub));
            }
            let far_q = FarQueries {
                without,
                with_vertex,
            };
            let adj = combine_over_separator(weights, &near, &far_q);
            let near_sol = go(g, &adj.weights, &adj.keep, atom_solver, stats, memo)?;

            let mut out = near_sol.set.clone();
            let chosen: Vec<usize> = near_sol.set.intersection(&sep).to_vec();
            match chosen.as_slice() {
                [] => out.union_with(&far_q.without.set),
                [v] => {
                    let (_, sub) = far_q
                        .with_vertex
                        .iter()
                        .find(|(u, _)| u == v)
                        .expect("chosen separator vertex was queried");
                    out.union_with(&sub.set);
                }
                _ => unreachable!("separator is a clique; at most one vertex chosen"),
            }
            let value = near_sol.value + adj.beta;
            Solution { value, set: out }
        }
    };
    // Independence and value re-check against the *current* weights.
    debug_assert!(g.is_independent(&sol.set));
    debug_assert_eq!(sol.set.iter().map(|v| weights[v]).sum::<i64>(), sol.value);
    memo.insert(key, sol.clone());
    Ok(sol)
}

/// Exhaustive audit: no clique of `g` (which must be connected) separates
/// it. Intended for atoms of up to ~16 vertices.
pub fn has_no_clique_cutset_exhaustive(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let base_comps = g.connected_components().len();
    let mut cliques: Vec<VertexSet> = vec![];
    // enumerate all nonempty cliques
    fn extend(g: &Graph, current: &VertexSet, cands: &VertexSet, out: &mut Vec<VertexSet>) {
        for v in cands.iter() {
            let mut c = current.clone();
            c.insert(v);
            out.push(c.clone());
            let mut next = cands.intersection(g.neighbors(v));
            for u in next.clone().iter() {
                if u <= v {
                    next.remove(u);
                }
            }
            extend(g, &c, &next, out);
        }
    }
    extend(g, &VertexSet::empty(n), &g.full_set(), &mut cliques);
    for clique in cliques {
        let mut rest = g.full_set();
        rest.subtract(&clique);
        if rest.is_empty() {
            continue;
        }
        if g.components_within(&rest).len() > base_comps {
            return false;
        }
    }
    true
}
