//! Exact maximum-weight-independent-set solvers for the terminal classes
//! the pipelines reduce to, plus the branch-and-bound oracle that anchors
//! every equivalence test.
//!
//! Every solver self-audits: the returned set is checked independent and
//! its value re-summed before it leaves this module. The empty set is
//! always a feasible answer, so optima are never negative.

use crate::bitset::VertexSet;
use crate::graph::WeightedGraph;
use crate::patterns::classes::{self, ChainOrder};
use crate::patterns::SearchError;
use thiserror::Error;

pub const DEFAULT_ORACLE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("input is not {class}; evidence vertices {evidence:?}")]
    NotInClass {
        class: &'static str,
        evidence: Vec<usize>,
    },
    #[error("oracle budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// An independent set and its total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub value: i64,
    pub set: VertexSet,
}

impl Solution {
    pub fn empty(n: usize) -> Self {
        Solution {
            value: 0,
            set: VertexSet::empty(n),
        }
    }

    /// Self-audit: independence plus value re-summation.
    pub fn audited(self, wg: &WeightedGraph) -> Self {
        assert!(
            wg.graph.is_independent(&self.set),
            "solver returned a dependent set"
        );
        assert_eq!(
            wg.weight_of_set(&self.set),
            self.value,
            "solver value does not match its witness"
        );
        self
    }

    /// Witness translated through a new-id -> old-id map into a host with
    /// `host_n` vertices.
    pub fn translated(&self, map: &[usize], host_n: usize) -> Solution {
        Solution {
            value: self.value,
            set: VertexSet::from_iter(host_n, self.set.iter().map(|v| map[v])),
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.set.to_vec()
    }
}

const PRUNED: i64 = i64::MIN / 4;

/// Exact optimum by branch and bound: eager component splitting, greedy
/// clique-cover upper bound, branching on the max-degree vertex with ties
/// to the least id. `budget` caps the number of search nodes.
pub fn mwis_oracle(wg: &WeightedGraph, budget: u64) -> Result<Solution, SolverError> {
    let n = wg.vertex_count();
    let mut active = VertexSet::empty(n);
    for v in 0..n {
        if wg.weights[v] > 0 {
            active.insert(v);
        }
    }
    let mut nodes = 0u64;
    let (value, set) = solve_rec(wg, &active, -1, budget, &mut nodes)?;
    debug_assert!(value > PRUNED);
    Ok(Solution { value, set }.audited(wg))
}

/// Exact when the result exceeds `lb`; may return (PRUNED, empty) when the
/// optimum provably cannot exceed `lb`.
fn solve_rec(
    wg: &WeightedGraph,
    active: &VertexSet,
    lb: i64,
    budget: u64,
    nodes: &mut u64,
) -> Result<(i64, VertexSet), SolverError> {
    *nodes += 1;
    if *nodes > budget {
        return Err(SolverError::BudgetExhausted(budget));
    }
    let n = wg.vertex_count();
    if active.is_empty() {
        return Ok((0, VertexSet::empty(n)));
    }
    let comps = wg.graph.components_within(active);
    let ubs: Vec<i64> = comps.iter().map(|c| clique_cover_bound(wg, c)).collect();
    let total_ub: i64 = ubs.iter().sum();
    if total_ub <= lb {
        return Ok((PRUNED, VertexSet::empty(n)));
    }
    if comps.len() > 1 {
        let mut value = 0i64;
        let mut set = VertexSet::empty(n);
        let mut suffix: i64 = total_ub;
        for (comp, ub) in comps.iter().zip(&ubs) {
            suffix -= ub;
            let comp_lb = lb - value - suffix;
            let (v, s) = solve_rec(wg, comp, comp_lb, budget, nodes)?;
            if v == PRUNED {
                return Ok((PRUNED, VertexSet::empty(n)));
            }
            value += v;
            set.union_with(&s);
        }
        return Ok((value, set));
    }

    let comp = &comps[0];
    if comp.len() == 1 {
        let v = comp.first().unwrap();
        let mut s = VertexSet::empty(n);
        s.insert(v);
        return Ok((wg.weights[v], s));
    }
    let branch = comp
        .iter()
        .max_by_key(|&v| (wg.graph.neighbors(v).intersection_len(comp), std::cmp::Reverse(v)))
        .unwrap();

    // Include branch first: good incumbents early.
    let mut rest = comp.clone();
    rest.subtract(&wg.graph.closed_neighborhood(branch));
    let (vin, sin) = solve_rec(wg, &rest, lb - wg.weights[branch], budget, nodes)?;
    let (mut best_val, mut best_set) = if vin == PRUNED {
        (PRUNED, VertexSet::empty(n))
    } else {
        let mut s = sin;
        s.insert(branch);
        (vin + wg.weights[branch], s)
    };

    let mut without = comp.clone();
    without.remove(branch);
    let (vex, sex) = solve_rec(wg, &without, lb.max(best_val), budget, nodes)?;
    if vex != PRUNED && vex > best_val {
        best_val = vex;
        best_set = sex;
    }
    if best_val <= lb {
        return Ok((PRUNED, VertexSet::empty(n)));
    }
    Ok((best_val, best_set))
}

/// Greedy clique cover of `set`; the sum of per-clique maxima bounds the
/// optimum from above.
fn clique_cover_bound(wg: &WeightedGraph, set: &VertexSet) -> i64 {
    let mut cliques: Vec<(VertexSet, i64)> = Vec::new();
    for v in set.iter() {
        let w = wg.weights[v];
        match cliques.iter_mut().find(|(common, _)| common.contains(v)) {
            Some((common, maxw)) => {
                common.intersect_with(wg.graph.neighbors(v));
                *maxw = (*maxw).max(w);
            }
            None => {
                cliques.push((wg.graph.neighbors(v).clone(), w));
            }
        }
    }
    cliques.iter().map(|(_, w)| (*w).max(0)).sum()
}

/// Exact optimum on chordal graphs: residual-weight greedy along a perfect
/// elimination ordering, then reverse extraction.
pub fn mwis_chordal(wg: &WeightedGraph) -> Result<Solution, SolverError> {
    let peo = classes::is_chordal(&wg.graph).map_err(|cycle| SolverError::NotInClass {
        class: "chordal",
        evidence: cycle,
    })?;
    let n = wg.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut residual = wg.weights.clone();
    let mut marked = Vec::new();
    for &v in &peo {
        if residual[v] > 0 {
            let take = residual[v];
            marked.push(v);
            for u in wg.graph.neighbors(v).iter() {
                if pos[u] > pos[v] {
                    residual[u] -= take;
                }
            }
        }
    }
    let mut set = VertexSet::empty(n);
    for &v in marked.iter().rev() {
        if set.is_disjoint_from(wg.graph.neighbors(v)) {
            set.insert(v);
        }
    }
    let value = wg.weight_of_set(&set);
    Ok(Solution { value, set }.audited(wg))
}

/// Exact optimum on bipartite graphs: total positive weight minus a minimum
/// vertex cover, found by max flow on the standard network.
pub fn mwis_bipartite(wg: &WeightedGraph) -> Result<Solution, SolverError> {
    let color = classes::bipartition(&wg.graph).map_err(|cycle| SolverError::NotInClass {
        class: "bipartite",
        evidence: cycle,
    })?;
    let n = wg.vertex_count();
    let source = n;
    let sink = n + 1;
    let mut net = FlowNetwork::new(n + 2);
    const INF: i64 = i64::MAX / 4;
    for (v, &side) in color.iter().enumerate() {
        if wg.weights[v] <= 0 {
            continue;
        }
        if side == 0 {
            net.add_edge(source, v, wg.weights[v]);
        } else {
            net.add_edge(v, sink, wg.weights[v]);
        }
    }
    for (u, v) in wg.graph.edges() {
        if wg.weights[u] <= 0 || wg.weights[v] <= 0 {
            continue;
        }
        let (x, y) = if color[u] == 0 { (u, v) } else { (v, u) };
        net.add_edge(x, y, INF);
    }
    net.max_flow(source, sink);
    let reach = net.residual_reachable(source);
    let mut set = VertexSet::empty(n);
    for v in 0..n {
        if wg.weights[v] <= 0 {
            continue;
        }
        let in_set = if color[v] == 0 { reach[v] } else { !reach[v] };
        if in_set {
            set.insert(v);
        }
    }
    let value = wg.weight_of_set(&set);
    Ok(Solution { value, set }.audited(wg))
}

/// Exact optimum on bipartite chain graphs by scanning the inclusion
/// order: the best answer keeps a prefix of one side (its largest kept
/// vertex fixing the constraint) plus the compatible other-side vertices.
pub fn mwis_bipartite_chain(wg: &WeightedGraph) -> Result<Solution, SolverError> {
    let order = classes::is_bipartite_chain(&wg.graph).map_err(|v| SolverError::NotInClass {
        class: "bipartite-chain",
        evidence: v.vertices().to_vec(),
    })?;
    Ok(chain_scan(wg, &order).audited(wg))
}

fn chain_scan(wg: &WeightedGraph, order: &ChainOrder) -> Solution {
    let n = wg.vertex_count();
    let side = &order.side;
    let ys: Vec<usize> = (0..n).filter(|&v| order.color[v] == 1).collect();
    let pos_y_total: i64 = ys.iter().map(|&y| wg.weights[y].max(0)).sum();

    // Option: take no side-0 vertex at all.
    let mut best_val: i64 = pos_y_total;
    let mut best_cut: Option<usize> = None;

    let mut prefix_pos = 0i64;
    for (i, &x) in side.iter().enumerate() {
        let blocked: i64 = wg
            .graph
            .neighbors(x)
            .iter()
            .map(|y| wg.weights[y].max(0))
            .sum();
        let val = prefix_pos + wg.weights[x] + pos_y_total - blocked;
        if val > best_val {
            best_val = val;
            best_cut = Some(i);
        }
        prefix_pos += wg.weights[x].max(0);
    }

    let mut set = VertexSet::empty(n);
    match best_cut {
        None => {
            for &y in &ys {
                if wg.weights[y] > 0 {
                    set.insert(y);
                }
            }
        }
        Some(i) => {
            set.insert(side[i]);
            for &x in &side[..i] {
                if wg.weights[x] > 0 {
                    set.insert(x);
                }
            }
            let barred = wg.graph.neighbors(side[i]);
            for &y in &ys {
                if wg.weights[y] > 0 && !barred.contains(y) {
                    set.insert(y);
                }
            }
        }
    }
    let value = wg.weight_of_set(&set);
    debug_assert_eq!(value, best_val.max(0).max(value));
    Solution { value, set }
}

/// Exact optimum on complements of bipartite chain graphs; independent
/// sets there have at most two vertices.
pub fn mwis_cobipartite_chain(wg: &WeightedGraph) -> Result<Solution, SolverError> {
    classes::is_cobipartite_chain(&wg.graph).map_err(|v| SolverError::NotInClass {
        class: "co-bipartite-chain",
        evidence: v.vertices().to_vec(),
    })?;
    Ok(best_small_set(wg).audited(wg))
}

fn best_small_set(wg: &WeightedGraph) -> Solution {
    let n = wg.vertex_count();
    let mut best = Solution::empty(n);
    for v in 0..n {
        if wg.weights[v] > best.value {
            best = Solution {
                value: wg.weights[v],
                set: VertexSet::from_iter(n, [v]),
            };
        }
        for u in v + 1..n {
            if !wg.graph.has_edge(v, u) && wg.weights[v] + wg.weights[u] > best.value {
                best = Solution {
                    value: wg.weights[v] + wg.weights[u],
                    set: VertexSet::from_iter(n, [v, u]),
                };
            }
        }
    }
    best
}

/// Max-weight vertex on cliques.
pub fn mwis_clique(wg: &WeightedGraph) -> Result<Solution, SolverError> {
    if !wg.graph.is_clique(&wg.graph.full_set()) {
        // Any non-adjacent pair is evidence.
        let n = wg.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                if !wg.graph.has_edge(u, v) {
                    return Err(SolverError::NotInClass {
                        class: "clique",
                        evidence: vec![u, v],
                    });
                }
            }
        }
        unreachable!();
    }
    let n = wg.vertex_count();
    let mut best = Solution::empty(n);
    for v in 0..n {
        if wg.weights[v] > best.value {
            best = Solution {
                value: wg.weights[v],
                set: VertexSet::from_iter(n, [v]),
            };
        }
    }
    Ok(best.audited(wg))
}

/// Exact optimum on weakly chordal graphs: the class check guards the
/// branch-and-bound oracle. The known O(n^4) two-pair algorithm would slot
/// in behind this same contract.
pub fn mwis_weakly_chordal(wg: &WeightedGraph, budget: u64) -> Result<Solution, SolverError> {
    classes::is_weakly_chordal(&wg.graph).map_err(|e| {
        let evidence = match e {
            classes::WeaklyChordalEvidence::Hole(h) => h,
            classes::WeaklyChordalEvidence::AntiHole(h) => h,
        };
        SolverError::NotInClass {
            class: "weakly-chordal",
            evidence,
        }
    })?;
    mwis_oracle(wg, budget)
}

struct FlowNetwork {
    // (to, capacity, reverse-arc index)
    arcs: Vec<Vec<(usize, i64, usize)>>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            arcs: vec![Vec::new(); n],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push((to, cap, rev_from));
        self.arcs[to].push((from, 0, rev_to));
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            let level = self.levels(s);
            if level[t].is_none() {
                return flow;
            }
            let mut iter = vec![0usize; self.arcs.len()];
            loop {
                let pushed = self.push(s, t, i64::MAX / 2, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
    }

    fn levels(&self, s: usize) -> Vec<Option<u32>> {
        let mut level = vec![None; self.arcs.len()];
        level[s] = Some(0);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(to, cap, _) in &self.arcs[v] {
                if cap > 0 && level[to].is_none() {
                    level[to] = Some(level[v].unwrap() + 1);
                    queue.push_back(to);
                }
            }
        }
        level
    }

    fn push(
        &mut self,
        v: usize,
        t: usize,
        limit: i64,
        level: &[Option<u32>],
        iter: &mut [usize],
    ) -> i64 {
        if v == t {
            return limit;
        }
        while iter[v] < self.arcs[v].len() {
            let (to, cap, rev) = self.arcs[v][iter[v]];
            if cap > 0 && level[to] == level[v].map(|l| l + 1) {
                let pushed = self.push(to, t, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.arcs[v][iter[v]].1 -= pushed;
                    self.arcs[to][rev].1 += pushed;
                    return pushed;
                }
            }
            iter[v] += 1;
        }
        0
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(to, cap, _) in &self.arcs[v] {
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::{Graph, WeightedGraph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Exhaustive subset-enumeration optimum, independent of every solver.
    pub(crate) fn subset_optimum(wg: &WeightedGraph) -> i64 {
        let n = wg.vertex_count();
        assert!(n <= 20);
        let masks: Vec<u32> = (0..n)
            .map(|v| {
                wg.graph
                    .neighbors(v)
                    .iter()
                    .fold(0u32, |acc, u| acc | 1 << u)
            })
            .collect();
        let mut best = 0i64;
        for mask in 0u32..(1 << n) {
            let mut ok = true;
            let mut val = 0i64;
            for (v, &vmask) in masks.iter().enumerate() {
                if mask >> v & 1 == 1 {
                    if vmask & mask != 0 {
                        ok = false;
                        break;
                    }
                    val += wg.weights[v];
                }
            }
            if ok && val > best {
                best = val;
            }
        }
        best
    }

    fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
        (0..n).map(|_| rng.random_range(0..=100)).collect()
    }

    #[test]
    fn oracle_on_named_graphs() {
        let c5 = WeightedGraph::unit(cycle(5));
        assert_eq!(mwis_oracle(&c5, 1_000).unwrap().value, 2);

        let kn = WeightedGraph::new(complete(5), vec![1, 1, 9, 1, 1]);
        assert_eq!(mwis_oracle(&kn, 1_000).unwrap().value, 9);

        let e4 = WeightedGraph::new(empty(4), vec![1, 2, 3, 4]);
        let sol = mwis_oracle(&e4, 1_000).unwrap();
        assert_eq!(sol.value, 10);
        assert_eq!(sol.set.len(), 4);
    }

    #[test]
    fn oracle_matches_subset_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..120 {
            let n = rng.random_range(1..=14);
            let p = rng.random_range(0.1..0.9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let wg = WeightedGraph::new(g, random_weights(&mut rng, n));
            assert_eq!(
                mwis_oracle(&wg, 1_000_000).unwrap().value,
                subset_optimum(&wg)
            );
        }
    }

    #[test]
    fn oracle_handles_negative_weights() {
        let wg = WeightedGraph::new(path(3), vec![-5, 3, -2]);
        let sol = mwis_oracle(&wg, 1_000).unwrap();
        assert_eq!(sol.value, 3);
        assert_eq!(sol.vertices(), vec![1]);
        let all_neg = WeightedGraph::new(path(2), vec![-1, -1]);
        assert_eq!(mwis_oracle(&all_neg, 1_000).unwrap().value, 0);
    }

    #[test]
    fn oracle_budget_exhaustion() {
        let wg = WeightedGraph::unit(cycle(9));
        assert!(matches!(
            mwis_oracle(&wg, 2),
            Err(SolverError::BudgetExhausted(2))
        ));
    }

    #[test]
    fn oracle_monotone_under_deletion() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let n = rng.random_range(2..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let wg = WeightedGraph::new(g.clone(), random_weights(&mut rng, n));
            let whole = mwis_oracle(&wg, 1_000_000).unwrap().value;
            for v in 0..n {
                let mut keep = wg.graph.full_set();
                keep.remove(v);
                let (sub, _) = wg.induced(&keep);
                assert!(whole >= mwis_oracle(&sub, 1_000_000).unwrap().value);
            }
        }
    }

    #[test]
    fn chordal_solver_examples() {
        let tri = WeightedGraph::new(complete(3), vec![1, 2, 3]);
        assert_eq!(mwis_chordal(&tri).unwrap().value, 3);

        // P4 weights (1,5,5,1): optimum 6
        let p4 = WeightedGraph::new(path(4), vec![1, 5, 5, 1]);
        assert_eq!(mwis_chordal(&p4).unwrap().value, 6);

        assert!(matches!(
            mwis_chordal(&WeightedGraph::unit(cycle(4))),
            Err(SolverError::NotInClass { class: "chordal", .. })
        ));
    }

    /// Random interval graphs are chordal.
    fn random_interval_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let ivs: Vec<(u32, u32)> = (0..n)
            .map(|_| {
                let a = rng.random_range(0..100u32);
                let b = rng.random_range(0..100u32);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if ivs[u].0 <= ivs[v].1 && ivs[v].0 <= ivs[u].1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn chordal_solver_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..80 {
            let n = rng.random_range(1..=14);
            let g = random_interval_graph(&mut rng, n);
            let wg = WeightedGraph::new(g, random_weights(&mut rng, n));
            assert_eq!(
                mwis_chordal(&wg).unwrap().value,
                mwis_oracle(&wg, 1_000_000).unwrap().value
            );
        }
    }

    #[test]
    fn bipartite_solver_examples() {
        // K2,2 with weights 3,1 | 2,2: one side only
        let wg = WeightedGraph::new(complete_bipartite(2, 2), vec![3, 1, 2, 2]);
        assert_eq!(mwis_bipartite(&wg).unwrap().value, 4);

        let c6 = WeightedGraph::unit(cycle(6));
        assert_eq!(mwis_bipartite(&c6).unwrap().value, 3);

        assert!(matches!(
            mwis_bipartite(&WeightedGraph::unit(cycle(5))),
            Err(SolverError::NotInClass { class: "bipartite", .. })
        ));
    }

    #[test]
    fn bipartite_solver_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..80 {
            let a = rng.random_range(1..=7);
            let b = rng.random_range(1..=7);
            let p = rng.random_range(0.2..0.9);
            let mut edges = Vec::new();
            for u in 0..a {
                for v in 0..b {
                    if rng.random_bool(p) {
                        edges.push((u, a + v));
                    }
                }
            }
            let g = Graph::build(a + b, &edges).unwrap();
            let wg = WeightedGraph::new(g, random_weights(&mut rng, a + b));
            assert_eq!(
                mwis_bipartite(&wg).unwrap().value,
                mwis_oracle(&wg, 1_000_000).unwrap().value
            );
        }
    }

    #[test]
    fn chain_solver_example() {
        // staircase X={x1,x2}, Y={y1,y2}, edges x1y1, x2y1, x2y2
        let g = Graph::build(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let wg = WeightedGraph::unit(g);
        assert_eq!(mwis_bipartite_chain(&wg).unwrap().value, 2);
    }

    fn random_chain_graph(rng: &mut ChaCha8Rng, a: usize, b: usize) -> Graph {
        // nested neighborhoods: x_i sees a prefix of Y whose length grows
        let mut lens: Vec<usize> = (0..a).map(|_| rng.random_range(0..=b)).collect();
        lens.sort_unstable();
        let mut edges = Vec::new();
        for (i, &len) in lens.iter().enumerate() {
            for y in 0..len {
                edges.push((i, a + y));
            }
        }
        Graph::build(a + b, &edges).unwrap()
    }

    #[test]
    fn chain_solvers_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..80 {
            let a = rng.random_range(1..=7);
            let b = rng.random_range(1..=7);
            let g = random_chain_graph(&mut rng, a, b);
            let wg = WeightedGraph::new(g.clone(), random_weights(&mut rng, a + b));
            assert_eq!(
                mwis_bipartite_chain(&wg).unwrap().value,
                mwis_oracle(&wg, 1_000_000).unwrap().value,
                "chain solve mismatch on {:?}",
                wg.graph
            );
            let co = WeightedGraph::new(g.complement(), wg.weights.clone());
            assert_eq!(
                mwis_cobipartite_chain(&co).unwrap().value,
                mwis_oracle(&co, 1_000_000).unwrap().value
            );
        }
    }

    #[test]
    fn cobipartite_chain_example() {
        // 2K2 = complement of C4 is two cliques whose complement is the
        // chain graph C4; its optimum takes one vertex per edge
        let wg = WeightedGraph::unit(cycle(4).complement());
        assert_eq!(mwis_cobipartite_chain(&wg).unwrap().value, 2);
        // C4 itself is a chain graph but not co-bipartite-chain
        assert!(mwis_cobipartite_chain(&WeightedGraph::unit(cycle(4))).is_err());
    }

    #[test]
    fn clique_solver() {
        let wg = WeightedGraph::new(complete(5), vec![1, 1, 9, 1, 1]);
        let sol = mwis_clique(&wg).unwrap();
        assert_eq!(sol.value, 9);
        assert_eq!(sol.vertices(), vec![2]);
        assert!(mwis_clique(&WeightedGraph::unit(path(3))).is_err());
    }

    #[test]
    fn weakly_chordal_solver() {
        let c4 = WeightedGraph::unit(cycle(4));
        assert_eq!(mwis_weakly_chordal(&c4, 1_000_000).unwrap().value, 2);
        assert!(matches!(
            mwis_weakly_chordal(&WeightedGraph::unit(cycle(6)), 1_000_000),
            Err(SolverError::NotInClass { class: "weakly-chordal", .. })
        ));
        // chordal inputs agree with the chordal solver
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let n = rng.random_range(1..=12);
            let g = random_interval_graph(&mut rng, n);
            let wg = WeightedGraph::new(g, random_weights(&mut rng, n));
            assert_eq!(
                mwis_weakly_chordal(&wg, 1_000_000).unwrap().value,
                mwis_chordal(&wg).unwrap().value
            );
        }
    }

    #[test]
    fn clique_value_is_max_weight_exhaustively() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for n in 1..=8 {
            let weights = random_weights(&mut rng, n);
            let wg = WeightedGraph::new(complete(n), weights.clone());
            assert_eq!(
                mwis_clique(&wg).unwrap().value,
                weights.iter().copied().max().unwrap().max(0)
            );
        }
    }
}
