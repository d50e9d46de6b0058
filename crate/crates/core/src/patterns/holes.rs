//! Hole and anti-hole detection.
//!
//! A hole is a chordless induced cycle on at least five vertices; an
//! anti-hole is the complement of one. Two engines live here:
//!
//! * a polynomial existence check for holes of length >= 5: for an edge
//!   `ab`, a hole through `ab` exists iff some component of
//!   `G - (N[a] ∪ N[b])` is seen by a nonadjacent pair `u ∈ N(a) \ N[b]`,
//!   `v ∈ N(b) \ N[a]`; the shortest `u`-`v` path through the component
//!   closes a chordless cycle of length >= 5;
//! * a budgeted backtracking enumerator of chordless cycles for parity or
//!   exact-length queries (odd-hole recognition has no known polynomial
//!   algorithm, so exactness is bought with a search budget).

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("search budget of {0} steps exhausted")]
    BudgetExhausted(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleParity {
    Any,
    Odd,
}

/// Default step budget for the backtracking engine, sized for graphs
/// up to roughly 64 vertices.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Finds a hole of length >= `min_len` (>= 5) with the requested parity.
/// The witness is in cycle order.
pub fn find_hole(
    g: &Graph,
    min_len: usize,
    parity: CycleParity,
    budget: u64,
) -> Result<Option<Vec<usize>>, SearchError> {
    assert!(min_len >= 5, "holes start at length 5");
    if parity == CycleParity::Any && min_len == 5 {
        return Ok(find_hole_fast(g));
    }
    find_chordless_cycle(g, min_len, g.vertex_count(), parity, budget)
}

/// Finds an anti-hole: a hole in the complement, reported in `g`'s ids.
/// The witness order is the anti-hole labeling `v1..vk` whose co-edges are
/// the consecutive pairs.
pub fn find_antihole(
    g: &Graph,
    min_len: usize,
    parity: CycleParity,
    budget: u64,
) -> Result<Option<Vec<usize>>, SearchError> {
    find_hole(&g.complement(), min_len, parity, budget)
}

/// Finds an induced cycle of exactly `len` vertices.
pub fn find_induced_cycle(
    g: &Graph,
    len: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>, SearchError> {
    assert!(len >= 4);
    find_chordless_cycle(g, len, len, CycleParity::Any, budget)
}

/// True iff `vs` in this order is a chordless cycle of `g`.
pub fn audit_cycle(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    if k < 4 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !vs.iter().all(|v| seen.insert(*v)) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(vs[i], vs[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

fn find_hole_fast(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 5 {
        return None;
    }
    // scratch buffers reused across edges; the BFS below works on raw
    // words to stay allocation-free in the hot path
    let mut seen = VertexSet::empty(n);
    let mut comp = VertexSet::empty(n);
    let mut side_a = VertexSet::empty(n);
    let mut side_b = VertexSet::empty(n);
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut us: Vec<usize> = Vec::new();

    for (a, b) in g.edges() {
        // seen starts as N[a] ∪ N[b]; everything else is "rest"
        seen.clone_from(g.neighbors(a));
        seen.union_with(g.neighbors(b));
        seen.insert(a);
        seen.insert(b);
        if seen.len() == n {
            continue;
        }
        side_a.clone_from(g.neighbors(a));
        side_a.subtract(g.neighbors(b));
        side_a.remove(b);
        side_b.clone_from(g.neighbors(b));
        side_b.subtract(g.neighbors(a));
        side_b.remove(a);
        if side_a.is_empty() || side_b.is_empty() {
            continue;
        }
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            comp.clear();
            comp.insert(start);
            seen.insert(start);
            stack.clear();
            stack.push(start);
            while let Some(v) = stack.pop() {
                for w in g.neighbors(v).iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            us.clear();
            us.extend(side_a.iter().filter(|&u| g.neighbors(u).intersects(&comp)));
            if us.is_empty() {
                continue;
            }
            for v in side_b.iter() {
                if !g.neighbors(v).intersects(&comp) {
                    continue;
                }
                for &u in &us {
                    if !g.has_edge(u, v) {
                        let interior = shortest_path_through(g, &comp, u, v);
                        let mut cycle = vec![a, u];
                        cycle.extend(interior);
                        cycle.push(v);
                        cycle.push(b);
                        debug_assert!(audit_cycle(g, &cycle));
                        return Some(cycle);
                    }
                }
            }
        }
    }
    None
}

/// Interior of the shortest `u`-`v` path whose inner vertices lie in `comp`.
fn shortest_path_through(g: &Graph, comp: &VertexSet, u: usize, v: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for w in g.neighbors(u).intersection(comp).iter() {
        parent[w] = u;
        queue.push_back(w);
    }
    while let Some(x) = queue.pop_front() {
        if g.has_edge(x, v) {
            let mut interior = vec![x];
            let mut cur = x;
            while parent[cur] != u {
                cur = parent[cur];
                interior.push(cur);
            }
            interior.reverse();
            return interior;
        }
        for w in g.neighbors(x).intersection(comp).iter() {
            if parent[w] == usize::MAX {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    unreachable!("caller guarantees u and v both see the component");
}

fn find_chordless_cycle(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    parity: CycleParity,
    budget: u64,
) -> Result<Option<Vec<usize>>, SearchError> {
    let n = g.vertex_count();
    if n < min_len {
        return Ok(None);
    }
    let mut steps = 0u64;
    let mut path = Vec::with_capacity(max_len);
    for s in 0..n {
        path.clear();
        path.push(s);
        if let Some(cycle) = extend(g, s, &mut path, min_len, max_len, parity, budget, &mut steps)?
        {
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    min_len: usize,
    max_len: usize,
    parity: CycleParity,
    budget: u64,
    steps: &mut u64,
) -> Result<Option<Vec<usize>>, SearchError> {
    *steps += 1;
    if *steps > budget {
        return Err(SearchError::BudgetExhausted(budget));
    }
    let last = *path.last().unwrap();

    // Candidates must see the last path vertex, use only ids above the
    // anchor s (s is the least vertex of the cycle), and miss every
    // interior path vertex.
    let mut cands = g.neighbors(last).clone();
    for v in 0..=s {
        cands.remove(v);
    }
    if path.len() >= 2 {
        for &p in &path[1..path.len() - 1] {
            cands.subtract(g.neighbors(p));
            cands.remove(p);
        }
    }

    for c in cands.iter() {
        if g.has_edge(c, s) {
            // Closing edge: the cycle is path + c.
            if path.len() >= 2 {
                let len = path.len() + 1;
                let parity_ok = parity == CycleParity::Any || len % 2 == 1;
                if len >= min_len && len <= max_len && parity_ok {
                    let mut cycle = path.clone();
                    cycle.push(c);
                    debug_assert!(audit_cycle(g, &cycle));
                    return Ok(Some(cycle));
                }
            } else {
                // Second path vertex; adjacency to s is the first cycle edge.
                if path.len() + 1 < max_len {
                    path.push(c);
                    if let Some(cy) = extend(g, s, path, min_len, max_len, parity, budget, steps)?
                    {
                        return Ok(Some(cy));
                    }
                    path.pop();
                }
            }
        } else if path.len() + 1 < max_len {
            path.push(c);
            if let Some(cy) = extend(g, s, path, min_len, max_len, parity, budget, steps)? {
                return Ok(Some(cy));
            }
            path.pop();
        }
    }
    Ok(None)
}
