//! Modular decomposition and the bottom-up solve over its tree.
//!
//! A module is a vertex set no outside vertex distinguishes. The tree is
//! built by the classic recursion: disconnected graphs split into
//! components (parallel), co-disconnected ones into co-components
//! (series), and otherwise the maximal proper modules partition the
//! vertices and the quotient over them is prime. Maximal modules are found
//! by closing vertex pairs under distinguishers: the closure of a pair is
//! the least module containing it, and two vertices share a maximal proper
//! module exactly when their closure is proper. Cubic-ish and simple; fine
//! at the scales this crate targets.

use crate::bitset::VertexSet;
use crate::graph::{Graph, WeightedGraph};
use crate::solvers::{Solution, SolverError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MDNodeKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

#[derive(Debug, Clone)]
pub struct MDNode {
    pub kind: MDNodeKind,
    /// Vertices of the host graph under this node.
    pub vertices: VertexSet,
    pub children: Vec<usize>,
    /// For prime nodes: quotient graph whose vertex `i` stands for
    /// `children[i]`.
    pub quotient: Option<Graph>,
}

#[derive(Debug, Clone)]
pub struct MDTree {
    pub nodes: Vec<MDNode>,
    pub root: usize,
}

impl MDTree {
    pub fn node(&self, idx: usize) -> &MDNode {
        &self.nodes[idx]
    }

    pub fn kind_counts(&self) -> MDKindCounts {
        let mut c = MDKindCounts::default();
        for n in &self.nodes {
            match n.kind {
                MDNodeKind::Leaf => c.leaf += 1,
                MDNodeKind::Parallel => c.parallel += 1,
                MDNodeKind::Series => c.series += 1,
                MDNodeKind::Prime => c.prime += 1,
            }
        }
        c
    }

    pub fn prime_nodes(&self) -> impl Iterator<Item = &MDNode> {
        self.nodes.iter().filter(|n| n.kind == MDNodeKind::Prime)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MDKindCounts {
    pub leaf: usize,
    pub parallel: usize,
    pub series: usize,
    pub prime: usize,
}

/// A vertex outside the candidate set seeing part of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinguisher {
    pub z: usize,
    pub sees: usize,
    pub misses: usize,
}

/// Definition check: `s` is a module iff every outside vertex sees all of
/// `s` or none of it.
pub fn is_module(g: &Graph, s: &VertexSet) -> Result<(), Distinguisher> {
    for z in s.inverted().iter() {
        let inter = g.neighbors(z).intersection(s);
        if !inter.is_empty() && inter != *s {
            let sees = inter.first().unwrap();
            let misses = s.difference(g.neighbors(z)).first().unwrap();
            return Err(Distinguisher { z, sees, misses });
        }
    }
    Ok(())
}

/// Least module of `G[within]` containing `x` and `y`.
fn pair_closure(g: &Graph, within: &VertexSet, x: usize, y: usize) -> VertexSet {
    let mut module = VertexSet::empty(g.vertex_count());
    module.insert(x);
    module.insert(y);
    // seen: outside vertices with a neighbor in the module;
    // all:  outside vertices adjacent to the whole module.
    let mut seen = g.neighbors(x).union(g.neighbors(y));
    seen.intersect_with(within);
    let mut all = g.neighbors(x).intersection(g.neighbors(y));
    all.intersect_with(within);
    loop {
        let mut distinguishers = seen.clone();
        distinguishers.subtract(&all);
        distinguishers.subtract(&module);
        match distinguishers.first() {
            None => return module,
            Some(z) => {
                module.insert(z);
                let nz = g.neighbors(z).intersection(within);
                seen.union_with(&nz);
                all.intersect_with(g.neighbors(z));
            }
        }
    }
}

/// True iff `G[within]` has only trivial modules. Independent of the tree
/// construction; used as the audit route.
pub fn is_prime_within(g: &Graph, within: &VertexSet) -> bool {
    let verts = within.to_vec();
    if verts.len() <= 2 {
        return verts.len() <= 1;
    }
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if pair_closure(g, within, verts[i], verts[j]).len() < verts.len() {
                return false;
            }
        }
    }
    true
}

pub fn is_prime(g: &Graph) -> bool {
    is_prime_within(g, &g.full_set())
}

/// Components of the complement of `G[within]`, ascending by least member.
fn co_components_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut remaining = within.clone();
    let mut out = Vec::new();
    while let Some(start) = remaining.first() {
        let mut comp = VertexSet::empty(g.vertex_count());
        comp.insert(start);
        remaining.remove(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            // complement-neighbors of v within the remainder
            let mut nbrs = remaining.clone();
            nbrs.subtract(g.neighbors(v));
            for w in nbrs.iter() {
                comp.insert(w);
                remaining.remove(w);
                frontier.push(w);
            }
        }
        out.push(comp);
    }
    out
}

pub fn modular_decomposition(g: &Graph) -> MDTree {
    let mut nodes = Vec::new();
    let root = build(g, &g.full_set(), &mut nodes);
    MDTree { nodes, root }
}

fn build(g: &Graph, set: &VertexSet, nodes: &mut Vec<MDNode>) -> usize {
    if set.len() == 1 {
        nodes.push(MDNode {
            kind: MDNodeKind::Leaf,
            vertices: set.clone(),
            children: Vec::new(),
            quotient: None,
        });
        return nodes.len() - 1;
    }

    let comps = g.components_within(set);
    if comps.len() > 1 {
        let children = comps.iter().map(|c| build(g, c, nodes)).collect();
        nodes.push(MDNode {
            kind: MDNodeKind::Parallel,
            vertices: set.clone(),
            children,
            quotient: None,
        });
        return nodes.len() - 1;
    }

    let co_comps = co_components_within(g, set);
    if co_comps.len() > 1 {
        let children = co_comps.iter().map(|c| build(g, c, nodes)).collect();
        nodes.push(MDNode {
            kind: MDNodeKind::Series,
            vertices: set.clone(),
            children,
            quotient: None,
        });
        return nodes.len() - 1;
    }

    // Connected and co-connected: the maximal proper modules partition the
    // set. Two vertices share one iff their pair closure is proper.
    let verts = set.to_vec();
    let mut class_of: Vec<Option<usize>> = vec![None; verts.len()];
    let mut classes: Vec<VertexSet> = Vec::new();
    let index_of: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for i in 0..verts.len() {
        if class_of[i].is_some() {
            continue;
        }
        let cls = classes.len();
        let mut members = VertexSet::empty(g.vertex_count());
        members.insert(verts[i]);
        class_of[i] = Some(cls);
        for j in i + 1..verts.len() {
            if class_of[j].is_some() {
                continue;
            }
            let closure = pair_closure(g, set, verts[i], verts[j]);
            if closure.len() < set.len() {
                for v in closure.iter() {
                    let idx = index_of[&v];
                    debug_assert!(class_of[idx].is_none() || class_of[idx] == Some(cls));
                    class_of[idx] = Some(cls);
                    members.insert(v);
                }
            }
        }
        classes.push(members);
    }

    let children: Vec<usize> = classes.iter().map(|c| build(g, c, nodes)).collect();
    let reps: Vec<usize> = classes.iter().map(|c| c.first().unwrap()).collect();
    let q = classes.len();
    let mut q_edges = Vec::new();
    for a in 0..q {
        for b in a + 1..q {
            if g.has_edge(reps[a], reps[b]) {
                q_edges.push((a, b));
            }
        }
    }
    let quotient = Graph::build(q, &q_edges).expect("quotient edges are in range");
    nodes.push(MDNode {
        kind: MDNodeKind::Prime,
        vertices: set.clone(),
        children,
        quotient: Some(quotient),
    });
    nodes.len() - 1
}

/// Bottom-up solve: parallel adds, series maxes, prime hands the quotient
/// (with child optima as weights) to the supplied solver.
pub fn combine_md<F>(
    tree: &MDTree,
    wg: &WeightedGraph,
    prime_solver: &mut F,
) -> Result<Solution, SolverError>
where
    F: FnMut(&WeightedGraph) -> Result<Solution, SolverError>,
{
    eval(tree, tree.root, wg, prime_solver)
}

fn eval<F>(
    tree: &MDTree,
    idx: usize,
    wg: &WeightedGraph,
    prime_solver: &mut F,
) -> Result<Solution, SolverError>
where
    F: FnMut(&WeightedGraph) -> Result<Solution, SolverError>,
{
    let n = wg.vertex_count();
    let node = tree.node(idx);
    match node.kind {
        MDNodeKind::Leaf => {
            let v = node.vertices.first().unwrap();
            if wg.weights[v] > 0 {
                Ok(Solution {
                    value: wg.weights[v],
                    set: node.vertices.clone(),
                })
            } else {
                Ok(Solution::empty(n))
            }
        }
        MDNodeKind::Parallel => {
            let mut value = 0;
            let mut set = VertexSet::empty(n);
            for &c in &node.children {
                let sol = eval(tree, c, wg, prime_solver)?;
                value += sol.value;
                set.union_with(&sol.set);
            }
            Ok(Solution { value, set })
        }
        MDNodeKind::Series => {
            let mut best = Solution::empty(n);
            for &c in &node.children {
                let sol = eval(tree, c, wg, prime_solver)?;
                if sol.value > best.value {
                    best = sol;
                }
            }
            Ok(best)
        }
        MDNodeKind::Prime => {
            let child_sols: Vec<Solution> = node
                .children
                .iter()
                .map(|&c| eval(tree, c, wg, prime_solver))
                .collect::<Result<_, _>>()?;
            let quotient = node.quotient.as_ref().expect("prime node has a quotient");
            let q_weights: Vec<i64> = child_sols.iter().map(|s| s.value).collect();
            let q_wg = WeightedGraph::new(quotient.clone(), q_weights);
            let q_sol = prime_solver(&q_wg)?;
            let mut set = VertexSet::empty(n);
            let mut value = 0;
            for qi in q_sol.set.iter() {
                value += child_sols[qi].value;
                set.union_with(&child_sols[qi].set);
            }
            Ok(Solution { value, set })
        }
    }
}
