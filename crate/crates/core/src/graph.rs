//! Immutable simple undirected graphs with set-valued adjacency.
//!
//! Everything downstream works in terms of neighborhoods `N(v)`, closed
//! neighborhoods `N[v]`, anti-neighborhoods `A(U) = V \ N[U]` and contact
//! sets `U+ = N(U) ∩ N(A(U))`, so those are first-class operations here.

use crate::bitset::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {0} out of range (n = {1})")]
    EndpointOutOfRange(usize, usize),
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
    #[error("vertex sets overlap at {0}")]
    OverlappingSets(usize),
    #[error("anti-neighborhood of the given set is empty")]
    EmptyAntiNeighborhood,
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list, collapsing duplicates.
    /// Self-loops and out-of-range endpoints are errors.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![VertexSet::empty(n); n];
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adj[u].contains(v) {
                adj[u].insert(v);
                adj[v].insert(u);
                m += 1;
            }
        }
        Ok(Graph { n, m, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N(U)`: neighbors of `U` outside `U`.
    pub fn neighborhood_of_set(&self, u: &VertexSet) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for v in u.iter() {
            s.union_with(&self.adj[v]);
        }
        s.subtract(u);
        s
    }

    /// `N[U] = N(U) ∪ U`.
    pub fn closed_neighborhood_of_set(&self, u: &VertexSet) -> VertexSet {
        let mut s = self.neighborhood_of_set(u);
        s.union_with(u);
        s
    }

    /// `A(U) = V \ N[U]`.
    pub fn anti_neighborhood(&self, u: &VertexSet) -> VertexSet {
        self.closed_neighborhood_of_set(u).inverted()
    }

    /// `A(v)` for a single vertex.
    pub fn anti_neighborhood_of(&self, v: usize) -> VertexSet {
        self.closed_neighborhood(v).inverted()
    }

    /// Contact vertices `U+ = N(U) ∩ N(A(U))`. Requires `A(U)` nonempty.
    pub fn contact_set(&self, u: &VertexSet) -> Result<VertexSet, GraphError> {
        let anti = self.anti_neighborhood(u);
        if anti.is_empty() {
            return Err(GraphError::EmptyAntiNeighborhood);
        }
        let mut s = self.neighborhood_of_set(u);
        s.intersect_with(&self.neighborhood_of_set(&anti));
        Ok(s)
    }

    /// Complement graph on the same vertex ids.
    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].inverted();
            row.remove(v);
            adj.push(row);
        }
        let m = self.n * self.n.saturating_sub(1) / 2 - self.m;
        Graph { n: self.n, m, adj }
    }

    /// Induced subgraph on `s`, plus the map from new ids to original ids.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let k = map.len();
        let mut adj = vec![VertexSet::empty(k); k];
        let mut m = 0;
        for (new, &old) in map.iter().enumerate() {
            for w in self.adj[old].intersection(s).iter() {
                let nw = back[w];
                if nw > new {
                    adj[new].insert(nw);
                    adj[nw].insert(new);
                    m += 1;
                }
            }
        }
        (Graph { n: k, m, adj }, map)
    }

    /// True iff every `u`-`w` cross pair is an edge. The sets must be disjoint.
    pub fn is_join(&self, u: &VertexSet, w: &VertexSet) -> Result<bool, GraphError> {
        if let Some(x) = u.intersection(w).first() {
            return Err(GraphError::OverlappingSets(x));
        }
        Ok(u.iter().all(|x| w.is_subset_of(&self.adj[x])))
    }

    /// True iff no `u`-`w` cross pair is an edge. The sets must be disjoint.
    pub fn is_cojoin(&self, u: &VertexSet, w: &VertexSet) -> Result<bool, GraphError> {
        if let Some(x) = u.intersection(w).first() {
            return Err(GraphError::OverlappingSets(x));
        }
        Ok(u.iter().all(|x| w.is_disjoint_from(&self.adj[x])))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset_of(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.is_disjoint_from(&self.adj[v]))
    }

    /// Connected components, each sorted by least contained vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Components of the induced subgraph on `within`, in original ids.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].intersection(within).iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// A graph with 64-bit signed vertex weights.
#[derive(Clone, Debug)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: Vec<i64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<i64>) -> Self {
        assert_eq!(graph.vertex_count(), weights.len());
        WeightedGraph { graph, weights }
    }

    pub fn unit(graph: Graph) -> Self {
        let n = graph.vertex_count();
        WeightedGraph {
            graph,
            weights: vec![1; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn weight_of_set(&self, s: &VertexSet) -> i64 {
        s.iter().map(|v| self.weights[v]).sum()
    }

    /// Induced weighted subgraph plus the new-to-old id map.
    pub fn induced(&self, s: &VertexSet) -> (WeightedGraph, Vec<usize>) {
        let (g, map) = self.graph.induced(s);
        let weights = map.iter().map(|&v| self.weights[v]).collect();
        (WeightedGraph { graph: g, weights }, map)
    }
}

/// Convenience constructors used all over the tests and the structure lab.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((n - 1, 0));
        Graph::build(n, &e).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::build(n, &e).unwrap()
    }

    pub fn empty(n: usize) -> Graph {
        Graph::build(n, &[]).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..a {
            for v in 0..b {
                e.push((u, a + v));
            }
        }
        Graph::build(a + b, &e).unwrap()
    }

    /// Dart on a,b,c,d,e = 0,1,2,3,4: a diamond a,b,c,d plus a pendant e at d.
    pub fn dart() -> Graph {
        Graph::build(5, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    /// Bull on a,b,c,d,e = 0,1,2,3,4: triangle b,c,e with horns a at b, d at c.
    pub fn bull() -> Graph {
        Graph::build(5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]).unwrap()
    }

    /// Petersen graph (outer C5, inner 5-star polygon, spokes).
    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, 5 + i));
        }
        Graph::build(10, &e).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn build_cycle_and_duplicates() {
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.edge_count(), 5);
        // duplicate edge collapses
        let p3 = Graph::build(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange(3, 3))
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn dart_edges_match_definition() {
        let d = dart();
        assert_eq!(d.edge_count(), 6);
        assert_eq!(d.degree(3), 4);
        assert_eq!(d.degree(4), 1);
        assert!(!d.has_edge(1, 2));
    }

    #[test]
    fn complement_c5_is_c5() {
        let c5 = cycle(5);
        let co = c5.complement();
        assert_eq!(co.edge_count(), 5);
        // self-complementary: every vertex has degree 2
        assert!(co.vertices().all(|v| co.degree(v) == 2));
        assert_eq!(co.complement(), c5);
    }

    #[test]
    fn complement_k4_is_empty() {
        let co = complete(4).complement();
        assert_eq!(co.edge_count(), 0);
    }

    #[test]
    fn complement_c6_is_prism() {
        // two triangles joined by a perfect matching
        let co = cycle(6).complement();
        assert_eq!(co.edge_count(), 9);
        let left = VertexSet::from_iter(6, [0, 2, 4]);
        let right = VertexSet::from_iter(6, [1, 3, 5]);
        assert!(co.is_clique(&left));
        assert!(co.is_clique(&right));
        for v in 0..6 {
            assert_eq!(co.degree(v), 3);
        }
    }

    #[test]
    fn induced_subgraphs() {
        // C5 minus one vertex is P4
        let c5 = cycle(5);
        let (g, map) = c5.induced(&VertexSet::from_iter(5, [0, 1, 2, 3]));
        assert_eq!(g.edge_count(), 3);
        assert_eq!(map, vec![0, 1, 2, 3]);

        // dart restricted to {a,b,c,d} is the diamond
        let (dia, _) = dart().induced(&VertexSet::from_iter(5, [0, 1, 2, 3]));
        assert_eq!(dia.edge_count(), 5);
        assert!(!dia.has_edge(1, 2));

        // empty selection gives the empty graph
        let (e, map) = c5.induced(&VertexSet::empty(5));
        assert_eq!(e.vertex_count(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn anti_neighborhoods() {
        let c5 = cycle(5);
        let a = c5.anti_neighborhood_of(1);
        assert_eq!(a.to_vec(), vec![3, 4]);

        let k4 = complete(4);
        assert!(k4.anti_neighborhood_of(0).is_empty());

        // dart: A({e}) = {a,b,c} since N[e] = {d,e}
        let d = dart();
        let a = d.anti_neighborhood(&VertexSet::from_iter(5, [4]));
        assert_eq!(a.to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn contact_sets() {
        // P4 a-b-c-d, U={a}: A(U)={c,d}, U+={b}
        let p4 = path(4);
        let u = VertexSet::from_iter(4, [0]);
        assert_eq!(p4.anti_neighborhood(&u).to_vec(), vec![2, 3]);
        assert_eq!(p4.contact_set(&u).unwrap().to_vec(), vec![1]);

        // P5 v1..v5, U={v1}: U+ = {v2}
        let p5 = path(5);
        let u = VertexSet::from_iter(5, [0]);
        assert_eq!(p5.contact_set(&u).unwrap().to_vec(), vec![1]);

        // empty anti-neighborhood is a precondition violation
        let k4 = complete(4);
        assert_eq!(
            k4.contact_set(&VertexSet::from_iter(4, [0])),
            Err(GraphError::EmptyAntiNeighborhood)
        );
    }

    #[test]
    fn joins_and_cliques() {
        let k33 = complete_bipartite(3, 3);
        let left = VertexSet::from_iter(6, [0, 1, 2]);
        let right = VertexSet::from_iter(6, [3, 4, 5]);
        assert!(k33.is_join(&left, &right).unwrap());

        let c5 = cycle(5);
        let a = VertexSet::from_iter(5, [0]);
        let b = VertexSet::from_iter(5, [2]);
        assert!(!c5.is_join(&a, &b).unwrap());

        assert!(matches!(
            c5.is_join(&a, &VertexSet::from_iter(5, [0, 1])),
            Err(GraphError::OverlappingSets(0))
        ));

        let prism = cycle(6).complement();
        assert!(prism.is_clique(&VertexSet::from_iter(6, [0, 2, 4])));
    }

    #[test]
    fn components() {
        let g = Graph::build(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![2, 3, 4]);
        assert_eq!(comps[2].to_vec(), vec![5]);
    }

    #[test]
    fn partition_into_n_v_a() {
        // N(v), {v}, A(v) partition V for every vertex
        let g = petersen();
        for v in g.vertices() {
            let mut acc = g.neighbors(v).clone();
            assert!(!acc.contains(v));
            acc.insert(v);
            let a = g.anti_neighborhood_of(v);
            assert!(acc.is_disjoint_from(&a));
            acc.union_with(&a);
            assert_eq!(acc.len(), g.vertex_count());
        }
    }
}
