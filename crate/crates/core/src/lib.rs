//! Exact Maximum Weight Independent Set through structure.
//!
//! This crate solves MWIS exactly on several forbidden-subgraph graph
//! classes by composing three reductions until a polynomial base solver
//! applies:
//!
//! 1. modular decomposition (parallel nodes add, series nodes max, prime
//!    quotients are solved directly),
//! 2. clique-separator decomposition into atoms with weight-adjusted
//!    recombination,
//! 3. the anti-neighborhood reduction
//!    `α_w(G) = max_v { w(v) + α_w(G[A(v)]) }`, which turns "every
//!    anti-neighborhood has property Π" into `n` calls of a Π-solver.
//!
//! The supported classes and the base solvers they reach:
//!
//! | class                 | per-branch base                       |
//! |-----------------------|---------------------------------------|
//! | hole- and dart-free   | clique / bipartite / weakly chordal   |
//! | hole- and bull-free   | weakly chordal                        |
//! | odd-hole- and dart-free | perfection-checked oracle           |
//! | odd-hole- and bull-free | perfection-checked oracle           |
//! | P5- and bull-free     | bipartite chain / co-bipartite chain  |
//!
//! A branch-and-bound oracle ([`solvers::mwis_oracle`]) anchors every
//! equivalence test, and [`lab`] generates corpora and replays the
//! structural facts the reductions rely on.

pub mod bitset;
pub mod cliquesep;
pub mod graph;
pub mod lab;
pub mod modular;
pub mod patterns;
pub mod pipeline;
pub mod solvers;

pub use bitset::VertexSet;
pub use graph::{Graph, GraphError, WeightedGraph};
pub use pipeline::{solve, ClassSpec, SolveError, SolveReport};
pub use solvers::{Solution, SolverError};
