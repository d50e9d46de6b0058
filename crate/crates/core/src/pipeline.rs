//! Class-specific MWIS drivers.
//!
//! Every driver reduces to base solvers through the same pieces, wired
//! per class:
//!
//! * dart classes decompose prime quotients by clique separators and run
//!   the anti-neighborhood reduction inside each atom;
//! * bull classes run the anti-neighborhood reduction directly on prime
//!   quotients (no separator stage is needed there);
//! * "odd-hole" variants verify each branch perfect (no odd hole, no odd
//!   anti-hole) and solve it with the exact oracle;
//! * the P5+bull class dispatches branches to the chain solvers.
//!
//! Branches that miss their predicted class fall back to the oracle and
//! are counted; exactness never depends on the structure predictions.

use crate::bitset::VertexSet;
use crate::cliquesep;
use crate::graph::WeightedGraph;
use crate::modular::{self, MDKindCounts};
use crate::patterns::classes::{self, GraphClass, Violation};
use crate::patterns::SearchError;
use crate::solvers::{self, Solution, SolverError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassSpec {
    OddHoleDartFree,
    HoleDartFree,
    OddHoleBullFree,
    HoleBullFree,
    P5BullFree,
    Auto,
}

impl ClassSpec {
    pub fn name(self) -> &'static str {
        match self {
            ClassSpec::OddHoleDartFree => "odd-hole-dart-free",
            ClassSpec::HoleDartFree => "hole-dart-free",
            ClassSpec::OddHoleBullFree => "odd-hole-bull-free",
            ClassSpec::HoleBullFree => "hole-bull-free",
            ClassSpec::P5BullFree => "p5-bull-free",
            ClassSpec::Auto => "auto",
        }
    }

    pub fn parse(s: &str) -> Option<ClassSpec> {
        Some(match s {
            "odd-hole-dart-free" => ClassSpec::OddHoleDartFree,
            "hole-dart-free" => ClassSpec::HoleDartFree,
            "odd-hole-bull-free" => ClassSpec::OddHoleBullFree,
            "hole-bull-free" => ClassSpec::HoleBullFree,
            "p5-bull-free" => ClassSpec::P5BullFree,
            "auto" => ClassSpec::Auto,
            _ => return None,
        })
    }

    fn graph_class(self) -> Option<GraphClass> {
        Some(match self {
            ClassSpec::OddHoleDartFree => GraphClass::OddHoleDartFree,
            ClassSpec::HoleDartFree => GraphClass::HoleDartFree,
            ClassSpec::OddHoleBullFree => GraphClass::OddHoleBullFree,
            ClassSpec::HoleBullFree => GraphClass::HoleBullFree,
            ClassSpec::P5BullFree => GraphClass::P5BullFree,
            ClassSpec::Auto => return None,
        })
    }

    /// Auto-detection order: most structure first.
    pub const AUTO_ORDER: [ClassSpec; 5] = [
        ClassSpec::P5BullFree,
        ClassSpec::HoleDartFree,
        ClassSpec::HoleBullFree,
        ClassSpec::OddHoleDartFree,
        ClassSpec::OddHoleBullFree,
    ];
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("graph violates class {class}: {violation:?}")]
    ClassViolation { class: String, violation: Violation },
    #[error("no supported class matches this graph")]
    NoClassMatches { violations: Vec<(String, Violation)> },
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseCallCounts {
    pub clique: usize,
    pub bipartite: usize,
    pub chain: usize,
    pub cochain: usize,
    pub weakly_chordal: usize,
    pub perfect_oracle: usize,
    pub oracle_fallback: usize,
}

impl BaseCallCounts {
    pub fn total(&self) -> usize {
        self.clique
            + self.bipartite
            + self.chain
            + self.cochain
            + self.weakly_chordal
            + self.perfect_oracle
            + self.oracle_fallback
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReductionStats {
    pub anti_branches: usize,
    pub base_calls: BaseCallCounts,
    pub max_base_call_size: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomStats {
    pub atom_count: usize,
    pub max_atom_size: usize,
    pub splits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub solution: Solution,
    pub class_used: ClassSpec,
    pub md_stats: MDKindCounts,
    pub atom_stats: AtomStats,
    pub reduction_stats: ReductionStats,
    pub structure_checks: Vec<StructureCheck>,
    pub fallback_count: usize,
}

/// The anti-neighborhood reduction. Exact whenever `base` is exact on each
/// branch; ties broken toward the least branching vertex.
pub fn nearly_reduce<F>(wg: &WeightedGraph, base: &mut F) -> Result<Solution, SolverError>
where
    F: FnMut(&WeightedGraph, &[usize]) -> Result<Solution, SolverError>,
{
    let n = wg.vertex_count();
    if n == 0 {
        return Ok(Solution::empty(0));
    }
    let mut best: Option<Solution> = None;
    for v in 0..n {
        let anti = wg.graph.anti_neighborhood_of(v);
        let (bwg, map) = wg.induced(&anti);
        let sub = base(&bwg, &map)?;
        let value = wg.weights[v] + sub.value;
        if best.as_ref().is_none_or(|b| value > b.value) {
            let mut set = sub.translated(&map, n).set;
            set.insert(v);
            best = Some(Solution { value, set });
        }
    }
    Ok(best.expect("nonempty graph has a branch").audited(wg))
}

struct Ctx {
    budget: u64,
    reduction: ReductionStats,
    checks: Vec<StructureCheck>,
    md_stats: MDKindCounts,
    atom_stats: AtomStats,
}

impl Ctx {
    fn new(budget: u64) -> Self {
        Ctx {
            budget,
            reduction: ReductionStats::default(),
            checks: Vec::new(),
            md_stats: MDKindCounts::default(),
            atom_stats: AtomStats::default(),
        }
    }

    fn note_branch(&mut self, size: usize) {
        self.reduction.anti_branches += 1;
        self.reduction.max_base_call_size = self.reduction.max_base_call_size.max(size);
    }
}

/// Which base family a pipeline predicts for its branches.
#[derive(Clone, Copy, PartialEq, Eq)]
enum BranchPolicy {
    DartAtoms,
    BullQuotients,
    PerfectOracle,
    Chains,
}

fn solve_branch(
    ctx: &mut Ctx,
    policy: BranchPolicy,
    bwg: &WeightedGraph,
) -> Result<Solution, SolverError> {
    ctx.note_branch(bwg.vertex_count());
    match policy {
        BranchPolicy::DartAtoms => {
            if bwg.graph.is_clique(&bwg.graph.full_set()) {
                ctx.reduction.base_calls.clique += 1;
                return solvers::mwis_clique(bwg);
            }
            if classes::is_chordal_bipartite(&bwg.graph).is_ok() {
                ctx.reduction.base_calls.bipartite += 1;
                return solvers::mwis_bipartite(bwg);
            }
            if classes::is_weakly_chordal(&bwg.graph).is_ok() {
                ctx.reduction.base_calls.weakly_chordal += 1;
                return solvers::mwis_weakly_chordal(bwg, ctx.budget);
            }
            fallback(ctx, "atom-branch-weakly-chordal", bwg)
        }
        BranchPolicy::BullQuotients => {
            if classes::is_weakly_chordal(&bwg.graph).is_ok() {
                ctx.reduction.base_calls.weakly_chordal += 1;
                return solvers::mwis_weakly_chordal(bwg, ctx.budget);
            }
            fallback(ctx, "quotient-branch-weakly-chordal", bwg)
        }
        BranchPolicy::PerfectOracle => {
            match classes::is_perfect(&bwg.graph, ctx.budget)? {
                Ok(()) => {
                    ctx.reduction.base_calls.perfect_oracle += 1;
                    solvers::mwis_oracle(bwg, ctx.budget)
                }
                Err(violation) => {
                    ctx.checks.push(StructureCheck {
                        name: "branch-perfection".into(),
                        passed: false,
                        detail: "anti-neighborhood branch is not perfect".into(),
                        witness: Some(violation.vertices().to_vec()),
                    });
                    fallback(ctx, "branch-perfection", bwg)
                }
            }
        }
        BranchPolicy::Chains => {
            if classes::is_bipartite_chain(&bwg.graph).is_ok() {
                ctx.reduction.base_calls.chain += 1;
                return solvers::mwis_bipartite_chain(bwg);
            }
            if classes::is_cobipartite_chain(&bwg.graph).is_ok() {
                ctx.reduction.base_calls.cochain += 1;
                return solvers::mwis_cobipartite_chain(bwg);
            }
            fallback(ctx, "quotient-branch-chain", bwg)
        }
    }
}

fn fallback(ctx: &mut Ctx, name: &str, bwg: &WeightedGraph) -> Result<Solution, SolverError> {
    ctx.reduction.base_calls.oracle_fallback += 1;
    ctx.checks.push(StructureCheck {
        name: name.into(),
        passed: false,
        detail: format!(
            "branch of {} vertices missed its predicted class; solved by oracle",
            bwg.vertex_count()
        ),
        witness: None,
    });
    solvers::mwis_oracle(bwg, ctx.budget)
}

/// Prime-quotient solver for the dart pipelines: clique separators first,
/// anti-neighborhood reduction inside each atom.
fn prime_by_separators(
    ctx: &mut Ctx,
    policy: BranchPolicy,
    qwg: &WeightedGraph,
) -> Result<Solution, SolverError> {
    let (sol, stats) = {
        let mut atom_solver = |atom: &WeightedGraph, _map: &[usize]| {
            nearly_reduce(atom, &mut |branch: &WeightedGraph, _m: &[usize]| {
                solve_branch(ctx, policy, branch)
            })
        };
        cliquesep::solve_with_separators(qwg, &mut atom_solver)?
    };
    ctx.atom_stats.atom_count += stats.atom_count;
    ctx.atom_stats.max_atom_size = ctx.atom_stats.max_atom_size.max(stats.max_atom_size);
    ctx.atom_stats.splits += stats.splits;
    Ok(sol)
}

/// Prime-quotient solver for the bull and chain pipelines: the
/// anti-neighborhood reduction directly on the quotient.
fn prime_by_reduction(
    ctx: &mut Ctx,
    policy: BranchPolicy,
    qwg: &WeightedGraph,
) -> Result<Solution, SolverError> {
    nearly_reduce(qwg, &mut |branch: &WeightedGraph, _m: &[usize]| {
        solve_branch(ctx, policy, branch)
    })
}

fn run_md_pipeline(
    wg: &WeightedGraph,
    policy: BranchPolicy,
    with_separators: bool,
    ctx: &mut Ctx,
) -> Result<Solution, SolverError> {
    let tree = modular::modular_decomposition(&wg.graph);
    ctx.md_stats = tree.kind_counts();
    let mut prime_solver = |qwg: &WeightedGraph| {
        if with_separators {
            prime_by_separators(ctx, policy, qwg)
        } else {
            prime_by_reduction(ctx, policy, qwg)
        }
    };
    modular::combine_md(&tree, wg, &mut prime_solver)
}

fn run_class(
    wg: &WeightedGraph,
    class: ClassSpec,
    ctx: &mut Ctx,
) -> Result<Solution, SolverError> {
    match class {
        ClassSpec::HoleDartFree => run_md_pipeline(wg, BranchPolicy::DartAtoms, true, ctx),
        ClassSpec::HoleBullFree => run_md_pipeline(wg, BranchPolicy::BullQuotients, false, ctx),
        ClassSpec::OddHoleBullFree => {
            run_md_pipeline(wg, BranchPolicy::PerfectOracle, false, ctx)
        }
        ClassSpec::P5BullFree => run_md_pipeline(wg, BranchPolicy::Chains, false, ctx),
        ClassSpec::OddHoleDartFree => {
            // no modular stage in this pipeline
            nearly_reduce(wg, &mut |branch: &WeightedGraph, _m: &[usize]| {
                solve_branch(ctx, BranchPolicy::PerfectOracle, branch)
            })
        }
        ClassSpec::Auto => unreachable!("auto is resolved before dispatch"),
    }
}

/// Solves MWIS with the pipeline for `spec`, verifying class membership
/// first (`Auto` picks the most specific matching class). Negative-weight
/// vertices are deleted up front; the optimum is unaffected.
pub fn solve(wg: &WeightedGraph, spec: ClassSpec, budget: u64) -> Result<SolveReport, SolveError> {
    let n = wg.vertex_count();

    let class = match spec {
        ClassSpec::Auto => {
            let mut violations = Vec::new();
            let mut chosen = None;
            for cand in ClassSpec::AUTO_ORDER {
                let gc = cand.graph_class().unwrap();
                match classes::in_class(&wg.graph, gc, budget)? {
                    Ok(()) => {
                        chosen = Some(cand);
                        break;
                    }
                    Err(violation) => violations.push((gc.name().to_string(), violation)),
                }
            }
            chosen.ok_or(SolveError::NoClassMatches { violations })?
        }
        explicit => {
            let gc = explicit.graph_class().unwrap();
            if let Err(violation) = classes::in_class(&wg.graph, gc, budget)? {
                return Err(SolveError::ClassViolation {
                    class: gc.name().to_string(),
                    violation,
                });
            }
            explicit
        }
    };

    let mut ctx = Ctx::new(budget);

    // Preprocessing: a maximum-weight independent set never needs a
    // negative-weight vertex.
    let mut keep = VertexSet::empty(n);
    for v in 0..n {
        if wg.weights[v] >= 0 {
            keep.insert(v);
        }
    }
    let (solution, map) = if keep.len() == n {
        (run_class(wg, class, &mut ctx)?, None)
    } else {
        let (sub, map) = wg.induced(&keep);
        (run_class(&sub, class, &mut ctx)?, Some(map))
    };
    let solution = match map {
        None => solution,
        Some(map) => solution.translated(&map, n),
    }
    .audited(wg);

    let fallback_count = ctx.reduction.base_calls.oracle_fallback;
    let mut checks = ctx.checks;
    if matches!(class, ClassSpec::OddHoleDartFree | ClassSpec::OddHoleBullFree) {
        let failed = checks
            .iter()
            .filter(|c| c.name == "branch-perfection" && !c.passed)
            .count();
        checks.push(StructureCheck {
            name: "branch-perfection".into(),
            passed: failed == 0,
            detail: format!(
                "{} branches verified perfect, {} failed the check",
                ctx.reduction.base_calls.perfect_oracle, failed
            ),
            witness: None,
        });
    }
    checks.push(StructureCheck {
        name: "branch-dispatch".into(),
        passed: fallback_count == 0,
        detail: format!(
            "{} branches dispatched, {} oracle fallbacks",
            ctx.reduction.anti_branches, fallback_count
        ),
        witness: None,
    });

    Ok(SolveReport {
        solution,
        class_used: class,
        md_stats: ctx.md_stats,
        atom_stats: ctx.atom_stats,
        reduction_stats: ctx.reduction,
        structure_checks: checks,
        fallback_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Graph;
    use crate::solvers::mwis_oracle;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const BUDGET: u64 = 50_000_000;

    #[test]
    fn nearly_reduce_examples() {
        // C5 unit weights: 1 + α(edge) = 2
        let c5 = WeightedGraph::unit(cycle(5));
        let mut oracle = |wg: &WeightedGraph, _m: &[usize]| mwis_oracle(wg, BUDGET);
        let sol = nearly_reduce(&c5, &mut oracle).unwrap();
        assert_eq!(sol.value, 2);
        // ties break to the least vertex
        assert!(sol.set.contains(0));

        // single vertex of weight 7: the empty-branch contributes w(v)
        let k1 = WeightedGraph::new(empty(1), vec![7]);
        assert_eq!(nearly_reduce(&k1, &mut oracle).unwrap().value, 7);
    }

    #[test]
    fn nearly_reduce_equals_oracle_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        let mut oracle = |wg: &WeightedGraph, _m: &[usize]| mwis_oracle(wg, BUDGET);
        for _ in 0..60 {
            let n = rng.random_range(1..=12);
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
            let weights: Vec<i64> = (0..n).map(|_| rng.random_range(0..=100)).collect();
            let wg = WeightedGraph::new(g, weights);
            assert_eq!(
                nearly_reduce(&wg, &mut oracle).unwrap().value,
                mwis_oracle(&wg, BUDGET).unwrap().value
            );
        }
    }

    #[test]
    fn cliques_solve_under_every_spec() {
        let wg = WeightedGraph::new(complete(6), vec![4, 1, 9, 2, 2, 2]);
        for spec in [
            ClassSpec::OddHoleDartFree,
            ClassSpec::HoleDartFree,
            ClassSpec::OddHoleBullFree,
            ClassSpec::HoleBullFree,
            ClassSpec::P5BullFree,
            ClassSpec::Auto,
        ] {
            let report = solve(&wg, spec, BUDGET).unwrap();
            assert_eq!(report.solution.value, 9, "spec {:?}", spec);
        }
    }

    #[test]
    fn class_violation_is_reported_not_silently_accepted() {
        let wg = WeightedGraph::unit(dart());
        match solve(&wg, ClassSpec::HoleDartFree, BUDGET) {
            Err(SolveError::ClassViolation { class, violation }) => {
                assert_eq!(class, "hole-dart-free");
                assert_eq!(violation.vertices().len(), 5);
            }
            other => panic!("expected class violation, got {:?}", other),
        }
    }

    #[test]
    fn auto_picks_a_class_for_c5() {
        // C5 is P5-free and bull-free
        let wg = WeightedGraph::unit(cycle(5));
        let report = solve(&wg, ClassSpec::Auto, BUDGET).unwrap();
        assert_eq!(report.class_used, ClassSpec::P5BullFree);
        assert_eq!(report.solution.value, 2);
    }

    #[test]
    fn no_class_matches_is_an_error() {
        // C5 with a dart glued on misses every supported class... build a
        // graph with an odd hole, a dart, a bull, and a P5.
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]; // C5
        edges.extend([(5, 6), (5, 7), (5, 8), (6, 8), (7, 8), (8, 9)]); // dart
        edges.extend([(10, 11), (11, 12), (12, 13), (11, 14), (12, 14)]); // bull
        edges.extend([(15, 16), (16, 17), (17, 18), (18, 19)]); // P5
        let g = Graph::build(20, &edges).unwrap();
        let wg = WeightedGraph::unit(g);
        assert!(matches!(
            solve(&wg, ClassSpec::Auto, BUDGET),
            Err(SolveError::NoClassMatches { .. })
        ));
    }

    #[test]
    fn negative_weights_are_preprocessed_away() {
        let wg = WeightedGraph::new(path(4), vec![5, -3, 4, -1]);
        let report = solve(&wg, ClassSpec::Auto, BUDGET).unwrap();
        assert_eq!(report.solution.value, 9);
        assert_eq!(report.solution.vertices(), vec![0, 2]);
    }

    #[test]
    fn chordal_bipartite_inputs_avoid_fallbacks_in_the_dart_pipeline() {
        // a chordal bipartite graph: C4 with a pendant
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        let wg = WeightedGraph::unit(g);
        let report = solve(&wg, ClassSpec::HoleDartFree, BUDGET).unwrap();
        assert_eq!(report.fallback_count, 0);
        assert_eq!(
            report.solution.value,
            mwis_oracle(&wg, BUDGET).unwrap().value
        );
    }

    #[test]
    fn empty_and_tiny_graphs() {
        let report = solve(&WeightedGraph::unit(empty(0)), ClassSpec::Auto, BUDGET).unwrap();
        assert_eq!(report.solution.value, 0);
        let report = solve(&WeightedGraph::new(empty(3), vec![2, 0, 5]), ClassSpec::Auto, BUDGET)
            .unwrap();
        assert_eq!(report.solution.value, 7);
    }
}
