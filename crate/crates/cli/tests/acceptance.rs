//! Acceptance gate: nine criteria, one test each, every tolerance pinned
//! here. Each prints a single pass line on success; failures carry the
//! full context in the assertion message.

use mwis_core::cliquesep;
use mwis_core::graph::{families, Graph, WeightedGraph};
use mwis_core::lab::enumerate::{
    enumerate_antihole_contact_configs, enumerate_prime_bullfree_coc6_completions,
    sample_dart_free_odd_antiholes,
};
use mwis_core::lab::gen::{self, GrowthBase};
use mwis_core::lab::suites::{self, SuiteConfig, SuiteId};
use mwis_core::lab::checks::{self, GrowthOutcome, GrowthTerminal};
use mwis_core::patterns::classes::GraphClass;
use mwis_core::pipeline::{self, ClassSpec};
use mwis_core::solvers::{self, SolverError};
use rand::Rng;
use rayon::prelude::*;
use std::time::Instant;

const ORACLE_BUDGET: u64 = 200_000_000;

fn pass(criterion: usize, detail: String) {
    println!("[PASS] criterion {criterion}: {detail}");
}

fn weights_for(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Vec<i64> {
    gen::gen_weights(rng, n, 0, 100)
}

/// Criterion 1: for each of the five pipelines, 500 seeded in-class
/// instances with n <= 16 and weights in [0,100] solve to exactly the
/// oracle value with witness audits passing, in under five minutes total.
#[test]
fn criterion_1_oracle_equivalence_end_to_end() {
    let started = Instant::now();
    let specs = [
        (ClassSpec::HoleDartFree, GraphClass::HoleDartFree),
        (ClassSpec::HoleBullFree, GraphClass::HoleBullFree),
        (ClassSpec::OddHoleDartFree, GraphClass::OddHoleDartFree),
        (ClassSpec::OddHoleBullFree, GraphClass::OddHoleBullFree),
        (ClassSpec::P5BullFree, GraphClass::P5BullFree),
    ];
    let per_class = 500usize;
    for (si, (spec, class)) in specs.iter().enumerate() {
        let failures: Vec<String> = (0..per_class)
            .into_par_iter()
            .filter_map(|i| {
                let seed = 0xACCE5500u64 + (si * per_class + i) as u64;
                let mut rng = gen::rng_for(seed);
                let g = gen::corpus_graph(&mut rng, *class, 16);
                let n = g.vertex_count();
                let wg = WeightedGraph::new(g, weights_for(&mut rng, n));
                let report = match pipeline::solve(&wg, *spec, ORACLE_BUDGET) {
                    Ok(r) => r,
                    Err(e) => return Some(format!("{spec:?} #{i}: solve failed: {e}")),
                };
                let oracle = solvers::mwis_oracle(&wg, ORACLE_BUDGET).unwrap();
                if report.solution.value != oracle.value {
                    return Some(format!(
                        "{spec:?} #{i}: pipeline {} != oracle {} on {:?}",
                        report.solution.value, oracle.value, wg.graph
                    ));
                }
                if !wg.graph.is_independent(&report.solution.set)
                    || wg.weight_of_set(&report.solution.set) != report.solution.value
                {
                    return Some(format!("{spec:?} #{i}: witness audit failed"));
                }
                None
            })
            .collect();
        assert!(failures.is_empty(), "{}", failures.join("\n"));
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 300,
        "five pipelines x 500 instances took {elapsed:?}, budget is 5 minutes"
    );
    pass(
        1,
        format!("5 pipelines x {per_class} instances match the oracle exactly in {elapsed:?}"),
    );
}

/// Criterion 2: each base solver matches the oracle exactly on 500
/// in-class instances with n <= 16.
#[test]
fn criterion_2_base_solver_equivalence() {
    let per_solver = 500usize;

    fn interval_graph(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Graph {
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

    fn bipartite_graph(rng: &mut rand_chacha::ChaCha8Rng) -> Graph {
        let a = rng.random_range(1..=8);
        let b = rng.random_range(1..=8);
        let p = rng.random_range(0.1..0.9);
        let mut edges = Vec::new();
        for x in 0..a {
            for y in 0..b {
                if rng.random_bool(p) {
                    edges.push((x, a + y));
                }
            }
        }
        Graph::build(a + b, &edges).unwrap()
    }

    fn weakly_chordal_graph(rng: &mut rand_chacha::ChaCha8Rng) -> Graph {
        loop {
            let n = rng.random_range(4..=16);
            let p = rng.random_range(0.05..0.3);
            let g = gen::gen_random_with(rng, n, p);
            if mwis_core::patterns::is_weakly_chordal(&g).is_ok() {
                return g;
            }
        }
    }

    type Solver = fn(&WeightedGraph) -> Result<mwis_core::Solution, SolverError>;
    type CorpusGen = Box<dyn Fn(&mut rand_chacha::ChaCha8Rng) -> Graph + Sync>;
    let cases: Vec<(&str, CorpusGen, Solver)> = vec![
        (
            "chordal",
            Box::new(|rng: &mut rand_chacha::ChaCha8Rng| {
                let n = rng.random_range(1..=16);
                interval_graph(rng, n)
            }),
            (|wg| solvers::mwis_chordal(wg)) as Solver,
        ),
        (
            "bipartite",
            Box::new(|rng: &mut rand_chacha::ChaCha8Rng| bipartite_graph(rng)),
            (|wg| solvers::mwis_bipartite(wg)) as Solver,
        ),
        (
            "bipartite-chain",
            Box::new(|rng: &mut rand_chacha::ChaCha8Rng| {
                let a = rng.random_range(1..=8);
                let b = rng.random_range(1..=8);
                gen::gen_chain_piece(rng, a, b)
            }),
            (|wg| solvers::mwis_bipartite_chain(wg)) as Solver,
        ),
        (
            "co-bipartite-chain",
            Box::new(|rng: &mut rand_chacha::ChaCha8Rng| {
                let a = rng.random_range(1..=8);
                let b = rng.random_range(1..=8);
                gen::gen_chain_piece(rng, a, b).complement()
            }),
            (|wg| solvers::mwis_cobipartite_chain(wg)) as Solver,
        ),
        (
            "clique",
            Box::new(|rng: &mut rand_chacha::ChaCha8Rng| {
                families::complete(rng.random_range(1..=16))
            }),
            (|wg| solvers::mwis_clique(wg)) as Solver,
        ),
        (
            "weakly-chordal",
            Box::new(|rng: &mut rand_chacha::ChaCha8Rng| weakly_chordal_graph(rng)),
            (|wg| solvers::mwis_weakly_chordal(wg, ORACLE_BUDGET)) as Solver,
        ),
    ];

    for (ci, (name, gen_fn, solver)) in cases.iter().enumerate() {
        let failures: Vec<String> = (0..per_solver)
            .into_par_iter()
            .filter_map(|i| {
                let seed = 0xBA5E0000u64 + (ci * per_solver + i) as u64;
                let mut rng = gen::rng_for(seed);
                let g = gen_fn(&mut rng);
                let n = g.vertex_count();
                let wg = WeightedGraph::new(g, weights_for(&mut rng, n));
                let got = match solver(&wg) {
                    Ok(s) => s,
                    Err(e) => return Some(format!("{name} #{i}: solver failed: {e}")),
                };
                let want = solvers::mwis_oracle(&wg, ORACLE_BUDGET).unwrap();
                (got.value != want.value).then(|| {
                    format!(
                        "{name} #{i}: {} != oracle {} on {:?}",
                        got.value, want.value, wg.graph
                    )
                })
            })
            .collect();
        assert!(failures.is_empty(), "{}", failures.join("\n"));
    }
    pass(2, format!("6 base solvers x {per_solver} instances match the oracle exactly"));
}

/// Criterion 3: dart-free graphs admit no odd anti-hole of length >= 7 in
/// any anti-neighborhood: the exhaustive contact-configuration search
/// finds nothing at co-C7 (and survivors at co-C8, as a control), one
/// million seeded samples find nothing, and alternation holds on at least
/// 200 planted co-C8 hosts.
#[test]
fn criterion_3_dart_free_nearly_odd_antihole_free() {
    let mut odd_examined = 0u64;
    for k in [7usize, 9] {
        let odd = enumerate_antihole_contact_configs(k);
        assert!(
            odd.passed(),
            "dart-free co-C{k} contact configurations exist: {:?}",
            odd.violations
        );
        odd_examined += odd.examined;
    }
    let even = enumerate_antihole_contact_configs(8);
    assert!(
        !even.passed(),
        "control failed: no dart-free co-C8 contact configuration found"
    );

    let sampled = sample_dart_free_odd_antiholes(1_000_000, 0xDA27F5EE);
    assert_eq!(sampled.samples, 1_000_000);
    assert!(
        sampled.passed(),
        "sampled violations: {:?}",
        sampled.violations
    );

    let mut cfg = SuiteConfig::defaults_for(SuiteId::Alternation);
    cfg.count = 230;
    let report = suites::run_suite(SuiteId::Alternation, cfg);
    assert!(report.passed(), "alternation violations: {:?}", report.violations);
    assert!(
        report.checked >= 200,
        "only {} alternation instances checked",
        report.checked
    );
    pass(
        3,
        format!(
            "exhaustive configs ({} odd / {} even), 1M samples ({} dart-free connected), {} planted co-C8 hosts",
            odd_examined, even.examined, sampled.dart_free_connected, report.checked
        ),
    );
}

/// Criterion 4: over at least 300 generated (hole,dart)-free graphs,
/// every atom is nearly weakly chordal and prime atoms dispatch to clique
/// or chordal-bipartite branches with zero fallbacks.
#[test]
fn criterion_4_hole_dart_atoms_nearly_weakly_chordal() {
    let mut cfg = SuiteConfig::defaults_for(SuiteId::AtomsWeaklyChordal);
    cfg.count = 320;
    cfg.n = 14;
    let report = suites::run_suite(SuiteId::AtomsWeaklyChordal, cfg);
    assert!(report.passed(), "violations: {:?}", report.violations);
    assert!(
        report.checked >= 300,
        "only {} instances checked",
        report.checked
    );

    // pipeline-level: in-class corpora run with fallback_count == 0
    let failures: Vec<String> = (0..100usize)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = gen::rng_for(0x47D4 + i as u64);
            let g = gen::corpus_graph(&mut rng, GraphClass::HoleDartFree, 16);
            let n = g.vertex_count();
            let wg = WeightedGraph::new(g, weights_for(&mut rng, n));
            let report = pipeline::solve(&wg, ClassSpec::HoleDartFree, ORACLE_BUDGET).ok()?;
            (report.fallback_count != 0)
                .then(|| format!("#{i}: {} oracle fallbacks", report.fallback_count))
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    pass(
        4,
        format!(
            "{} instances: all atoms nearly weakly chordal, prime-atom dispatch clean, 100 pipeline runs with zero fallbacks",
            report.checked
        ),
    );
}

/// Criterion 5: growth sequences on at least 300 bull-free hosts with
/// planted co-C6/co-C7 join at every stage and terminate in modules, and
/// the exhaustive completion search finds no prime bull-free graph on up
/// to 10 vertices with a co-C6 inside an anti-neighborhood.
#[test]
fn criterion_5_bull_growth_and_prime_bull_antiholes() {
    let count = 300usize;
    let failures: Vec<String> = (0..count)
        .into_par_iter()
        .filter_map(|i| {
            let seed = 0xB0110000u64 + i as u64;
            let mut rng = gen::rng_for(seed);
            let base = if i % 2 == 0 {
                GrowthBase::AntiHole(6)
            } else {
                GrowthBase::AntiHole(7)
            };
            let stages = rng.random_range(0..=2);
            let with_far = rng.random_bool(0.7);
            let planted = match gen::plant_growth(base, stages, with_far, seed, 5_000) {
                Ok(p) => p,
                Err(e) => return Some(format!("#{i}: generator failed: {e}")),
            };
            match checks::check_bull_growth(&planted.graph, &planted.structure, base, None) {
                GrowthOutcome::Done {
                    join_violations,
                    terminal,
                    ..
                } => {
                    if !join_violations.is_empty() {
                        return Some(format!("#{i}: join violations {join_violations:?}"));
                    }
                    match terminal {
                        GrowthTerminal::AntiNeighborhoodEmpty
                        | GrowthTerminal::Module { verified: true } => None,
                        GrowthTerminal::Module { verified: false } => {
                            Some(format!("#{i}: terminal stage is not a module"))
                        }
                    }
                }
                other => Some(format!("#{i}: {other:?}")),
            }
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));

    let completions = enumerate_prime_bullfree_coc6_completions(3);
    assert!(
        completions.passed(),
        "prime bull-free completions found: {:?}",
        completions.violations
    );
    pass(
        5,
        format!(
            "{count} planted growth hosts pass; completion search examined {} graphs up to n=10, zero prime bull-free",
            completions.examined
        ),
    );
}

/// Criterion 6: on at least 300 prime (P5,bull)-free instances, every
/// anti-neighborhood recognizes as bipartite chain or co-bipartite chain.
#[test]
fn criterion_6_p5_bull_chain_structure() {
    let mut cfg = SuiteConfig::defaults_for(SuiteId::P5Chain);
    cfg.count = 320;
    cfg.n = 12;
    let report = suites::run_suite(SuiteId::P5Chain, cfg);
    assert!(report.passed(), "violations: {:?}", report.violations);
    assert!(
        report.checked >= 300,
        "only {} instances checked",
        report.checked
    );

    // pipeline-level: the chain dispatch never falls back on in-class
    // corpora
    let failures: Vec<String> = (0..100usize)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = gen::rng_for(0x95B0 + i as u64);
            let g = gen::corpus_graph(&mut rng, GraphClass::P5BullFree, 16);
            let n = g.vertex_count();
            let wg = WeightedGraph::new(g, weights_for(&mut rng, n));
            let report = pipeline::solve(&wg, ClassSpec::P5BullFree, ORACLE_BUDGET).ok()?;
            (report.fallback_count != 0)
                .then(|| format!("#{i}: {} oracle fallbacks", report.fallback_count))
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    pass(
        6,
        format!(
            "{} prime instances: every branch is chain or co-chain; 100 pipeline runs with zero fallbacks",
            report.checked
        ),
    );
}

/// Criterion 7: decomposition soundness across the corpus: every atom
/// passes the exhaustive no-clique-cutset audit (atoms here stay at
/// n <= 16) and every modular tree passes the module and prime-quotient
/// audits.
#[test]
fn criterion_7_decomposition_soundness() {
    let classes = [
        GraphClass::HoleDartFree,
        GraphClass::HoleBullFree,
        GraphClass::OddHoleDartFree,
        GraphClass::OddHoleBullFree,
        GraphClass::P5BullFree,
    ];
    let per_class = 50usize;
    let failures: Vec<String> = (0..classes.len() * per_class)
        .into_par_iter()
        .filter_map(|idx| {
            let class = classes[idx / per_class];
            let mut rng = gen::rng_for(0xDEC0_0000 + idx as u64);
            let g = gen::corpus_graph(&mut rng, class, 16);
            if !suites::audit_md_tree(&g) {
                return Some(format!("{class:?} #{idx}: modular tree audit failed"));
            }
            for comp in g.connected_components() {
                let (cg, _) = g.induced(&comp);
                let d = cliquesep::decompose(&cg);
                let mut covered = std::collections::HashSet::new();
                for atom in d.atoms() {
                    let (ag, amap) = cg.induced(atom);
                    if !cliquesep::has_no_clique_cutset_exhaustive(&ag) {
                        return Some(format!(
                            "{class:?} #{idx}: atom {:?} has a clique cutset",
                            atom
                        ));
                    }
                    for (u, v) in ag.edges() {
                        covered.insert((amap[u].min(amap[v]), amap[u].max(amap[v])));
                    }
                }
                if covered.len() != cg.edge_count() {
                    return Some(format!("{class:?} #{idx}: edge coverage failed"));
                }
                for node in &d.nodes {
                    if let cliquesep::AtomNode::Split { separator, near, far, .. } = node {
                        if !cg.is_clique(separator) {
                            return Some(format!("{class:?} #{idx}: separator not a clique"));
                        }
                        let mut crossing = false;
                        for u in near.difference(separator).iter() {
                            if cg
                                .neighbors(u)
                                .intersects(&far.difference(separator))
                            {
                                crossing = true;
                            }
                        }
                        if crossing {
                            return Some(format!(
                                "{class:?} #{idx}: separator does not separate"
                            ));
                        }
                    }
                }
            }
            None
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    pass(
        7,
        format!(
            "{} instances across 5 classes: atoms, separators, and modular trees all audit clean",
            classes.len() * per_class
        ),
    );
}

/// Criterion 8: performance smoke at n = 200 for the two hole-free
/// pipelines: solve completes within 60 seconds and the report shows the
/// decomposition kept the maximum base-solver call below 64 vertices; the
/// raw oracle is run budget-capped and not required to finish.
#[test]
fn criterion_8_performance_smoke() {
    let glued = gen::compose_glued(0x57A7, 9, 22, 200);
    assert!(glued.vertex_count() >= 200);
    let started = Instant::now();
    let report = pipeline::solve(&glued, ClassSpec::HoleDartFree, ORACLE_BUDGET).unwrap();
    let dart_elapsed = started.elapsed();
    assert!(
        dart_elapsed.as_secs() < 60,
        "hole-dart smoke took {dart_elapsed:?}"
    );
    assert!(
        report.reduction_stats.max_base_call_size < 64,
        "max base call {}",
        report.reduction_stats.max_base_call_size
    );

    let subst = gen::compose_substitution(0x5B57, 200);
    assert!(subst.vertex_count() >= 200);
    let started = Instant::now();
    let report2 = pipeline::solve(&subst, ClassSpec::HoleBullFree, ORACLE_BUDGET).unwrap();
    let bull_elapsed = started.elapsed();
    assert!(
        bull_elapsed.as_secs() < 60,
        "hole-bull smoke took {bull_elapsed:?}"
    );
    assert!(
        report2.reduction_stats.max_base_call_size < 64,
        "max base call {}",
        report2.reduction_stats.max_base_call_size
    );

    // the budget-capped oracle may or may not finish; when it does, the
    // values must agree
    for (wg, rep) in [(&glued, &report), (&subst, &report2)] {
        match solvers::mwis_oracle(wg, 2_000_000) {
            Ok(sol) => assert_eq!(sol.value, rep.solution.value),
            Err(SolverError::BudgetExhausted(_)) => {}
            Err(e) => panic!("unexpected oracle error: {e}"),
        }
    }
    pass(
        8,
        format!(
            "n=200 smoke: hole-dart in {dart_elapsed:?} (max base {}), hole-bull in {bull_elapsed:?} (max base {})",
            report.reduction_stats.max_base_call_size, report2.reduction_stats.max_base_call_size
        ),
    );
}

/// Criterion 9: identical inputs and seeds produce byte-identical report
/// files across runs and across worker counts.
#[test]
fn criterion_9_byte_stable_reports() {
    let bin = env!("CARGO_BIN_EXE_mwis");
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("instance.g");
    let run = |args: &[&str]| {
        let out = std::process::Command::new(bin)
            .args(args)
            .output()
            .expect("binary runs");
        assert!(
            out.status.success(),
            "mwis {args:?} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        out.stdout
    };

    // generator determinism (and the write-parse-write round trip)
    run(&[
        "gen",
        "--spec",
        "hole-dart-free",
        "--n",
        "14",
        "--p",
        "0.2",
        "--seed",
        "99",
        "--weights",
        "0..100",
        "-o",
        graph_path.to_str().unwrap(),
    ]);
    let bytes_first = std::fs::read(&graph_path).unwrap();
    run(&[
        "gen",
        "--spec",
        "hole-dart-free",
        "--n",
        "14",
        "--p",
        "0.2",
        "--seed",
        "99",
        "--weights",
        "0..100",
        "-o",
        graph_path.to_str().unwrap(),
    ]);
    assert_eq!(bytes_first, std::fs::read(&graph_path).unwrap());

    // solve reports across repeated runs and thread counts
    let mut reports = Vec::new();
    for (tag, threads) in [("a", "1"), ("b", "4"), ("c", "1"), ("d", "4")] {
        let report_path = dir.path().join(format!("solve-{tag}.json"));
        let stdout = run(&[
            "solve",
            graph_path.to_str().unwrap(),
            "--class",
            "auto",
            "--threads",
            threads,
            "--out",
            report_path.to_str().unwrap(),
        ]);
        reports.push((std::fs::read(&report_path).unwrap(), stdout));
    }
    for window in reports.windows(2) {
        assert_eq!(window[0].0, window[1].0, "solve reports differ");
        assert_eq!(window[0].1, window[1].1, "solve stdout differs");
    }

    // verify reports across thread counts (suites run work-stealing
    // parallel inside)
    let mut verify_reports = Vec::new();
    for (tag, threads) in [("a", "1"), ("b", "3")] {
        let report_path = dir.path().join(format!("verify-{tag}.json"));
        run(&[
            "verify",
            "--suite",
            "alternation,coc6-claims",
            "--threads",
            threads,
            "--out",
            report_path.to_str().unwrap(),
        ]);
        verify_reports.push(std::fs::read(&report_path).unwrap());
    }
    assert_eq!(verify_reports[0], verify_reports[1], "verify reports differ");
    pass(9, "gen, solve, and verify outputs byte-identical across runs and thread counts".into());
}
