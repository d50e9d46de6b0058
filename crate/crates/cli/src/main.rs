//! `mwis`: exact maximum weight independent set on structured graph
//! classes, plus recognizers, decompositions, generators, and the
//! structure-verification suites.

mod formats;

use clap::{Args, Parser, Subcommand};
use formats::{ReportBody, ReportFile};
use mwis_core::lab::suites::{self, SuiteConfig, SuiteId};
use mwis_core::lab::{gen, CoC6Profile, GrowthBase};
use mwis_core::patterns::classes::{self, GraphClass};
use mwis_core::pipeline::{self, ClassSpec, SolveError};
use mwis_core::solvers::{self, SolverError, DEFAULT_ORACLE_BUDGET};
use mwis_core::WeightedGraph;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_PARSE: u8 = 2;
const EXIT_CLASS: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_VERIFY: u8 = 5;

#[derive(Parser)]
#[command(name = "mwis", version, about = "exact MWIS through graph structure")]
struct Cli {
    /// Worker cap for corpus suites (default: MWIS_THREADS or all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve MWIS with the pipeline for a class
    Solve(SolveArgs),
    /// Solve MWIS with the branch-and-bound oracle
    Oracle(OracleArgs),
    /// Check class membership and print a witness on violation
    Recognize(RecognizeArgs),
    /// Print a clique-separator or modular decomposition
    Decompose(DecomposeArgs),
    /// Generate a graph file
    Gen(GenArgs),
    /// Run structure-verification suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SolveArgs {
    path: PathBuf,
    /// odd-hole-dart-free | hole-dart-free | odd-hole-bull-free |
    /// hole-bull-free | p5-bull-free | auto
    #[arg(long, default_value = "auto")]
    class: String,
    /// search-node budget for oracle and parity checks
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    budget: u64,
    /// write a JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
    /// include wall time in the report (breaks byte-stability)
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct OracleArgs {
    path: PathBuf,
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct RecognizeArgs {
    path: PathBuf,
    /// a class (dart-free, hole-dart-free, ...) or a predicate
    /// (chordal, weakly-chordal, perfect, chordal-bipartite,
    /// bipartite-chain, co-bipartite-chain)
    #[arg(long)]
    class: String,
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct DecomposeArgs {
    path: PathBuf,
    /// cliquesep | modular
    #[arg(long)]
    method: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// random, a class name for rejection sampling, planted-coc8,
    /// planted-coc6-{a3,a2,a1}, planted-growth-{coc6,coc7,c5,house},
    /// composed-hole-dart, composed-hole-bull
    #[arg(long)]
    spec: String,
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    max_tries: usize,
    /// uniform integer weights "LO..HI" (default: unit weights)
    #[arg(long)]
    weights: Option<String>,
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// comma-separated suite names (default: all)
    #[arg(long)]
    suite: Option<String>,
    /// key-value config: lines of "suite.key = value" with keys
    /// count, seed, n, p
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(1, format!("io error: {e}"))
    }
}

impl From<formats::ParseError> for Failure {
    fn from(e: formats::ParseError) -> Self {
        Failure::new(EXIT_PARSE, format!("parse error: {e}"))
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match &e {
            SolveError::ClassViolation { .. } | SolveError::NoClassMatches { .. } => {
                Failure::new(EXIT_CLASS, format!("class violation: {e}"))
            }
            SolveError::Solver(SolverError::BudgetExhausted(_))
            | SolveError::Search(_)
            | SolveError::Solver(SolverError::Search(_)) => {
                Failure::new(EXIT_BUDGET, format!("budget exhausted: {e}"))
            }
            SolveError::Solver(_) => Failure::new(1, format!("solver error: {e}")),
        }
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::BudgetExhausted(_) | SolverError::Search(_) => {
                Failure::new(EXIT_BUDGET, format!("budget exhausted: {e}"))
            }
            other => Failure::new(1, format!("solver error: {other}")),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| {
        std::env::var("MWIS_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Recognize(args) => cmd_recognize(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("mwis: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_graph(path: &Path) -> Result<WeightedGraph, Failure> {
    let text = std::fs::read_to_string(path)?;
    Ok(formats::parse_graph(&text)?)
}

fn print_solution(value: i64, vertices: &[usize]) {
    println!("value {value}");
    let ids: Vec<String> = vertices.iter().map(|&v| (v + 1).to_string()).collect();
    println!("set {}", ids.join(" "));
}

fn cmd_solve(args: SolveArgs) -> Result<u8, Failure> {
    let spec = ClassSpec::parse(&args.class)
        .ok_or_else(|| Failure::new(EXIT_PARSE, format!("unknown class '{}'", args.class)))?;
    let wg = read_graph(&args.path)?;
    let started = std::time::Instant::now();
    let report = pipeline::solve(&wg, spec, args.budget)?;
    print_solution(report.solution.value, &report.solution.vertices());
    if let Some(out) = &args.out {
        let mut file = ReportFile::new(ReportBody::Solve(formats::SolveBody::from_report(&report)));
        if args.timings {
            file.wall_time_ms = Some(started.elapsed().as_millis() as u64);
        }
        std::fs::write(out, file.to_json())?;
    }
    Ok(0)
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, Failure> {
    let wg = read_graph(&args.path)?;
    let sol = solvers::mwis_oracle(&wg, args.budget)?;
    print_solution(sol.value, &sol.vertices());
    Ok(0)
}

fn cmd_recognize(args: RecognizeArgs) -> Result<u8, Failure> {
    let wg = read_graph(&args.path)?;
    let g = &wg.graph;
    let (ok, witness): (bool, Vec<usize>) = if let Some(class) = GraphClass::parse(&args.class) {
        match classes::in_class(g, class, args.budget) {
            Err(e) => return Err(SolverError::from(e).into()),
            Ok(Ok(())) => (true, vec![]),
            Ok(Err(v)) => (false, v.vertices().to_vec()),
        }
    } else {
        match args.class.as_str() {
            "chordal" => match classes::is_chordal(g) {
                Ok(_) => (true, vec![]),
                Err(cycle) => (false, cycle),
            },
            "weakly-chordal" => match classes::is_weakly_chordal(g) {
                Ok(()) => (true, vec![]),
                Err(classes::WeaklyChordalEvidence::Hole(h))
                | Err(classes::WeaklyChordalEvidence::AntiHole(h)) => (false, h),
            },
            "perfect" => match classes::is_perfect(g, args.budget) {
                Err(e) => return Err(SolverError::from(e).into()),
                Ok(Ok(())) => (true, vec![]),
                Ok(Err(v)) => (false, v.vertices().to_vec()),
            },
            "chordal-bipartite" => match classes::is_chordal_bipartite(g) {
                Ok(()) => (true, vec![]),
                Err(v) => (false, v.vertices().to_vec()),
            },
            "bipartite-chain" => match classes::is_bipartite_chain(g) {
                Ok(_) => (true, vec![]),
                Err(v) => (false, v.vertices().to_vec()),
            },
            "co-bipartite-chain" => match classes::is_cobipartite_chain(g) {
                Ok(_) => (true, vec![]),
                Err(v) => (false, v.vertices().to_vec()),
            },
            other => {
                return Err(Failure::new(
                    EXIT_PARSE,
                    format!("unknown class or predicate '{other}'"),
                ))
            }
        }
    };
    if ok {
        println!("ok");
    } else {
        let ids: Vec<String> = witness.iter().map(|&v| (v + 1).to_string()).collect();
        println!("violated");
        println!("witness {}", ids.join(" "));
    }
    Ok(0)
}

fn cmd_decompose(args: DecomposeArgs) -> Result<u8, Failure> {
    let wg = read_graph(&args.path)?;
    let tree = match args.method.as_str() {
        "cliquesep" => {
            // components decompose independently
            let comps = wg.graph.connected_components();
            if comps.len() == 1 {
                let d = mwis_core::cliquesep::decompose(&wg.graph);
                formats::decompose_tree_cliquesep(&d, d.root)
            } else {
                let children = comps
                    .iter()
                    .map(|comp| {
                        let (cg, map) = wg.graph.induced(comp);
                        let d = mwis_core::cliquesep::decompose(&cg);
                        relabel_tree(formats::decompose_tree_cliquesep(&d, d.root), &map)
                    })
                    .collect();
                formats::TreeBody {
                    label: "components".to_string(),
                    vertices: (1..=wg.graph.vertex_count()).collect(),
                    children,
                }
            }
        }
        "modular" => {
            let t = mwis_core::modular::modular_decomposition(&wg.graph);
            formats::decompose_tree_modular(&t, t.root)
        }
        other => {
            return Err(Failure::new(
                EXIT_PARSE,
                format!("unknown method '{other}' (use cliquesep or modular)"),
            ))
        }
    };
    let mut text = String::new();
    formats::render_tree(&tree, 0, &mut text);
    print!("{text}");
    if let Some(out) = &args.out {
        let file = ReportFile::new(ReportBody::Decompose(formats::DecomposeBody {
            method: args.method.clone(),
            tree,
        }));
        std::fs::write(out, file.to_json())?;
    }
    Ok(0)
}

/// Translates induced-subgraph 1-based ids back into host 1-based ids.
fn relabel_tree(tree: formats::TreeBody, map: &[usize]) -> formats::TreeBody {
    formats::TreeBody {
        label: tree.label,
        vertices: tree.vertices.iter().map(|&v| map[v - 1] + 1).collect(),
        children: tree
            .children
            .into_iter()
            .map(|c| relabel_tree(c, map))
            .collect(),
    }
}

fn parse_weight_range(s: &str) -> Result<(i64, i64), Failure> {
    let parts: Vec<&str> = s.split("..").collect();
    if parts.len() == 2 {
        if let (Ok(lo), Ok(hi)) = (parts[0].parse(), parts[1].parse()) {
            return Ok((lo, hi));
        }
    }
    Err(Failure::new(
        EXIT_PARSE,
        format!("bad weight range '{s}', expected LO..HI"),
    ))
}

fn cmd_gen(args: GenArgs) -> Result<u8, Failure> {
    if !(0.0..=1.0).contains(&args.p) {
        return Err(Failure::new(
            EXIT_PARSE,
            format!("density {} out of range [0, 1]", args.p),
        ));
    }
    let mut rng = gen::rng_for(args.seed);
    let graph = match args.spec.as_str() {
        "random" => gen::gen_random_with(&mut rng, args.n, args.p),
        "planted-coc8" => {
            gen::plant_alternating_antihole(8, 3, 3, args.seed, args.max_tries, false)
                .map_err(|e| Failure::new(1, e.to_string()))?
                .graph
        }
        "planted-coc6-a3" | "planted-coc6-a2" | "planted-coc6-a1" => {
            let profile = match args.spec.as_str() {
                "planted-coc6-a3" => CoC6Profile::A3Plus,
                "planted-coc6-a2" => CoC6Profile::A2Plus14,
                _ => CoC6Profile::A1Only,
            };
            gen::plant_coc6(profile, 2, args.seed, args.max_tries)
                .map_err(|e| Failure::new(1, e.to_string()))?
                .graph
        }
        "planted-growth-coc6" | "planted-growth-coc7" | "planted-growth-c5"
        | "planted-growth-house" => {
            let base = match args.spec.as_str() {
                "planted-growth-coc6" => GrowthBase::AntiHole(6),
                "planted-growth-coc7" => GrowthBase::AntiHole(7),
                "planted-growth-c5" => GrowthBase::C5,
                _ => GrowthBase::House,
            };
            gen::plant_growth(base, 2, true, args.seed, args.max_tries)
                .map_err(|e| Failure::new(1, e.to_string()))?
                .graph
        }
        "composed-hole-dart" => {
            let pieces = (args.n / 24).max(2);
            return write_weighted(
                &args.out,
                gen::compose_glued(args.seed, pieces, 16, args.n),
            );
        }
        "composed-hole-bull" => {
            return write_weighted(&args.out, gen::compose_substitution(args.seed, args.n));
        }
        class_name => {
            let class = GraphClass::parse(class_name).ok_or_else(|| {
                Failure::new(EXIT_PARSE, format!("unknown generator spec '{class_name}'"))
            })?;
            gen::gen_in_class_with(&mut rng, class, args.n, args.p, args.max_tries)
                .map_err(|e| Failure::new(1, e.to_string()))?
                .0
        }
    };
    let n = graph.vertex_count();
    let weights = match &args.weights {
        None => vec![1i64; n],
        Some(spec) => {
            let (lo, hi) = parse_weight_range(spec)?;
            gen::gen_weights(&mut rng, n, lo, hi)
        }
    };
    write_weighted(&args.out, WeightedGraph::new(graph, weights))
}

fn write_weighted(out: &Path, wg: WeightedGraph) -> Result<u8, Failure> {
    std::fs::write(out, formats::write_graph(&wg))?;
    Ok(0)
}

fn parse_verify_config(path: &Path) -> Result<Vec<(String, String, String)>, Failure> {
    let text = std::fs::read_to_string(path)?;
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Failure::new(
                EXIT_PARSE,
                format!("config line {}: expected '<suite>.<key> = <value>'", idx + 1),
            ));
        };
        let key = key.trim();
        let Some((suite, field)) = key.split_once('.') else {
            return Err(Failure::new(
                EXIT_PARSE,
                format!("config line {}: key '{key}' is not '<suite>.<key>'", idx + 1),
            ));
        };
        entries.push((
            suite.trim().to_string(),
            field.trim().to_string(),
            value.trim().to_string(),
        ));
    }
    Ok(entries)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let suites: Vec<SuiteId> = match &args.suite {
        None => SuiteId::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .map(|s| {
                SuiteId::parse(s.trim())
                    .ok_or_else(|| Failure::new(EXIT_PARSE, format!("unknown suite '{s}'")))
            })
            .collect::<Result<_, _>>()?,
    };
    let config = match &args.config {
        None => Vec::new(),
        Some(path) => parse_verify_config(path)?,
    };

    let mut reports = Vec::new();
    let mut any_violation = false;
    for id in suites {
        let mut cfg = SuiteConfig::defaults_for(id);
        for (suite, field, value) in &config {
            if suite != id.name() {
                continue;
            }
            match field.as_str() {
                "count" => cfg.count = value.parse().map_err(bad_value(field, value))?,
                "seed" => cfg.seed = value.parse().map_err(bad_value(field, value))?,
                "n" => cfg.n = value.parse().map_err(bad_value(field, value))?,
                "p" => cfg.p = Some(value.parse().map_err(bad_value(field, value))?),
                other => {
                    return Err(Failure::new(
                        EXIT_PARSE,
                        format!("unknown config key '{other}' for suite {}", id.name()),
                    ))
                }
            }
        }
        let report = suites::run_suite(id, cfg);
        let verdict = if report.passed() { "pass" } else { "FAIL" };
        println!(
            "{:<26} {}  checked {} / skipped {} / violations {}",
            report.suite,
            verdict,
            report.checked,
            report.skipped,
            report.violations.len()
        );
        for v in &report.violations {
            println!("  {} {}: witness {:?}", v.instance, v.description, v.witness);
        }
        any_violation |= !report.passed();
        reports.push(report);
    }
    if let Some(out) = &args.out {
        let file = ReportFile::new(ReportBody::Verify(formats::VerifyBody { suites: reports }));
        std::fs::write(out, file.to_json())?;
    }
    Ok(if any_violation { EXIT_VERIFY } else { 0 })
}

fn bad_value<'a, E: std::fmt::Display>(
    field: &'a str,
    value: &'a str,
) -> impl Fn(E) -> Failure + 'a {
    move |e| Failure::new(EXIT_PARSE, format!("bad value '{value}' for {field}: {e}"))
}
