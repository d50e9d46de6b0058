//! On-disk formats: the graph file and the JSON report file.
//!
//! Graph files are DIMACS-flavored with 1-based vertex ids:
//!
//! ```text
//! c optional comment
//! p iset <n> <m>
//! w <v> <weight>     (optional; missing vertices default to weight 1)
//! e <u> <v>
//! ```
//!
//! The writer is canonical (weights block first when any weight differs
//! from 1, then edges ascending), so write∘parse∘write is byte-stable.
//!
//! Report files are strict JSON: unknown fields are rejected on read and
//! field order is fixed on write. Wall time is only present when timings
//! were requested, keeping default reports byte-identical across runs.

use mwis_core::graph::{Graph, WeightedGraph};
use mwis_core::lab::suites::LemmaReport;
use mwis_core::modular::MDKindCounts;
use mwis_core::pipeline::{AtomStats, ReductionStats, SolveReport, StructureCheck};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

pub const SCHEMA: &str = "mwis-structure/1";

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Bad { line: usize, message: String },
    #[error("missing 'p iset <n> <m>' header")]
    MissingHeader,
    #[error("header says {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("graph error: {0}")]
    Graph(#[from] mwis_core::GraphError),
}

fn bad(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Bad {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut weights: Vec<(usize, i64)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_ascii_whitespace();
        let kind = parts.next().unwrap();
        let rest: Vec<&str> = parts.collect();
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(bad(lineno, "duplicate header"));
                }
                if rest.len() != 3 || rest[0] != "iset" {
                    return Err(bad(lineno, "expected 'p iset <n> <m>'"));
                }
                let n = rest[1]
                    .parse::<usize>()
                    .map_err(|e| bad(lineno, format!("bad vertex count: {e}")))?;
                let m = rest[2]
                    .parse::<usize>()
                    .map_err(|e| bad(lineno, format!("bad edge count: {e}")))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                if rest.len() != 2 {
                    return Err(bad(lineno, "expected 'e <u> <v>'"));
                }
                let u = parse_vertex(rest[0], n, lineno)?;
                let v = parse_vertex(rest[1], n, lineno)?;
                edges.push((u, v));
            }
            "w" => {
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                if rest.len() != 2 {
                    return Err(bad(lineno, "expected 'w <v> <weight>'"));
                }
                let v = parse_vertex(rest[0], n, lineno)?;
                let w = rest[1]
                    .parse::<i64>()
                    .map_err(|e| bad(lineno, format!("bad weight: {e}")))?;
                weights.push((v, w));
            }
            other => {
                return Err(bad(lineno, format!("unknown line kind '{other}'")));
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    let graph = Graph::build(n, &edges)?;
    if graph.edge_count() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: graph.edge_count(),
        });
    }
    let mut wvec = vec![1i64; n];
    for (v, w) in weights {
        wvec[v] = w;
    }
    Ok(WeightedGraph::new(graph, wvec))
}

fn parse_vertex(s: &str, n: usize, lineno: usize) -> Result<usize, ParseError> {
    let v = s
        .parse::<usize>()
        .map_err(|e| bad(lineno, format!("bad vertex id: {e}")))?;
    if v == 0 || v > n {
        return Err(bad(lineno, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn write_graph(wg: &WeightedGraph) -> String {
    let g = &wg.graph;
    let mut out = String::new();
    writeln!(out, "p iset {} {}", g.vertex_count(), g.edge_count()).unwrap();
    if wg.weights.iter().any(|&w| w != 1) {
        for v in 0..g.vertex_count() {
            writeln!(out, "w {} {}", v + 1, wg.weights[v]).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn one_based(ids: &[usize]) -> Vec<usize> {
    ids.iter().map(|&v| v + 1).collect()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub schema: String,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
    pub report: ReportBody,
}

impl ReportFile {
    pub fn new(report: ReportBody) -> Self {
        ReportFile {
            schema: SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
            wall_time_ms: None,
            report,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ReportBody {
    Solve(SolveBody),
    Decompose(DecomposeBody),
    Verify(VerifyBody),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveBody {
    pub class_used: String,
    pub value: i64,
    /// 1-based, ascending
    pub witness: Vec<usize>,
    pub md_stats: MDKindCounts,
    pub atom_stats: AtomStats,
    pub reduction_stats: ReductionStats,
    pub structure_checks: Vec<CheckBody>,
    pub fallback_count: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckBody {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

impl SolveBody {
    pub fn from_report(report: &SolveReport) -> Self {
        SolveBody {
            class_used: report.class_used.name().to_string(),
            value: report.solution.value,
            witness: one_based(&report.solution.vertices()),
            md_stats: report.md_stats,
            atom_stats: report.atom_stats,
            reduction_stats: report.reduction_stats,
            structure_checks: report
                .structure_checks
                .iter()
                .map(|c: &StructureCheck| CheckBody {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                    witness: c.witness.as_ref().map(|w| one_based(w)),
                })
                .collect(),
            fallback_count: report.fallback_count,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecomposeBody {
    pub method: String,
    pub tree: TreeBody,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeBody {
    pub label: String,
    /// 1-based vertices at this node (atoms and leaves carry them;
    /// internal separator nodes carry the separator)
    pub vertices: Vec<usize>,
    pub children: Vec<TreeBody>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyBody {
    pub suites: Vec<LemmaReport>,
}

pub fn decompose_tree_cliquesep(
    d: &mwis_core::cliquesep::AtomDecomposition,
    idx: usize,
) -> TreeBody {
    match &d.nodes[idx] {
        mwis_core::cliquesep::AtomNode::Leaf { atom } => TreeBody {
            label: "atom".to_string(),
            vertices: one_based(&atom.to_vec()),
            children: Vec::new(),
        },
        mwis_core::cliquesep::AtomNode::Split {
            separator,
            near_child,
            far_child,
            ..
        } => TreeBody {
            label: "separator".to_string(),
            vertices: one_based(&separator.to_vec()),
            children: vec![
                decompose_tree_cliquesep(d, *near_child),
                decompose_tree_cliquesep(d, *far_child),
            ],
        },
    }
}

pub fn decompose_tree_modular(t: &mwis_core::modular::MDTree, idx: usize) -> TreeBody {
    let node = t.node(idx);
    let label = match node.kind {
        mwis_core::modular::MDNodeKind::Leaf => "leaf",
        mwis_core::modular::MDNodeKind::Parallel => "parallel",
        mwis_core::modular::MDNodeKind::Series => "series",
        mwis_core::modular::MDNodeKind::Prime => "prime",
    };
    TreeBody {
        label: label.to_string(),
        vertices: one_based(&node.vertices.to_vec()),
        children: node
            .children
            .iter()
            .map(|&c| decompose_tree_modular(t, c))
            .collect(),
    }
}

/// Indented text rendering for stdout.
pub fn render_tree(tree: &TreeBody, depth: usize, out: &mut String) {
    let indent = "  ".repeat(depth);
    let verts: Vec<String> = tree.vertices.iter().map(|v| v.to_string()).collect();
    writeln!(out, "{indent}{} {{{}}}", tree.label, verts.join(",")).unwrap();
    for child in &tree.children {
        render_tree(child, depth + 1, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_graph() {
        let text = "c five cycle\np iset 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        let wg = parse_graph(text).unwrap();
        assert_eq!(wg.graph.vertex_count(), 5);
        assert_eq!(wg.graph.edge_count(), 5);
        assert_eq!(wg.weights, vec![1; 5]);
    }

    #[test]
    fn parse_weights() {
        let text = "p iset 3 1\nw 1 10\nw 3 -2\ne 1 2\n";
        let wg = parse_graph(text).unwrap();
        assert_eq!(wg.weights, vec![10, 1, -2]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_graph("e 1 2\n"),
            Err(ParseError::MissingHeader)
        ));
        assert!(parse_graph("p iset 3 1\nx 1 2\n").is_err());
        assert!(parse_graph("p iset 3 1\ne 1 4\n").is_err());
        assert!(parse_graph("p iset 3 2\ne 1 2\n").is_err());
        assert!(parse_graph("p iset 3 1\ne 2 2\n").is_err());
    }

    #[test]
    fn write_parse_write_is_stable() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let wg = WeightedGraph::new(g, vec![3, 1, 4, 1]);
        let once = write_graph(&wg);
        let again = write_graph(&parse_graph(&once).unwrap());
        assert_eq!(once, again);
    }

    #[test]
    fn strict_schema_rejects_unknown_fields() {
        let json = r#"{"schema":"mwis-structure/1","tool_version":"0","surprise":1,
            "report":{"kind":"verify","suites":[]}}"#;
        assert!(serde_json::from_str::<ReportFile>(json).is_err());
    }

    #[test]
    fn report_roundtrip() {
        let body = ReportBody::Verify(VerifyBody { suites: vec![] });
        let file = ReportFile::new(body);
        let json = file.to_json();
        let back: ReportFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.schema, SCHEMA);
        assert_eq!(back.to_json(), json);
    }
}
