//! Exhaustive searches over completion spaces and dense random sampling.
//!
//! To show "no graph with property P contains configuration C" at small
//! sizes, it is enough to enumerate all completions of the planted
//! configuration: any counterexample restricts or relabels to one. The
//! configuration vertices get fixed adjacency; every added vertex ranges
//! over all 2^k adjacency rows, pruned by incremental pattern checks.
//!
//! Five-vertex pattern tests reduce to edge count plus degree multiset:
//! on exactly five vertices, six edges with degrees {4,3,2,2,1} is the
//! dart and five edges with degrees {3,3,2,1,1} is the bull; both are
//! checked by popcounts on adjacency masks.

use crate::graph::Graph;
use crate::patterns::{self, CycleParity, PatternKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct CompletionReport {
    pub examined: u64,
    pub pattern_free: u64,
    pub violations: Vec<String>,
}

impl CompletionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Adjacency as bitmasks over vertex indices, for hosts of at most 16.
#[derive(Clone)]
struct MaskGraph {
    adj: Vec<u16>,
}

impl MaskGraph {
    fn new() -> Self {
        MaskGraph { adj: Vec::new() }
    }

    fn from_graph(g: &Graph) -> Self {
        let mut mg = MaskGraph::new();
        for v in g.vertices() {
            let mut row = 0u16;
            for u in g.neighbors(v).iter() {
                row |= 1 << u;
            }
            mg.adj.push(row);
        }
        mg
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    /// Pushes a vertex whose adjacency to the existing ones is `row`.
    fn push(&mut self, row: u16) {
        let idx = self.adj.len();
        for v in 0..idx {
            if row >> v & 1 == 1 {
                self.adj[v] |= 1 << idx;
            }
        }
        self.adj.push(row);
    }

    fn pop(&mut self) {
        let idx = self.adj.len() - 1;
        let row = self.adj.pop().unwrap();
        for v in 0..idx {
            if row >> v & 1 == 1 {
                self.adj[v] &= !(1 << idx);
            }
        }
    }

    fn degree_in(&self, v: usize, subset: u16) -> u32 {
        (self.adj[v] & subset).count_ones()
    }

    /// Five-vertex induced test by edge count + degree multiset.
    fn five_set_matches(&self, vs: [usize; 5], edges: u32, degs: [u32; 5]) -> bool {
        let mask: u16 = vs.iter().map(|&v| 1u16 << v).sum();
        let mut total = 0;
        let mut ds = [0u32; 5];
        for (i, &v) in vs.iter().enumerate() {
            ds[i] = self.degree_in(v, mask);
            total += ds[i];
        }
        if total != edges * 2 {
            return false;
        }
        ds.sort_unstable();
        ds == degs
    }

    /// Does any dart use the newest vertex? The rest is dart-free by
    /// induction.
    fn dart_touching_last(&self) -> bool {
        self.pattern_touching_last(6, [1, 2, 2, 3, 4])
    }

    fn bull_touching_last(&self) -> bool {
        self.pattern_touching_last(5, [1, 1, 2, 3, 3])
    }

    fn pattern_touching_last(&self, edges: u32, degs: [u32; 5]) -> bool {
        let m = self.len();
        let last = m - 1;
        if m < 5 {
            return false;
        }
        let old = m - 1;
        // all 4-subsets of the old vertices
        for a in 0..old {
            for b in a + 1..old {
                for c in b + 1..old {
                    for d in c + 1..old {
                        if self.five_set_matches([a, b, c, d, last], edges, degs) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }


    /// Pair-closure primality: every pair's least containing module is
    /// the whole vertex set.
    fn is_prime(&self) -> bool {
        let m = self.len();
        if m <= 2 {
            return m <= 1;
        }
        let full = (1u32 << m) - 1;
        for x in 0..m {
            for y in x + 1..m {
                let mut module: u32 = (1 << x) | (1 << y);
                loop {
                    let mut grew = false;
                    for z in 0..m {
                        if module >> z & 1 == 1 {
                            continue;
                        }
                        let inter = (self.adj[z] as u32) & module;
                        if inter != 0 && inter != module {
                            module |= 1 << z;
                            grew = true;
                        }
                    }
                    if !grew {
                        break;
                    }
                }
                if module != full {
                    return false;
                }
            }
        }
        true
    }

    fn describe(&self) -> String {
        let mut edges = Vec::new();
        for v in 0..self.len() {
            for u in v + 1..self.len() {
                if self.adj[v] >> u & 1 == 1 {
                    edges.push(format!("{v}-{u}"));
                }
            }
        }
        format!("n={} edges [{}]", self.len(), edges.join(","))
    }
}

/// Enumerates every graph consisting of an anti-hole on `k` vertices, a
/// contact `x` (all nonempty neighborhoods into the anti-hole), and a far
/// neighbor `q` of `x` missing the anti-hole. Violations are the
/// dart-free completions; for odd `k` there must be none, because a
/// dart-free graph with an anti-hole of odd length at least 7 admits no
/// contact vertex. Any larger counterexample would restrict to this
/// nine-or-so-vertex configuration.
pub fn enumerate_antihole_contact_configs(k: usize) -> CompletionReport {
    let base = crate::lab::gen::antihole(k);
    let mut report = CompletionReport::default();
    let mg0 = MaskGraph::from_graph(&base);
    for x_row in 1u16..(1 << k) {
        let mut mg = mg0.clone();
        mg.push(x_row);
        report.examined += 1;
        if mg.dart_touching_last() {
            continue;
        }
        // q sees exactly x
        let q_row = 1u16 << k;
        mg.push(q_row);
        report.examined += 1;
        if !mg.dart_touching_last() {
            report.pattern_free += 1;
            report
                .violations
                .push(format!("contact row {x_row:#b}: {}", mg.describe()));
        }
    }
    report
}

/// Exhausts all graphs on up to `6 + 1 + extras` vertices made of a
/// labeled prism (co-C6), a vertex `v` missing it, and `extras` arbitrary
/// vertices. A violation is a completion that is bull-free and prime:
/// prime bull-free graphs have no co-C6 inside any anti-neighborhood, and
/// any counterexample on that many vertices relabels into this space.
pub fn enumerate_prime_bullfree_coc6_completions(extras: usize) -> CompletionReport {
    assert!(extras <= 3, "space grows as 2^(7+8+9)");
    let base = crate::lab::gen::coc6();
    let mut mg = MaskGraph::from_graph(&base);
    mg.push(0); // v misses the prism
    let mut report = CompletionReport {
        examined: 1,
        ..CompletionReport::default()
    };
    recurse_bullfree_prime(&mut mg, extras, &mut report);
    report
}

fn recurse_bullfree_prime(mg: &mut MaskGraph, remaining: usize, report: &mut CompletionReport) {
    // the current prefix is bull-free by construction
    report.pattern_free += 1;
    if mg.is_prime() {
        report
            .violations
            .push(format!("prime bull-free completion: {}", mg.describe()));
    }
    if remaining == 0 {
        return;
    }
    let width = mg.len();
    for row in 0u16..(1 << width) {
        report.examined += 1;
        mg.push(row);
        if !mg.bull_touching_last() {
            recurse_bullfree_prime(mg, remaining - 1, report);
        }
        mg.pop();
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SamplingReport {
    pub samples: u64,
    pub connected: u64,
    pub dart_free_connected: u64,
    pub violations: Vec<String>,
}

impl SamplingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Dense seeded sampling: random graphs on 8..=11 vertices; every
/// connected dart-free sample must have no odd anti-hole of length >= 7
/// inside any anti-neighborhood.
pub fn sample_dart_free_odd_antiholes(samples: u64, seed: u64) -> SamplingReport {
    let chunk = 4096u64;
    let chunks: Vec<u64> = (0..samples.div_ceil(chunk)).collect();
    let partials: Vec<SamplingReport> = chunks
        .par_iter()
        .map(|&ci| {
            let mut rep = SamplingReport::default();
            let lo = ci * chunk;
            let hi = (lo + chunk).min(samples);
            for idx in lo..hi {
                rep.samples += 1;
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(idx));
                let n = 8 + (idx % 4) as usize;
                let p = rng.random_range(0.15..0.55);
                let g = crate::lab::gen::gen_random_with(&mut rng, n, p);
                if !g.is_connected() {
                    continue;
                }
                rep.connected += 1;
                if patterns::find_induced(&g, PatternKind::Dart).is_some() {
                    continue;
                }
                rep.dart_free_connected += 1;
                for v in g.vertices() {
                    let anti = g.anti_neighborhood_of(v);
                    if anti.len() < 7 {
                        continue;
                    }
                    let (sub, _) = g.induced(&anti);
                    if let Some(h) = patterns::find_hole(
                        &sub.complement(),
                        7,
                        CycleParity::Odd,
                        patterns::DEFAULT_BUDGET,
                    )
                    .expect("ten-vertex searches stay in budget")
                    {
                        rep.violations.push(format!(
                            "sample {idx}: vertex {v} has an odd anti-hole of length {}",
                            h.len()
                        ));
                    }
                }
            }
            rep
        })
        .collect();
    let mut total = SamplingReport::default();
    for p in partials {
        total.samples += p.samples;
        total.connected += p.connected;
        total.dart_free_connected += p.dart_free_connected;
        total.violations.extend(p.violations);
    }
    total.violations.sort();
    total
}
