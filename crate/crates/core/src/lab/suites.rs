//! Named corpus suites: each runs a generator against a structural check
//! over many seeded instances and reports violations. The CLI's verify
//! command and the acceptance tests both drive these.

use crate::bitset::VertexSet;
use crate::cliquesep;
use crate::graph::Graph;
use crate::lab::checks::{self, AlternationOutcome, CoC6Labeling, ContactP3Outcome, GrowthOutcome, GrowthTerminal};
use crate::lab::enumerate;
use crate::lab::gen::{self, CoC6Profile, GrowthBase};
use crate::modular;
use crate::patterns::classes::{self, GraphClass};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SuiteId {
    /// contacts never see a full P3 of their set in dart-free hosts
    ContactP3,
    /// anti-hole contacts alternate in dart-free hosts
    Alternation,
    /// the planted-prism contact claims and their separator conclusion
    CoC6Claims,
    /// growth sequences in bull-free hosts join and terminate in modules
    BullGrowth,
    /// prime bull-free graphs have no co-C6 in anti-neighborhoods
    /// (exhaustive completion search)
    PrimeBullAntihole,
    /// no dart-free graph admits a contact on an odd anti-hole >= 7
    /// (exhaustive configuration search)
    DartAntiholeExhaustive,
    /// dense sampling: dart-free connected graphs have no odd anti-hole
    /// >= 7 in any anti-neighborhood
    DartAntiholeSampling,
    /// atoms of (hole,dart)-free graphs are nearly weakly chordal; prime
    /// atoms dispatch to clique / chordal-bipartite branches
    AtomsWeaklyChordal,
    /// prime (P5,bull)-free graphs are nearly chain or co-chain
    P5Chain,
}

impl SuiteId {
    pub const ALL: [SuiteId; 9] = [
        SuiteId::ContactP3,
        SuiteId::Alternation,
        SuiteId::CoC6Claims,
        SuiteId::BullGrowth,
        SuiteId::PrimeBullAntihole,
        SuiteId::DartAntiholeExhaustive,
        SuiteId::DartAntiholeSampling,
        SuiteId::AtomsWeaklyChordal,
        SuiteId::P5Chain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::ContactP3 => "contact-p3",
            SuiteId::Alternation => "alternation",
            SuiteId::CoC6Claims => "coc6-claims",
            SuiteId::BullGrowth => "bull-growth",
            SuiteId::PrimeBullAntihole => "prime-bull-antihole",
            SuiteId::DartAntiholeExhaustive => "dart-antihole-exhaustive",
            SuiteId::DartAntiholeSampling => "dart-antihole-sampling",
            SuiteId::AtomsWeaklyChordal => "atoms-weakly-chordal",
            SuiteId::P5Chain => "p5-chain",
        }
    }

    pub fn parse(s: &str) -> Option<SuiteId> {
        SuiteId::ALL.into_iter().find(|id| id.name() == s)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub count: usize,
    pub seed: u64,
    /// upper bound for generated instance sizes
    pub n: usize,
    /// density override; suites pick their own band when None
    pub p: Option<f64>,
}

impl SuiteConfig {
    pub fn defaults_for(id: SuiteId) -> SuiteConfig {
        let (count, n) = match id {
            SuiteId::ContactP3 => (200, 12),
            SuiteId::Alternation => (200, 16),
            SuiteId::CoC6Claims => (120, 12),
            SuiteId::BullGrowth => (300, 14),
            SuiteId::PrimeBullAntihole => (2, 10),
            SuiteId::DartAntiholeExhaustive => (1, 9),
            SuiteId::DartAntiholeSampling => (100_000, 11),
            SuiteId::AtomsWeaklyChordal => (300, 14),
            SuiteId::P5Chain => (300, 12),
        };
        SuiteConfig {
            count,
            seed: 0xC0FFEE,
            n,
            p: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ViolationRecord {
    pub instance: String,
    pub description: String,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LemmaReport {
    pub suite: String,
    pub corpus: String,
    pub instances: usize,
    pub checked: usize,
    pub skipped: usize,
    pub violations: Vec<ViolationRecord>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

struct InstanceOutcome {
    checked: usize,
    skipped: usize,
    violations: Vec<ViolationRecord>,
}

impl InstanceOutcome {
    fn ok() -> Self {
        InstanceOutcome {
            checked: 1,
            skipped: 0,
            violations: Vec::new(),
        }
    }

    fn skip() -> Self {
        InstanceOutcome {
            checked: 0,
            skipped: 1,
            violations: Vec::new(),
        }
    }

    fn violation(instance: usize, description: String, witness: Vec<usize>) -> Self {
        InstanceOutcome {
            checked: 1,
            skipped: 0,
            violations: vec![ViolationRecord {
                instance: format!("#{instance}"),
                description,
                witness,
            }],
        }
    }
}

fn run_instances<F>(suite: SuiteId, cfg: SuiteConfig, corpus: &str, per: F) -> LemmaReport
where
    F: Fn(usize) -> InstanceOutcome + Sync + Send,
{
    let outcomes: Vec<InstanceOutcome> = (0..cfg.count).into_par_iter().map(per).collect();
    let mut report = LemmaReport {
        suite: suite.name().to_string(),
        corpus: format!("{corpus}; count={} seed={} n<={}", cfg.count, cfg.seed, cfg.n),
        instances: cfg.count,
        checked: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    for o in outcomes {
        report.checked += o.checked;
        report.skipped += o.skipped;
        report.violations.extend(o.violations);
    }
    report
}

pub fn run_suite(id: SuiteId, cfg: SuiteConfig) -> LemmaReport {
    match id {
        SuiteId::ContactP3 => contact_p3_suite(cfg),
        SuiteId::Alternation => alternation_suite(cfg),
        SuiteId::CoC6Claims => coc6_claims_suite(cfg),
        SuiteId::BullGrowth => bull_growth_suite(cfg),
        SuiteId::PrimeBullAntihole => prime_bull_antihole_suite(cfg),
        SuiteId::DartAntiholeExhaustive => dart_antihole_exhaustive_suite(cfg),
        SuiteId::DartAntiholeSampling => dart_antihole_sampling_suite(cfg),
        SuiteId::AtomsWeaklyChordal => atoms_weakly_chordal_suite(cfg),
        SuiteId::P5Chain => p5_chain_suite(cfg),
    }
}

fn contact_p3_suite(cfg: SuiteConfig) -> LemmaReport {
    run_instances(SuiteId::ContactP3, cfg, "dart-free rejection corpus, random sets", |i| {
        let mut rng = gen::rng_for(cfg.seed.wrapping_add(i as u64));
        let n = rng.random_range(5..=cfg.n);
        let p = cfg.p.unwrap_or_else(|| rng.random_range(0.2..0.4));
        // a few negative controls: hosts with darts must be skipped
        if i % 50 == 49 {
            let g = crate::graph::families::dart();
            let u = VertexSet::from_iter(5, [0, 1]);
            return match checks::check_contact_p3(&g, &u) {
                ContactP3Outcome::SkippedNotDartFree { .. } => InstanceOutcome::skip(),
                other => InstanceOutcome::violation(
                    i,
                    format!("negative control not skipped: {other:?}"),
                    vec![],
                ),
            };
        }
        let Ok((g, _)) = gen::gen_in_class_with(&mut rng, GraphClass::DartFree, n, p, 10_000)
        else {
            return InstanceOutcome::skip();
        };
        let size = rng.random_range(1..=(n / 2).max(1));
        let mut u = VertexSet::empty(n);
        while u.len() < size {
            u.insert(rng.random_range(0..n));
        }
        match checks::check_contact_p3(&g, &u) {
            ContactP3Outcome::Pass { .. } => InstanceOutcome::ok(),
            ContactP3Outcome::SkippedEmptyAnti => InstanceOutcome::skip(),
            ContactP3Outcome::SkippedNotDartFree { dart } => InstanceOutcome::violation(
                i,
                "generator audit failed: dart in dart-free corpus".into(),
                dart,
            ),
            ContactP3Outcome::Violation { contact, dart } => InstanceOutcome::violation(
                i,
                format!("contact {contact} sees a P3 of its set"),
                dart,
            ),
        }
    })
}

fn alternation_suite(cfg: SuiteConfig) -> LemmaReport {
    run_instances(SuiteId::Alternation, cfg, "planted co-C8 hosts with contacts", |i| {
        let seed = cfg.seed.wrapping_add(i as u64);
        let mut rng = gen::rng_for(seed);
        let contacts = rng.random_range(1..=4);
        let component = rng.random_range(1..=3);
        // negative control: sabotaged contacts force a dart
        if i % 40 == 39 {
            return match gen::plant_alternating_antihole(8, contacts, component, seed, 500, true)
            {
                Ok(p) => match checks::check_antihole_alternation(&p.graph, &p.structure) {
                    AlternationOutcome::SkippedNotDartFree { .. } => InstanceOutcome::skip(),
                    other => InstanceOutcome::violation(
                        i,
                        format!("sabotaged host not skipped: {other:?}"),
                        vec![],
                    ),
                },
                Err(_) => InstanceOutcome::skip(),
            };
        }
        match gen::plant_alternating_antihole(8, contacts, component, seed, 500, false) {
            Err(_) => InstanceOutcome::skip(),
            Ok(p) => match checks::check_antihole_alternation(&p.graph, &p.structure) {
                AlternationOutcome::Pass { .. } | AlternationOutcome::VacuousNoContacts => {
                    InstanceOutcome::ok()
                }
                other => InstanceOutcome::violation(
                    i,
                    format!("alternation failed: {other:?}"),
                    vec![],
                ),
            },
        }
    })
}

fn coc6_claims_suite(cfg: SuiteConfig) -> LemmaReport {
    run_instances(SuiteId::CoC6Claims, cfg, "planted prism hosts, three contact profiles", |i| {
        let seed = cfg.seed.wrapping_add(i as u64);
        let mut rng = gen::rng_for(seed);
        let profile = match i % 3 {
            0 => CoC6Profile::A3Plus,
            1 => CoC6Profile::A2Plus14,
            _ => CoC6Profile::A1Only,
        };
        let contacts = rng.random_range(1..=3);
        let Ok(p) = gen::plant_coc6(profile, contacts, seed, 10) else {
            return InstanceOutcome::skip();
        };
        let labeling = CoC6Labeling {
            left: [0, 1, 2],
            right: [3, 4, 5],
        };
        match checks::classify_contacts(&p.graph, &labeling, p.pivot) {
            Err(e) => InstanceOutcome::violation(i, format!("classification failed: {e:?}"), vec![]),
            Ok(c) => {
                for claim in &c.claims {
                    if !claim.passed {
                        return InstanceOutcome::violation(
                            i,
                            format!("claim {} failed", claim.name),
                            claim.witness.clone().unwrap_or_default(),
                        );
                    }
                }
                if !c.separator_verified {
                    return InstanceOutcome::violation(
                        i,
                        "no verified clique separator".into(),
                        c.separator.map(|s| s.to_vec()).unwrap_or_default(),
                    );
                }
                // cross-check: the host cannot be an atom, so the
                // elimination scan must split it
                if cliquesep::find_clique_separator(&p.graph, &p.graph.full_set()).is_none() {
                    return InstanceOutcome::violation(
                        i,
                        "separator exists but the decomposition scan found none".into(),
                        vec![],
                    );
                }
                InstanceOutcome::ok()
            }
        }
    })
}

fn bull_growth_suite(cfg: SuiteConfig) -> LemmaReport {
    run_instances(SuiteId::BullGrowth, cfg, "planted growth hosts over co-C6/co-C7/C5/house", |i| {
        let seed = cfg.seed.wrapping_add(i as u64);
        let mut rng = gen::rng_for(seed);
        let base = match i % 4 {
            0 => GrowthBase::AntiHole(6),
            1 => GrowthBase::AntiHole(7),
            2 => GrowthBase::C5,
            _ => GrowthBase::House,
        };
        let stages = rng.random_range(0..=2);
        let with_far = rng.random_bool(0.7);
        let Ok(p) = gen::plant_growth(base, stages, with_far, seed, 2_000) else {
            return InstanceOutcome::skip();
        };
        match checks::check_bull_growth(&p.graph, &p.structure, base, None) {
            GrowthOutcome::Done {
                join_violations,
                terminal,
                ..
            } => {
                if let Some(v) = join_violations.first() {
                    return InstanceOutcome::violation(
                        i,
                        format!("contact {} does not join stage {}", v.contact, v.stage),
                        vec![v.contact, v.missed],
                    );
                }
                match terminal {
                    GrowthTerminal::AntiNeighborhoodEmpty => InstanceOutcome::ok(),
                    GrowthTerminal::Module { verified: true } => InstanceOutcome::ok(),
                    GrowthTerminal::Module { verified: false } => InstanceOutcome::violation(
                        i,
                        "terminal stage is not a module".into(),
                        vec![],
                    ),
                }
            }
            other => InstanceOutcome::violation(i, format!("growth skipped: {other:?}"), vec![]),
        }
    })
}

fn prime_bull_antihole_suite(cfg: SuiteConfig) -> LemmaReport {
    let extras = if cfg.n >= 10 { 3 } else { cfg.n.saturating_sub(7).min(3) };
    let rep = enumerate::enumerate_prime_bullfree_coc6_completions(extras);
    LemmaReport {
        suite: SuiteId::PrimeBullAntihole.name().to_string(),
        corpus: format!(
            "exhaustive completions of prism + far vertex + {extras} extras ({} graphs examined)",
            rep.examined
        ),
        instances: rep.examined as usize,
        checked: rep.examined as usize,
        skipped: 0,
        violations: rep
            .violations
            .iter()
            .map(|d| ViolationRecord {
                instance: "completion".into(),
                description: d.clone(),
                witness: vec![],
            })
            .collect(),
    }
}

fn dart_antihole_exhaustive_suite(_cfg: SuiteConfig) -> LemmaReport {
    let mut violations: Vec<ViolationRecord> = Vec::new();
    let mut examined = 0u64;
    for k in [7usize, 9] {
        let odd = enumerate::enumerate_antihole_contact_configs(k);
        examined += odd.examined;
        violations.extend(odd.violations.iter().map(|d| ViolationRecord {
            instance: format!("co-C{k}"),
            description: d.clone(),
            witness: vec![],
        }));
    }
    // positive control: the even case must admit contact configurations
    let even = enumerate::enumerate_antihole_contact_configs(8);
    examined += even.examined;
    if even.passed() {
        violations.push(ViolationRecord {
            instance: "co-C8".into(),
            description: "control failed: no dart-free co-C8 contact configuration found".into(),
            witness: vec![],
        });
    }
    LemmaReport {
        suite: SuiteId::DartAntiholeExhaustive.name().to_string(),
        corpus: format!(
            "exhaustive contact configurations over co-C7, co-C9 (must be empty) and co-C8 (control); {examined} examined"
        ),
        instances: examined as usize,
        checked: examined as usize,
        skipped: 0,
        violations,
    }
}

fn dart_antihole_sampling_suite(cfg: SuiteConfig) -> LemmaReport {
    let rep = enumerate::sample_dart_free_odd_antiholes(cfg.count as u64, cfg.seed);
    LemmaReport {
        suite: SuiteId::DartAntiholeSampling.name().to_string(),
        corpus: format!(
            "random graphs on 8..=11 vertices; {} sampled, {} connected, {} dart-free",
            rep.samples, rep.connected, rep.dart_free_connected
        ),
        instances: rep.samples as usize,
        checked: rep.dart_free_connected as usize,
        skipped: (rep.samples - rep.dart_free_connected) as usize,
        violations: rep
            .violations
            .iter()
            .map(|d| ViolationRecord {
                instance: "sample".into(),
                description: d.clone(),
                witness: vec![],
            })
            .collect(),
    }
}

fn atoms_weakly_chordal_suite(cfg: SuiteConfig) -> LemmaReport {
    run_instances(
        SuiteId::AtomsWeaklyChordal,
        cfg,
        "(hole,dart)-free rejection corpus; all atoms audited",
        |i| {
            let mut rng = gen::rng_for(cfg.seed.wrapping_add(i as u64));
            let n = rng.random_range(6..=cfg.n);
            let p = cfg.p.unwrap_or_else(|| rng.random_range(0.1..=(3.0 / n as f64).min(0.3)));
            let Ok((g, _)) =
                gen::gen_in_class_with(&mut rng, GraphClass::HoleDartFree, n, p, 10_000)
            else {
                return InstanceOutcome::skip();
            };
            for comp in g.connected_components() {
                let (cg, cmap) = g.induced(&comp);
                let decomposition = cliquesep::decompose(&cg);
                for atom in decomposition.atoms() {
                    let (ag, amap) = cg.induced(atom);
                    if let Some((v, evidence)) = checks::check_nearly(&ag, |b| {
                        classes::is_weakly_chordal(b).map_err(|e| match e {
                            classes::WeaklyChordalEvidence::Hole(h) => h,
                            classes::WeaklyChordalEvidence::AntiHole(h) => h,
                        })
                    }) {
                        let host_v = cmap[amap[v]];
                        return InstanceOutcome::violation(
                            i,
                            "atom anti-neighborhood is not weakly chordal".into(),
                            std::iter::once(host_v)
                                .chain(evidence.iter().map(|&x| cmap[amap[x]]))
                                .collect(),
                        );
                    }
                    // prime atoms must dispatch to clique or chordal
                    // bipartite branches
                    if modular::is_prime(&ag) {
                        for v in ag.vertices() {
                            let anti = ag.anti_neighborhood_of(v);
                            let (branch, _) = ag.induced(&anti);
                            let clique = branch.is_clique(&branch.full_set());
                            let cb = classes::is_chordal_bipartite(&branch).is_ok();
                            if !clique && !cb {
                                return InstanceOutcome::violation(
                                    i,
                                    "prime atom branch is neither clique nor chordal bipartite"
                                        .into(),
                                    vec![cmap[amap[v]]],
                                );
                            }
                        }
                    }
                }
            }
            InstanceOutcome::ok()
        },
    )
}

fn p5_chain_suite(cfg: SuiteConfig) -> LemmaReport {
    run_instances(
        SuiteId::P5Chain,
        cfg,
        "prime (P5,bull)-free rejection corpus",
        |i| {
            let mut rng = gen::rng_for(cfg.seed.wrapping_add(i as u64));
            let g = gen::prime_corpus_graph(&mut rng, GraphClass::P5BullFree, cfg.n);
            // primality confirmed by the tree root as well
            let tree = modular::modular_decomposition(&g);
            let root = tree.node(tree.root);
            if g.vertex_count() > 1
                && !(root.kind == modular::MDNodeKind::Prime
                    && root.children.len() == g.vertex_count())
            {
                return InstanceOutcome::violation(
                    i,
                    "generator audit failed: instance is not prime".into(),
                    vec![],
                );
            }
            match checks::check_nearly(&g, |branch| {
                if classes::is_bipartite_chain(branch).is_ok()
                    || classes::is_cobipartite_chain(branch).is_ok()
                {
                    Ok(())
                } else {
                    Err(Vec::new())
                }
            }) {
                None => InstanceOutcome::ok(),
                Some((v, _)) => InstanceOutcome::violation(
                    i,
                    "anti-neighborhood is neither chain nor co-chain".into(),
                    vec![v],
                ),
            }
        },
    )
}

/// Runs the instance-parallel work for `graph` audits used by tests:
/// true iff the modular tree of `g` passes the module and prime-quotient
/// audits.
pub fn audit_md_tree(g: &Graph) -> bool {
    let tree = modular::modular_decomposition(g);
    for node in &tree.nodes {
        let (sub, map) = g.induced(&node.vertices);
        let back: std::collections::HashMap<usize, usize> =
            map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for &c in &node.children {
            let child = tree.node(c);
            let local = VertexSet::from_iter(
                sub.vertex_count(),
                child.vertices.iter().map(|v| back[&v]),
            );
            if modular::is_module(&sub, &local).is_err() {
                return false;
            }
        }
        if node.kind == modular::MDNodeKind::Prime {
            let q = node.quotient.as_ref().unwrap();
            if !modular::is_prime(q) {
                return false;
            }
        }
    }
    true
}
