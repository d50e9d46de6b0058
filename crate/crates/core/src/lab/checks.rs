//! Executable forms of the structural facts the pipelines rely on:
//! contact behavior at planted structures, anti-hole alternation, the
//! prism contact classification with its clique-separator conclusion, and
//! growth sequences in bull-free hosts.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::lab::gen;
use crate::modular;
use crate::patterns::{self, PatternKind};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Least vertex whose anti-neighborhood fails `predicate`, with the
/// predicate's evidence translated into host ids.
pub fn check_nearly<F>(g: &Graph, predicate: F) -> Option<(usize, Vec<usize>)>
where
    F: Fn(&Graph) -> Result<(), Vec<usize>>,
{
    for v in g.vertices() {
        let anti = g.anti_neighborhood_of(v);
        let (sub, map) = g.induced(&anti);
        if let Err(evidence) = predicate(&sub) {
            let host_evidence = evidence.iter().map(|&x| map[x]).collect();
            return Some((v, host_evidence));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ContactP3Outcome {
    /// precondition failed: the host is not dart-free
    SkippedNotDartFree { dart: Vec<usize> },
    /// precondition failed: the set has an empty anti-neighborhood
    SkippedEmptyAnti,
    Pass { contacts_checked: usize },
    /// a contact saw a full P3 of the set; the five vertices are a dart
    /// in canonical order, which cannot happen in a dart-free host
    Violation { contact: usize, dart: Vec<usize> },
}

/// No contact vertex of `u` sees all three vertices of an induced P3
/// inside `u` (otherwise contact + P3 + a far neighbor form a dart).
pub fn check_contact_p3(g: &Graph, u: &VertexSet) -> ContactP3Outcome {
    if let Some(w) = patterns::find_induced(g, PatternKind::Dart) {
        return ContactP3Outcome::SkippedNotDartFree { dart: w };
    }
    let anti = g.anti_neighborhood(u);
    if anti.is_empty() {
        return ContactP3Outcome::SkippedEmptyAnti;
    }
    let contacts = g.contact_set(u).expect("anti-neighborhood is nonempty");
    let mut checked = 0;
    for c in contacts.iter() {
        checked += 1;
        let seen = g.neighbors(c).intersection(u);
        if let Some((mid, end_a, end_b)) = induced_p3_inside(g, &seen) {
            let far = g
                .neighbors(c)
                .intersection(&anti)
                .first()
                .expect("contacts see the anti-neighborhood");
            // canonical dart order (a,b,c,d,e)
            let dart = vec![mid, end_a, end_b, c, far];
            debug_assert!(patterns::audit_witness(g, PatternKind::Dart, &dart));
            return ContactP3Outcome::Violation { contact: c, dart };
        }
    }
    ContactP3Outcome::Pass {
        contacts_checked: checked,
    }
}

/// An induced P3 inside `s` as (mid, end, end), if `G[s]` is not a
/// disjoint union of cliques.
fn induced_p3_inside(g: &Graph, s: &VertexSet) -> Option<(usize, usize, usize)> {
    for comp in g.components_within(s) {
        if g.is_clique(&comp) {
            continue;
        }
        // connected non-complete: some non-adjacent pair at distance two
        let verts = comp.to_vec();
        for (i, &x) in verts.iter().enumerate() {
            for &y in &verts[i + 1..] {
                if !g.has_edge(x, y) {
                    let mid = g
                        .neighbors(x)
                        .intersection(g.neighbors(y))
                        .intersection(&comp)
                        .first();
                    if let Some(mid) = mid {
                        return Some((mid, x, y));
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlternationOutcome {
    SkippedNotDartFree { dart: Vec<usize> },
    SkippedNotAntihole,
    /// no contact sees both the structure and its anti-neighborhood
    VacuousNoContacts,
    Pass { contacts_checked: usize },
    OddLength { k: usize, contact: usize },
    NotAlternating { contact: usize, seen: Vec<usize> },
}

/// Contacts of an anti-hole in a dart-free host see exactly one
/// alternating side, and the anti-hole has even length.
pub fn check_antihole_alternation(g: &Graph, h: &[usize]) -> AlternationOutcome {
    if let Some(w) = patterns::find_induced(g, PatternKind::Dart) {
        return AlternationOutcome::SkippedNotDartFree { dart: w };
    }
    let k = h.len();
    if k < 6 || !patterns::audit_cycle(&g.complement(), h) {
        return AlternationOutcome::SkippedNotAntihole;
    }
    let hset = VertexSet::from_iter(g.vertex_count(), h.iter().copied());
    let contacts = match g.contact_set(&hset) {
        Err(_) => return AlternationOutcome::VacuousNoContacts,
        Ok(c) if c.is_empty() => return AlternationOutcome::VacuousNoContacts,
        Ok(c) => c,
    };
    let odd: std::collections::BTreeSet<usize> =
        (0..k).filter(|i| i % 2 == 0).map(|i| h[i]).collect();
    let even: std::collections::BTreeSet<usize> =
        (0..k).filter(|i| i % 2 == 1).map(|i| h[i]).collect();
    let mut checked = 0;
    for x in contacts.iter() {
        checked += 1;
        if k % 2 == 1 {
            return AlternationOutcome::OddLength { k, contact: x };
        }
        let seen: std::collections::BTreeSet<usize> =
            g.neighbors(x).intersection(&hset).iter().collect();
        if seen != odd && seen != even {
            return AlternationOutcome::NotAlternating {
                contact: x,
                seen: seen.into_iter().collect(),
            };
        }
    }
    AlternationOutcome::Pass {
        contacts_checked: checked,
    }
}

/// The planted prism labeling: left triangle, right triangle, matching
/// edges `(left[i], right[i])`.
#[derive(Debug, Clone)]
pub struct CoC6Labeling {
    pub left: [usize; 3],
    pub right: [usize; 3],
}

impl CoC6Labeling {
    pub fn vertices(&self) -> [usize; 6] {
        [
            self.left[0],
            self.left[1],
            self.left[2],
            self.right[0],
            self.right[1],
            self.right[2],
        ]
    }

    pub fn matching_pairs(&self) -> [(usize, usize); 3] {
        [
            (self.left[0], self.right[0]),
            (self.left[1], self.right[1]),
            (self.left[2], self.right[2]),
        ]
    }

    fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        let set = VertexSet::from_iter(g.vertex_count(), vs.iter().copied());
        if set.len() != 6 {
            return false;
        }
        let (sub, map) = g.induced(&set);
        let expected = gen::coc6();
        // map induced ids back to the labeling order
        let pos: std::collections::HashMap<usize, usize> =
            vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for a in 0..6 {
            for b in a + 1..6 {
                let (ga, gb) = (pos[&map[a]], pos[&map[b]]);
                if sub.has_edge(a, b) != expected.has_edge(ga, gb) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct ContactClassification {
    /// neighbors of the structure seeing exactly i+1 of its vertices
    pub by_degree: [VertexSet; 6],
    /// the members of each degree class that also see the pivot component
    pub by_degree_plus: [VertexSet; 6],
    pub component_of_pivot: VertexSet,
    /// A_2+ members seeing exactly matching pair i
    pub matching_cells: [VertexSet; 3],
    pub claims: Vec<ClaimResult>,
    pub separator: Option<VertexSet>,
    pub separator_verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassifyError {
    NotHoleDartFree(Vec<usize>),
    MislabeledStructure,
    PivotNotInAntiNeighborhood,
}

/// Classifies the contacts of a labeled prism inside a (hole,dart)-free
/// host, audits the contact claims, and verifies the concluding clique
/// separator between the pivot's component and part of the structure.
///
/// Writing `A_i` for the neighbors of the prism seeing exactly `i` of its
/// vertices and `A_i+` for those members that also see the pivot's
/// component `Q_v`, the audited claims are:
///
/// * `C1`: `A_4+`, `A_5+`, `A_6+` are all empty;
/// * `C2`: every `A_2` member sees the two ends of a matching edge;
/// * `C3`: every `A_3+` member joins the left or the right triangle;
/// * `C5`: nonadjacent contacts of `Q_v` have inclusion-comparable
///   neighborhoods on the prism and share a neighbor in `Q_v`;
/// * `C6`: `A_2+` and `A_3+` are never both nonempty;
/// * `C7`: at most one of the `A_2+` matching cells is nonempty;
/// * `C8`: the prism vertices seen by `A_1+` form a clique;
/// * `C9`: `A_1+` is co-joined to `A_2+ ∪ A_3+`;
/// * `C10`: `A_3+` is a clique.
///
/// Their conjunction pins a clique separator: `A_3+ ∪ N(A_1+)` when
/// `A_3+` is nonempty, the populated matching pair when `A_2+` is
/// nonempty, and `N(A_1+)` otherwise.
pub fn classify_contacts(
    g: &Graph,
    labeling: &CoC6Labeling,
    pivot: usize,
) -> Result<ContactClassification, ClassifyError> {
    use crate::patterns::classes::{in_class_default, GraphClass};
    if let Err(violation) = in_class_default(g, GraphClass::HoleDartFree) {
        return Err(ClassifyError::NotHoleDartFree(
            violation.vertices().to_vec(),
        ));
    }
    if !labeling.is_valid_in(g) {
        return Err(ClassifyError::MislabeledStructure);
    }
    let n = g.vertex_count();
    let a_set = VertexSet::from_iter(n, labeling.vertices().iter().copied());
    let anti = g.anti_neighborhood(&a_set);
    if !anti.contains(pivot) {
        return Err(ClassifyError::PivotNotInAntiNeighborhood);
    }
    let q_v = g
        .components_within(&anti)
        .into_iter()
        .find(|c| c.contains(pivot))
        .unwrap();

    let neighbors_of_a = g.neighborhood_of_set(&a_set);
    let mut by_degree: [VertexSet; 6] = std::array::from_fn(|_| VertexSet::empty(n));
    let mut by_degree_plus: [VertexSet; 6] = std::array::from_fn(|_| VertexSet::empty(n));
    for x in neighbors_of_a.iter() {
        let i = g.neighbors(x).intersection_len(&a_set);
        debug_assert!((1..=6).contains(&i));
        by_degree[i - 1].insert(x);
        if g.neighbors(x).intersects(&q_v) {
            by_degree_plus[i - 1].insert(x);
        }
    }
    let pairs = labeling.matching_pairs();
    let mut matching_cells: [VertexSet; 3] = std::array::from_fn(|_| VertexSet::empty(n));
    for x in by_degree_plus[1].iter() {
        let seen: Vec<usize> = g.neighbors(x).intersection(&a_set).to_vec();
        for (ci, &(p, q)) in pairs.iter().enumerate() {
            let mut want = [p, q];
            want.sort_unstable();
            if seen == want {
                matching_cells[ci].insert(x);
            }
        }
    }

    let mut claims = Vec::new();
    let mut claim = |name: &str, passed: bool, witness: Option<Vec<usize>>| {
        claims.push(ClaimResult {
            name: name.to_string(),
            passed,
            witness,
        });
    };

    // C1: no contact of the pivot component sees four or more vertices
    let c1_bad = by_degree_plus[3]
        .first()
        .or(by_degree_plus[4].first())
        .or(by_degree_plus[5].first());
    claim("C1", c1_bad.is_none(), c1_bad.map(|x| vec![x]));

    // C2: every 2-seer sees a matching edge
    let mut c2_bad = None;
    for x in by_degree[1].iter() {
        let seen: Vec<usize> = g.neighbors(x).intersection(&a_set).to_vec();
        let hits_matching = pairs.iter().any(|&(p, q)| {
            let mut want = [p, q];
            want.sort_unstable();
            seen == want
        });
        if !hits_matching {
            c2_bad = Some(vec![x]);
            break;
        }
    }
    claim("C2", c2_bad.is_none(), c2_bad);

    // C3: every 3-seer of the pivot component joins left or right
    let left = VertexSet::from_iter(n, labeling.left.iter().copied());
    let right = VertexSet::from_iter(n, labeling.right.iter().copied());
    let mut c3_bad = None;
    for x in by_degree_plus[2].iter() {
        let seen = g.neighbors(x).intersection(&a_set);
        if seen != left && seen != right {
            c3_bad = Some(vec![x]);
            break;
        }
    }
    claim("C3", c3_bad.is_none(), c3_bad);

    // C5: contacts with a common interest in Q_v: nonadjacent ones have
    // comparable neighborhoods on the structure and share a Q_v neighbor
    let all_plus: VertexSet = {
        let mut s = VertexSet::empty(n);
        for d in &by_degree_plus {
            s.union_with(d);
        }
        s
    };
    let mut c5_bad = None;
    let plus_vec = all_plus.to_vec();
    'c5: for (i, &x) in plus_vec.iter().enumerate() {
        for &y in &plus_vec[i + 1..] {
            if g.has_edge(x, y) {
                continue;
            }
            let nx = g.neighbors(x).intersection(&a_set);
            let ny = g.neighbors(y).intersection(&a_set);
            let comparable = nx.is_subset_of(&ny) || ny.is_subset_of(&nx);
            let common_q = g
                .neighbors(x)
                .intersection(g.neighbors(y))
                .intersects(&q_v);
            if !comparable || !common_q {
                c5_bad = Some(vec![x, y]);
                break 'c5;
            }
        }
    }
    claim("C5", c5_bad.is_none(), c5_bad);

    // C6: 2-seers and 3-seers of Q_v do not coexist
    let c6_ok = by_degree_plus[1].is_empty() || by_degree_plus[2].is_empty();
    claim(
        "C6",
        c6_ok,
        (!c6_ok).then(|| {
            vec![
                by_degree_plus[1].first().unwrap(),
                by_degree_plus[2].first().unwrap(),
            ]
        }),
    );

    // C7: at most one matching cell is populated
    let populated: Vec<usize> = (0..3).filter(|&i| !matching_cells[i].is_empty()).collect();
    claim(
        "C7",
        populated.len() <= 1,
        (populated.len() > 1).then(|| {
            populated
                .iter()
                .map(|&i| matching_cells[i].first().unwrap())
                .collect()
        }),
    );

    // C8: the structure vertices seen by 1-seers of Q_v form a clique
    let seen_by_singles: VertexSet = {
        let mut s = VertexSet::empty(n);
        for x in by_degree_plus[0].iter() {
            s.union_with(&g.neighbors(x).intersection(&a_set));
        }
        s
    };
    let c8_ok = g.is_clique(&seen_by_singles);
    claim("C8", c8_ok, (!c8_ok).then(|| seen_by_singles.to_vec()));

    // C9: 1-seers of Q_v are co-joined to the 2- and 3-seers of Q_v
    let mut others = by_degree_plus[1].union(&by_degree_plus[2]);
    others.subtract(&by_degree_plus[0]);
    let c9_ok = g
        .is_cojoin(&by_degree_plus[0], &others)
        .unwrap_or(false);
    claim("C9", c9_ok, None);

    // C10: the 3-seers of Q_v form a clique
    let c10_ok = g.is_clique(&by_degree_plus[2]);
    claim("C10", c10_ok, (!c10_ok).then(|| by_degree_plus[2].to_vec()));

    // concluding separator
    let separator = if !by_degree_plus[2].is_empty() {
        let mut s = by_degree_plus[2].clone();
        s.union_with(&seen_by_singles);
        Some(s)
    } else if !by_degree_plus[1].is_empty() {
        populated.first().map(|&i| {
            VertexSet::from_iter(n, [pairs[i].0, pairs[i].1])
        })
    } else if !by_degree_plus[0].is_empty() {
        Some(seen_by_singles.clone())
    } else {
        None
    };
    let separator_verified = match &separator {
        None => false,
        Some(s) => {
            if !g.is_clique(s) || s.intersects(&q_v) {
                false
            } else {
                let mut rest = g.full_set();
                rest.subtract(s);
                let comps = g.components_within(&rest);
                let pivot_comp = comps.iter().find(|c| c.contains(pivot)).unwrap();
                let mut outside_a = a_set.difference(s);
                outside_a.subtract(pivot_comp);
                !outside_a.is_empty()
            }
        }
    };

    Ok(ContactClassification {
        by_degree,
        by_degree_plus,
        component_of_pivot: q_v,
        matching_cells,
        claims,
        separator,
        separator_verified,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GrowthTerminal {
    /// the grown structure dominates the rest of the graph
    AntiNeighborhoodEmpty,
    /// no distinguisher remains; the structure is a module (verified)
    Module { verified: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GrowthOutcome {
    SkippedNotBullFree { bull: Vec<usize> },
    SkippedNotConnected,
    SkippedBadBase,
    Done {
        stages: usize,
        join_violations: Vec<JoinViolation>,
        terminal: GrowthTerminal,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinViolation {
    pub stage: usize,
    pub contact: usize,
    pub missed: usize,
}

/// Grows a base structure by repeatedly adding a vertex distinguishing an
/// edge of the current stage, checking at every stage that each contact
/// vertex joins it. Deterministic choice: least distinguisher of the
/// least edge; `choices` switches to seeded random picks (the outcome is
/// choice-independent and tests sample that).
pub fn check_bull_growth(
    g: &Graph,
    base: &[usize],
    base_kind: gen::GrowthBase,
    mut choices: Option<&mut ChaCha8Rng>,
) -> GrowthOutcome {
    if let Some(w) = patterns::find_induced(g, PatternKind::Bull) {
        return GrowthOutcome::SkippedNotBullFree { bull: w };
    }
    if !g.is_connected() {
        return GrowthOutcome::SkippedNotConnected;
    }
    // the base must be induced in the expected shape
    let expected = base_kind.graph();
    if base.len() != expected.vertex_count() {
        return GrowthOutcome::SkippedBadBase;
    }
    for a in 0..base.len() {
        for b in a + 1..base.len() {
            if g.has_edge(base[a], base[b]) != expected.has_edge(a, b) {
                return GrowthOutcome::SkippedBadBase;
            }
        }
    }

    let n = g.vertex_count();
    let mut h = VertexSet::from_iter(n, base.iter().copied());
    let mut join_violations = Vec::new();
    let mut stages = 0usize;
    loop {
        let anti = g.anti_neighborhood(&h);
        if !anti.is_empty() {
            let contacts = g.contact_set(&h).unwrap();
            for u in contacts.iter() {
                let missed = h.difference(g.neighbors(u));
                if let Some(m) = missed.first() {
                    join_violations.push(JoinViolation {
                        stage: stages,
                        contact: u,
                        missed: m,
                    });
                }
            }
        }

        // distinguishers of the least edge, or any edge for random mode
        let mut h_edges: Vec<(usize, usize)> = Vec::new();
        let hv = h.to_vec();
        for (i, &x) in hv.iter().enumerate() {
            for &y in &hv[i + 1..] {
                if g.has_edge(x, y) {
                    h_edges.push((x, y));
                }
            }
        }
        let mut candidates: Vec<(usize, usize)> = Vec::new(); // (edge index, z)
        for (ei, &(x, y)) in h_edges.iter().enumerate() {
            let mut sees_x = g.neighbors(x).difference(g.neighbors(y));
            sees_x.subtract(&h);
            sees_x.remove(y);
            let mut sees_y = g.neighbors(y).difference(g.neighbors(x));
            sees_y.subtract(&h);
            sees_y.remove(x);
            for z in sees_x.iter().chain(sees_y.iter()) {
                candidates.push((ei, z));
            }
        }
        if candidates.is_empty() {
            let terminal = if anti.is_empty() {
                GrowthTerminal::AntiNeighborhoodEmpty
            } else {
                GrowthTerminal::Module {
                    verified: modular::is_module(g, &h).is_ok(),
                }
            };
            return GrowthOutcome::Done {
                stages,
                join_violations,
                terminal,
            };
        }
        candidates.sort_unstable_by_key(|&(ei, z)| (ei, z));
        let (_, z) = match choices.as_deref_mut() {
            None => candidates[0],
            Some(rng) => candidates[rng.random_range(0..candidates.len())],
        };
        h.insert(z);
        stages += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::lab::gen::{plant_alternating_antihole, plant_coc6, plant_growth, CoC6Profile, GrowthBase};
    use crate::patterns::classes::is_weakly_chordal;

    #[test]
    fn check_nearly_examples() {
        // a universal vertex has empty anti-neighborhood: vacuous
        let star = complete_bipartite(1, 4);
        let wc = |g: &Graph| {
            is_weakly_chordal(g).map_err(|e| match e {
                crate::patterns::WeaklyChordalEvidence::Hole(h) => h,
                crate::patterns::WeaklyChordalEvidence::AntiHole(h) => h,
            })
        };
        assert!(check_nearly(&star, wc).is_none());

        // C7 plus an isolated vertex: the isolated vertex's
        // anti-neighborhood contains the hole
        let g = Graph::build(8, &cycle(7).edges()).unwrap();
        let (v, evidence) = check_nearly(&g, wc).unwrap();
        assert_eq!(v, 7);
        assert_eq!(evidence.len(), 7);
    }

    #[test]
    fn contact_p3_passes_on_dart_free_hosts() {
        let p = plant_coc6(CoC6Profile::A3Plus, 2, 3, 10).unwrap();
        // U = the left triangle: contacts see all of it, but a triangle
        // has no induced P3
        let u = VertexSet::from_iter(p.graph.vertex_count(), [0, 1, 2]);
        match check_contact_p3(&p.graph, &u) {
            ContactP3Outcome::Pass { contacts_checked } => assert!(contacts_checked > 0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn contact_p3_skips_on_dart_hosts() {
        let d = dart();
        let u = VertexSet::from_iter(5, [0, 1]);
        assert!(matches!(
            check_contact_p3(&d, &u),
            ContactP3Outcome::SkippedNotDartFree { .. }
        ));
    }

    #[test]
    fn contact_p3_vacuous_on_dominating_sets() {
        let g = complete(4);
        let u = VertexSet::from_iter(4, [0]);
        assert!(matches!(
            check_contact_p3(&g, &u),
            ContactP3Outcome::SkippedEmptyAnti
        ));
    }

    #[test]
    fn alternation_holds_on_planted_hosts() {
        let p = plant_alternating_antihole(8, 3, 3, 5, 500, false).unwrap();
        match check_antihole_alternation(&p.graph, &p.structure) {
            AlternationOutcome::Pass { contacts_checked } => {
                assert!(contacts_checked >= 3)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn alternation_skips_sabotaged_hosts() {
        let p = plant_alternating_antihole(8, 2, 2, 9, 500, true).unwrap();
        assert!(matches!(
            check_antihole_alternation(&p.graph, &p.structure),
            AlternationOutcome::SkippedNotDartFree { .. }
        ));
    }

    #[test]
    fn classify_contacts_finds_the_case_separators() {
        for (profile, name) in [
            (CoC6Profile::A3Plus, "A3"),
            (CoC6Profile::A2Plus14, "A2"),
            (CoC6Profile::A1Only, "A1"),
        ] {
            let p = plant_coc6(profile, 2, 7, 10).unwrap();
            let labeling = CoC6Labeling {
                left: [0, 1, 2],
                right: [3, 4, 5],
            };
            let c = classify_contacts(&p.graph, &labeling, p.pivot).unwrap();
            for claim in &c.claims {
                assert!(claim.passed, "{name}: claim {} failed", claim.name);
            }
            assert!(c.separator.is_some(), "{name}: no separator");
            assert!(c.separator_verified, "{name}: separator not verified");
            match profile {
                CoC6Profile::A2Plus14 => {
                    assert_eq!(c.separator.unwrap().to_vec(), vec![0, 3]);
                }
                CoC6Profile::A1Only => {
                    assert_eq!(c.separator.unwrap().to_vec(), vec![0]);
                }
                CoC6Profile::A3Plus => {
                    let s = c.separator.unwrap();
                    assert!(VertexSet::from_iter(
                        p.graph.vertex_count(),
                        p.contacts.iter().copied()
                    )
                    .is_subset_of(&s));
                }
            }
        }
    }

    #[test]
    fn classify_rejects_mislabeled_structures() {
        let p = plant_coc6(CoC6Profile::A1Only, 1, 3, 10).unwrap();
        let wrong = CoC6Labeling {
            left: [0, 1, 3],
            right: [2, 4, 5],
        };
        assert_eq!(
            classify_contacts(&p.graph, &wrong, p.pivot).unwrap_err(),
            ClassifyError::MislabeledStructure
        );
    }

    #[test]
    fn growth_reaches_a_module_on_planted_hosts() {
        let p = plant_growth(GrowthBase::AntiHole(6), 2, true, 13, 2_000).unwrap();
        match check_bull_growth(&p.graph, &p.structure, GrowthBase::AntiHole(6), None) {
            GrowthOutcome::Done {
                join_violations,
                terminal,
                ..
            } => {
                assert!(join_violations.is_empty());
                assert_eq!(terminal, GrowthTerminal::Module { verified: true });
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn growth_vacuous_when_nothing_is_far() {
        let p = plant_growth(GrowthBase::AntiHole(6), 1, false, 15, 2_000).unwrap();
        match check_bull_growth(&p.graph, &p.structure, GrowthBase::AntiHole(6), None) {
            GrowthOutcome::Done { terminal, .. } => {
                assert_eq!(terminal, GrowthTerminal::AntiNeighborhoodEmpty);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn growth_outcome_is_choice_independent() {
        let p = plant_growth(GrowthBase::AntiHole(6), 2, true, 21, 2_000).unwrap();
        let deterministic =
            check_bull_growth(&p.graph, &p.structure, GrowthBase::AntiHole(6), None);
        let GrowthOutcome::Done { terminal: t0, .. } = &deterministic else {
            panic!()
        };
        for s in 0..5 {
            let mut rng = gen::rng_for(s);
            match check_bull_growth(&p.graph, &p.structure, GrowthBase::AntiHole(6), Some(&mut rng))
            {
                GrowthOutcome::Done {
                    join_violations,
                    terminal,
                    ..
                } => {
                    assert!(join_violations.is_empty());
                    // the terminal *kind* is invariant under choices
                    assert_eq!(
                        std::mem::discriminant(&terminal),
                        std::mem::discriminant(t0)
                    );
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn growth_skips_hosts_with_bulls() {
        let g = bull();
        let out = check_bull_growth(&g, &[0, 1, 2, 3, 4], GrowthBase::C5, None);
        assert!(matches!(out, GrowthOutcome::SkippedNotBullFree { .. }));
    }
}
