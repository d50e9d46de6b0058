//! Seed-deterministic graph generators: random models, rejection sampling
//! into forbidden-subgraph classes, planted structures for the lemma
//! checks, and composed large instances with designed decompositions.
//!
//! Rejection-sampling densities default to the 0.2..0.4 band for the
//! hole-free classes; denser random graphs almost surely contain darts or
//! bulls. Sampling is biased, which is fine for checking universally
//! quantified structure facts.

use crate::graph::{Graph, WeightedGraph};
use crate::patterns::classes::{self, GraphClass};
use crate::patterns::{self, PatternKind, DEFAULT_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("gave up after {tries} tries (accepted 0 of {tries})")]
    MaxTriesExhausted { tries: usize },
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent-edge model, pairs scanned in ascending order.
pub fn gen_random_with(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("generated pairs are in range")
}

pub fn gen_random(n: usize, p: f64, seed: u64) -> Graph {
    gen_random_with(&mut rng_for(seed), n, p)
}

pub fn gen_weights(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..n).map(|_| rng.random_range(lo..=hi)).collect()
}

/// Rejection-samples until the class detector accepts. Returns the graph
/// and the number of tries spent.
pub fn gen_in_class_with(
    rng: &mut ChaCha8Rng,
    class: GraphClass,
    n: usize,
    p: f64,
    max_tries: usize,
) -> Result<(Graph, usize), GenError> {
    for tries in 1..=max_tries {
        let g = gen_random_with(rng, n, p);
        if classes::in_class(&g, class, DEFAULT_BUDGET)
            .expect("class check within budget at generation sizes")
            .is_ok()
        {
            return Ok((g, tries));
        }
    }
    Err(GenError::MaxTriesExhausted { tries: max_tries })
}

pub fn gen_in_class(
    class: GraphClass,
    n: usize,
    p: f64,
    seed: u64,
    max_tries: usize,
) -> Result<(Graph, usize), GenError> {
    gen_in_class_with(&mut rng_for(seed), class, n, p, max_tries)
}

/// Draws an in-class instance with size and density varied across the
/// class's workable bands, retrying with fresh parameters until one
/// lands. Used to build solver-equivalence corpora.
pub fn corpus_graph(rng: &mut ChaCha8Rng, class: GraphClass, max_n: usize) -> Graph {
    loop {
        let n = rng.random_range(4..=max_n);
        let p = if rng.random_bool(0.7) {
            rng.random_range(0.08..0.35)
        } else {
            rng.random_range(0.35..0.8)
        };
        if let Ok((g, _)) = gen_in_class_with(rng, class, n, p, 3_000) {
            return g;
        }
    }
}

/// Like `corpus_graph` but requires primality (used by the chain-class
/// corpora, which live at higher densities).
pub fn prime_corpus_graph(rng: &mut ChaCha8Rng, class: GraphClass, max_n: usize) -> Graph {
    loop {
        let n = rng.random_range(5..=max_n);
        let p = rng.random_range(0.45..0.85);
        if let Ok((g, _)) = gen_prime_in_class_with(rng, class, n, p, 3_000) {
            return g;
        }
    }
}

/// Like `gen_in_class` but additionally requires primality.
pub fn gen_prime_in_class_with(
    rng: &mut ChaCha8Rng,
    class: GraphClass,
    n: usize,
    p: f64,
    max_tries: usize,
) -> Result<(Graph, usize), GenError> {
    for tries in 1..=max_tries {
        let g = gen_random_with(rng, n, p);
        if crate::modular::is_prime(&g)
            && classes::in_class(&g, class, DEFAULT_BUDGET)
                .expect("class check within budget")
                .is_ok()
        {
            return Ok((g, tries));
        }
    }
    Err(GenError::MaxTriesExhausted { tries: max_tries })
}

/// The anti-hole on `k` vertices in its canonical labeling: co-edges are
/// exactly the consecutive pairs mod `k`.
pub fn antihole(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            let consecutive = v == u + 1 || (u == 0 && v == k - 1);
            if !consecutive {
                edges.push((u, v));
            }
        }
    }
    Graph::build(k, &edges).unwrap()
}

/// Odd-indexed side of an anti-hole in 1-based speak (`v1,v3,...`), i.e.
/// 0-based even positions.
pub fn antihole_side(k: usize, odd_side: bool) -> Vec<usize> {
    (0..k)
        .filter(|&i| if odd_side { i % 2 == 0 } else { i % 2 == 1 })
        .collect()
}

/// A planted instance: the host graph, the planted base structure in
/// canonical order, the contact ids, and a far pivot vertex inside the
/// base's anti-neighborhood.
#[derive(Debug, Clone)]
pub struct Planted {
    pub graph: Graph,
    pub structure: Vec<usize>,
    pub contacts: Vec<usize>,
    pub pivot: usize,
    pub tries: usize,
}

/// Plants a `co-C_k` (k even) whose contacts each see exactly one
/// alternating side, plus a far component every contact touches. The host
/// is rejection-audited dart-free. When `sabotage` is set one contact
/// gets a non-alternating neighborhood instead, which forces a dart into
/// the host (negative control).
pub fn plant_alternating_antihole(
    k: usize,
    contacts: usize,
    component: usize,
    seed: u64,
    max_tries: usize,
    sabotage: bool,
) -> Result<Planted, GenError> {
    assert!(k >= 6 && k.is_multiple_of(2) && contacts >= 1 && component >= 1);
    let mut rng = rng_for(seed);
    let base = antihole(k);
    let n = k + contacts + component;
    for tries in 1..=max_tries {
        let mut edges: Vec<(usize, usize)> = base.edges();
        // contacts, each joined to one alternating side; same-side
        // contacts must be pairwise adjacent to avoid darts
        let sides: Vec<bool> = (0..contacts).map(|_| rng.random_bool(0.5)).collect();
        for (ci, &odd) in sides.iter().enumerate() {
            let x = k + ci;
            if sabotage && ci == 0 {
                // sees one side plus one extra vertex: never dart-free
                for h in antihole_side(k, odd) {
                    edges.push((x, h));
                }
                let extra = antihole_side(k, !odd)[0];
                edges.push((x, extra));
            } else {
                for h in antihole_side(k, odd) {
                    edges.push((x, h));
                }
            }
        }
        for a in 0..contacts {
            for b in a + 1..contacts {
                if sides[a] == sides[b] || rng.random_bool(0.5) {
                    edges.push((k + a, k + b));
                }
            }
        }
        // far component: a random tree so it is connected, plus each
        // contact attached to at least one of its vertices
        let comp0 = k + contacts;
        for i in 1..component {
            let parent = rng.random_range(0..i);
            edges.push((comp0 + parent, comp0 + i));
        }
        for ci in 0..contacts {
            let q = comp0 + rng.random_range(0..component);
            edges.push((k + ci, q));
        }
        let g = Graph::build(n, &edges).unwrap();
        let dart_free = patterns::find_induced(&g, PatternKind::Dart).is_none();
        if dart_free != sabotage {
            return Ok(Planted {
                graph: g,
                structure: (0..k).collect(),
                contacts: (k..k + contacts).collect(),
                pivot: comp0,
                tries,
            });
        }
    }
    Err(GenError::MaxTriesExhausted { tries: max_tries })
}

/// Contact profiles for the planted prism (`co-C6`) hosts. Left clique is
/// `0,1,2`, right clique `3,4,5`, matching edges `(0,3),(1,4),(2,5)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoC6Profile {
    /// contacts joined to the whole left triangle
    A3Plus,
    /// contacts seeing exactly the matching pair {v1, v4}
    A2Plus14,
    /// contacts seeing exactly v1
    A1Only,
}

pub fn coc6() -> Graph {
    Graph::build(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 5),
            (4, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

/// Plants a labeled co-C6 with contacts of the requested profile and a
/// two-vertex far component; audited (hole,dart)-free. The recipe is
/// deterministic, so the seed only names the instance.
pub fn plant_coc6(
    profile: CoC6Profile,
    contacts: usize,
    _seed: u64,
    _max_tries: usize,
) -> Result<Planted, GenError> {
    assert!(contacts >= 1);
    let n = 6 + contacts + 2;
    let q0 = 6 + contacts;
    let q1 = q0 + 1;
    let mut edges: Vec<(usize, usize)> = coc6().edges();
    let targets: Vec<usize> = match profile {
        CoC6Profile::A3Plus => vec![0, 1, 2],
        CoC6Profile::A2Plus14 => vec![0, 3],
        CoC6Profile::A1Only => vec![0],
    };
    for ci in 0..contacts {
        let x = 6 + ci;
        for &t in &targets {
            edges.push((x, t));
        }
        // every contact sees the first far vertex
        edges.push((x, q0));
    }
    // same-profile contacts form a clique
    for a in 0..contacts {
        for b in a + 1..contacts {
            edges.push((6 + a, 6 + b));
        }
    }
    edges.push((q0, q1));
    let g = Graph::build(n, &edges).unwrap();
    let ok = classes::in_class(&g, GraphClass::HoleDartFree, DEFAULT_BUDGET)
        .expect("small host")
        .is_ok();
    if ok {
        Ok(Planted {
            graph: g,
            structure: (0..6).collect(),
            contacts: (6..6 + contacts).collect(),
            pivot: q0,
            tries: 1,
        })
    } else {
        Err(GenError::MaxTriesExhausted { tries: 1 })
    }
}

/// Base structures for the growth-sequence corpora.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthBase {
    AntiHole(usize),
    C5,
    House,
}

impl GrowthBase {
    pub fn graph(self) -> Graph {
        match self {
            GrowthBase::AntiHole(k) => antihole(k),
            GrowthBase::C5 => crate::graph::families::cycle(5),
            GrowthBase::House => Graph::build(
                5,
                &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (2, 4)],
            )
            .unwrap(),
        }
    }

    fn required_class(self) -> GraphClass {
        match self {
            GrowthBase::AntiHole(_) => GraphClass::BullFree,
            GrowthBase::C5 | GrowthBase::House => GraphClass::P5BullFree,
        }
    }
}

/// Plants a growth base, `stages` distinguishing vertices (each copying a
/// random base-edge endpoint's closed neighborhood minus the other
/// endpoint), a vertex joined to everything grown, and optionally a far
/// pivot hanging off the join vertex. Audited bull-free (and P5-free for
/// the C5/house bases).
///
/// C5 and house bases admit no staged growth here: with a nonempty far
/// side, every partial seer of those bases completes a P5 or a bull, so
/// `stages` is forced to zero for them.
pub fn plant_growth(
    base: GrowthBase,
    stages: usize,
    with_far_vertex: bool,
    seed: u64,
    max_tries: usize,
) -> Result<Planted, GenError> {
    let stages = match base {
        GrowthBase::AntiHole(_) => stages,
        GrowthBase::C5 | GrowthBase::House => 0,
    };
    let mut rng = rng_for(seed);
    let bg = base.graph();
    let k = bg.vertex_count();
    let n = k + stages + 1 + usize::from(with_far_vertex);
    let join_vertex = k + stages;
    for tries in 1..=max_tries {
        let mut edges: Vec<(usize, usize)> = bg.edges();
        let mut ok = true;
        for si in 0..stages {
            let z = k + si;
            let grown = Graph::build(k + si, &edges).unwrap();
            let mut candidates: Vec<(usize, usize)> = grown
                .edges()
                .into_iter()
                .flat_map(|(a, b)| [(a, b), (b, a)])
                .collect();
            // shuffle, then take the first distinguisher placement that
            // stays bull-free on the grown prefix
            for i in (1..candidates.len()).rev() {
                candidates.swap(i, rng.random_range(0..=i));
            }
            let mut placed = false;
            for (x, y) in candidates {
                // z copies x's closed neighborhood minus y: sees x,
                // misses y, so it distinguishes the edge xy
                let mut attempt = edges.clone();
                attempt.push((z, x));
                for w in 0..k + si {
                    if w != x && w != y && grown.has_edge(x, w) {
                        attempt.push((z, w));
                    }
                }
                let candidate = Graph::build(k + si + 1, &attempt).unwrap();
                if patterns::find_induced(&candidate, PatternKind::Bull).is_none() {
                    edges = attempt;
                    placed = true;
                    break;
                }
            }
            if !placed {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        for w in 0..k + stages {
            edges.push((join_vertex, w));
        }
        if with_far_vertex {
            edges.push((join_vertex, join_vertex + 1));
        }
        let g = Graph::build(n, &edges).unwrap();
        if classes::in_class(&g, base.required_class(), DEFAULT_BUDGET)
            .expect("small host")
            .is_ok()
        {
            return Ok(Planted {
                graph: g,
                structure: (0..k).collect(),
                contacts: (k..k + stages).collect(),
                pivot: if with_far_vertex { n - 1 } else { join_vertex },
                tries,
            });
        }
    }
    Err(GenError::MaxTriesExhausted { tries: max_tries })
}

/// A random bipartite chain graph (nested neighborhoods); hole-free and
/// triangle-free, hence both dart-free and bull-free.
pub fn gen_chain_piece(rng: &mut ChaCha8Rng, a: usize, b: usize) -> Graph {
    let mut lens: Vec<usize> = (0..a).map(|_| rng.random_range(0..=b)).collect();
    lens.sort_unstable();
    let mut edges = Vec::new();
    for (i, &len) in lens.iter().enumerate() {
        for y in 0..len {
            edges.push((i, a + y));
        }
    }
    Graph::build(a + b, &edges).unwrap()
}

/// A connected chordal bipartite piece (bipartite and hole-free). Dense
/// chain graphs (every neighborhood of size two or more) and bicliques
/// have no clique cutset, so those piece shapes become large atoms;
/// sparse rejection-sampled pieces decompose further.
fn gen_chordal_bipartite_piece(rng: &mut ChaCha8Rng, a: usize, b: usize) -> Graph {
    match rng.random_range(0..3u8) {
        0 => {
            // dense chain: nested neighborhoods, all of size >= 2
            let mut lens: Vec<usize> = (0..a).map(|_| rng.random_range(2.min(b)..=b)).collect();
            lens.sort_unstable();
            lens[a - 1] = b;
            let mut edges = Vec::new();
            for (i, &len) in lens.iter().enumerate() {
                for y in 0..len {
                    edges.push((i, a + y));
                }
            }
            Graph::build(a + b, &edges).unwrap()
        }
        1 => crate::graph::families::complete_bipartite(a.clamp(2, 5), b.clamp(2, 6)),
        _ => {
            for _ in 0..2_000 {
                let p = rng.random_range(0.15..0.3);
                let mut edges = Vec::new();
                for x in 0..a {
                    for y in 0..b {
                        if rng.random_bool(p) {
                            edges.push((x, a + y));
                        }
                    }
                }
                let g = Graph::build(a + b, &edges).unwrap();
                if g.is_connected()
                    && patterns::find_hole(&g, 5, crate::patterns::CycleParity::Any, DEFAULT_BUDGET)
                        .unwrap()
                        .is_none()
                {
                    return g;
                }
            }
            crate::graph::families::complete_bipartite(a.max(1), b.max(1))
        }
    }
}

/// Glues triangle-free hole-free pieces at cut vertices, then substitutes
/// clique or independent-set modules into some vertices. Hole-free and
/// triangle-free quotients keep the result (hole,dart,bull)-free while
/// giving the decompositions real work. Used for the large benchmark and
/// smoke instances of the dart pipeline.
pub fn compose_glued(seed: u64, pieces: usize, piece_n: usize, target_n: usize) -> WeightedGraph {
    let mut rng = rng_for(seed);
    // backbone: connected chordal bipartite pieces glued at cut vertices
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 0usize;
    let mut all_vertices: Vec<usize> = Vec::new();
    for _ in 0..pieces {
        let a = (piece_n / 2 + rng.random_range(0..=piece_n / 4)).max(1);
        let b = piece_n.saturating_sub(a).max(1);
        let piece = gen_chordal_bipartite_piece(&mut rng, a, b);
        let pn = piece.vertex_count();
        let glue = rng.random_range(0..pn);
        if n == 0 {
            for (u, v) in piece.edges() {
                edges.push((u, v));
            }
            all_vertices.extend(0..pn);
            n = pn;
        } else {
            let cut = all_vertices[rng.random_range(0..all_vertices.len())];
            let offset = n;
            let remap = |v: usize| {
                if v == glue {
                    cut
                } else if v < glue {
                    offset + v
                } else {
                    offset + v - 1
                }
            };
            for (u, v) in piece.edges() {
                edges.push((remap(u), remap(v)));
            }
            all_vertices.extend(offset..offset + pn - 1);
            n += pn - 1;
        }
    }
    let backbone = Graph::build(n, &edges).unwrap();

    // substitute modules until the target size is reached
    let mut module_sizes = vec![1usize; n];
    let mut module_clique = vec![false; n];
    let mut total = n;
    while total < target_n {
        let v = rng.random_range(0..n);
        if module_sizes[v] == 1 {
            module_clique[v] = rng.random_bool(0.5);
        }
        module_sizes[v] += 1;
        total += 1;
    }
    let offsets: Vec<usize> = module_sizes
        .iter()
        .scan(0usize, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let mut big_edges = Vec::new();
    for (u, v) in backbone.edges() {
        for i in 0..module_sizes[u] {
            for j in 0..module_sizes[v] {
                big_edges.push((offsets[u] + i, offsets[v] + j));
            }
        }
    }
    for v in 0..n {
        if module_clique[v] {
            for i in 0..module_sizes[v] {
                for j in i + 1..module_sizes[v] {
                    big_edges.push((offsets[v] + i, offsets[v] + j));
                }
            }
        }
    }
    let g = Graph::build(total, &big_edges).unwrap();
    let weights = gen_weights(&mut rng, total, 0, 100);
    WeightedGraph::new(g, weights)
}

/// Builds a (hole,bull)-free instance by recursive substitution: small
/// rejection-sampled (hole,bull)-free quotients whose vertices expand into
/// further composed graphs, cliques, independent sets, or single vertices.
/// Holes never cross modules and bulls never straddle them, so the
/// composition stays in class; prime quotients stay small.
pub fn compose_substitution(seed: u64, target_n: usize) -> WeightedGraph {
    let mut rng = rng_for(seed);
    let g = compose_substitution_level(&mut rng, target_n, 2);
    let n = g.vertex_count();
    let weights = gen_weights(&mut rng, n, 0, 100);
    WeightedGraph::new(g, weights)
}

fn compose_substitution_level(rng: &mut ChaCha8Rng, target_n: usize, depth: usize) -> Graph {
    if target_n <= 5 || depth == 0 {
        return if rng.random_bool(0.5) {
            crate::graph::families::complete(target_n.max(1))
        } else {
            crate::graph::families::empty(target_n.max(1))
        };
    }
    let qn = rng.random_range(5..=14.min(target_n));
    // prime quotients make the anti-neighborhood reduction do real work;
    // fall back to any in-class quotient when primality is too rare
    let quotient = match gen_prime_in_class_with(rng, GraphClass::HoleBullFree, qn, 0.3, 3_000) {
        Ok((q, _)) => q,
        Err(_) => {
            gen_in_class_with(rng, GraphClass::HoleBullFree, qn, 0.3, 10_000)
                .expect("small hole- and bull-free quotients are plentiful")
                .0
        }
    };
    // split the size budget across the quotient vertices
    let mut sizes = vec![1usize; qn];
    let mut rest = target_n.saturating_sub(qn);
    while rest > 0 {
        let v = rng.random_range(0..qn);
        let grab = rng.random_range(1..=rest.min(target_n / qn + 1));
        sizes[v] += grab;
        rest -= grab;
    }
    let parts: Vec<Graph> = sizes
        .iter()
        .map(|&s| {
            if s == 1 {
                crate::graph::families::empty(1)
            } else if s <= 4 && rng.random_bool(0.5) {
                if rng.random_bool(0.5) {
                    crate::graph::families::complete(s)
                } else {
                    crate::graph::families::empty(s)
                }
            } else {
                compose_substitution_level(rng, s, depth - 1)
            }
        })
        .collect();
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0usize, |acc, p| {
            let o = *acc;
            *acc += p.vertex_count();
            Some(o)
        })
        .collect();
    let total: usize = parts.iter().map(|p| p.vertex_count()).sum();
    let mut edges = Vec::new();
    for (a, b) in quotient.edges() {
        for i in 0..parts[a].vertex_count() {
            for j in 0..parts[b].vertex_count() {
                edges.push((offsets[a] + i, offsets[b] + j));
            }
        }
    }
    for (v, part) in parts.iter().enumerate() {
        for (x, y) in part.edges() {
            edges.push((offsets[v] + x, offsets[v] + y));
        }
    }
    Graph::build(total, &edges).unwrap()
}
