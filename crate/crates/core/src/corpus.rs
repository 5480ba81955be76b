//! Seeded graph corpora for the property suites.
//!
//! A corpus opens with fixed transmission-regular graphs and a few named
//! families, then fills up with random connected graphs. Everything is drawn
//! from a `ChaCha8Rng` seeded by the caller, so a seed fixes the corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::family::FamilySpec;
use crate::graph::Graph;

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub label: String,
    pub graph: Graph,
}

/// Random spanning tree on a shuffled vertex order plus each remaining pair
/// independently with probability `p`.
pub fn random_connected(rng: &mut CorpusRng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::empty(n).expect("order is positive");
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g = g.add_edge(order[i], order[j]).expect("tree edge is new");
    }
    let extra: Vec<(usize, usize)> = g.non_edges().collect();
    for (u, v) in extra {
        if rng.gen_bool(p) {
            g = g.add_edge(u, v).expect("non-edge");
        }
    }
    g
}

/// The 3-cube, vertex-transitive with every transmission 12.
fn cube() -> Graph {
    let edges = (0..8usize)
        .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
        .filter(|(u, v)| u < v);
    Graph::from_edges(8, edges).expect("cube edges are simple")
}

/// Transmission-regular graphs: complete graphs, cycles, cocktail-party
/// graphs, balanced complete bipartite graphs, the prism and the 3-cube.
pub fn transmission_regular() -> Vec<CorpusEntry> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    specs.extend((2..=8).map(FamilySpec::Complete));
    specs.extend((3..=14).map(FamilySpec::Cycle));
    specs.extend((2..=6).map(|a| FamilySpec::KTilde(2 * a)));
    specs.extend((2..=6).map(|a| {
        let side = FamilySpec::complement_of(FamilySpec::Complete(a));
        FamilySpec::join_of(side.clone(), side)
    }));
    specs.push(FamilySpec::complement_of(FamilySpec::Cycle(6)));
    let mut out: Vec<CorpusEntry> = specs
        .into_iter()
        .map(|s| CorpusEntry {
            label: s.to_string(),
            graph: s.construct().expect("fixed family parameters are valid"),
        })
        .collect();
    out.push(CorpusEntry {
        label: "cube:3".into(),
        graph: cube(),
    });
    out
}

/// Named families that are not transmission regular.
pub fn named_families() -> Vec<CorpusEntry> {
    let mut specs = vec![
        FamilySpec::Path(6),
        FamilySpec::Star(7),
        FamilySpec::ATree(8),
        FamilySpec::BTree(9),
        FamilySpec::DoubleStar { n: 8, a: 2 },
        FamilySpec::BhGraph(12),
        FamilySpec::BhGraph(30),
    ];
    for (n, c) in [(9, 2), (10, 3), (11, 4), (12, 5), (7, 1)] {
        specs.push(FamilySpec::Pnc { n, c });
    }
    specs
        .into_iter()
        .map(|s| CorpusEntry {
            label: s.to_string(),
            graph: s.construct().expect("fixed family parameters are valid"),
        })
        .collect()
}

/// `size` graphs of order at most 14: the fixed entries first, then random
/// connected graphs with `2 ≤ n ≤ 12` and edge density drawn from `[0.05, 0.9]`.
pub fn corpus(seed: u64, size: usize) -> Vec<CorpusEntry> {
    let mut out = transmission_regular();
    out.extend(named_families());
    out.truncate(size);
    let mut r = rng(seed);
    let mut i = 0;
    while out.len() < size {
        let n = r.gen_range(2..=12);
        let p = r.gen_range(0.05..0.9);
        out.push(CorpusEntry {
            label: format!("random:{seed}:{i}"),
            graph: random_connected(&mut r, n, p),
        });
        i += 1;
    }
    out
}

/// `count` pairs of a random connected graph with `n ≤ max_n` and one of its
/// non-edges. Complete graphs are redrawn.
pub fn graphs_with_non_edge(seed: u64, count: usize, max_n: usize) -> Vec<(Graph, (usize, usize))> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = r.gen_range(3..=max_n.max(3));
        let p = r.gen_range(0.0..0.8);
        let g = random_connected(&mut r, n, p);
        let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
        if let Some(&e) = non_edges.choose(&mut r) {
            out.push((g, e));
        }
    }
    out
}
