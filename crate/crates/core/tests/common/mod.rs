#![allow(dead_code)]

pub mod golden;

use pathset::{minimize, Alphabet, Edge, PathSet, Presentation};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn alphabet(k: usize) -> Alphabet {
    Alphabet::new((0..k).map(|i| i.to_string())).unwrap()
}

fn assemble(m: usize, k: usize, edges: Vec<Edge>) -> Presentation {
    let vertices = (0..m).map(|i| format!("u{i}")).collect();
    let mut edges = edges;
    edges.sort();
    edges.dedup();
    Presentation::new(alphabet(k), vertices, edges, 0).unwrap()
}

/// A right-resolving presentation with `1..=max_vertices` vertices over
/// `1..=max_alphabet` symbols.
pub fn random_deterministic(rng: &mut ChaCha8Rng, max_vertices: usize, max_alphabet: usize) -> Presentation {
    let m = rng.gen_range(1..=max_vertices);
    let k = rng.gen_range(1..=max_alphabet);
    let density = rng.gen_range(0.4..0.9);
    let mut edges = Vec::new();
    for u in 0..m {
        for a in 0..k {
            if rng.gen_bool(density) {
                edges.push(Edge::new(u, pathset::Symbol::new(a), rng.gen_range(0..m)));
            }
        }
    }
    assemble(m, k, edges)
}

/// Like [`random_deterministic`] but with extra parallel same-label edges.
pub fn random_nondeterministic(rng: &mut ChaCha8Rng, max_vertices: usize, max_alphabet: usize) -> Presentation {
    let base = random_deterministic(rng, max_vertices, max_alphabet);
    let m = base.num_vertices();
    let mut edges = base.edges().to_vec();
    for e in base.edges() {
        if rng.gen_bool(0.4) {
            edges.push(Edge::new(e.source, e.symbol, rng.gen_range(0..m)));
        }
    }
    assemble(m, base.alphabet().len(), edges)
}

/// A nonempty canonical path set from a right-resolving presentation, so
/// its minimal presentation has at most `max_vertices` vertices.
pub fn random_pathset(rng: &mut ChaCha8Rng, max_vertices: usize, max_alphabet: usize) -> PathSet {
    loop {
        let p = minimize(&random_deterministic(rng, max_vertices, max_alphabet));
        if !p.is_empty() {
            return p;
        }
    }
}

pub fn random_pathsets(seed: u64, count: usize, max_vertices: usize, max_alphabet: usize) -> Vec<PathSet> {
    let mut r = rng(seed);
    (0..count).map(|_| random_pathset(&mut r, max_vertices, max_alphabet)).collect()
}

/// Proptest strategy for arbitrary (possibly nondeterministic, unpruned)
/// presentations.
pub fn arb_presentation(max_vertices: usize, max_alphabet: usize) -> impl Strategy<Value = Presentation> {
    (1..=max_vertices, 1..=max_alphabet).prop_flat_map(|(m, k)| {
        proptest::collection::vec((0..m, 0..k, 0..m), 0..=(2 * m * k)).prop_map(move |triples| {
            let edges = triples
                .into_iter()
                .map(|(u, a, v)| Edge::new(u, pathset::Symbol::new(a), v))
                .collect();
            assemble(m, k, edges)
        })
    })
}

/// Proptest strategy for nonempty canonical path sets of at most
/// `max_vertices` vertices.
pub fn arb_pathset(max_vertices: usize, max_alphabet: usize) -> impl Strategy<Value = PathSet> {
    (1..=max_vertices, 1..=max_alphabet)
        .prop_flat_map(|(m, k)| {
            proptest::collection::vec(proptest::option::weighted(0.7, 0..m), m * k).prop_map(move |targets| {
                let edges = targets
                    .iter()
                    .enumerate()
                    .filter_map(|(i, t)| t.map(|v| Edge::new(i / k, pathset::Symbol::new(i % k), v)))
                    .collect();
                minimize(&assemble(m, k, edges))
            })
        })
        .prop_filter("nonempty", |p| !p.is_empty())
}
