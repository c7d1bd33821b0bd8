//! Seeded inputs shared by the benchmarks.

use idpoly::{generate, random_corpus, FamilySpec, Graph};

/// Fixed seed so benchmark inputs are identical between runs.
pub const SEED: u64 = 0x1d_9017;

/// `count` random graphs on `n` vertices with edge probability one half.
pub fn random_graphs(n: usize, count: usize) -> Vec<Graph> {
    random_corpus(n, 0.5, SEED, count).expect("valid random parameters")
}

pub fn path(n: usize) -> Graph {
    generate(&FamilySpec::Path { n }).expect("paths exist for every n")
}

pub fn cycle(n: usize) -> Graph {
    generate(&FamilySpec::Cycle { n }).expect("n >= 3")
}
