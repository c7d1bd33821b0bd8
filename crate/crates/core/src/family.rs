//! Parametric graph families and the seeded random generator.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt;

/// A parametric graph family member.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FamilySpec {
    /// `E_n`, no edges.
    Edgeless { n: usize },
    /// `K_n`.
    Complete { n: usize },
    /// `K_{p,q}` with parts `0..p` and `p..p+q`.
    CompleteBipartite { p: usize, q: usize },
    /// `P_n`: `0 - 1 - .. - (n-1)`.
    Path { n: usize },
    /// `C_n`, `n >= 3`.
    Cycle { n: usize },
    /// `K_{1,n-1}` with center `0`, `n >= 1`.
    Star { n: usize },
    /// Each of the `n(n-1)/2` pairs is an edge independently with probability
    /// `prob`, decided by [`CounterRng`].
    Random { n: usize, prob: f64, seed: u64 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Cycle { n } if n < 3 => Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            ))),
            FamilySpec::Star { n: 0 } => Err(Error::InvalidParameter(
                "star needs at least 1 vertex".into(),
            )),
            FamilySpec::Random { prob, .. } if !(0.0..=1.0).contains(&prob) => Err(
                Error::InvalidParameter(format!("edge probability {prob} outside [0, 1]")),
            ),
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Edgeless { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n }
            | FamilySpec::Random { n, .. } => n,
            FamilySpec::CompleteBipartite { p, q } => p + q,
        }
    }

    /// Edges in generation order. The cycle closes with `{0, n-1}` last.
    pub fn edge_sequence(&self) -> Result<Vec<(usize, usize)>> {
        self.validate()?;
        let edges = match *self {
            FamilySpec::Edgeless { .. } => Vec::new(),
            FamilySpec::Complete { n } => all_pairs(n).collect(),
            FamilySpec::CompleteBipartite { p, q } => (0..p)
                .flat_map(|u| (p..p + q).map(move |v| (u, v)))
                .collect(),
            FamilySpec::Path { n } => (1..n).map(|i| (i - 1, i)).collect(),
            FamilySpec::Cycle { n } => {
                let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                e.push((0, n - 1));
                e
            }
            FamilySpec::Star { n } => (1..n).map(|i| (0, i)).collect(),
            FamilySpec::Random { n, prob, seed } => {
                let rng = CounterRng::new(seed);
                all_pairs(n)
                    .enumerate()
                    .filter(|&(i, _)| rng.unit(i as u64) < prob)
                    .map(|(_, e)| e)
                    .collect()
            }
        };
        Ok(edges)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Edgeless { n } => write!(f, "E_{n}"),
            FamilySpec::Complete { n } => write!(f, "K_{n}"),
            FamilySpec::CompleteBipartite { p, q } => write!(f, "K_{{{p},{q}}}"),
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Star { n } => write!(f, "S_{n}"),
            FamilySpec::Random { n, prob, seed } => write!(f, "G({n},{prob};seed={seed})"),
        }
    }
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let edges = spec.edge_sequence()?;
    Graph::from_edges(spec.vertex_count(), edges)
}

/// Stateless counter-based generator: word `i` of stream `seed` is
///
/// ```text
/// z = seed + (i + 1) * 0x9E37_79B9_7F4A_7C15        (wrapping)
/// z = (z ^ (z >> 30)) * 0xBF58_476D_1CE4_E5B9       (wrapping)
/// z = (z ^ (z >> 27)) * 0x94D0_49BB_1331_11EB       (wrapping)
/// word = z ^ (z >> 31)
/// ```
///
/// i.e. the SplitMix64 output for counter `i + 1`. [`CounterRng::unit`] maps a
/// word to `(word >> 11) * 2^-53`, which is exact in `f64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CounterRng {
    seed: u64,
}

impl CounterRng {
    pub const fn new(seed: u64) -> Self {
        CounterRng { seed }
    }

    pub fn word(&self, i: u64) -> u64 {
        let mut z = self
            .seed
            .wrapping_add(i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of resolution.
    pub fn unit(&self, i: u64) -> f64 {
        (self.word(i) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// `count` random graphs on `n` vertices; graph `k` uses seed `word(k)` of
/// the stream `seed`.
pub fn random_corpus(n: usize, prob: f64, seed: u64, count: usize) -> Result<Vec<Graph>> {
    let rng = CounterRng::new(seed);
    (0..count)
        .map(|k| {
            generate(&FamilySpec::Random {
                n,
                prob,
                seed: rng.word(k as u64),
            })
        })
        .collect()
}

/// Every labeled simple graph on `n` vertices, paired with its edge mask:
/// bit `i` of the mask selects the `i`-th vertex pair in lexicographic order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = (u64, Graph)> {
    let pairs: Vec<(usize, usize)> = all_pairs(n).collect();
    assert!(pairs.len() < 64, "too many vertices to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        (mask, Graph::from_edges(n, edges).expect("distinct pairs"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_graph_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| labeled_graphs(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 8, 64, 1024]);
        let (mask, g) = labeled_graphs(3).nth(5).unwrap();
        assert_eq!(mask, 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn splitmix_reference_values() {
        // SplitMix64 seeded with 0: first outputs of the reference generator.
        let rng = CounterRng::new(0);
        assert_eq!(rng.word(0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.word(1), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn deterministic_families() {
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        assert_eq!(p3, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());

        let k23 = generate(&FamilySpec::CompleteBipartite { p: 2, q: 3 }).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!((0..2).all(|v| k23.degree(v) == 3));
        assert!((2..5).all(|v| k23.degree(v) == 2));

        assert_eq!(generate(&FamilySpec::Complete { n: 5 }).unwrap().edge_count(), 10);
        assert_eq!(generate(&FamilySpec::Star { n: 4 }).unwrap().degree(0), 3);
        assert_eq!(generate(&FamilySpec::Edgeless { n: 3 }).unwrap(), Graph::empty(3));
        assert_eq!(
            FamilySpec::Cycle { n: 3 }.edge_sequence().unwrap(),
            vec![(0, 1), (1, 2), (0, 2)]
        );
    }

    #[test]
    fn random_is_reproducible() {
        let spec = FamilySpec::Random { n: 5, prob: 0.5, seed: 7 };
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let full = FamilySpec::Random { n: 6, prob: 1.0, seed: 3 };
        assert_eq!(generate(&full).unwrap().edge_count(), 15);
        let none = FamilySpec::Random { n: 6, prob: 0.0, seed: 3 };
        assert_eq!(generate(&none).unwrap().edge_count(), 0);
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&FamilySpec::Star { n: 0 }).is_err());
        assert!(generate(&FamilySpec::Random { n: 3, prob: 1.5, seed: 0 }).is_err());
        assert!(generate(&FamilySpec::Random { n: 3, prob: f64::NAN, seed: 0 }).is_err());
    }
}
