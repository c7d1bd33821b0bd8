//! The five routes to `id(G, x)` plus the independence polynomial and set
//! enumerators.

mod brute;
mod independence;
mod recursive;
mod subset_sums;

pub use brute::{enumerate_mids, id_brute_force, is_independent_dominating};
pub use independence::independence_polynomial;
pub use recursive::{id_recursive, id_recursive_with, PivotStrategy, RecursiveRun};
pub use subset_sums::{
    enumerate_essential_sets, id_coefficient_formula, id_essential_formula,
    id_inclusion_exclusion, EssentialFamily,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

/// Size limits for the exponential algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Brute force and the set enumerators.
    pub brute_force: usize,
    /// The `2^n` alternating sums: inclusion–exclusion, coefficient and
    /// essential-set formulas.
    pub subset_sum: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            brute_force: 26,
            subset_sum: 24,
        }
    }
}

/// Hard ceiling for every bitmask algorithm.
pub const MASK_CEILING: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    BruteForce,
    Recursive,
    InclusionExclusion,
    Essential,
    Coefficient,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::BruteForce,
        Algorithm::Recursive,
        Algorithm::InclusionExclusion,
        Algorithm::Essential,
        Algorithm::Coefficient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::BruteForce => "brute",
            Algorithm::Recursive => "recursive",
            Algorithm::InclusionExclusion => "inclusion-exclusion",
            Algorithm::Essential => "essential",
            Algorithm::Coefficient => "coefficient",
        }
    }

    /// Whether the algorithm accepts graphs carrying loops.
    pub fn accepts_loops(self) -> bool {
        matches!(self, Algorithm::BruteForce | Algorithm::Recursive)
    }

    /// Vertex limit under `limits`, `None` if unbounded.
    pub fn size_limit(self, limits: &Limits) -> Option<usize> {
        match self {
            Algorithm::BruteForce => Some(limits.brute_force),
            Algorithm::Recursive => None,
            _ => Some(limits.subset_sum),
        }
    }

    pub fn run(self, g: &Graph, limits: &Limits) -> Result<Polynomial> {
        match self {
            Algorithm::BruteForce => id_brute_force(g, limits),
            Algorithm::Recursive => Ok(id_recursive(g)),
            Algorithm::InclusionExclusion => id_inclusion_exclusion(g, limits),
            Algorithm::Essential => id_essential_formula(g, limits),
            Algorithm::Coefficient => id_coefficient_formula(g, limits),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .or(match s {
                "brute-force" => Some(Algorithm::BruteForce),
                "ie" => Some(Algorithm::InclusionExclusion),
                _ => None,
            })
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))
    }
}

pub(crate) fn check_size(algorithm: &'static str, g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(MASK_CEILING);
    if g.n() > limit {
        Err(Error::SizeBound {
            algorithm,
            n: g.n(),
            limit,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn check_loop_free(algorithm: &'static str, g: &Graph) -> Result<()> {
    if g.is_loop_free() {
        Ok(())
    } else {
        Err(Error::LoopsPresent(algorithm))
    }
}

const CHUNK_BITS: usize = 14;

/// Folds `visit` over every mask in `0..2^n`, in increasing order within each
/// chunk, then merges chunk results with `merge`. Callers only merge with
/// exact integer addition, so the result does not depend on the split.
pub(crate) fn fold_subsets<T, F, M>(n: usize, init: impl Fn() -> T + Sync, visit: F, merge: M) -> T
where
    T: Send,
    F: Fn(&mut T, u64) + Sync,
    M: Fn(T, T) -> T + Sync,
{
    debug_assert!(n <= MASK_CEILING);
    let run = |lo: u64, hi: u64| {
        let mut acc = init();
        for mask in lo..hi {
            visit(&mut acc, mask);
        }
        acc
    };
    if n <= CHUNK_BITS {
        return run(0, 1u64 << n);
    }
    let chunks = 1u64 << (n - CHUNK_BITS);
    (0..chunks)
        .into_par_iter()
        .map(|c| run(c << CHUNK_BITS, (c + 1) << CHUNK_BITS))
        .reduce(&init, &merge)
}

pub(crate) fn add_vectors<T: Copy + std::ops::AddAssign>(mut a: Vec<T>, b: Vec<T>) -> Vec<T> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}
