//! Alternating sums over all `2^n` vertex subsets.
//!
//! * inclusion–exclusion: `id(G) = Σ_W (−1)^|W| (1 − x)^iso(G[W])`
//! * coefficients: `a_k = Σ_{W: iso(G[W]) ≥ k} (−1)^(|W|+k) C(iso(G[W]), k)`
//! * essential sets: `id(G) = (−1)^n Σ_{U essential} (−1)^|U| ((1 − x)^f(U) − 1)`
//!   with `f(U) = |{v ∉ U : N(v) ⊆ U}|`
//!
//! Per-subset contributions are accumulated in fixed-width integers; with
//! `n <= 63` every partial sum is bounded by `2^n · C(n, n/2)`, which fits in
//! `i128`.

use super::{add_vectors, check_loop_free, check_size, fold_subsets, Limits};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::vertex_set::VertexSet;
use num_bigint::BigInt;

#[inline]
fn sign(mask: u64) -> i64 {
    if mask.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `iso(G[W])` on bitmasks.
#[inline]
fn iso_mask(adj: &[u64], w: u64) -> usize {
    let mut count = 0;
    let mut rest = w;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & w == 0 {
            count += 1;
        }
    }
    count
}

/// `f(U)`: vertices outside `U` whose open neighborhood lies inside `U`.
#[inline]
fn private_count(adj: &[u64], n: usize, u: u64) -> usize {
    (0..n)
        .filter(|&v| u >> v & 1 == 0 && adj[v] & !u == 0)
        .count()
}

fn simple_masks(algorithm: &'static str, g: &Graph, limit: usize) -> Result<Vec<u64>> {
    check_loop_free(algorithm, g)?;
    check_size(algorithm, g, limit)?;
    Ok(g.masks().expect("size checked").0)
}

/// Weighted sum `Σ_m h[m] · (1 − x)^m`.
fn combine_powers(hist: &[i64], minus_one: bool) -> Polynomial {
    hist.iter()
        .enumerate()
        .filter(|(_, &h)| h != 0)
        .map(|(m, &h)| {
            let mut term = Polynomial::one_minus_x_pow(m);
            if minus_one {
                term = term - Polynomial::one();
            }
            term.scale(&BigInt::from(h))
        })
        .sum()
}

pub fn id_inclusion_exclusion(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    let adj = simple_masks("inclusion-exclusion", g, limits.subset_sum)?;
    let n = g.n();
    // hist[m] = Σ over W with iso(G[W]) = m of (−1)^|W|
    let hist = fold_subsets(
        n,
        || vec![0i64; n + 1],
        |acc, w| acc[iso_mask(&adj, w)] += sign(w),
        add_vectors,
    );
    Ok(combine_powers(&hist, false))
}

pub fn id_coefficient_formula(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    let adj = simple_masks("coefficient formula", g, limits.subset_sum)?;
    let n = g.n();
    let binom = binomial_table(n);
    let coeffs = fold_subsets(
        n,
        || vec![0i128; n + 1],
        |acc, w| {
            let iso = iso_mask(&adj, w);
            let s = sign(w) as i128;
            for (k, slot) in acc.iter_mut().enumerate().take(iso + 1) {
                let term = binom[iso][k] as i128;
                *slot += if k % 2 == 0 { s * term } else { -s * term };
            }
        },
        add_vectors,
    );
    Ok(Polynomial::from_coeffs(
        coeffs.into_iter().map(BigInt::from).collect(),
    ))
}

fn binomial_table(n: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; n + 1]; n + 1];
    for a in 0..=n {
        t[a][0] = 1;
        for b in 1..=a {
            t[a][b] = t[a - 1][b - 1] + if b < a { t[a - 1][b] } else { 0 };
        }
    }
    t
}

pub fn id_essential_formula(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph("essential-set formula"));
    }
    let adj = simple_masks("essential-set formula", g, limits.subset_sum)?;
    let n = g.n();
    let hist = fold_subsets(
        n,
        || vec![0i64; n + 1],
        |acc, u| {
            let f = private_count(&adj, n, u);
            if f > 0 {
                acc[f] += sign(u);
            }
        },
        add_vectors,
    );
    let sum = combine_powers(&hist, true);
    Ok(if n.is_multiple_of(2) { sum } else { -sum })
}

/// The i-essential sets of a simple graph, in increasing bitmask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialFamily {
    n: usize,
    masks: Vec<u64>,
}

impl EssentialFamily {
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        set.as_mask()
            .is_some_and(|m| set.universe() == self.n && self.masks.binary_search(&m).is_ok())
    }

    pub fn min_size(&self) -> Option<usize> {
        self.masks.iter().map(|m| m.count_ones() as usize).min()
    }

    pub fn sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.masks.iter().map(|&m| VertexSet::from_mask(self.n, m))
    }
}

pub fn enumerate_essential_sets(g: &Graph, limits: &Limits) -> Result<EssentialFamily> {
    let adj = simple_masks("essential-set enumeration", g, limits.subset_sum)?;
    let n = g.n();
    let mut masks = fold_subsets(
        n,
        Vec::new,
        |acc: &mut Vec<u64>, u| {
            if (0..n).any(|v| u >> v & 1 == 0 && adj[v] & !u == 0) {
                acc.push(u);
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    masks.sort_unstable();
    Ok(EssentialFamily { n, masks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let k2 = fam(FamilySpec::Complete { n: 2 });
        assert_eq!(id_inclusion_exclusion(&k2, &lim()).unwrap(), p(&[0, 2]));
        let p3 = fam(FamilySpec::Path { n: 3 });
        assert_eq!(id_inclusion_exclusion(&p3, &lim()).unwrap(), p(&[0, 1, 1]));
        assert_eq!(id_inclusion_exclusion(&Graph::empty(1), &lim()).unwrap(), p(&[0, 1]));
        assert_eq!(id_inclusion_exclusion(&Graph::empty(0), &lim()).unwrap(), p(&[1]));
    }

    #[test]
    fn coefficient_examples() {
        let k2 = fam(FamilySpec::Complete { n: 2 });
        assert_eq!(id_coefficient_formula(&k2, &lim()).unwrap(), p(&[0, 2]));
        assert_eq!(id_coefficient_formula(&Graph::empty(2), &lim()).unwrap(), p(&[0, 0, 1]));
        let p3 = fam(FamilySpec::Path { n: 3 });
        assert_eq!(id_coefficient_formula(&p3, &lim()).unwrap(), p(&[0, 1, 1]));
    }

    #[test]
    fn essential_examples() {
        let k2 = fam(FamilySpec::Complete { n: 2 });
        assert_eq!(id_essential_formula(&k2, &lim()).unwrap(), p(&[0, 2]));
        let p3 = fam(FamilySpec::Path { n: 3 });
        assert_eq!(id_essential_formula(&p3, &lim()).unwrap(), p(&[0, 1, 1]));
        assert_eq!(id_essential_formula(&Graph::empty(1), &lim()).unwrap(), p(&[0, 1]));
        assert_eq!(
            id_essential_formula(&Graph::empty(0), &lim()),
            Err(Error::EmptyGraph("essential-set formula"))
        );
    }

    #[test]
    fn essential_families() {
        let sets = |g: &Graph| -> Vec<Vec<usize>> {
            let mut v: Vec<_> = enumerate_essential_sets(g, &lim())
                .unwrap()
                .sets()
                .map(|s| s.to_vec())
                .collect();
            v.sort();
            v
        };
        assert_eq!(sets(&fam(FamilySpec::Complete { n: 2 })), vec![vec![0], vec![1]]);
        assert_eq!(
            sets(&fam(FamilySpec::Path { n: 3 })),
            vec![vec![0, 1], vec![0, 2], vec![1], vec![1, 2]]
        );
        assert_eq!(sets(&Graph::empty(1)), vec![Vec::<usize>::new()]);

        let c5 = fam(FamilySpec::Cycle { n: 5 });
        let family = enumerate_essential_sets(&c5, &lim()).unwrap();
        assert_eq!(family.min_size(), Some(2));
        assert!(family.contains(c5.neighbors(0)));
    }

    #[test]
    fn loops_rejected() {
        let mut g = Graph::empty(2);
        g.add_loop(0).unwrap();
        for r in [
            id_inclusion_exclusion(&g, &lim()),
            id_coefficient_formula(&g, &lim()),
            id_essential_formula(&g, &lim()),
        ] {
            assert!(matches!(r, Err(Error::LoopsPresent(_))));
        }
    }

    #[test]
    fn binomials() {
        let t = binomial_table(6);
        assert_eq!(t[6], vec![1, 6, 15, 20, 15, 6, 1]);
        assert_eq!(t[0], vec![1, 0, 0, 0, 0, 0, 0]);
    }
}
