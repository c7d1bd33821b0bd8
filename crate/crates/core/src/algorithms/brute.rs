use super::{add_vectors, check_size, fold_subsets, Limits};
use crate::error::Result;
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::vertex_set::VertexSet;
use num_bigint::BigInt;

/// Membership test for an independent dominating set under the loop
/// convention: no looped member, no edge inside `w`, and every vertex outside
/// `w` has a (non-loop) neighbor in `w`.
pub fn is_independent_dominating(g: &Graph, w: &VertexSet) -> bool {
    if !w.is_disjoint(g.loops()) {
        return false;
    }
    if w.iter().any(|v| !g.neighbors(v).is_disjoint(w)) {
        return false;
    }
    (0..g.n()).all(|v| w.contains(v) || !g.neighbors(v).is_disjoint(w))
}

/// Single-word version of [`is_independent_dominating`].
#[inline]
fn accepts(adj: &[u64], loops: u64, full: u64, w: u64) -> bool {
    if w & loops != 0 {
        return false;
    }
    let mut covered = w;
    let mut rest = w;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & w != 0 {
            return false;
        }
        covered |= adj[v];
    }
    covered == full
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `id(G, x)` straight from the definition: every subset is tested.
pub fn id_brute_force(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    check_size("brute force", g, limits.brute_force)?;
    let n = g.n();
    let (adj, loops) = g.masks().expect("n checked");
    let full = full_mask(n);
    let counts = fold_subsets(
        n,
        || vec![0u64; n + 1],
        |acc, w| {
            if accepts(&adj, loops, full, w) {
                acc[w.count_ones() as usize] += 1;
            }
        },
        add_vectors,
    );
    Ok(Polynomial::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

/// All independent dominating sets, sorted by size and then lexicographically.
pub fn enumerate_mids(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    check_size("set enumeration", g, limits.brute_force)?;
    let n = g.n();
    let (adj, loops) = g.masks().expect("n checked");
    let full = full_mask(n);
    let masks = fold_subsets(
        n,
        Vec::new,
        |acc: &mut Vec<u64>, w| {
            if accepts(&adj, loops, full, w) {
                acc.push(w);
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    let mut sets: Vec<VertexSet> = masks.into_iter().map(|m| VertexSet::from_mask(n, m)).collect();
    sets.sort_by_cached_key(|s| (s.len(), s.to_vec()));
    Ok(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn complete_graph() {
        let k5 = generate(&FamilySpec::Complete { n: 5 }).unwrap();
        assert_eq!(id_brute_force(&k5, &lim()).unwrap(), Polynomial::from_i64(&[0, 5]));
    }

    #[test]
    fn empty_graph_is_one() {
        assert_eq!(id_brute_force(&Graph::empty(0), &lim()).unwrap(), Polynomial::one());
    }

    #[test]
    fn looped_singleton_is_zero() {
        let mut g = Graph::empty(1);
        g.add_loop(0).unwrap();
        assert!(id_brute_force(&g, &lim()).unwrap().is_zero());
        assert!(enumerate_mids(&g, &lim()).unwrap().is_empty());
    }

    #[test]
    fn enumerations() {
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let sets: Vec<_> = enumerate_mids(&p3, &lim())
            .unwrap()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(sets, vec![vec![1], vec![0, 2]]);

        let k3 = generate(&FamilySpec::Complete { n: 3 }).unwrap();
        let sets: Vec<_> = enumerate_mids(&k3, &lim())
            .unwrap()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(sets, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn looped_vertex_still_needs_domination() {
        // 0 - 1 with a loop on 1: only {0} qualifies.
        let mut g = Graph::from_edges(2, [(0, 1)]).unwrap();
        g.add_loop(1).unwrap();
        assert_eq!(id_brute_force(&g, &lim()).unwrap(), Polynomial::x());
        // looped vertex with no neighbor can never be dominated
        let mut g = Graph::from_edges(3, [(0, 1)]).unwrap();
        g.add_loop(2).unwrap();
        assert!(id_brute_force(&g, &lim()).unwrap().is_zero());
    }

    #[test]
    fn general_predicate_matches_masks() {
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        let (adj, loops) = c5.masks().unwrap();
        for w in 0..32u64 {
            assert_eq!(
                accepts(&adj, loops, 31, w),
                is_independent_dominating(&c5, &VertexSet::from_mask(5, w))
            );
        }
    }

    #[test]
    fn size_bound() {
        let g = Graph::empty(27);
        assert!(id_brute_force(&g, &lim()).is_err());
        let tight = Limits { brute_force: 3, ..lim() };
        assert!(id_brute_force(&Graph::empty(4), &tight).is_err());
    }
}
