use super::check_loop_free;
use crate::error::Result;
use crate::graph::{components_within, Graph};
use crate::polynomial::Polynomial;
use crate::vertex_set::VertexSet;
use std::collections::HashMap;

/// `ind(G, x)`, the generating function of all independent sets (the empty
/// set included), via `ind(G) = ind(G − v) + x · ind(G − N[v])` with
/// component splitting and memoization on alive-vertex sets.
pub fn independence_polynomial(g: &Graph) -> Result<Polynomial> {
    check_loop_free("independence polynomial", g)?;
    let mut memo = HashMap::new();
    Ok(solve(g, g.vertices(), &mut memo))
}

fn solve(g: &Graph, alive: VertexSet, memo: &mut HashMap<VertexSet, Polynomial>) -> Polynomial {
    if alive.is_empty() {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(&alive) {
        return p.clone();
    }
    let comps = components_within(g, &alive);
    let result = if comps.len() > 1 {
        comps.into_iter().map(|c| solve(g, c, memo)).product()
    } else if alive.len() == 1 {
        Polynomial::from_i64(&[1, 1])
    } else {
        let v = alive
            .iter()
            .max_by(|&a, &b| {
                let da = g.neighbors(a).intersection_len(&alive);
                let db = g.neighbors(b).intersection_len(&alive);
                da.cmp(&db).then(b.cmp(&a))
            })
            .expect("nonempty");
        let mut minus_v = alive.clone();
        minus_v.remove(v);
        let mut rest = alive.clone();
        rest.difference_with(&g.closed_neighborhood(v));
        solve(g, minus_v, memo) + solve(g, rest, memo).shift(1)
    };
    memo.insert(alive, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, random_corpus, FamilySpec};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    /// Independent-set counts by checking every subset.
    fn brute(g: &Graph) -> Polynomial {
        let n = g.n();
        let mut counts = vec![0i64; n + 1];
        for w in 0u64..1 << n {
            let ws = VertexSet::from_mask(n, w);
            if ws.iter().all(|v| g.neighbors(v).is_disjoint(&ws)) {
                counts[ws.len()] += 1;
            }
        }
        p(&counts)
    }

    #[test]
    fn examples() {
        let k2 = generate(&FamilySpec::Complete { n: 2 }).unwrap();
        assert_eq!(independence_polynomial(&k2).unwrap(), p(&[1, 2]));
        assert_eq!(independence_polynomial(&Graph::empty(2)).unwrap(), p(&[1, 2, 1]));
        assert_eq!(independence_polynomial(&Graph::empty(1)).unwrap(), p(&[1, 1]));
        assert_eq!(independence_polynomial(&Graph::empty(0)).unwrap(), Polynomial::one());
    }

    #[test]
    fn matches_subset_count() {
        for g in random_corpus(10, 0.3, 5, 30).unwrap() {
            assert_eq!(independence_polynomial(&g).unwrap(), brute(&g));
        }
    }

    #[test]
    fn rejects_loops() {
        let mut g = Graph::empty(2);
        g.add_loop(1).unwrap();
        assert!(independence_polynomial(&g).is_err());
    }
}
