//! Memoized vertex recurrence
//! `id(G) = id(G − v) − id(G ∘ v) + x · id(G − N[v])`.
//!
//! Every state reached from the input is an induced subgraph with some extra
//! loops, because `− v`, `∘ v` and `− N[v]` never add edges. A state is
//! therefore keyed by the pair (alive labels, looped labels) of the original
//! graph and never materialized as a separate `Graph`.

use crate::graph::{components_within, Graph};
use crate::polynomial::Polynomial;
use crate::vertex_set::VertexSet;
use std::collections::HashMap;

/// How the engine picks the vertex to branch on in a connected state.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotStrategy {
    /// Unlooped vertex of maximum degree, smallest label on ties.
    #[default]
    MaxDegree,
    /// Eliminate looped vertices first with `id(G) = id(G − v) − id(G ∘ v)`
    /// (a looped `v` is never in a set, so the `x · id(G − N[v])` branch is
    /// empty), then fall back to [`PivotStrategy::MaxDegree`].
    LoopedFirst,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursiveRun {
    pub polynomial: Polynomial,
    /// Number of memoized states at the end of the run.
    pub memo_entries: usize,
}

pub fn id_recursive(g: &Graph) -> Polynomial {
    id_recursive_with(g, PivotStrategy::default()).polynomial
}

pub fn id_recursive_with(g: &Graph, strategy: PivotStrategy) -> RecursiveRun {
    let mut engine = Engine {
        g,
        strategy,
        memo: HashMap::new(),
    };
    let polynomial = engine.solve(g.vertices(), g.loops().clone());
    RecursiveRun {
        polynomial,
        memo_entries: engine.memo.len(),
    }
}

struct Engine<'g> {
    g: &'g Graph,
    strategy: PivotStrategy,
    memo: HashMap<(VertexSet, VertexSet), Polynomial>,
}

impl Engine<'_> {
    /// `loops` must be a subset of `alive`.
    fn solve(&mut self, alive: VertexSet, loops: VertexSet) -> Polynomial {
        if alive.is_empty() {
            return Polynomial::one();
        }
        let key = (alive, loops);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let (alive, loops) = &key;
        let comps = components_within(self.g, alive);
        let result = if comps.len() == 1 {
            self.solve_connected(alive, loops)
        } else {
            let mut acc = Polynomial::one();
            for comp in comps {
                let sub_loops = loops.intersection(&comp);
                let part = self.solve(comp, sub_loops);
                if part.is_zero() {
                    acc = Polynomial::zero();
                    break;
                }
                acc = acc * part;
            }
            acc
        };
        self.memo.insert(key, result.clone());
        result
    }

    fn solve_connected(&mut self, alive: &VertexSet, loops: &VertexSet) -> Polynomial {
        let g = self.g;
        if alive.len() == 1 {
            return if loops.is_empty() {
                Polynomial::x()
            } else {
                Polynomial::zero()
            };
        }
        // A looped vertex whose neighbors are all looped cannot be dominated.
        let stranded = loops.iter().any(|v| {
            let nb = g.neighbors(v).intersection(alive);
            nb.is_subset(loops)
        });
        if stranded {
            return Polynomial::zero();
        }

        if self.strategy == PivotStrategy::LoopedFirst {
            if let Some(v) = loops.first() {
                let (minus_v, circ) = self.without_and_circ(alive, loops, v);
                return self.solve(minus_v.0, minus_v.1) - self.solve(circ.0, circ.1);
            }
        }

        let pivot = alive
            .iter()
            .filter(|&v| !loops.contains(v))
            .map(|v| (g.neighbors(v).intersection_len(alive), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v);
        let Some(v) = pivot else {
            return Polynomial::zero();
        };

        let (minus_v, circ) = self.without_and_circ(alive, loops, v);
        let mut rest = alive.clone();
        rest.difference_with(&g.closed_neighborhood(v));
        let rest_loops = loops.intersection(&rest);

        let a = self.solve(minus_v.0, minus_v.1);
        let b = self.solve(circ.0, circ.1);
        let c = self.solve(rest, rest_loops);
        a - b + c.shift(1)
    }

    /// States for `G − v` and `G ∘ v`.
    fn without_and_circ(
        &self,
        alive: &VertexSet,
        loops: &VertexSet,
        v: usize,
    ) -> ((VertexSet, VertexSet), (VertexSet, VertexSet)) {
        let mut minus_v = alive.clone();
        minus_v.remove(v);
        let mut minus_loops = loops.clone();
        minus_loops.remove(v);

        let mut circ_loops = self.g.neighbors(v).intersection(&minus_v);
        circ_loops.union_with(&minus_loops);
        ((minus_v.clone(), minus_loops), (minus_v, circ_loops))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{id_brute_force, Limits};
    use crate::family::{generate, random_corpus, FamilySpec};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn small_families() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        assert_eq!(id_recursive(&c4), p(&[0, 0, 2]));
        let p2 = generate(&FamilySpec::Path { n: 2 }).unwrap();
        assert_eq!(id_recursive(&p2), p(&[0, 2]));
        assert_eq!(id_recursive(&Graph::empty(3)), p(&[0, 0, 0, 1]));
        assert_eq!(id_recursive(&Graph::empty(0)), Polynomial::one());
    }

    #[test]
    fn loops_in_input() {
        let mut g = Graph::empty(1);
        g.add_loop(0).unwrap();
        assert!(id_recursive(&g).is_zero());

        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let circ = c4.circ(0).unwrap();
        // path 1-2-3 with loops on the ends: only {2}
        assert_eq!(id_recursive(&circ), Polynomial::x());
    }

    #[test]
    fn both_strategies_match_brute_force_with_loops() {
        let limits = Limits::default();
        for (i, base) in random_corpus(9, 0.35, 11, 40).unwrap().into_iter().enumerate() {
            let mut g = base;
            for v in 0..g.n() {
                if (i + v) % 3 == 0 {
                    g.add_loop(v).unwrap();
                }
            }
            let expected = id_brute_force(&g, &limits).unwrap();
            for s in [PivotStrategy::MaxDegree, PivotStrategy::LoopedFirst] {
                assert_eq!(id_recursive_with(&g, s).polynomial, expected, "{g:?} {s:?}");
            }
        }
    }

    #[test]
    fn long_path_memo_stays_small() {
        let run = id_recursive_with(
            &generate(&FamilySpec::Path { n: 300 }).unwrap(),
            PivotStrategy::MaxDegree,
        );
        assert!(run.memo_entries < 10 * 300, "memo grew to {}", run.memo_entries);
        assert_eq!(run.polynomial.lowest_degree(), Some(100));
    }
}
