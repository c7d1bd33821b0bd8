//! Loop-aware undirected graphs on the vertex labels `0..n`.
//!
//! Edges are unordered pairs of distinct vertices. Loops are kept in a separate
//! set and carry the domination convention: a looped vertex may never belong to
//! an independent dominating set. Loops never connect anything, so they are
//! invisible to neighborhoods, degrees and components.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    loops: VertexSet,
}

/// An induced subgraph together with the original label of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `labels[i]` is the vertex of the parent graph that became vertex `i`.
    pub labels: Vec<usize>,
}

impl Graph {
    /// Edgeless, loopless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::empty(n); n],
            loops: VertexSet::empty(n),
        }
    }

    /// Builds a loop-free graph from an edge list, rejecting self pairs,
    /// duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameter(format!(
                "self pair {{{u}, {u}}} is a loop, not an edge"
            )));
        }
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Marks `v` as looped. Adding an existing loop is a no-op.
    pub fn add_loop(&mut self, v: usize) -> Result<()> {
        self.check_vertex(v)?;
        self.loops.insert(v);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn loops(&self) -> &VertexSet {
        &self.loops
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(v)
    }

    pub fn is_loop_free(&self) -> bool {
        self.loops.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood `N(v)`; never contains `v` itself.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut s = set.clone();
        for v in set {
            s.union_with(&self.adj[v]);
        }
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).max()
    }

    /// Adjacency and loop bitmasks, available when `n <= 64`.
    pub fn masks(&self) -> Option<(Vec<u64>, u64)> {
        if self.n() > 64 {
            return None;
        }
        let adj = self
            .adj
            .iter()
            .map(|s| s.as_mask().expect("single-word set"))
            .collect();
        Some((adj, self.loops.as_mask().expect("single-word set")))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            None if set.universe() != self.n() => Err(Error::InvalidParameter(format!(
                "vertex set over {} vertices used with a graph on {}",
                set.universe(),
                self.n()
            ))),
            None => Ok(()),
        }
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        components_within(self, &self.vertices())
    }

    /// Number of vertices of `G[W]` with no edge inside `W`. Looped vertices
    /// are not isolated.
    pub fn iso_count(&self, w: &VertexSet) -> usize {
        w.iter()
            .filter(|&v| !self.loops.contains(v) && self.adj[v].is_disjoint(w))
            .count()
    }

    /// `G[W]`, renumbered in increasing label order.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Induced> {
        self.check_set(w)?;
        Ok(self.induced_unchecked(w))
    }

    fn induced_unchecked(&self, w: &VertexSet) -> Induced {
        let labels = w.to_vec();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Graph::empty(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for u in self.adj[v].iter().filter(|&u| w.contains(u)) {
                g.adj[i].insert(position[u]);
            }
            if self.loops.contains(v) {
                g.loops.insert(i);
            }
        }
        Induced { graph: g, labels }
    }

    /// `G − v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        Ok(self.induced_unchecked(&keep).graph)
    }

    /// `G − S` for an arbitrary vertex set.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Induced> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(&self.vertices().difference(s)))
    }

    /// `G − e`; the vertex set is unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// `G − N[S]`. With `|S| = 1` this is `G − N[v]`, with `|S| = 2` it is
    /// `G − N[u,v]`.
    pub fn remove_closed_neighborhood(&self, s: &VertexSet) -> Result<Induced> {
        self.check_set(s)?;
        let keep = self.vertices().difference(&self.closed_neighborhood_of(s));
        Ok(self.induced_unchecked(&keep))
    }

    /// `G ∘ v`: delete `v` and put a loop on every neighbor of `v`.
    pub fn circ(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.loops.union_with(&self.adj[v]);
        let mut keep = g.vertices();
        keep.remove(v);
        Ok(g.induced_unchecked(&keep).graph)
    }

    /// `G ⊙ v`: remove every edge with both endpoints in `N(v)`.
    pub fn odot(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let nb = &self.adj[v];
        let mut g = self.clone();
        for a in nb {
            g.adj[a].difference_with(nb);
        }
        Ok(g)
    }

    /// `G ∪ H`; vertices of `H` are shifted by `|V(G)|`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n + other.n());
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(n + u, n + v);
        }
        for v in &self.loops {
            g.loops.insert(v);
        }
        for v in &other.loops {
            g.loops.insert(n + v);
        }
        g
    }

    /// `G ∨ H`: disjoint union plus every edge between `V(G)` and `V(H)`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let n = self.n();
        for u in 0..n {
            for v in n..g.n() {
                g.link(u, v);
            }
        }
        g
    }

    /// `G ∘ H` (corona): vertex `v` of `G` is joined to its own copy of `H`,
    /// which occupies labels `n + v·|V(H)| ..`.
    pub fn corona(&self, other: &Graph) -> Graph {
        let n = self.n();
        let h = other.n();
        let mut g = Graph::empty(n + n * h);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for v in &self.loops {
            g.loops.insert(v);
        }
        for v in 0..n {
            let base = n + v * h;
            for (a, b) in other.edges() {
                g.link(base + a, base + b);
            }
            for a in &other.loops {
                g.loops.insert(base + a);
            }
            for a in 0..h {
                g.link(v, base + a);
            }
        }
        g
    }

    /// r-expansion: vertex `v` becomes the independent block
    /// `{v·r, .., v·r + r − 1}` and every edge becomes a complete bipartite
    /// graph between blocks.
    pub fn expansion(&self, r: usize) -> Result<Graph> {
        if r < 1 {
            return Err(Error::InvalidParameter(format!(
                "expansion factor must be at least 1, got {r}"
            )));
        }
        let mut g = Graph::empty(self.n() * r);
        for (u, v) in self.edges() {
            for a in 0..r {
                for b in 0..r {
                    g.link(u * r + a, v * r + b);
                }
            }
        }
        for v in &self.loops {
            for a in 0..r {
                g.loops.insert(v * r + a);
            }
        }
        Ok(g)
    }

    /// Inserts an edge known to be absent and valid.
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "], loops={})", self.loops)
    }
}

/// Components of `G[alive]`, each given in original labels, ordered by their
/// smallest vertex.
pub(crate) fn components_within(g: &Graph, alive: &VertexSet) -> Vec<VertexSet> {
    let mut unseen = alive.clone();
    let mut out = Vec::new();
    while let Some(start) = unseen.first() {
        let mut comp = VertexSet::empty(g.n());
        let mut frontier = VertexSet::empty(g.n());
        frontier.insert(start);
        unseen.remove(start);
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            comp.insert(v);
            let fresh = g.neighbors(v).intersection(&unseen);
            unseen.difference_with(&fresh);
            frontier.union_with(&fresh);
        }
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        g.add_edge(0, n - 1).unwrap();
        g
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn set(n: usize, items: &[usize]) -> VertexSet {
        VertexSet::from_iter_checked(n, items.iter().copied()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let p3 = path(3);
        let sub = p3.induced_subgraph(&set(3, &[0, 2])).unwrap();
        assert_eq!(sub.graph, Graph::empty(2));
        assert_eq!(sub.labels, vec![0, 2]);

        let whole = p3.induced_subgraph(&p3.vertices()).unwrap();
        assert_eq!(whole.graph, p3);
        assert_eq!(whole.labels, vec![0, 1, 2]);

        let c4 = cycle(4);
        assert_eq!(c4.induced_subgraph(&set(4, &[0, 1, 2])).unwrap().graph, path(3));

        assert!(p3.induced_subgraph(&VertexSet::full(4)).is_err());
    }

    #[test]
    fn deletions() {
        assert_eq!(complete(3).delete_vertex(1).unwrap(), complete(2));
        let p3 = path(3);
        let g = p3.delete_edge(0, 1).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(g.components().len(), 2);
        assert_eq!(cycle(4).delete_edge(0, 3).unwrap(), path(4));
        assert_eq!(p3.delete_edge(0, 2), Err(Error::MissingEdge(0, 2)));
        assert!(p3.delete_vertex(3).is_err());
    }

    #[test]
    fn closed_neighborhood_removal() {
        let c4 = cycle(4);
        let r = c4.remove_closed_neighborhood(&set(4, &[0])).unwrap();
        assert_eq!(r.graph, Graph::empty(1));
        assert_eq!(r.labels, vec![2]);

        let p3 = path(3);
        assert_eq!(p3.remove_closed_neighborhood(&set(3, &[1])).unwrap().graph.n(), 0);
        assert_eq!(p3.remove_closed_neighborhood(&set(3, &[0, 1])).unwrap().graph.n(), 0);
    }

    #[test]
    fn circ_examples() {
        let g = path(2).circ(1).unwrap();
        assert_eq!(g.n(), 1);
        assert!(g.has_loop(0));

        let g = cycle(4).circ(0).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.loops().to_vec(), vec![0, 2]);

        assert_eq!(Graph::empty(1).circ(0).unwrap().n(), 0);
    }

    #[test]
    fn odot_examples() {
        let g = complete(3).odot(0).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(path(3).odot(1).unwrap(), path(3));
        // (K_3 ⊙ 0) ∘ 0 and K_3 ∘ 0 share vertices and loops and differ only in
        // the edge between the two looped vertices.
        let k3 = complete(3);
        let a = k3.odot(0).unwrap().circ(0).unwrap();
        let b = k3.circ(0).unwrap();
        assert_eq!(a.loops(), b.loops());
        assert_eq!(a.delete_edge(0, 1), Err(Error::MissingEdge(0, 1)));
        assert_eq!(b.delete_edge(0, 1).unwrap(), a);
    }

    #[test]
    fn components_and_iso() {
        let g = path(2).disjoint_union(&Graph::empty(1));
        assert_eq!(g.components(), vec![set(3, &[0, 1]), set(3, &[2])]);
        assert_eq!(cycle(4).components(), vec![VertexSet::full(4)]);
        assert!(Graph::empty(0).components().is_empty());

        let p3 = path(3);
        assert_eq!(p3.iso_count(&set(3, &[0, 2])), 2);
        assert_eq!(p3.iso_count(&set(3, &[0, 1])), 0);
        assert_eq!(p3.iso_count(&VertexSet::empty(3)), 0);

        let mut looped = Graph::empty(2);
        looped.add_loop(0).unwrap();
        assert_eq!(looped.iso_count(&looped.vertices()), 1);
    }

    #[test]
    fn products() {
        assert_eq!(Graph::empty(1).join(&Graph::empty(1)), complete(2));

        // a'-a-b-b' with a=0, b=1, a'=2, b'=3
        let c = complete(2).corona(&Graph::empty(1));
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);

        let e = complete(2).expansion(2).unwrap();
        assert_eq!(e.edge_count(), 4);
        assert!((0..4).all(|v| e.degree(v) == 2));
        assert_eq!(e.components().len(), 1);

        assert_eq!(cycle(5).expansion(1).unwrap(), cycle(5));
        assert!(path(2).expansion(0).is_err());
    }
}
