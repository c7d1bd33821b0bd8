//! Differential checks of the recurrences, sums and set properties against
//! the brute-force oracle.
//!
//! Every check produces a [`Report`]. An instance that does not satisfy an
//! identity's hypotheses (a non-twin pair, a looped pivot, a graph beyond the
//! oracle's limit) is reported as [`Outcome::HypothesisUnmet`], never as a
//! failure.

use crate::algorithms::{
    enumerate_essential_sets, enumerate_mids, id_brute_force, id_recursive_with,
    Algorithm, Limits, PivotStrategy,
};
use crate::closed_forms::{cycle_closed_form, id_family, Variant};
use crate::compose::ProductKind;
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec};
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::vertex_set::VertexSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityKind {
    VertexRecurrence,
    OdotRecurrence,
    EdgeRecurrence,
    OpenTwin,
    ClosedTwin,
    LoopedPivot,
    AlternatingSum,
    Antichain,
    EssentialLemma,
    FiveWay,
    MisEquivalence,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 11] = [
        IdentityKind::VertexRecurrence,
        IdentityKind::OdotRecurrence,
        IdentityKind::EdgeRecurrence,
        IdentityKind::OpenTwin,
        IdentityKind::ClosedTwin,
        IdentityKind::LoopedPivot,
        IdentityKind::AlternatingSum,
        IdentityKind::Antichain,
        IdentityKind::EssentialLemma,
        IdentityKind::FiveWay,
        IdentityKind::MisEquivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::VertexRecurrence => "vertex-recurrence",
            IdentityKind::OdotRecurrence => "odot-recurrence",
            IdentityKind::EdgeRecurrence => "edge-recurrence",
            IdentityKind::OpenTwin => "open-twin",
            IdentityKind::ClosedTwin => "closed-twin",
            IdentityKind::LoopedPivot => "looped-pivot",
            IdentityKind::AlternatingSum => "alternating-sum",
            IdentityKind::Antichain => "antichain",
            IdentityKind::EssentialLemma => "essential-lemma",
            IdentityKind::FiveWay => "five-way",
            IdentityKind::MisEquivalence => "mis-equivalence",
        }
    }

    /// Every parameter choice for `g`: each vertex, each edge, or each
    /// unordered pair of distinct vertices for the twin rules (pairs that are
    /// not twins come back as hypothesis-unmet).
    pub fn instances(self, g: &Graph) -> Vec<Identity> {
        let n = g.n();
        let pairs = || (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)));
        match self {
            IdentityKind::VertexRecurrence => {
                (0..n).map(|v| Identity::VertexRecurrence { v }).collect()
            }
            IdentityKind::OdotRecurrence => (0..n).map(|v| Identity::OdotRecurrence { v }).collect(),
            IdentityKind::LoopedPivot => (0..n).map(|v| Identity::LoopedPivot { v }).collect(),
            IdentityKind::EdgeRecurrence => g
                .edges()
                .map(|(u, v)| Identity::EdgeRecurrence { u, v })
                .collect(),
            IdentityKind::OpenTwin => pairs().map(|(u, v)| Identity::OpenTwin { u, v }).collect(),
            IdentityKind::ClosedTwin => pairs().map(|(u, v)| Identity::ClosedTwin { u, v }).collect(),
            IdentityKind::AlternatingSum => vec![Identity::AlternatingSum],
            IdentityKind::Antichain => vec![Identity::Antichain],
            IdentityKind::EssentialLemma => vec![Identity::EssentialLemma],
            IdentityKind::FiveWay => vec![Identity::FiveWay],
            IdentityKind::MisEquivalence => vec![Identity::MisEquivalence],
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown identity {s:?}")))
    }
}

/// An identity with its parameters bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `id(G) = id(G−v) − id(G∘v) + x·id(G−N[v])`.
    VertexRecurrence { v: usize },
    /// `id(G) = id(G−v) + id(G⊙v) − id(G⊙v−v)`.
    OdotRecurrence { v: usize },
    /// `id(G) = id(G−e) − x²·id(G−N[u,v]) + x·id(G∘v−N[u]) + x·id(G∘u−N[v])`.
    EdgeRecurrence { u: usize, v: usize },
    /// `N(u) = N(v)`: `id(G) = id(G−v) + (x²−x)·id(G−N[v]−u)`.
    OpenTwin { u: usize, v: usize },
    /// `N[u] = N[v]`: `id(G) = id(G−uv) + (2x−x²)·id(G−N[u])`.
    ClosedTwin { u: usize, v: usize },
    /// With a loop placed on `v`: `id(G) = id(G−v) − id(G∘v)`.
    LoopedPivot { v: usize },
    /// `Σ_W (−1)^|W| id(G[W]) = (1−x)^iso(G)`.
    AlternatingSum,
    /// No independent dominating set contains another.
    Antichain,
    /// `min |X| = δ(G)` over i-essential sets `X`, and `N(v)` is i-essential.
    EssentialLemma,
    /// All five algorithms agree.
    FiveWay,
    /// Independent dominating sets are exactly the maximal independent sets
    /// and `id(G, 1)` counts them.
    MisEquivalence,
}

impl Identity {
    pub fn kind(&self) -> IdentityKind {
        match self {
            Identity::VertexRecurrence { .. } => IdentityKind::VertexRecurrence,
            Identity::OdotRecurrence { .. } => IdentityKind::OdotRecurrence,
            Identity::EdgeRecurrence { .. } => IdentityKind::EdgeRecurrence,
            Identity::OpenTwin { .. } => IdentityKind::OpenTwin,
            Identity::ClosedTwin { .. } => IdentityKind::ClosedTwin,
            Identity::LoopedPivot { .. } => IdentityKind::LoopedPivot,
            Identity::AlternatingSum => IdentityKind::AlternatingSum,
            Identity::Antichain => IdentityKind::Antichain,
            Identity::EssentialLemma => IdentityKind::EssentialLemma,
            Identity::FiveWay => IdentityKind::FiveWay,
            Identity::MisEquivalence => IdentityKind::MisEquivalence,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.kind().name();
        match *self {
            Identity::VertexRecurrence { v }
            | Identity::OdotRecurrence { v }
            | Identity::LoopedPivot { v } => write!(f, "{name}[v={v}]"),
            Identity::EdgeRecurrence { u, v } => write!(f, "{name}[e={u}-{v}]"),
            Identity::OpenTwin { u, v } | Identity::ClosedTwin { u, v } => {
                write!(f, "{name}[u={u},v={v}]")
            }
            _ => f.write_str(name),
        }
    }
}

/// Evidence attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Offending subset, vertex or algorithm, when one applies.
    pub location: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed(Witness),
    HypothesisUnmet(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub identity: String,
    pub instance: String,
    pub outcome: Outcome,
    /// The common value of both sides on success, when it is informative.
    pub value: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Passed
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Failed(_))
    }

    pub fn unmet(&self) -> bool {
        matches!(self.outcome, Outcome::HypothesisUnmet(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Failed(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Passed => {
                write!(f, "PASS {} {}", self.identity, self.instance)?;
                if let Some(v) = &self.value {
                    write!(f, " value={v}")?;
                }
                Ok(())
            }
            Outcome::HypothesisUnmet(why) => {
                write!(f, "SKIP {} {} ({why})", self.identity, self.instance)
            }
            Outcome::Failed(w) => {
                write!(f, "FAIL {} {}", self.identity, self.instance)?;
                if let Some(at) = &w.location {
                    write!(f, " at {at}")?;
                }
                write!(f, ": lhs={} rhs={}", w.lhs, w.rhs)
            }
        }
    }
}

/// Internal result: `Ok(value)` on success, or an early non-pass outcome.
type Check = std::result::Result<Option<String>, Outcome>;

fn unmet<T>(why: impl Into<String>) -> std::result::Result<T, Outcome> {
    Err(Outcome::HypothesisUnmet(why.into()))
}

fn fail<T>(location: Option<String>, lhs: impl ToString, rhs: impl ToString) -> std::result::Result<T, Outcome> {
    Err(Outcome::Failed(Witness {
        location,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }))
}

fn equal(lhs: &Polynomial, rhs: &Polynomial) -> Check {
    if lhs == rhs {
        Ok(Some(lhs.to_string()))
    } else {
        fail(None, lhs, rhs)
    }
}

struct Oracle<'a> {
    limits: &'a Limits,
}

impl Oracle<'_> {
    fn id(&self, g: &Graph) -> std::result::Result<Polynomial, Outcome> {
        id_brute_force(g, self.limits).or_else(|e| unmet(e.to_string()))
    }
}

fn require_simple(g: &Graph) -> std::result::Result<(), Outcome> {
    if g.is_loop_free() {
        Ok(())
    } else {
        unmet("graph carries loops")
    }
}

fn require_vertex(g: &Graph, v: usize) -> std::result::Result<(), Outcome> {
    if v < g.n() {
        Ok(())
    } else {
        unmet(format!("vertex {v} not in graph"))
    }
}

fn singleton(g: &Graph, vs: &[usize]) -> VertexSet {
    VertexSet::from_iter_checked(g.n(), vs.iter().copied()).expect("vertices checked")
}

/// Index of `u` after deleting `v`.
fn shifted(u: usize, v: usize) -> usize {
    if u > v {
        u - 1
    } else {
        u
    }
}

pub fn verify_identity(identity: &Identity, g: &Graph, instance: &str, limits: &Limits) -> Report {
    let oracle = Oracle { limits };
    let result = match *identity {
        Identity::VertexRecurrence { v } => vertex_recurrence(&oracle, g, v),
        Identity::OdotRecurrence { v } => odot_recurrence(&oracle, g, v),
        Identity::EdgeRecurrence { u, v } => edge_recurrence(&oracle, g, u, v),
        Identity::OpenTwin { u, v } => open_twin(&oracle, g, u, v),
        Identity::ClosedTwin { u, v } => closed_twin(&oracle, g, u, v),
        Identity::LoopedPivot { v } => looped_pivot(&oracle, g, v),
        Identity::AlternatingSum => alternating_sum(&oracle, g),
        Identity::Antichain => antichain(g, limits),
        Identity::EssentialLemma => essential_lemma(g, limits),
        Identity::FiveWay => five_way(g, limits),
        Identity::MisEquivalence => mis_equivalence(&oracle, g),
    };
    let (outcome, value) = match result {
        Ok(value) => (Outcome::Passed, value),
        Err(outcome) => (outcome, None),
    };
    Report {
        identity: identity.to_string(),
        instance: instance.to_string(),
        outcome,
        value,
    }
}

fn vertex_recurrence(o: &Oracle, g: &Graph, v: usize) -> Check {
    require_vertex(g, v)?;
    if g.has_loop(v) {
        return unmet(format!("vertex {v} is looped"));
    }
    let lhs = o.id(g)?;
    let minus_v = o.id(&g.delete_vertex(v).unwrap())?;
    let circ = o.id(&g.circ(v).unwrap())?;
    let rest = o.id(&g.remove_closed_neighborhood(&singleton(g, &[v])).unwrap().graph)?;
    equal(&lhs, &(minus_v - circ + rest.shift(1)))
}

fn odot_recurrence(o: &Oracle, g: &Graph, v: usize) -> Check {
    require_vertex(g, v)?;
    require_simple(g)?;
    let lhs = o.id(g)?;
    let odot = g.odot(v).unwrap();
    let rhs = o.id(&g.delete_vertex(v).unwrap())? + o.id(&odot)? - o.id(&odot.delete_vertex(v).unwrap())?;
    equal(&lhs, &rhs)
}

fn edge_recurrence(o: &Oracle, g: &Graph, u: usize, v: usize) -> Check {
    require_simple(g)?;
    if !g.has_edge(u, v) {
        return unmet(format!("{{{u}, {v}}} is not an edge"));
    }
    let lhs = o.id(g)?;
    let minus_e = o.id(&g.delete_edge(u, v).unwrap())?;
    let both = o.id(&g.remove_closed_neighborhood(&singleton(g, &[u, v])).unwrap().graph)?;
    let circ_v = g.circ(v).unwrap();
    let only_u = o.id(
        &circ_v
            .remove_closed_neighborhood(&singleton(&circ_v, &[shifted(u, v)]))
            .unwrap()
            .graph,
    )?;
    let circ_u = g.circ(u).unwrap();
    let only_v = o.id(
        &circ_u
            .remove_closed_neighborhood(&singleton(&circ_u, &[shifted(v, u)]))
            .unwrap()
            .graph,
    )?;
    let rhs = minus_e - both.shift(2) + only_u.shift(1) + only_v.shift(1);
    equal(&lhs, &rhs)
}

fn open_twin(o: &Oracle, g: &Graph, u: usize, v: usize) -> Check {
    require_vertex(g, u)?;
    require_vertex(g, v)?;
    require_simple(g)?;
    if u == v || g.neighbors(u) != g.neighbors(v) {
        return unmet(format!("N({u}) != N({v})"));
    }
    let lhs = o.id(g)?;
    let mut gone = g.closed_neighborhood(v);
    gone.insert(u);
    let rest = o.id(&g.delete_vertices(&gone).unwrap().graph)?;
    let factor = Polynomial::from_i64(&[0, -1, 1]);
    equal(&lhs, &(o.id(&g.delete_vertex(v).unwrap())? + factor * rest))
}

fn closed_twin(o: &Oracle, g: &Graph, u: usize, v: usize) -> Check {
    require_vertex(g, u)?;
    require_vertex(g, v)?;
    require_simple(g)?;
    if u == v || g.closed_neighborhood(u) != g.closed_neighborhood(v) {
        return unmet(format!("N[{u}] != N[{v}]"));
    }
    let lhs = o.id(g)?;
    let rest = o.id(&g.remove_closed_neighborhood(&singleton(g, &[u])).unwrap().graph)?;
    let factor = Polynomial::from_i64(&[0, 2, -1]);
    equal(&lhs, &(o.id(&g.delete_edge(u, v).unwrap())? + factor * rest))
}

fn looped_pivot(o: &Oracle, g: &Graph, v: usize) -> Check {
    require_vertex(g, v)?;
    let mut looped = g.clone();
    looped.add_loop(v).unwrap();
    let lhs = o.id(&looped)?;
    let rhs = o.id(&looped.delete_vertex(v).unwrap())? - o.id(&looped.circ(v).unwrap())?;
    equal(&lhs, &rhs)
}

fn alternating_sum(o: &Oracle, g: &Graph) -> Check {
    require_simple(g)?;
    if g.n() > o.limits.subset_sum.min(crate::algorithms::MASK_CEILING) {
        return unmet("graph exceeds the subset-sum limit");
    }
    let mut sum = Polynomial::zero();
    for w in 0u64..1 << g.n() {
        let sub = g.induced_subgraph(&VertexSet::from_mask(g.n(), w)).unwrap().graph;
        let term = o.id(&sub)?;
        sum = if w.count_ones() % 2 == 0 { sum + term } else { sum - term };
    }
    let expected = Polynomial::one_minus_x_pow(g.iso_count(&g.vertices()));
    equal(&sum, &expected)
}

fn antichain(g: &Graph, limits: &Limits) -> Check {
    let sets = enumerate_mids(g, limits).or_else(|e| unmet(e.to_string()))?;
    for a in &sets {
        for b in &sets {
            if a != b && a.is_subset(b) {
                return fail(Some(format!("{a} ⊂ {b}")), a, b);
            }
        }
    }
    Ok(Some(format!("{} sets", sets.len())))
}

fn essential_lemma(g: &Graph, limits: &Limits) -> Check {
    require_simple(g)?;
    if g.n() == 0 {
        return unmet("empty graph");
    }
    let family = enumerate_essential_sets(g, limits).or_else(|e| unmet(e.to_string()))?;
    let delta = g.min_degree().expect("nonempty");
    let min = family.min_size();
    if min != Some(delta) {
        return fail(
            Some("minimum essential set size".into()),
            format!("{min:?}"),
            format!("Some({delta})"),
        );
    }
    for v in 0..g.n() {
        if !family.contains(g.neighbors(v)) {
            return fail(Some(format!("N({v})")), g.neighbors(v), "not essential");
        }
    }
    Ok(Some(format!("δ={delta}, |ess|={}", family.len())))
}

fn five_way(g: &Graph, limits: &Limits) -> Check {
    let reference = id_brute_force(g, limits).or_else(|e| unmet(e.to_string()))?;
    for alg in Algorithm::ALL.into_iter().skip(1) {
        if !g.is_loop_free() && !alg.accepts_loops() {
            continue;
        }
        if alg == Algorithm::Essential && g.n() == 0 {
            continue;
        }
        let got = alg.run(g, limits).or_else(|e| unmet(e.to_string()))?;
        if got != reference {
            return fail(Some(alg.name().to_string()), got, &reference);
        }
    }
    Ok(Some(reference.to_string()))
}

fn mis_equivalence(o: &Oracle, g: &Graph) -> Check {
    require_simple(g)?;
    let n = g.n();
    if n > o.limits.brute_force.min(crate::algorithms::MASK_CEILING) {
        return unmet("graph exceeds the brute-force limit");
    }
    let mids = enumerate_mids(g, o.limits).or_else(|e| unmet(e.to_string()))?;
    let maximal = maximal_independent_sets(g);
    if mids != maximal {
        return fail(
            Some("set lists differ".into()),
            format!("{mids:?}"),
            format!("{maximal:?}"),
        );
    }
    let count = o.id(g)?.evaluate_int(1);
    if count != mids.len().into() {
        return fail(Some("id(G, 1)".into()), count, mids.len());
    }
    Ok(Some(format!("{count} maximal independent sets")))
}

/// Maximal independent sets by checking that no outside vertex can be added,
/// sorted like [`enumerate_mids`].
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= crate::algorithms::MASK_CEILING);
    let independent = |s: &VertexSet| s.iter().all(|a| s.iter().all(|b| !g.has_edge(a, b)));
    let mut out: Vec<VertexSet> = (0u64..1 << n)
        .map(|m| VertexSet::from_mask(n, m))
        .filter(|s| {
            independent(s)
                && (0..n).filter(|v| !s.contains(*v)).all(|v| {
                    let mut bigger = s.clone();
                    bigger.insert(v);
                    !independent(&bigger)
                })
        })
        .collect();
    out.sort_by_cached_key(|s| (s.len(), s.to_vec()));
    out
}

/// Checks a composition rule against brute force on the constructed product.
pub fn verify_composition(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    r: usize,
    instance: &str,
    limits: &Limits,
) -> Report {
    let result = (|| -> Check {
        let product = kind.build(g, h, r).or_else(|e| unmet(e.to_string()))?;
        let predicted = kind.predict(g, h, r).or_else(|e| unmet(e.to_string()))?;
        let actual = Oracle { limits }.id(&product)?;
        equal(&predicted, &actual)
    })();
    let label = if kind.uses_second_graph() {
        kind.name().to_string()
    } else {
        format!("{}[r={r}]", kind.name())
    };
    finish(label, instance, result)
}

/// Closed form, recurrence and brute force for one family member. Members
/// beyond the oracle's limit compare the two formulas only.
pub fn verify_family(spec: &FamilySpec, limits: &Limits) -> Report {
    let result = (|| -> Check {
        let closed = id_family(spec, Variant::ClosedForm).or_else(|e| unmet(e.to_string()))?;
        let rec = id_family(spec, Variant::Recurrence).or_else(|e| unmet(e.to_string()))?;
        if closed != rec {
            return fail(Some("closed form vs recurrence".into()), closed, rec);
        }
        if spec.vertex_count() <= limits.brute_force {
            let g = generate(spec).or_else(|e| unmet(e.to_string()))?;
            let brute = Oracle { limits }.id(&g)?;
            if brute != closed {
                return fail(Some("formula vs brute force".into()), closed, brute);
            }
        }
        Ok(Some(closed.to_string()))
    })();
    finish("family".to_string(), &spec.to_string(), result)
}

/// Evaluates the cycle closed form below its stated range; the outcome
/// records whether it happens to agree with brute force there.
pub fn probe_cycle_closed_form(n: usize, limits: &Limits) -> Report {
    let result = (|| -> Check {
        let g = generate(&FamilySpec::Cycle { n }).or_else(|e| unmet(e.to_string()))?;
        let brute = Oracle { limits }.id(&g)?;
        equal(&cycle_closed_form(n), &brute)
    })();
    finish("cycle-closed-form".to_string(), &format!("C_{n}"), result)
}

fn finish(identity: String, instance: &str, result: Check) -> Report {
    let (outcome, value) = match result {
        Ok(v) => (Outcome::Passed, v),
        Err(o) => (o, None),
    };
    Report {
        identity,
        instance: instance.to_string(),
        outcome,
        value,
    }
}

/// Runs the recursive engine in both pivot strategies against brute force.
pub fn verify_engine_strategies(g: &Graph, instance: &str, limits: &Limits) -> Report {
    let result = (|| -> Check {
        let brute = Oracle { limits }.id(g)?;
        for s in [PivotStrategy::MaxDegree, PivotStrategy::LoopedFirst] {
            let got = id_recursive_with(g, s).polynomial;
            if got != brute {
                return fail(Some(format!("{s:?}")), got, &brute);
            }
        }
        Ok(None)
    })();
    finish("engine-strategies".to_string(), instance, result)
}
