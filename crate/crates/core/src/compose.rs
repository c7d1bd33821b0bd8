//! `id` of graph products from the polynomials of their factors.

use crate::algorithms::{id_recursive, independence_polynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::{corona_compose, Polynomial};
use std::fmt;
use std::str::FromStr;

/// Inputs to a composition rule. Orders are vertex counts of the factors.
#[derive(Clone, Copy, Debug)]
pub enum Composition<'a> {
    /// `id(G ∪ H) = id(G) · id(H)`.
    DisjointUnion { id_g: &'a Polynomial, id_h: &'a Polynomial },
    /// `id(G ∨ H) = id(G) + id(H)`; both factors must be nonempty.
    Join {
        id_g: &'a Polynomial,
        id_h: &'a Polynomial,
        g_order: usize,
        h_order: usize,
    },
    /// `id(G ∘ H) = Σ_k i_k x^k id(H)^(n−k)`.
    Corona {
        ind_g: &'a Polynomial,
        id_h: &'a Polynomial,
        g_order: usize,
        h_order: usize,
    },
    /// Corona with `H = E_r`: `Σ_k i_k x^(k + r(n−k))`.
    CoronaEdgeless {
        ind_g: &'a Polynomial,
        g_order: usize,
        r: usize,
    },
    /// `id(exp(G, r)) = id(G)(x^r)`.
    Expansion { id_g: &'a Polynomial, r: usize },
}

pub fn compose(c: Composition<'_>) -> Result<Polynomial> {
    match c {
        Composition::DisjointUnion { id_g, id_h } => Ok(id_g * id_h),
        Composition::Join {
            id_g,
            id_h,
            g_order,
            h_order,
        } => {
            if g_order == 0 || h_order == 0 {
                return Err(Error::InvalidParameter(
                    "join composition needs two nonempty graphs".into(),
                ));
            }
            Ok(id_g + id_h)
        }
        Composition::Corona {
            ind_g,
            id_h,
            g_order,
            h_order,
        } => {
            if g_order == 0 || h_order == 0 {
                return Err(Error::InvalidParameter(
                    "corona composition needs two nonempty graphs".into(),
                ));
            }
            corona_compose(ind_g, id_h, g_order)
        }
        Composition::CoronaEdgeless { ind_g, g_order, r } => {
            if g_order == 0 || r == 0 {
                return Err(Error::InvalidParameter(
                    "edgeless corona needs a nonempty G and r >= 1".into(),
                ));
            }
            if ind_g.degree().is_some_and(|d| d > g_order) {
                return Err(Error::InvalidParameter(
                    "independence polynomial exceeds the vertex count".into(),
                ));
            }
            Ok(ind_g
                .coefficients()
                .iter()
                .enumerate()
                .map(|(k, c)| Polynomial::monomial(c.clone(), k + r * (g_order - k)))
                .sum())
        }
        Composition::Expansion { id_g, r } => id_g.substitute_power(r),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    DisjointUnion,
    Join,
    Corona,
    CoronaEdgeless,
    Expansion,
}

impl ProductKind {
    pub const ALL: [ProductKind; 5] = [
        ProductKind::DisjointUnion,
        ProductKind::Join,
        ProductKind::Corona,
        ProductKind::CoronaEdgeless,
        ProductKind::Expansion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::DisjointUnion => "disjoint-union",
            ProductKind::Join => "join",
            ProductKind::Corona => "corona",
            ProductKind::CoronaEdgeless => "corona-edgeless",
            ProductKind::Expansion => "expansion",
        }
    }

    /// Whether the rule reads the second factor `h` (otherwise `r` is used).
    pub fn uses_second_graph(self) -> bool {
        matches!(
            self,
            ProductKind::DisjointUnion | ProductKind::Join | ProductKind::Corona
        )
    }

    /// Vertex count of the product.
    pub fn product_order(self, g: &Graph, h: &Graph, r: usize) -> usize {
        match self {
            ProductKind::DisjointUnion | ProductKind::Join => g.n() + h.n(),
            ProductKind::Corona => g.n() * (1 + h.n()),
            ProductKind::CoronaEdgeless => g.n() * (1 + r),
            ProductKind::Expansion => g.n() * r,
        }
    }

    /// Builds the product graph explicitly.
    pub fn build(self, g: &Graph, h: &Graph, r: usize) -> Result<Graph> {
        match self {
            ProductKind::DisjointUnion => Ok(g.disjoint_union(h)),
            ProductKind::Join => Ok(g.join(h)),
            ProductKind::Corona => Ok(g.corona(h)),
            ProductKind::CoronaEdgeless => {
                if r == 0 {
                    return Err(Error::InvalidParameter("r must be at least 1".into()));
                }
                Ok(g.corona(&Graph::empty(r)))
            }
            ProductKind::Expansion => g.expansion(r),
        }
    }

    /// `id` of the product computed from the factors only.
    pub fn predict(self, g: &Graph, h: &Graph, r: usize) -> Result<Polynomial> {
        let id_g = id_recursive(g);
        match self {
            ProductKind::DisjointUnion => compose(Composition::DisjointUnion {
                id_g: &id_g,
                id_h: &id_recursive(h),
            }),
            ProductKind::Join => compose(Composition::Join {
                id_g: &id_g,
                id_h: &id_recursive(h),
                g_order: g.n(),
                h_order: h.n(),
            }),
            ProductKind::Corona => compose(Composition::Corona {
                ind_g: &independence_polynomial(g)?,
                id_h: &id_recursive(h),
                g_order: g.n(),
                h_order: h.n(),
            }),
            ProductKind::CoronaEdgeless => compose(Composition::CoronaEdgeless {
                ind_g: &independence_polynomial(g)?,
                g_order: g.n(),
                r,
            }),
            ProductKind::Expansion => compose(Composition::Expansion { id_g: &id_g, r }),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown product {s:?}")))
    }
}
