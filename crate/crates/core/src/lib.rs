//! Independent domination polynomials of finite graphs.
//!
//! `id(G, x) = Σ x^|W|` over the independent dominating sets `W` of `G`,
//! computed five ways (brute force, a memoized vertex recurrence,
//! inclusion–exclusion, a coefficient formula and a sum over i-essential
//! sets), together with closed forms for standard families, composition rules
//! for graph products, and differential checks of the known identities.
//!
//! ```
//! use idpoly::{generate, id_recursive, FamilySpec, Polynomial};
//!
//! let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
//! assert_eq!(id_recursive(&p3), Polynomial::from_i64(&[0, 1, 1]));
//! ```

pub mod algorithms;
pub mod closed_forms;
pub mod compose;
pub mod edge_list;
pub mod error;
pub mod family;
pub mod graph;
pub mod polynomial;
pub mod verify;
pub mod vertex_set;

pub use algorithms::{
    enumerate_essential_sets, enumerate_mids, id_brute_force, id_coefficient_formula,
    id_essential_formula, id_inclusion_exclusion, id_recursive, id_recursive_with,
    independence_polynomial, Algorithm, EssentialFamily, Limits, PivotStrategy, RecursiveRun,
};
pub use closed_forms::{id_family, Variant};
pub use compose::{compose, Composition, ProductKind};
pub use edge_list::{parse_edge_list, to_edge_list};
pub use error::{Error, Result};
pub use family::{generate, labeled_graphs, random_corpus, FamilySpec};
pub use graph::{Graph, Induced};
pub use polynomial::Polynomial;
pub use verify::{verify_identity, Identity, IdentityKind, Outcome, Report};
pub use vertex_set::VertexSet;
