//! Exact Betti vectors and Lyubeznik tables for the local ring at the vertex
//! of the affine cone over a nonsingular projective variety.
//!
//! The pipeline is
//!
//! ```text
//! text --parse_variety--> VarietyExpr --betti--> BettiVector --lyubeznik_table--> LyubeznikTable
//!                                                     \
//!                                                      `--cone_local_derham_dims--> ConeLocalDims
//! ```
//!
//! The table is filled from closed forms in the de Rham Betti numbers. The
//! cone oracle recomputes the `λ_{0,j}` column independently by walking the
//! exact sequences that link the local de Rham cohomology of the cone at its
//! vertex to the global de Rham cohomology of the variety, with cup product
//! by the hyperplane class injective below the middle degree.
//!
//! ```
//! use lyubeznik::{betti, lyubeznik_table, parse_variety};
//!
//! let expr = parse_variety("Curve(1) x P(1)").unwrap();
//! let b = betti(&expr).unwrap();
//! let table = lyubeznik_table(&b).unwrap();
//! let nonzero: Vec<_> = table
//!     .nonzero()
//!     .map(|(i, j, v)| (i, j, v.to_string()))
//!     .collect();
//! assert_eq!(
//!     nonzero,
//!     vec![(0, 2, "2".into()), (2, 3, "2".into()), (3, 3, "1".into())]
//! );
//! ```

pub mod betti;
pub mod dsl;
mod error;
pub mod graph;
pub mod oracle;
pub mod series;
pub mod table;

pub use betti::{
    betti, betti_abelian, betti_complete_intersection, betti_curve, betti_grassmannian,
    betti_projective_space, check_lefschetz_admissible, disjoint_union_betti, euler_char_ci,
    kunneth, BettiVector, Violation,
};
pub use dsl::{dimension, parse_variety, ParseError, VarietyExpr};
pub use error::Error;
pub use graph::{count_components, gamma_graph, ComponentGraph, GammaGraph};
pub use oracle::{cone_local_derham_dims, ConeLocalDims};
pub use series::TruncatedSeries;
pub use table::{corner_from_graph, lyubeznik_table, LyubeznikTable};

pub type Result<T, E = Error> = std::result::Result<T, E>;
