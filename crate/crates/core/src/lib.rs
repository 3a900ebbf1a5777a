//! Structural analysis of graphs with bounded smallest eigenvalue.
//!
//! The crate builds Hoffman graphs and their special matrices, groups large
//! maximal cliques into quasi-cliques to form associated Hoffman graphs,
//! checks the clique and plex attachment dichotomies, and generates the
//! witness families (Hamming graphs, line graphs, Steiner sums) used to
//! exercise them.
//!
//! Numerics are generic: the eigensolver runs over any [`RealScalar`]
//! (`f32`, `f64`), exact elimination over any [`ExactInt`] (`i128`,
//! [`BigInt`]). The aliases below fix the defaults used by the high-level
//! API.

pub mod analysis;
pub mod association;
pub mod cliques;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hoffman;
pub mod io;
pub mod linalg;
pub mod partition;
pub mod spectrum;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use hoffman::{HoffmanGraph, SpecialMatrix};
pub use linalg::{DenseMatrix, ExactInt, RealScalar};
pub use num_bigint::BigInt;
pub use spectrum::EigenResult;

/// Scalar used for floating eigenvalue estimates.
pub type Real = f64;
/// Exact rational numbers, e.g. for reading off elimination pivots.
pub type Rational = num_rational::BigRational;
/// Integer matrices: adjacency and special matrices.
pub type IntMatrix = DenseMatrix<i64>;
/// Floating matrices handed to the eigensolver.
pub type RealMatrix = DenseMatrix<Real>;
