//! Error types shared across the crate.

use num_bigint::BigInt;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while validating a polytope or computing
/// invariants from it.
///
/// Validation failures are diagnostics about the input; the `Internal`
/// variant signals a bug (a condition that validated input cannot reach).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not unimodular (determinant {det}); expected a smooth cone basis")]
    NotUnimodular { det: BigInt },

    #[error("vertex list is empty")]
    NoVertices,

    #[error("vertex {index} has {got} coordinates, expected {expected}")]
    VertexLengthMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("polytope is not full-dimensional")]
    NotFullDimensional,

    #[error("origin is not strictly interior to the polytope")]
    OriginNotInterior,

    #[error("vertex {0} is not primitive")]
    NonPrimitiveVertex(usize),

    #[error("point {0} is not a vertex of the convex hull")]
    NonVertexPoint(usize),

    #[error("facet {{{}}} is not unimodular", fmt_indices(.0))]
    NonSmoothFacet(Vec<usize>),

    #[error("nef cone is not pointed (rank {rank} < {rho})")]
    NotPointed { rank: usize, rho: usize },

    #[error("target class is not nef")]
    TargetNotNef,

    #[error("target class is zero")]
    TargetZero,

    #[error("zero class has no index")]
    ZeroClass,

    #[error("invariant curve with non-positive anticanonical degree {0}")]
    NonPositiveCurveLength(BigInt),

    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn fmt_indices(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
