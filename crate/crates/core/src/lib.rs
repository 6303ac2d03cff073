//! Exact-arithmetic engine for the structural invariants of A-hypergeometric
//! systems.
//!
//! Given a full-rank integer matrix `A`, the crate constructs the associated
//! toric ideal, the Euler symbol forms `A x ξ`, and the commutative
//! characteristic-variety model `k[x,ξ]/⟨in(I_A), A x ξ⟩`, then certifies by
//! exact computation that
//!
//! * the forms `A x ξ` cut the product `k^n × X_A` down to Krull dimension
//!   `n` (a system-of-parameters certificate),
//! * the characteristic model has dimension `n`, i.e. every fiber of the
//!   family is holonomic, and
//! * generic fibers over the `x`-space are finite and of constant degree,
//!   so the family is coherent over its parameter space.
//!
//! All arithmetic is over arbitrary-precision integers and rationals; there
//! is no floating point anywhere in a verdict path.

pub mod cone;
pub mod groebner;
pub mod hypergeo;
pub mod intlin;
pub mod poly;
pub mod report;
pub mod toric;
pub mod transversal;

pub(crate) mod sampling;

use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Errors surfaced by the engine. Input-validation variants name the
/// violated hypothesis so a frontend can distinguish bad input (exit 2)
/// from internal verification failures (exit 1).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("matrix row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("column {col} of the matrix is zero; every column a_i must be nonzero")]
    ZeroColumn { col: usize },

    #[error("matrix has rank {rank} but {rows} rows; full row rank d is required")]
    RankDeficient { rank: usize, rows: usize },

    #[error("column index {index} out of range for a matrix with {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },

    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error(
        "orbit-boundary point: ξ-coordinate {index} is zero, violating the \
         all-nonzero hypothesis of the transversality lemma"
    )]
    OrbitBoundary { index: usize },

    #[error("point does not lie on the bilinear variety: form {row} evaluates to {value}")]
    NotOnVariety { row: usize, value: String },

    #[error("torus coordinate {index} is zero; torus points must have nonzero coordinates")]
    ZeroTorusCoordinate { index: usize },

    #[error("sample point coordinate {index} is zero; a nonzero-coordinate point is required")]
    ZeroSampleCoordinate { index: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal certificate check failed: {detail}")]
    CertificateCheckFailed { detail: String },
}

impl Error {
    /// True when the error names invalid input rather than an engine defect.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::CertificateCheckFailed { .. })
    }
}
