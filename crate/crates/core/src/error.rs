use thiserror::Error;

/// Errors produced by the combinatorial, Werner and dense-oracle layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("not a partition: {0:?} (rows must be weakly decreasing)")]
    NotAPartition(Vec<i64>),

    #[error("not a skew shape: {inner} is not contained in {outer}")]
    NotASkewShape { outer: String, inner: String },

    #[error("partition {partition} is not in Par({boxes},{dim})")]
    NotInPar {
        partition: String,
        boxes: usize,
        dim: usize,
    },

    #[error("spectrum entries sum to {0}, expected 1")]
    NotNormalized(String),

    #[error("spectrum has a negative entry {0}")]
    NegativeEntry(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("size mismatch: |lambda| = {lambda}, |cycle type| = {cycle_type}")]
    SizeMismatch { lambda: usize, cycle_type: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("operator is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("vector is not in the symmetric subspace (deviation {0:e})")]
    NotSymmetric(f64),

    #[error("invalid Werner state: {0}")]
    InvalidWerner(String),

    #[error("internal consistency check failed: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
