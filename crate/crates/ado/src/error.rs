use thiserror::Error;

#[derive(Debug, Error)]
pub enum AdoError {
    #[error("division by zero in the rational function field")]
    DivisionByZero,

    #[error("malformed braid word: {0}")]
    Parse(String),

    #[error("closure is not a knot (cycle type {cycle_type:?})")]
    NotAKnot { cycle_type: Vec<usize> },

    #[error("partial trace is not a scalar matrix; this indicates a bug")]
    NonScalar,

    #[error("matrix does not preserve the weight grading")]
    WeightMixing,

    #[error("singular weight block while inverting R; this indicates a bug")]
    SingularBlock,

    #[error("highest-weight solve is rank-deficient (wrong coproduct or a bug)")]
    RankDeficient,

    #[error("braid action leaves the highest-weight span; this indicates a bug")]
    BasisInconsistency,

    #[error("state space too large: {states} basis states exceeds cap {cap} (raise --cap)")]
    SizeCap { states: u64, cap: u64 },

    #[error("the two pipelines disagree on {name}; this indicates a bug")]
    PipelineMismatch { name: String },
}

pub type Result<T> = std::result::Result<T, AdoError>;
