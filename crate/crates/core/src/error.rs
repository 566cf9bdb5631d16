use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation at q = {0} hits a zero of the denominator")]
    EvaluationAtPole(String),

    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rank {0} exceeds the supported permutation size")]
    RankUnsupported(usize),

    #[error("rank {rank} exceeds the {mode} limit of {limit}{hint}")]
    RankLimit { rank: usize, limit: usize, mode: &'static str, hint: &'static str },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("corner {index} is not addable (diagram has {count} addable corners)")]
    NotAddable { index: usize, count: usize },

    #[error("q = {0} is not generic")]
    NonGenericQ(String),

    #[error("insufficient samples: {given} given, {needed} needed")]
    InsufficientSamples { given: usize, needed: usize },

    #[error("sample t = {0} makes a resolvent singular")]
    SingularSample(String),

    #[error("element is not invertible: {0}")]
    NotInvertible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
