use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {label}{rank}")]
    UnsupportedType { label: String, rank: usize },

    #[error("unknown Cartan type label `{0}`")]
    UnknownLabel(String),

    #[error("node {node} out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("{0} has no orthogonal basis view")]
    UnsupportedBasis(String),

    #[error("orthogonal vector does not lie in the weight lattice")]
    NonIntegral,

    #[error("weight {weight} is not dominant: node {node} has coefficient {value}")]
    NotDominant {
        weight: String,
        node: usize,
        value: i64,
    },

    #[error("resource cap of {cap} exceeded while enumerating {what}")]
    ResourceLimit { cap: usize, what: &'static str },

    #[error("exterior power {p} out of range for a multiset of size {size}")]
    PowerOutOfRange { p: usize, size: u64 },

    #[error("weight multiset is not a representation of the Levi factor: {0}")]
    NotARepresentation(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },
}

impl Error {
    /// True for errors caused by hitting the enumeration cap.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
