use thiserror::Error;

use crate::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid embedding: {0}")]
    EmbeddingInvalid(String),

    #[error("subgraph is empty")]
    EmptySubgraph,

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("frame index out of range: j = {j}, k = {k}, walk length {n}")]
    IndexOutOfRange { j: usize, k: usize, n: usize },

    #[error("frame does not belong to this graph's peripheral walk")]
    FrameMismatch,

    #[error("cannot recolor child component: {0}")]
    RecolorContradiction(String),

    #[error("outer face of child component containing vertex {0} does not hold all cut-adjacent vertices")]
    OuterFaceAmbiguous(Vertex),

    #[error("search node {node} is incident with {count} earlier cover sets (at most 3 expected)")]
    TooManyIncidentCovers { node: usize, count: usize },

    #[error("tree decomposition invalid: {0}")]
    ValidationFailure(String),

    #[error("instance too large for the oracle: {size} vertices, limit {limit}")]
    TooLarge { size: usize, limit: usize },
}
