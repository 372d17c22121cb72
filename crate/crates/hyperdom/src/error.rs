use crate::hypergraph::{Edge, VertexId};

/// Errors produced by hypergraph construction, editing and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge {{{}}} has fewer than 2 vertices", fmt_ids(.edge))]
    EdgeTooSmall { edge: Vec<usize> },

    #[error("vertex {vertex} repeated inside an edge")]
    RepeatedVertex { vertex: usize },

    #[error("vertex id {vertex} out of range (ids are 1-based, n = {n})")]
    BadVertexId { vertex: usize, n: usize },

    #[error("duplicate edge {edge}")]
    DuplicateEdge { edge: Edge },

    #[error("edge {edge} is not an edge of the hypergraph")]
    UnknownEdge { edge: Edge },

    #[error("vertex {vertex} does not lie in edge {edge}")]
    VertexNotInEdge { vertex: VertexId, edge: Edge },

    #[error("shrinking edge {edge} would leave fewer than 2 vertices")]
    EdgeTooSmallAfterShrink { edge: Edge },

    #[error("shrinking edge {edge} would duplicate an existing edge")]
    DuplicateEdgeAfterShrink { edge: Edge },

    #[error("operation undefined on an empty hypergraph")]
    EmptyHypergraph,

    #[error("instance too large ({vertices} vertices, {edges} edges) for this operation")]
    TooLarge { vertices: usize, edges: usize },

    #[error("edge {edge} has {count} degree-1 vertices; shrinking needs exactly one")]
    MultiplePendants { edge: Edge, count: usize },

    #[error("edge {edge} has no degree-1 vertex to remove")]
    NoPendant { edge: Edge },

    #[error("edge {edge} is not eligible for deletion at this point of the peel")]
    IneligibleEdge { edge: Edge },

    #[error("supplied deletion order stops before the peel terminates")]
    IncompletePeel,

    #[error("unknown construction name `{name}` (expected one of F, F-, F1, F1-, F2, F3)")]
    UnknownName { name: String },

    #[error("infeasible generator parameters: {reason}")]
    Infeasible { reason: String },
}

fn fmt_ids(ids: &[usize]) -> String {
    ids.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
