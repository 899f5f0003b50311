//! Crossing-critical graph families, drawings with crossing certificates and
//! an exact crossing-number solver.

pub mod analyzer;
pub mod drawing;
pub mod embedding;
pub mod families;
pub mod graph;
pub mod planarity;
pub mod solver;

pub use graph::{Edge, EdgeId, GraphError, Vertex, VertexId, WeightedMultigraph};
