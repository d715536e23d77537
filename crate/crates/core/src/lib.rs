//! Trigraph machinery, 2-join decompositions and even-pair constructions for
//! Berge graphs with no odd prism, no long antihole and no balanced
//! skew-partition.

pub mod basic_classes;
pub mod berge;
pub mod canon;
pub mod class_f;
pub mod contraction;
pub mod decomposition;
pub mod engine;
pub mod format;
pub mod paths;
pub mod trigraph;
pub mod vertex_set;

pub use paths::{Parity, PathWitness};
pub use trigraph::{Adjacency, Connectivity, Trigraph, TrigraphError};
pub use vertex_set::{VertexSet, MAX_VERTICES};
