//! Barbell partitions, forts and zero forcing, graph operations that
//! transfer barbell partitions, and exact kernel checks for the Strong
//! Arnold, Spectral and Multiplicity Properties.
//!
//! Vertex ids are 0-based internally. Anything rendered for people
//! (certificates, `Display` impls, CLI output) uses 1-based labels.

pub mod barbell;
pub mod catalog;
pub mod forcing;
pub mod graph;
pub mod harness;
pub mod io;
pub mod ops;
pub mod ssp;
pub mod vertex_set;

pub use barbell::{
    find_barbell_partition, verify_barbell_partition, BarbellCertificate, BarbellPartition, Method, SearchOptions,
    Verdict,
};
pub use forcing::{Fort, SearchBudget};
pub use graph::{Distance, Graph, GraphError};
pub use io::{encode_graph6, parse_graph6, parse_graph_auto, ParseError};
pub use vertex_set::VertexSet;
