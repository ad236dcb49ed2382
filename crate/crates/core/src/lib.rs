//! Constructive upper bounds on the rainbow connection number `rc(G)` and the
//! rainbow vertex-connection number `rvc(G)` in terms of `sigma_k(G)`, the
//! minimum degree sum of an independent `k`-set.
//!
//! The edge pipeline ([`rc_pipeline`]) builds a connected two-way two-step
//! dominating set and extends a rainbow spanning tree of it; the vertex
//! pipeline ([`rvc_pipeline`]) uses a strong dominating set and a resampled
//! 9-color palette. Both return certificates with a checked witness path for
//! every vertex pair.

mod bits;
pub mod bounds;
pub mod coloring;
pub mod domset;
pub mod extremal;
pub mod graph;
pub mod independence;
pub mod oracle;
pub mod rainbow_edge;
pub mod rainbow_vertex;
pub mod random;
pub mod report;
pub mod verify;

pub use coloring::{ColoringFileError, EdgeColoring, Provenance, VertexColoring};
pub use domset::{DomError, DominationResult, Flavor, StrongRegime};
pub use extremal::{ExtremalError, FamilySpec};
pub use graph::{load_graph, Distance, Graph, GraphError, PathWitness};
pub use independence::{sigma_k, sparsify, IndependenceError, SigmaReport, SparsifyReport};
pub use oracle::{rc_exact, rvc_exact, ExactResult, Limits, OracleError};
pub use rainbow_edge::{rc_pipeline, RcCertificate, RcError};
pub use rainbow_vertex::{rvc_pipeline, RvcCertificate, RvcError};
pub use verify::{verify_rainbow_edge, verify_rainbow_vertex, Budget, Verdict};

/// Any error the library can report.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Independence(#[from] IndependenceError),
    #[error(transparent)]
    Domination(#[from] DomError),
    #[error(transparent)]
    Rc(#[from] RcError),
    #[error(transparent)]
    Rvc(#[from] RvcError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    ColoringFile(#[from] ColoringFileError),
}
