//! Compression of 1-critical bifiltered graphs by removing filtration-dominated edges.
//!
//! A bifiltered graph assigns to every edge a critical grade in the plane; the
//! edge is present at every grade above it. An edge is *filtration-dominated*
//! when, at every grade where it is present, some common neighbor of its
//! endpoints is adjacent to all other common neighbors. Removing such edges
//! leaves the homology of the clique bifiltration unchanged, so the reduced
//! graph can replace the original as input to multiparameter persistence
//! pipelines.
//!
//! The crate is organised as follows:
//!
//! * [`grade`] and [`graph`]: grades, edges and the sorted adjacency-list graph.
//! * [`orders`]: total orders on edges used by the greedy removal.
//! * [`domination`]: strong and full filtration-domination tests.
//! * [`collapse`]: the greedy removal driver and grade transformations.
//! * [`build`]: point clouds, kernel density estimates and density-Rips graphs.
//! * [`expand`]: triangle enumeration and scc2020 export.
//! * [`oracle`]: brute-force verifiers (grid domination, F₂ Betti tables).
//! * [`exec`]: data-parallel helpers with a sequential fallback.
//!
//! ```
//! use fdom::{collapse_once, BifilteredGraph, Edge, EdgeOrder, Grade, Mode};
//!
//! let g = BifilteredGraph::from_edges(
//!     3,
//!     vec![
//!         Edge::new(0, 1, Grade::new(0.0, 0.0)),
//!         Edge::new(0, 2, Grade::new(0.0, 0.0)),
//!         Edge::new(1, 2, Grade::new(0.0, 0.0)),
//!     ],
//! )
//! .unwrap();
//! let (reduced, report) = collapse_once(&g, &EdgeOrder::reverse_lexicographic(), Mode::Strong);
//! assert_eq!(reduced.edge_count(), 2);
//! assert_eq!(report.removed(), 1);
//! ```

pub mod build;
pub mod collapse;
pub mod domination;
mod error;
pub mod exec;
pub mod expand;
pub mod grade;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod orders;

pub use collapse::{
    apply_grade_mode, collapse_iterated, collapse_once, collapse_once_traced, count_free_at_birth, CollapseReport,
    GradeMode, Mode,
};
pub use error::{Error, Result};
pub use exec::Exec;
pub use grade::Grade;
pub use graph::{BifilteredGraph, Edge, EdgeNeighbor, PlainGraph, Vertex};
pub use orders::{EdgeOrder, OrderKind};

/// Version string embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
