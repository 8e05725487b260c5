//! Cohesive-subgraph decompositions by peeling.
//!
//! `peelcore` computes three nested decompositions of a simple undirected
//! graph and measures how well they isolate dense communities:
//!
//! * **k-core**: every vertex has at least `k` neighbors in the core.
//! * **triangle k-core** (the `(k+2)`-truss): every edge lies in at least `k`
//!   triangles of the core.
//! * **vertex triangle k-core**: every vertex lies in at least `k` triangles
//!   of the core.
//!
//! All three are instances of a generalized core over a monotone vertex
//! property, which [`decompose::p_core_decompose`] computes for any such
//! property. A brute-force [`decompose::oracle`] recomputes the three
//! decompositions independently for small graphs.
//!
//! ```
//! use peelcore::prelude::*;
//!
//! let g = Graph::from_edge_list([(1, 2), (2, 3), (3, 1), (3, 4)]);
//! let cores = k_core_decompose(&g);
//! assert_eq!(cores.core_numbers(), &[2, 2, 2, 1]);
//! let r = report(&g, &cores).unwrap();
//! assert_eq!(r.best_level_size, 3);
//! assert_eq!(r.best_level_clique_density, Some(1.0));
//! ```

pub mod bench;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod output;
pub mod snap;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::decompose::{
        decompose, k_core_decompose, oracle_core_numbers, p_core_decompose,
        triangle_core_decompose, truss_edges, vertex_triangle_core_decompose, CoreAssignment,
        EdgeLevelAssignment, Method, PropertyFunction, VertexSubset,
    };
    pub use crate::error::{Error, Result};
    pub use crate::generators::{exhaustive_stream, random_gnp, sample_stream, SampleSpec};
    pub use crate::graph::{EdgeRef, Graph, Label};
    pub use crate::metrics::{aggregate_means, report, DecompositionReport, MeanReport};
}
