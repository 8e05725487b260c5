//! Peeling decompositions.
//!
//! Three concrete algorithms share the same worklist skeleton: an outer loop
//! raises the threshold `k` one step at a time, every surviving element is
//! queued, and an element whose counter is below `k` is removed, its core
//! number fixed at `k - 1`, and the elements whose counters it fed are
//! decremented and re-queued. The loop ends when nothing survives.
//!
//! * [`k_core_decompose`]: vertices, counter = degree.
//! * [`triangle_core_decompose`]: edges, counter = triangles through the edge.
//! * [`vertex_triangle_core_decompose`]: vertices, counter = triangles
//!   through the vertex.
//!
//! [`p_core_decompose`] is the general engine over any monotone vertex
//! property, and [`oracle`] recomputes everything by brute force.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::{EdgeRef, Graph};

mod kcore;
pub mod oracle;
mod pcore;
mod tricore;
mod vtricore;

pub use kcore::k_core_decompose;
pub use oracle::{oracle_core_numbers, oracle_edge_levels, DEFAULT_ORACLE_CAP};
pub use pcore::{
    builtin_property, integer_levels, p_core_decompose, Degree, PropertyFunction, VertexSubset,
    VertexTriangles,
};
pub use tricore::{triangle_core_decompose, truss_edges};
pub use vtricore::vertex_triangle_core_decompose;

/// Which decomposition produced a [`CoreAssignment`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    KCore,
    TriangleCore,
    VertexTriangleCore,
    /// Generalized core over the named vertex property function.
    PCore(String),
}

impl Method {
    /// The three peeling algorithms, in the order they are reported.
    pub const PEELING: [Method; 3] = [
        Method::KCore,
        Method::TriangleCore,
        Method::VertexTriangleCore,
    ];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::KCore => f.write_str("kcore"),
            Method::TriangleCore => f.write_str("tricore"),
            Method::VertexTriangleCore => f.write_str("vtricore"),
            Method::PCore(name) => write!(f, "pcore:{name}"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "kcore" => Ok(Method::KCore),
            "tricore" => Ok(Method::TriangleCore),
            "vtricore" => Ok(Method::VertexTriangleCore),
            other => match other.strip_prefix("pcore:") {
                Some(name) if !name.is_empty() => Ok(Method::PCore(name.to_string())),
                _ => Err(Error::precondition(format!(
                    "unknown method {other:?} (expected kcore, tricore, vtricore or pcore:<name>)"
                ))),
            },
        }
    }
}

/// Runs `method` on `g`. Generalized methods resolve through
/// [`builtin_property`] with its full integer level grid.
pub fn decompose(g: &Graph, method: &Method) -> Result<CoreAssignment, Error> {
    match method {
        Method::KCore => Ok(k_core_decompose(g)),
        Method::TriangleCore => Ok(triangle_core_decompose(g).0),
        Method::VertexTriangleCore => Ok(vertex_triangle_core_decompose(g)),
        Method::PCore(name) => {
            let (p, levels) = builtin_property(name, g).ok_or_else(|| {
                Error::precondition(format!(
                    "unknown property function {name:?} (known: degree, triangles)"
                ))
            })?;
            p_core_decompose(g, p.as_ref(), &levels)
        }
    }
}

/// Per-vertex core numbers from one decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreAssignment {
    method: Method,
    core_numbers: Vec<usize>,
}

impl CoreAssignment {
    pub fn new(method: Method, core_numbers: Vec<usize>) -> Self {
        CoreAssignment {
            method,
            core_numbers,
        }
    }

    pub fn method(&self) -> &Method {
        &self.method
    }

    pub fn core_number(&self, v: usize) -> usize {
        self.core_numbers[v]
    }

    pub fn core_numbers(&self) -> &[usize] {
        &self.core_numbers
    }

    pub fn vertex_count(&self) -> usize {
        self.core_numbers.len()
    }

    /// Largest core number, `None` for an empty graph.
    pub fn highest(&self) -> Option<usize> {
        self.core_numbers.iter().copied().max()
    }

    /// Vertices of the `k`-th core: those with core number at least `k`.
    pub fn core_at(&self, k: usize) -> Vec<usize> {
        (0..self.core_numbers.len())
            .filter(|&v| self.core_numbers[v] >= k)
            .collect()
    }
}

/// Per-edge triangle-core levels. The truss number of an edge is its level
/// plus two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLevelAssignment {
    edges: Vec<EdgeRef>,
    levels: Vec<usize>,
}

impl EdgeLevelAssignment {
    /// `edges` must be sorted; the two vectors are parallel.
    pub(crate) fn new(edges: Vec<EdgeRef>, levels: Vec<usize>) -> Self {
        debug_assert_eq!(edges.len(), levels.len());
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        EdgeLevelAssignment { edges, levels }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn level(&self, e: EdgeRef) -> Option<usize> {
        self.edges.binary_search(&e).ok().map(|i| self.levels[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeRef, usize)> + '_ {
        self.edges.iter().copied().zip(self.levels.iter().copied())
    }

    /// Edges of the triangle `k`-core.
    pub fn edges_at_least(&self, k: usize) -> Vec<EdgeRef> {
        self.iter()
            .filter(|&(_, level)| level >= k)
            .map(|(e, _)| e)
            .collect()
    }

    pub fn highest(&self) -> Option<usize> {
        self.levels.iter().copied().max()
    }
}

/// FIFO of pending element ids that holds each id at most once.
pub(crate) struct Worklist {
    queue: VecDeque<usize>,
    pending: Vec<bool>,
}

impl Worklist {
    pub(crate) fn new(capacity: usize) -> Self {
        Worklist {
            queue: VecDeque::with_capacity(capacity),
            pending: vec![false; capacity],
        }
    }

    #[inline]
    pub(crate) fn push(&mut self, id: usize) {
        if !self.pending[id] {
            self.pending[id] = true;
            self.queue.push_back(id);
        }
    }

    #[inline]
    pub(crate) fn pop(&mut self) -> Option<usize> {
        let id = self.queue.pop_front()?;
        self.pending[id] = false;
        Some(id)
    }
}
