//! Brute-force reference decompositions for small graphs.
//!
//! Nothing here shares code with the peeling implementations. The graph is
//! copied into an adjacency matrix, and for every threshold `k` the core is
//! recomputed from the full graph by deleting *all* violating elements at
//! once and rescanning until a fixpoint, with triangle counts taken by
//! triple loops over the current element set.

use super::{CoreAssignment, EdgeLevelAssignment, Method};
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};

pub const DEFAULT_ORACLE_CAP: usize = 12;

struct Matrix {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    fn new(g: &Graph, cap: usize) -> Result<Matrix> {
        let n = g.vertex_count();
        if n > cap {
            return Err(Error::precondition(format!(
                "oracle refuses graphs above {cap} vertices (got {n})"
            )));
        }
        let mut adj = vec![vec![false; n]; n];
        for e in g.edges() {
            let (u, v) = e.endpoints();
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Ok(Matrix { n, adj })
    }

    /// Vertex set of the maximal subgraph where `score(v, set) >= k`.
    fn vertex_fixpoint(
        &self,
        k: usize,
        score: impl Fn(&Matrix, usize, &[bool]) -> usize,
    ) -> Vec<bool> {
        let mut set = vec![true; self.n];
        loop {
            let violators: Vec<usize> = (0..self.n)
                .filter(|&v| set[v] && score(self, v, &set) < k)
                .collect();
            if violators.is_empty() {
                return set;
            }
            for v in violators {
                set[v] = false;
            }
        }
    }

    fn degree_in(&self, v: usize, set: &[bool]) -> usize {
        (0..self.n).filter(|&w| set[w] && self.adj[v][w]).count()
    }

    fn triangles_in(&self, v: usize, set: &[bool]) -> usize {
        let mut count = 0;
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if set[a] && set[b] && self.adj[v][a] && self.adj[v][b] && self.adj[a][b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Edge matrix of the maximal subgraph whose edges all lie in at least
    /// `k` triangles of it.
    fn edge_fixpoint(&self, k: usize) -> Vec<Vec<bool>> {
        let n = self.n;
        let mut present = self.adj.clone();
        loop {
            let mut violators = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if present[u][v] {
                        let support = (0..n).filter(|&x| present[u][x] && present[v][x]).count();
                        if support < k {
                            violators.push((u, v));
                        }
                    }
                }
            }
            if violators.is_empty() {
                return present;
            }
            for (u, v) in violators {
                present[u][v] = false;
                present[v][u] = false;
            }
        }
    }

    fn vertex_cores(&self, score: impl Fn(&Matrix, usize, &[bool]) -> usize) -> Vec<usize> {
        let mut core = vec![0; self.n];
        for k in 0.. {
            let set = self.vertex_fixpoint(k, &score);
            if !set.iter().any(|&b| b) {
                break;
            }
            for v in (0..self.n).filter(|&v| set[v]) {
                core[v] = k;
            }
        }
        core
    }

    fn edge_levels(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut level = vec![vec![0; n]; n];
        for k in 1.. {
            let present = self.edge_fixpoint(k);
            let mut any = false;
            for u in 0..n {
                for v in 0..n {
                    if present[u][v] {
                        level[u][v] = k;
                        any = true;
                    }
                }
            }
            if !any {
                break;
            }
        }
        level
    }
}

/// Core numbers by brute force, for graphs of at most
/// [`DEFAULT_ORACLE_CAP`] vertices.
pub fn oracle_core_numbers(g: &Graph, method: &Method) -> Result<CoreAssignment> {
    oracle_core_numbers_capped(g, method, DEFAULT_ORACLE_CAP)
}

pub fn oracle_core_numbers_capped(
    g: &Graph,
    method: &Method,
    cap: usize,
) -> Result<CoreAssignment> {
    let m = Matrix::new(g, cap)?;
    let core = match method {
        Method::KCore => m.vertex_cores(Matrix::degree_in),
        Method::VertexTriangleCore => m.vertex_cores(Matrix::triangles_in),
        Method::TriangleCore => {
            let level = m.edge_levels();
            (0..m.n)
                .map(|v| {
                    (0..m.n)
                        .filter(|&w| m.adj[v][w])
                        .map(|w| level[v][w])
                        .max()
                        .unwrap_or(0)
                })
                .collect()
        }
        Method::PCore(name) => {
            return Err(Error::precondition(format!(
                "no oracle for generalized method pcore:{name}"
            )))
        }
    };
    Ok(CoreAssignment::new(method.clone(), core))
}

/// Triangle-core level of every edge, by brute force.
pub fn oracle_edge_levels(g: &Graph) -> Result<EdgeLevelAssignment> {
    oracle_edge_levels_capped(g, DEFAULT_ORACLE_CAP)
}

#[allow(clippy::needless_range_loop)]
pub fn oracle_edge_levels_capped(g: &Graph, cap: usize) -> Result<EdgeLevelAssignment> {
    let m = Matrix::new(g, cap)?;
    let level = m.edge_levels();
    let mut edges = Vec::new();
    let mut levels = Vec::new();
    for u in 0..m.n {
        for v in (u + 1)..m.n {
            if m.adj[u][v] {
                edges.push(EdgeRef::new_unchecked(u, v));
                levels.push(level[u][v]);
            }
        }
    }
    Ok(EdgeLevelAssignment::new(edges, levels))
}
