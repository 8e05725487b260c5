//! Immutable simple undirected graphs.
//!
//! Vertices are dense indices `0..n`. Adjacency is stored in compressed
//! sparse row form with every neighbor list strictly ascending, so triangle
//! queries reduce to merging two sorted slices. Each vertex also carries the
//! external label it was read with, which is what output files report.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// External vertex identifier, as found in SNAP edge lists.
pub type Label = u64;

/// An undirected edge `{u, v}` of some graph, stored with `u < v`.
///
/// Obtained from [`Graph::edge`] or [`Graph::edges`], so it always names an
/// edge that exists in the graph it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    u: usize,
    v: usize,
}

impl EdgeRef {
    pub(crate) fn new_unchecked(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            EdgeRef { u: a, v: b }
        } else {
            EdgeRef { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    labels: Vec<Label>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edge_count", &self.edge_count())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from raw labeled pairs.
    ///
    /// Labels get dense indices in order of first appearance. Self-loops and
    /// repeated edges (in either orientation) are dropped, but a label seen
    /// only in a self-loop still becomes an isolated vertex.
    pub fn from_edge_list<I>(pairs: I) -> Graph
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        let mut index: HashMap<Label, usize> = HashMap::new();
        let mut labels = Vec::new();
        let mut intern = |label: Label| {
            *index.entry(label).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            })
        };
        let mut dense = Vec::new();
        for (a, b) in pairs {
            let (a, b) = (intern(a), intern(b));
            dense.push((a, b));
        }
        Self::build(labels, dense)
    }

    /// Builds a graph on vertices `0..n` labeled by their own index.
    ///
    /// Self-loops and duplicates are dropped as in [`Graph::from_edge_list`].
    pub fn from_dense_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut dense = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        index: x,
                        vertex_count: n,
                    });
                }
            }
            dense.push((a, b));
        }
        Ok(Self::build((0..n as Label).collect(), dense))
    }

    fn build(labels: Vec<Label>, pairs: Vec<(usize, usize)>) -> Graph {
        let n = labels.len();
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, b) in pairs {
            if a != b {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for mut list in adjacency {
            list.sort_unstable();
            list.dedup();
            neighbors.extend_from_slice(&list);
            offsets.push(neighbors.len());
        }
        Graph {
            offsets,
            neighbors,
            labels,
        }
    }

    pub fn empty() -> Graph {
        Graph {
            offsets: vec![0],
            neighbors: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Position of `v`'s first neighbor in the flat adjacency array.
    #[inline]
    pub(crate) fn slot_start(&self, v: usize) -> usize {
        self.offsets[v]
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count()
            && b < self.vertex_count()
            && self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn edge(&self, a: usize, b: usize) -> Result<EdgeRef> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a != b && self.has_edge(a, b) {
            Ok(EdgeRef::new_unchecked(a, b))
        } else {
            Err(Error::MissingEdge(a, b))
        }
    }

    /// All edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| EdgeRef { u, v })
        })
    }

    /// The normalized edge list in label space. Rebuilding from it with
    /// [`Graph::from_edge_list`] gives back this graph, up to isolated
    /// vertices.
    pub fn to_edge_list(&self) -> Vec<(Label, Label)> {
        self.edges()
            .map(|e| (self.labels[e.u], self.labels[e.v]))
            .collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Number of triangles through `v`.
    pub fn triangles_through_vertex(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        let nv = self.neighbors(v);
        let twice: usize = nv
            .iter()
            .map(|&w| intersection_count(nv, self.neighbors(w)))
            .sum();
        Ok(twice / 2)
    }

    /// Number of triangles containing `e`, i.e. common neighbors of its ends.
    pub fn triangles_through_edge(&self, e: EdgeRef) -> Result<usize> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::MissingEdge(e.u, e.v));
        }
        Ok(intersection_count(self.neighbors(e.u), self.neighbors(e.v)))
    }

    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|e| {
                let (nu, nv) = (self.neighbors(e.u), self.neighbors(e.v));
                let mut count = 0;
                for_each_common(nu, nv, |_, j| {
                    if nv[j] > e.v {
                        count += 1;
                    }
                });
                count
            })
            .sum()
    }

    /// Subgraph induced by `vertices`, reindexed in ascending order of the
    /// original indices. Labels follow their vertices.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut members = vertices.to_vec();
        for &v in &members {
            self.check_vertex(v)?;
        }
        members.sort_unstable();
        members.dedup();

        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in members.iter().enumerate() {
            position[v] = i;
        }
        let mut offsets = Vec::with_capacity(members.len() + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for &v in &members {
            // ascending original order maps to ascending new order
            neighbors.extend(
                self.neighbors(v)
                    .iter()
                    .map(|&w| position[w])
                    .filter(|&p| p != usize::MAX),
            );
            offsets.push(neighbors.len());
        }
        Ok(Graph {
            offsets,
            neighbors,
            labels: members.iter().map(|&v| self.labels[v]).collect(),
        })
    }

    /// Whether `vertices` induce a complete subgraph.
    pub fn is_clique(&self, vertices: &[usize]) -> Result<bool> {
        let sub = self.induced_subgraph(vertices)?;
        let k = sub.vertex_count();
        Ok(sub.edge_count() == k * k.saturating_sub(1) / 2)
    }
}

/// Size of the intersection of two strictly ascending slices.
pub fn intersection_count(a: &[usize], b: &[usize]) -> usize {
    let mut count = 0;
    for_each_common(a, b, |_, _| count += 1);
    count
}

/// Calls `f(i, j)` for every pair of positions with `a[i] == b[j]`.
#[inline]
pub(crate) fn for_each_common(a: &[usize], b: &[usize], mut f: impl FnMut(usize, usize)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                f(i, j);
                i += 1;
                j += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};
    use proptest::prelude::*;

    fn assert_invariants(g: &Graph) {
        let mut slots = 0;
        for v in 0..g.vertex_count() {
            let nv = g.neighbors(v);
            assert!(nv.windows(2).all(|w| w[0] < w[1]), "unsorted at {v}");
            assert!(!nv.contains(&v), "self-loop at {v}");
            for &w in nv {
                assert!(
                    g.neighbors(w).binary_search(&v).is_ok(),
                    "asymmetric {v}-{w}"
                );
            }
            slots += nv.len();
        }
        assert_eq!(g.edge_count() * 2, slots);
    }

    #[test]
    fn normalizes_duplicates_and_loops() {
        let g = Graph::from_edge_list([(0, 1), (1, 0), (2, 2)]);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![EdgeRef::new_unchecked(0, 1)]
        );
        assert_eq!(g.degree(2), 0);
        assert_invariants(&g);
    }

    #[test]
    fn empty_input() {
        let g = Graph::from_edge_list(std::iter::empty());
        assert_eq!((g.vertex_count(), g.edge_count()), (0, 0));
        assert_eq!(g, Graph::empty());
    }

    #[test]
    fn labels_in_first_appearance_order() {
        let (a, b, c) = (97, 98, 99);
        let g = Graph::from_edge_list([(c, a), (a, b), (b, c)]);
        assert_eq!(g.labels(), &[c, a, b]);
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        assert!(g.is_clique(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn vertex_triangles() {
        for v in 0..4 {
            assert_eq!(complete(4).triangles_through_vertex(v).unwrap(), 3);
        }
        for v in 0..5 {
            assert_eq!(complete(5).triangles_through_vertex(v).unwrap(), 6);
        }
        for v in 0..6 {
            assert_eq!(cycle(6).triangles_through_vertex(v).unwrap(), 0);
        }
        assert!(matches!(
            cycle(6).triangles_through_vertex(6),
            Err(Error::VertexOutOfRange { index: 6, .. })
        ));
    }

    #[test]
    fn edge_triangles() {
        let k5 = complete(5);
        assert!(k5
            .edges()
            .all(|e| k5.triangles_through_edge(e).unwrap() == 3));
        let c6 = cycle(6);
        assert!(c6
            .edges()
            .all(|e| c6.triangles_through_edge(e).unwrap() == 0));

        // two triangles 0-1-2 and 0-1-3 sharing the edge (0, 1)
        let g = Graph::from_dense_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        for e in g.edges() {
            let expected = if e.endpoints() == (0, 1) { 2 } else { 1 };
            assert_eq!(g.triangles_through_edge(e).unwrap(), expected, "{e}");
        }
        assert!(matches!(g.edge(2, 3), Err(Error::MissingEdge(2, 3))));
        let foreign = complete(5).edge(2, 3).unwrap();
        assert!(g.triangles_through_edge(foreign).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = complete(5).induced_subgraph(&[4, 0, 2]).unwrap();
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        assert_eq!(k3.labels(), &[0, 2, 4]);

        let none = cycle(6).induced_subgraph(&[]).unwrap();
        assert_eq!(none, Graph::empty());

        let apart = cycle(6).induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!((apart.vertex_count(), apart.edge_count()), (3, 0));

        assert!(cycle(6).induced_subgraph(&[0, 6]).is_err());
    }

    #[test]
    fn cliques() {
        assert!(complete(5).is_clique(&[0, 1, 2, 3, 4]).unwrap());
        assert!(cycle(6).is_clique(&[2, 3]).unwrap());
        assert!(!cycle(6).is_clique(&[1, 2, 3]).unwrap());
        assert!(cycle(6).is_clique(&[9]).is_err());
    }

    fn raw_pairs() -> impl Strategy<Value = Vec<(Label, Label)>> {
        prop::collection::vec((0u64..14, 0u64..14), 0..60)
    }

    proptest! {
        #[test]
        fn construction_invariants(pairs in raw_pairs()) {
            let g = Graph::from_edge_list(pairs);
            assert_invariants(&g);
        }

        #[test]
        fn rebuild_is_identity(pairs in raw_pairs()) {
            let g = Graph::from_edge_list(pairs.iter().copied().filter(|(a, b)| a != b));
            let again = Graph::from_edge_list(g.to_edge_list());
            assert_invariants(&again);
            let labeled = |g: &Graph| {
                let mut edges: Vec<_> = g
                    .to_edge_list()
                    .into_iter()
                    .map(|(a, b)| (a.min(b), a.max(b)))
                    .collect();
                edges.sort_unstable();
                let mut labels = g.labels().to_vec();
                labels.sort_unstable();
                (labels, edges)
            };
            prop_assert_eq!(labeled(&g), labeled(&again));
        }

        #[test]
        fn triangle_sums_agree(pairs in raw_pairs()) {
            let g = Graph::from_edge_list(pairs);
            let total = g.triangle_count();
            let by_vertex: usize = (0..g.vertex_count())
                .map(|v| g.triangles_through_vertex(v).unwrap())
                .sum();
            let by_edge: usize = g.edges().map(|e| g.triangles_through_edge(e).unwrap()).sum();
            prop_assert_eq!(by_vertex, 3 * total);
            prop_assert_eq!(by_edge, 3 * total);
        }
    }
}
