use super::{CoreAssignment, EdgeLevelAssignment, Method, Worklist};
use crate::error::{Error, Result};
use crate::graph::{for_each_common, EdgeRef, Graph};

/// Triangle k-core decomposition.
///
/// An edge's level is the largest `k` such that it survives repeated removal
/// of edges lying in fewer than `k` triangles of the remaining graph. A
/// vertex takes the level at which its last incident edge disappears, which
/// is the maximum level over its edges; vertices without edges get 0.
pub fn triangle_core_decompose(g: &Graph) -> (CoreAssignment, EdgeLevelAssignment) {
    let n = g.vertex_count();
    let edges: Vec<EdgeRef> = g.edges().collect();
    let m = edges.len();
    let slot_edge = slot_edge_ids(g, &edges);

    let mut support: Vec<usize> = edges
        .iter()
        .map(|e| {
            let mut count = 0;
            for_each_common(g.neighbors(e.u()), g.neighbors(e.v()), |_, _| count += 1);
            count
        })
        .collect();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; m];
    let mut level = vec![0; m];
    let mut core = vec![0; n];
    let mut members: Vec<usize> = (0..m).collect();
    let mut work = Worklist::new(m);

    let mut k = 0;
    while !members.is_empty() {
        k += 1;
        for &e in &members {
            work.push(e);
        }
        while let Some(e) = work.pop() {
            if support[e] >= k {
                continue;
            }
            let (u, v) = edges[e].endpoints();
            let (su, sv) = (g.slot_start(u), g.slot_start(v));
            for_each_common(g.neighbors(u), g.neighbors(v), |i, j| {
                let (eu, ev) = (slot_edge[su + i], slot_edge[sv + j]);
                if alive[eu] && alive[ev] {
                    support[eu] -= 1;
                    support[ev] -= 1;
                    work.push(eu);
                    work.push(ev);
                }
            });
            for x in [u, v] {
                degree[x] -= 1;
                if degree[x] == 0 {
                    core[x] = k - 1;
                }
            }
            level[e] = k - 1;
            alive[e] = false;
        }
        members.retain(|&e| alive[e]);
    }
    (
        CoreAssignment::new(Method::TriangleCore, core),
        EdgeLevelAssignment::new(edges, level),
    )
}

/// Maps every adjacency slot to the id of the undirected edge it encodes,
/// ids being positions in `edges` (lexicographic order).
fn slot_edge_ids(g: &Graph, edges: &[EdgeRef]) -> Vec<usize> {
    let mut slot_edge = vec![usize::MAX; 2 * edges.len()];
    for (id, e) in edges.iter().enumerate() {
        let (u, v) = e.endpoints();
        let i = g.neighbors(u).binary_search(&v).expect("edge present");
        let j = g.neighbors(v).binary_search(&u).expect("edge present");
        slot_edge[g.slot_start(u) + i] = id;
        slot_edge[g.slot_start(v) + j] = id;
    }
    slot_edge
}

/// Edge set of the `k`-truss: edges whose endpoints keep at least `k - 2`
/// common neighbors inside it, i.e. the triangle `(k - 2)`-core.
pub fn truss_edges(g: &Graph, k: usize) -> Result<Vec<EdgeRef>> {
    if k < 2 {
        return Err(Error::precondition(format!(
            "truss order must be at least 2, got {k}"
        )));
    }
    let (_, levels) = triangle_core_decompose(g);
    Ok(levels.edges_at_least(k - 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn complete_and_cycle() {
        let (cores, levels) = triangle_core_decompose(&complete(5));
        assert_eq!(cores.core_numbers(), &[3; 5]);
        assert_eq!(levels.len(), 10);
        assert!(levels.iter().all(|(_, l)| l == 3));

        let (cores, levels) = triangle_core_decompose(&cycle(6));
        assert_eq!(cores.core_numbers(), &[0; 6]);
        assert!(levels.iter().all(|(_, l)| l == 0));
    }

    #[test]
    fn k4_with_pendant() {
        let g =
            Graph::from_dense_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
                .unwrap();
        let (cores, levels) = triangle_core_decompose(&g);
        for (e, l) in levels.iter() {
            let expected = if e.endpoints() == (3, 4) { 0 } else { 2 };
            assert_eq!(l, expected, "edge {e}");
        }
        assert_eq!(cores.core_numbers(), &[2, 2, 2, 2, 0]);
    }

    #[test]
    fn isolated_vertices_get_zero() {
        let g = Graph::from_dense_edges(5, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let (cores, _) = triangle_core_decompose(&g);
        assert_eq!(cores.core_numbers(), &[1, 1, 1, 0, 0]);
        let (cores, levels) = triangle_core_decompose(&Graph::from_dense_edges(3, []).unwrap());
        assert_eq!(cores.core_numbers(), &[0; 3]);
        assert!(levels.is_empty());
    }

    #[test]
    fn truss() {
        let k5 = complete(5);
        assert_eq!(truss_edges(&k5, 5).unwrap().len(), 10);
        assert!(truss_edges(&k5, 6).unwrap().is_empty());
        let c6 = cycle(6);
        assert_eq!(truss_edges(&c6, 2).unwrap(), c6.edges().collect::<Vec<_>>());
        assert!(truss_edges(&c6, 3).unwrap().is_empty());
        assert!(matches!(truss_edges(&k5, 1), Err(Error::Precondition(_))));
    }
}
