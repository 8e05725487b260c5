use super::{CoreAssignment, Method, Worklist};
use crate::graph::{for_each_common, Graph};

/// Vertex triangle k-core decomposition: a vertex's core number is the
/// largest `k` such that it survives repeated removal of vertices lying in
/// fewer than `k` triangles of the remaining graph.
pub fn vertex_triangle_core_decompose(g: &Graph) -> CoreAssignment {
    let n = g.vertex_count();
    let mut triangles: Vec<usize> = (0..n)
        .map(|v| g.triangles_through_vertex(v).expect("in range"))
        .collect();
    let mut alive = vec![true; n];
    let mut core = vec![0; n];
    let mut members: Vec<usize> = (0..n).collect();
    let mut work = Worklist::new(n);

    let mut k = 0;
    while !members.is_empty() {
        k += 1;
        for &v in &members {
            work.push(v);
        }
        while let Some(v) = work.pop() {
            if triangles[v] >= k {
                continue;
            }
            let nv = g.neighbors(v);
            // each surviving triangle {v, w, x} once, with w < x
            for &w in nv {
                if !alive[w] {
                    continue;
                }
                for_each_common(nv, g.neighbors(w), |i, _| {
                    let x = nv[i];
                    if x > w && alive[x] {
                        triangles[w] -= 1;
                        triangles[x] -= 1;
                        work.push(w);
                        work.push(x);
                    }
                });
            }
            core[v] = k - 1;
            alive[v] = false;
        }
        members.retain(|&v| alive[v]);
    }
    CoreAssignment::new(Method::VertexTriangleCore, core)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn families() {
        assert_eq!(
            vertex_triangle_core_decompose(&complete(5)).core_numbers(),
            &[6; 5]
        );
        assert_eq!(
            vertex_triangle_core_decompose(&complete(4)).core_numbers(),
            &[3; 4]
        );
        assert_eq!(
            vertex_triangle_core_decompose(&cycle(6)).core_numbers(),
            &[0; 6]
        );
    }

    #[test]
    fn two_triangles_sharing_an_edge() {
        // 0 and 1 are in 2 triangles, 2 and 3 in 1; once 2 and 3 go at k = 2
        // nothing is left, so everybody ends at 1.
        let g = Graph::from_dense_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(vertex_triangle_core_decompose(&g).core_numbers(), &[1; 4]);
    }
}
