use super::{CoreAssignment, Method, Worklist};
use crate::graph::Graph;

/// Core number of every vertex: the largest `k` such that the vertex is in
/// the maximal subgraph of minimum degree `k`. Isolated vertices get 0.
pub fn k_core_decompose(g: &Graph) -> CoreAssignment {
    const ALIVE: usize = usize::MAX;
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    // a vertex is still in the graph while its core is unassigned
    let mut core = vec![ALIVE; n];
    let mut remaining = n;
    let mut work = Worklist::new(n);

    let mut k = 0;
    while remaining > 0 {
        k += 1;
        for v in (0..n).filter(|&v| core[v] == ALIVE) {
            work.push(v);
        }
        while let Some(v) = work.pop() {
            if degree[v] >= k {
                continue;
            }
            core[v] = k - 1;
            remaining -= 1;
            for &w in g.neighbors(v) {
                if core[w] == ALIVE {
                    degree[w] -= 1;
                    work.push(w);
                }
            }
        }
    }
    CoreAssignment::new(Method::KCore, core)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, star};

    #[test]
    fn families() {
        assert_eq!(k_core_decompose(&complete(5)).core_numbers(), &[4; 5]);
        assert_eq!(k_core_decompose(&cycle(6)).core_numbers(), &[2; 6]);
        assert_eq!(k_core_decompose(&star(4)).core_numbers(), &[1; 5]);
    }

    #[test]
    fn k4_with_pendant() {
        let g =
            Graph::from_dense_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
                .unwrap();
        assert_eq!(k_core_decompose(&g).core_numbers(), &[3, 3, 3, 3, 1]);
    }

    #[test]
    fn isolated_and_empty() {
        let g = Graph::from_dense_edges(4, [(0, 1)]).unwrap();
        assert_eq!(k_core_decompose(&g).core_numbers(), &[1, 1, 0, 0]);
        assert!(k_core_decompose(&Graph::empty()).core_numbers().is_empty());
    }
}
