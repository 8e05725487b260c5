//! Edge levels of the triangle core and the k-trusses they encode.

use peelcore::generators::complete;
use peelcore::prelude::*;

fn main() -> Result<()> {
    // K5 with a triangle hanging off vertex 4 and a pendant edge
    let mut edges: Vec<(usize, usize)> = complete(5).edges().map(|e| e.endpoints()).collect();
    edges.extend([(4, 5), (4, 6), (5, 6), (6, 7)]);
    let g = Graph::from_dense_edges(8, edges)?;

    let (cores, levels) = triangle_core_decompose(&g);
    for (e, level) in levels.iter() {
        println!("edge {e}: level {level}, truss number {}", level + 2);
    }
    println!("vertex cores {:?}", cores.core_numbers());
    for k in 2..=5 {
        let truss = truss_edges(&g, k)?;
        println!("{k}-truss: {} edges", truss.len());
    }
    Ok(())
}
