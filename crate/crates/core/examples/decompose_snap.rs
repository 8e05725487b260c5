//! Loads a SNAP edge list and compares the three peeling decompositions on it.
//!
//!     cargo run --example decompose_snap -- [path/to/edges.txt]
//!
//! Without a path a small built-in graph is used: two 4-cliques joined
//! through a path, with a dangling tail.

use peelcore::metrics::best_level;
use peelcore::prelude::*;
use peelcore::snap::{load_graph, parse_snap};

const BUILTIN: &str = "\
# Nodes: 11 Edges: 16
10\t11\n10\t12\n10\t13\n11\t12\n11\t13\n12\t13
13\t20\n20\t30
30\t31\n30\t32\n30\t33\n31\t32\n31\t33\n32\t33
33\t40\n40\t41
";

fn main() -> Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => load_graph(path)?,
        None => Graph::from_edge_list(parse_snap(BUILTIN)?),
    };
    println!(
        "{} vertices, {} edges, {} triangles",
        g.vertex_count(),
        g.edge_count(),
        g.triangle_count()
    );

    for method in Method::PEELING {
        let a = decompose(&g, &method)?;
        let r = report(&g, &a)?;
        let mut best: Vec<Label> = best_level(&a)?.into_iter().map(|v| g.label(v)).collect();
        best.sort_unstable();
        println!(
            "{:>9}: highest {:>2}, levels {}, rms {:.3}, best community {:?}",
            method.to_string(),
            r.highest_core_number,
            r.level_number,
            r.rms,
            best
        );
    }
    Ok(())
}
