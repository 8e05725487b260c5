//! Generalized cores for a user-supplied vertex property.
//!
//! The property here is the number of subset vertices within two hops of
//! `v`, walking only through the subset. Shrinking the subset can only cut
//! paths, so it is monotone and its p-cores nest.

use peelcore::decompose::{builtin_property, integer_levels};
use peelcore::generators::random_gnp;
use peelcore::prelude::*;

struct TwoHopReach;

impl PropertyFunction for TwoHopReach {
    fn name(&self) -> &str {
        "two-hop"
    }

    fn is_monotone(&self) -> bool {
        true
    }

    fn evaluate(&self, g: &Graph, v: usize, subset: VertexSubset<'_>) -> f64 {
        let mut seen = vec![false; g.vertex_count()];
        seen[v] = true;
        let mut reach = 0;
        for &w in g.neighbors(v).iter().filter(|&&w| subset.contains(w)) {
            if !std::mem::replace(&mut seen[w], true) {
                reach += 1;
            }
            for &x in g.neighbors(w).iter().filter(|&&x| subset.contains(x)) {
                if !std::mem::replace(&mut seen[x], true) {
                    reach += 1;
                }
            }
        }
        reach as f64
    }
}

fn main() -> Result<()> {
    let g = random_gnp(14, 0.2, 3)?;
    let levels = integer_levels(g.vertex_count() - 1);
    let reach = p_core_decompose(&g, &TwoHopReach, &levels)?;
    println!("two-hop cores: {:?}", reach.core_numbers());

    // the built-in degree property gives back the k-core
    let (degree, levels) = builtin_property("degree", &g).expect("built in");
    let by_engine = p_core_decompose(&g, degree.as_ref(), &levels)?;
    assert_eq!(
        by_engine.core_numbers(),
        k_core_decompose(&g).core_numbers()
    );
    println!("degree cores:  {:?}", by_engine.core_numbers());

    // non-integer grids work too; core numbers are grid indices
    let half_steps: Vec<f64> = (0..8).map(|i| i as f64 * 0.5).collect();
    let coarse = p_core_decompose(&g, &TwoHopReach, &half_steps)?;
    println!("on a half-step grid: {:?}", coarse.core_numbers());
    Ok(())
}
