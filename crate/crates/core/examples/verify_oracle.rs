//! Checks the peeling decompositions against the brute-force oracle, then
//! shows what a failure report looks like with a deliberately broken one.

use peelcore::cli::{cmd_verify, verify_with, RunConfig, VerifyOutcome};
use peelcore::prelude::*;

fn main() -> Result<()> {
    for spec in [
        SampleSpec::exhaustive(5),
        SampleSpec::random(10, 0.5, 500, 7),
    ] {
        let summary = cmd_verify(&RunConfig::new(spec.clone(), "verify-out"))?;
        println!(
            "{spec:?}: {} graphs, passed = {}",
            summary.graphs_checked,
            summary.passed()
        );
    }

    // off by one on any vertex of degree 3
    let broken = |g: &Graph, m: &Method| {
        let mut cores = decompose(g, m)?.core_numbers().to_vec();
        if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 3) {
            cores[v] += 1;
        }
        Ok(CoreAssignment::new(m.clone(), cores))
    };
    let summary = verify_with(
        &RunConfig::new(SampleSpec::exhaustive(5), "verify-out"),
        broken,
    )?;
    if let VerifyOutcome::Fail {
        graph_id,
        detail,
        edges,
        reproduce,
        ..
    } = summary.outcome
    {
        println!("broken decomposer caught on graph {graph_id}: {detail}");
        println!("  edges {edges:?}");
        println!("  rerun: {reproduce}");
    }
    Ok(())
}
