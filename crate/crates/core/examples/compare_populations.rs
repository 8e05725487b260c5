//! Mean metrics of the three decompositions over whole graph populations:
//! every labeled graph on 5 vertices, then seeded G(n, 1/2) samples.

use peelcore::generators::sample_stream;
use peelcore::metrics::MeanAggregator;
use peelcore::prelude::*;

fn summarize(title: &str, spec: &SampleSpec) -> Result<()> {
    let mut agg = MeanAggregator::new();
    for (_, g) in sample_stream(spec)? {
        for method in Method::PEELING {
            agg.add(&report(&g, &decompose(&g, &method)?)?);
        }
    }
    println!("{title}");
    println!(
        "  {:>9} {:>8} {:>8} {:>8} {:>7} {:>6}",
        "method", "best", "density", "highest", "levels", "rms"
    );
    for m in agg.finish()? {
        println!(
            "  {:>9} {:>8.3} {:>8.4} {:>8.3} {:>7.3} {:>6.3}",
            m.method.to_string(),
            m.best_level_size,
            m.best_level_clique_density.unwrap_or(f64::NAN),
            m.highest_core_number,
            m.level_number,
            m.rms
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    summarize("all 1024 graphs on 5 vertices", &SampleSpec::exhaustive(5))?;
    for n in [9, 15] {
        summarize(
            &format!("1000 G({n}, 0.5) graphs, seed 0"),
            &SampleSpec::random(n, 0.5, 1000, 0),
        )?;
    }
    Ok(())
}
