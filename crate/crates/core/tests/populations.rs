use peelcore::decompose::oracle_core_numbers;
use peelcore::generators::{exhaustive_stream, random_gnp, sample_stream};
use peelcore::metrics::{best_level, best_level_clique_density, level_number, MeanAggregator};
use peelcore::prelude::*;
use proptest::prelude::*;
use statrs::distribution::{Binomial, ChiSquared, ContinuousCDF, Discrete};

#[test]
fn edge_counts_follow_the_binomial() {
    let (n, p, samples) = (9usize, 0.5, 10_000u64);
    let slots = (n * (n - 1) / 2) as u64;
    let mut observed = vec![0f64; slots as usize + 1];
    for seed in 0..samples {
        observed[random_gnp(n, p, seed).unwrap().edge_count()] += 1.0;
    }
    let law = Binomial::new(p, slots).unwrap();

    // pool sparse tails so every bin expects at least 5 graphs
    let mut bins: Vec<(f64, f64)> = Vec::new();
    let (mut obs, mut exp) = (0.0, 0.0);
    for (m, &count) in observed.iter().enumerate() {
        obs += count;
        exp += law.pmf(m as u64) * samples as f64;
        if exp >= 5.0 {
            bins.push((obs, exp));
            (obs, exp) = (0.0, 0.0);
        }
    }
    if let Some(last) = bins.last_mut() {
        last.0 += obs;
        last.1 += exp;
    }
    let stat: f64 = bins.iter().map(|(o, e)| (o - e).powi(2) / e).sum();
    let dof = (bins.len() - 1) as f64;
    let p_value = 1.0 - ChiSquared::new(dof).unwrap().cdf(stat);
    assert!(
        p_value > 0.001,
        "chi-square {stat:.2} on {dof} dof, p = {p_value:.5}"
    );
}

#[test]
fn mean_edge_count_matches_np() {
    let (n, p) = (45usize, 0.3);
    let slots = (n * (n - 1) / 2) as f64;
    let samples = 2000;
    let mean = (0..samples)
        .map(|s| random_gnp(n, p, s).unwrap().edge_count() as f64)
        .sum::<f64>()
        / samples as f64;
    let sd = (slots * p * (1.0 - p) / samples as f64).sqrt();
    assert!(
        (mean - slots * p).abs() < 5.0 * sd,
        "mean {mean} vs {}",
        slots * p
    );
}

#[test]
fn streams_are_reproducible() {
    let spec = SampleSpec::random(11, 0.4, 50, 99);
    let a: Vec<_> = sample_stream(&spec).unwrap().collect();
    let b: Vec<_> = sample_stream(&spec).unwrap().collect();
    assert_eq!(a, b);
    let ids: Vec<u64> = sample_stream(&SampleSpec::exhaustive(5))
        .unwrap()
        .map(|(id, _)| id)
        .collect();
    assert_eq!(ids, (0..1024).collect::<Vec<_>>());
}

#[test]
fn population_means_match_the_oracle_pipeline() {
    let mut fast = MeanAggregator::new();
    let mut slow = MeanAggregator::new();
    for (_, g) in exhaustive_stream(5).unwrap() {
        for method in Method::PEELING {
            fast.add(&report(&g, &decompose(&g, &method).unwrap()).unwrap());
            slow.add(&report(&g, &oracle_core_numbers(&g, &method).unwrap()).unwrap());
        }
    }
    let (fast, slow) = (fast.finish().unwrap(), slow.finish().unwrap());
    assert_eq!(fast, slow);
    assert!(fast.iter().all(|m| m.graphs == 1024));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn density_is_one_exactly_on_cliques(n in 2usize..12, p in 0.3f64..=1.0, seed in any::<u64>()) {
        let g = random_gnp(n, p, seed).unwrap();
        for method in Method::PEELING {
            let best = best_level(&decompose(&g, &method).unwrap()).unwrap();
            if best.len() >= 2 {
                let density = best_level_clique_density(&g, &best).unwrap();
                prop_assert_eq!(density == 1.0, g.is_clique(&best).unwrap());
            }
        }
    }

    #[test]
    fn rms_is_bounded_by_level_count(n in 1usize..14, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = random_gnp(n, p, seed).unwrap();
        for method in Method::PEELING {
            let a = decompose(&g, &method).unwrap();
            let r = report(&g, &a).unwrap();
            let levels = level_number(&a).unwrap() as f64;
            prop_assert!(r.rms <= 1.0 + 1e-12);
            prop_assert!(r.rms >= 1.0 / levels.sqrt() - 1e-12);
        }
    }
}
