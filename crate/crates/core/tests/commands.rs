use std::fs;
use std::path::Path;
use std::process::Command;

use peelcore::cli::{
    cmd_bench, cmd_compare, cmd_decompose, cmd_verify, verify_with, BenchConfig, RunConfig,
    VerifyOutcome,
};
use peelcore::prelude::*;

const K5: &str = "# K5\n1\t2\n1\t3\n1\t4\n1\t5\n2\t3\n2\t4\n2\t5\n3\t4\n3\t5\n4\t5\n";

fn highest_in(path: &Path) -> usize {
    let mut reader = csv::Reader::from_path(path).unwrap();
    reader
        .records()
        .map(|r| r.unwrap()[1].parse::<usize>().unwrap())
        .max()
        .unwrap()
}

#[test]
fn decompose_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("k5.txt");
    fs::write(&input, K5).unwrap();
    let out = dir.path().join("out");
    cmd_decompose(&RunConfig::new(SampleSpec::File(input), &out)).unwrap();
    assert_eq!(highest_in(&out.join("kcore.cores.csv")), 4);
    assert_eq!(highest_in(&out.join("tricore.cores.csv")), 3);
    assert_eq!(highest_in(&out.join("vtricore.cores.csv")), 6);
    let edges = fs::read_to_string(out.join("tricore.edges.csv")).unwrap();
    assert_eq!(edges.lines().count(), 11);
    assert!(edges.lines().skip(1).all(|l| l.ends_with(",3")));
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["vertices"], 5);
    assert_eq!(manifest["edges"], 10);
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "# nothing here\n").unwrap();
    let bin = env!("CARGO_BIN_EXE_peelcore");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let out = run(&[
        "decompose",
        "--input",
        empty.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 2\n3\n").unwrap();
    let out = run(&[
        "decompose",
        "--input",
        bad.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = run(&[
        "bench",
        "--samples",
        "0",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&[
        "verify",
        "--exhaustive",
        "4",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn verify_small_populations() {
    for n in [5, 6] {
        let summary = cmd_verify(&RunConfig::new(SampleSpec::exhaustive(n), "unused")).unwrap();
        assert!(summary.passed());
        assert_eq!(summary.graphs_checked, 1u64 << (n * (n - 1) / 2));
    }
    let too_big = RunConfig::new(SampleSpec::random(13, 0.5, 5, 0), "unused");
    assert!(matches!(cmd_verify(&too_big), Err(Error::Precondition(_))));
}

#[test]
fn corrupted_decomposer_is_caught() {
    let config = RunConfig::new(SampleSpec::exhaustive(5), "unused");
    // wrong whenever the graph has a triangle
    let corrupted = |g: &Graph, m: &Method| {
        let mut cores = decompose(g, m)?.core_numbers().to_vec();
        if g.triangle_count() > 0 {
            cores[0] += 1;
        }
        Ok(CoreAssignment::new(m.clone(), cores))
    };
    let summary = verify_with(&config, corrupted).unwrap();
    let VerifyOutcome::Fail {
        graph_id,
        method,
        reproduce,
        ..
    } = summary.outcome
    else {
        panic!("corruption went unnoticed");
    };
    let first = peelcore::generators::exhaustive_stream(5)
        .unwrap()
        .find(|(_, g)| g.triangle_count() > 0)
        .unwrap()
        .0;
    assert_eq!(graph_id, first);
    assert_eq!(method, Method::KCore);
    assert!(reproduce.contains(&format!("graph id {first}")));
}

#[test]
fn compare_writes_means_and_is_repeatable() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let mut config = RunConfig::new(SampleSpec::exhaustive(5), dir.path());
        config.oracle_verify = true;
        let summary = cmd_compare(&config).unwrap();
        assert_eq!(summary.graphs, 1024);
        assert!(summary.means.iter().all(|m| m.graphs == 1024));
        fs::read(dir.path().join("all.means.csv")).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn bench_smoke_and_refusal() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = BenchConfig {
        n_values: (10..=20).collect(),
        samples: 10,
        p: 0.5,
        seed: 0,
        methods: Method::PEELING.to_vec(),
        out_dir: dir.path().to_path_buf(),
    };
    let summary = cmd_bench(&config).unwrap();
    assert_eq!(summary.table.rows.len(), 33);
    assert_eq!(summary.fits.unwrap().len(), 3);
    assert!(dir.path().join("exponents.csv").exists());
    config.samples = 0;
    assert!(matches!(cmd_bench(&config), Err(Error::Precondition(_))));
}
