//! Execution-time measurement and growth-rate fitting.
//!
//! Every graph of a cell is generated before its clock starts; the timed
//! region holds the decomposition calls over those graphs and nothing else,
//! and the mean is that time divided by the sample count. The whole grid is
//! swept [`TIMING_PASSES`] times, each cell opening with one untimed warm-up
//! call, and each cell keeps its fastest pass since preemption only ever
//! adds time. Everything runs on the calling thread, after one untimed pass
//! over the smallest size.

use std::hint::black_box;
use std::io::Write;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::decompose::{decompose, Method};
use crate::error::{Error, Result};
use crate::generators::random_gnp;
use crate::graph::Graph;

pub const TIMING_PASSES: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct TimingRow {
    pub n: usize,
    pub method: Method,
    pub mean_seconds: f64,
    pub samples: usize,
}

impl TimingRow {
    pub fn per_n2(&self) -> f64 {
        self.mean_seconds / (self.n as f64).powi(2)
    }

    pub fn per_n3(&self) -> f64 {
        self.mean_seconds / (self.n as f64).powi(3)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TimingTable {
    pub rows: Vec<TimingRow>,
}

/// Runs `f` once and returns its result with the wall time it took.
#[inline]
pub fn time_call<R>(f: impl FnOnce() -> R) -> (R, Duration) {
    let start = Instant::now();
    let out = black_box(f());
    (out, start.elapsed())
}

/// Mean decomposition time of the three peeling methods on `samples`
/// G(n, p) graphs for each `n`. Graph `i` uses seed `seed + i`.
pub fn time_methods(n_values: &[usize], samples: usize, p: f64, seed: u64) -> Result<TimingTable> {
    time_methods_for(n_values, samples, p, seed, &Method::PEELING)
}

pub fn time_methods_for(
    n_values: &[usize],
    samples: usize,
    p: f64,
    seed: u64,
    methods: &[Method],
) -> Result<TimingTable> {
    if samples == 0 {
        return Err(Error::precondition(
            "benchmark needs at least one sample per size",
        ));
    }
    if n_values.is_empty() || methods.is_empty() {
        return Err(Error::precondition(
            "benchmark needs at least one size and one method",
        ));
    }
    let generate = |n: usize| -> Result<Vec<Graph>> {
        (0..samples as u64)
            .map(|i| random_gnp(n, p, seed.wrapping_add(i)))
            .collect()
    };
    // untimed pass so the first cells are not measured on a cold cache;
    // it also surfaces unknown methods before any clock starts
    let smallest = *n_values.iter().min().unwrap();
    for g in &generate(smallest)? {
        for method in methods {
            black_box(decompose(g, method)?);
        }
    }
    // best[i][j] is the fastest pass for n_values[i] and methods[j]
    let mut best = vec![vec![Duration::MAX; methods.len()]; n_values.len()];
    for pass in 0..TIMING_PASSES {
        // alternate the sweep direction so slow drift in machine speed
        // does not line up with n
        let order: Vec<usize> = if pass % 2 == 0 {
            (0..n_values.len()).collect()
        } else {
            (0..n_values.len()).rev().collect()
        };
        for i in order {
            let graphs = generate(n_values[i])?;
            for (j, method) in methods.iter().enumerate() {
                black_box(decompose(&graphs[0], method)?);
                let (out, took) = time_call(|| -> Result<()> {
                    for g in &graphs {
                        black_box(decompose(g, method)?);
                    }
                    Ok(())
                });
                out?;
                best[i][j] = best[i][j].min(took);
            }
        }
    }
    let mut table = TimingTable::default();
    for (i, &n) in n_values.iter().enumerate() {
        for (j, method) in methods.iter().enumerate() {
            table.rows.push(TimingRow {
                n,
                method: method.clone(),
                mean_seconds: best[i][j].as_secs_f64() / samples as f64,
                samples,
            });
        }
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExponentFit {
    pub method: Method,
    pub exponent: f64,
    pub points: usize,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let len = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mean_x).powi(2)).sum();
    sxy / sxx
}

/// Fitted growth exponent of the mean time in `n`, per method, in the
/// order methods first appear in the table.
pub fn complexity_check(table: &TimingTable) -> Result<Vec<ExponentFit>> {
    let mut methods: Vec<&Method> = Vec::new();
    for row in &table.rows {
        if !methods.contains(&&row.method) {
            methods.push(&row.method);
        }
    }
    if methods.is_empty() {
        return Err(Error::precondition("timing table is empty"));
    }
    methods
        .into_iter()
        .map(|method| {
            let mut points: Vec<(f64, f64)> = table
                .rows
                .iter()
                .filter(|r| &r.method == method)
                .map(|r| (r.n as f64, r.mean_seconds))
                .collect();
            points.sort_by(|a, b| a.0.total_cmp(&b.0));
            points.dedup_by(|a, b| a.0 == b.0);
            if points.len() < 4 {
                return Err(Error::precondition(format!(
                    "{method}: exponent fit needs at least 4 distinct sizes, got {}",
                    points.len()
                )));
            }
            if points.iter().any(|&(_, t)| t <= 0.0) {
                return Err(Error::precondition(format!(
                    "{method}: non-positive mean time, cannot fit"
                )));
            }
            Ok(ExponentFit {
                method: method.clone(),
                exponent: log_log_slope(&points),
                points: points.len(),
            })
        })
        .collect()
}

#[derive(Serialize)]
struct TimingRecord<'a> {
    n: usize,
    method: &'a str,
    mean_seconds: f64,
    per_n2: f64,
    per_n3: f64,
}

/// CSV with header `n,method,mean_seconds,per_n2,per_n3`.
pub fn write_timing_csv<W: Write>(table: &TimingTable, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in &table.rows {
        let method = row.method.to_string();
        w.serialize(TimingRecord {
            n: row.n,
            method: &method,
            mean_seconds: row.mean_seconds,
            per_n2: row.per_n2(),
            per_n3: row.per_n3(),
        })?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

#[derive(Serialize)]
struct ExponentRecord<'a> {
    method: &'a str,
    exponent: f64,
    points: usize,
}

/// CSV with header `method,exponent,points`.
pub fn write_exponents_csv<W: Write>(fits: &[ExponentFit], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for fit in fits {
        let method = fit.method.to_string();
        w.serialize(ExponentRecord {
            method: &method,
            exponent: fit.exponent,
            points: fit.points,
        })?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn power_law(c: f64, exponent: i32, method: Method) -> TimingTable {
        TimingTable {
            rows: (10..=40)
                .map(|n| TimingRow {
                    n,
                    method: method.clone(),
                    mean_seconds: c * (n as f64).powi(exponent),
                    samples: 1,
                })
                .collect(),
        }
    }

    #[test]
    fn recovers_exact_power_laws() {
        let mut table = power_law(3e-9, 2, Method::KCore);
        table
            .rows
            .extend(power_law(5e-10, 3, Method::TriangleCore).rows);
        let fits = complexity_check(&table).unwrap();
        assert_eq!(fits[0].method, Method::KCore);
        assert!((fits[0].exponent - 2.0).abs() < 0.01);
        assert!((fits[1].exponent - 3.0).abs() < 0.01);
        assert_eq!(fits[1].points, 31);
    }

    #[test]
    fn refuses_degenerate_fits() {
        let mut table = power_law(1.0, 2, Method::KCore);
        table.rows.truncate(3);
        assert!(matches!(
            complexity_check(&table),
            Err(Error::Precondition(_))
        ));
        assert!(complexity_check(&TimingTable::default()).is_err());
    }

    #[test]
    fn single_sample_mean_is_that_sample() {
        let table = time_methods(&[8, 9], 1, 0.5, 7).unwrap();
        assert_eq!(table.rows.len(), 6);
        assert!(table
            .rows
            .iter()
            .all(|r| r.samples == 1 && r.mean_seconds > 0.0));
    }

    #[test]
    fn refuses_zero_samples() {
        assert!(time_methods(&[10], 0, 0.5, 1).is_err());
        assert!(time_methods(&[], 3, 0.5, 1).is_err());
    }

    #[test]
    fn timing_csv_columns() {
        let table = power_law(1.0, 2, Method::KCore);
        let mut buf = Vec::new();
        write_timing_csv(&table, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,method,mean_seconds,per_n2,per_n3"));
        assert_eq!(lines.next(), Some("10,kcore,100.0,1.0,0.1"));
    }
}
