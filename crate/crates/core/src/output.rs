//! CSV writers for assignments, reports and curves.
//!
//! Vertices are always written with their original labels.

use std::io::Write;

use serde::Serialize;

use crate::decompose::{CoreAssignment, EdgeLevelAssignment, Method};
use crate::error::Result;
use crate::graph::{Graph, Label};
use crate::metrics::{DecompositionReport, MeanReport};

fn finish<W: Write>(mut w: csv::Writer<W>) -> Result<()> {
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// `vertex,core_number`, one row per vertex, sorted by label.
pub fn write_core_assignment<W: Write>(g: &Graph, a: &CoreAssignment, out: W) -> Result<()> {
    let mut rows: Vec<(Label, usize)> = (0..g.vertex_count())
        .map(|v| (g.label(v), a.core_number(v)))
        .collect();
    rows.sort_unstable();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["vertex", "core_number"])?;
    for (label, core) in rows {
        w.serialize((label, core))?;
    }
    finish(w)
}

/// `u,v,level` with `u < v` as labels, sorted.
pub fn write_edge_levels<W: Write>(g: &Graph, levels: &EdgeLevelAssignment, out: W) -> Result<()> {
    let mut rows: Vec<(Label, Label, usize)> = levels
        .iter()
        .map(|(e, level)| {
            let (a, b) = (g.label(e.u()), g.label(e.v()));
            (a.min(b), a.max(b), level)
        })
        .collect();
    rows.sort_unstable();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["u", "v", "level"])?;
    for row in rows {
        w.serialize(row)?;
    }
    finish(w)
}

#[derive(Serialize)]
struct ReportRecord {
    graph_id: u64,
    method: String,
    vertex_count: usize,
    best_level_size: usize,
    best_level_clique_density: Option<f64>,
    highest_core_number: usize,
    level_number: usize,
    rms: f64,
}

/// Streams report rows; the header is written with the first row.
pub struct ReportWriter<W: Write> {
    inner: csv::Writer<W>,
}

impl<W: Write> ReportWriter<W> {
    pub fn new(out: W) -> Self {
        ReportWriter {
            inner: csv::Writer::from_writer(out),
        }
    }

    pub fn append(&mut self, graph_id: u64, r: &DecompositionReport) -> Result<()> {
        self.inner.serialize(ReportRecord {
            graph_id,
            method: r.method.to_string(),
            vertex_count: r.vertex_count,
            best_level_size: r.best_level_size,
            best_level_clique_density: r.best_level_clique_density,
            highest_core_number: r.highest_core_number,
            level_number: r.level_number,
            rms: r.rms,
        })?;
        Ok(())
    }

    pub fn finish(self) -> Result<()> {
        finish(self.inner)
    }
}

/// One row per `(graph, method)`; an undefined density is an empty field.
pub fn write_reports<'a, W, I>(reports: I, out: W) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = (u64, &'a DecompositionReport)>,
{
    let mut w = ReportWriter::new(out);
    for (graph_id, r) in reports {
        w.append(graph_id, r)?;
    }
    w.finish()
}

/// Streams curve points in long format `graph_id,method,k,size`.
pub struct CurveWriter<W: Write> {
    inner: csv::Writer<W>,
    distinct_only: bool,
}

impl<W: Write> CurveWriter<W> {
    pub fn new(out: W, distinct_only: bool) -> Result<Self> {
        let mut inner = csv::Writer::from_writer(out);
        inner.write_record(["graph_id", "method", "k", "size"])?;
        Ok(CurveWriter {
            inner,
            distinct_only,
        })
    }

    pub fn append(&mut self, graph_id: u64, r: &DecompositionReport) -> Result<()> {
        let method = r.method.to_string();
        let curve = if self.distinct_only {
            &r.distinct_core_size_curve
        } else {
            &r.core_size_curve
        };
        for &(k, size) in curve {
            self.inner.serialize((graph_id, &method, k, size))?;
        }
        Ok(())
    }

    pub fn finish(self) -> Result<()> {
        finish(self.inner)
    }
}

pub fn write_curves<'a, W, I>(reports: I, distinct_only: bool, out: W) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = (u64, &'a DecompositionReport)>,
{
    let mut w = CurveWriter::new(out, distinct_only)?;
    for (graph_id, r) in reports {
        w.append(graph_id, r)?;
    }
    w.finish()
}

#[derive(Serialize)]
struct MeanRecord {
    method: String,
    graphs: usize,
    best_level_size: f64,
    best_level_clique_density: Option<f64>,
    density_graphs: usize,
    highest_core_number: f64,
    level_number: f64,
    rms: f64,
}

pub fn write_mean_reports<W: Write>(means: &[MeanReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for m in means {
        w.serialize(MeanRecord {
            method: m.method.to_string(),
            graphs: m.graphs,
            best_level_size: m.best_level_size,
            best_level_clique_density: m.best_level_clique_density,
            density_graphs: m.density_graphs,
            highest_core_number: m.highest_core_number,
            level_number: m.level_number,
            rms: m.rms,
        })?;
    }
    finish(w)
}

/// Long format `method,k,mean_size`.
pub fn write_mean_curves<W: Write>(
    means: &[MeanReport],
    distinct_only: bool,
    out: W,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["method", "k", "mean_size"])?;
    for m in means {
        let method = m.method.to_string();
        let curve = if distinct_only {
            m.distinct_core_size_curve()
        } else {
            m.core_size_curve.clone()
        };
        for (k, size) in curve {
            w.serialize((&method, k, size))?;
        }
    }
    finish(w)
}

/// File-name form of a method: `pcore:degree` becomes `pcore-degree`.
pub fn file_stem(method: &Method) -> String {
    method.to_string().replace(':', "-")
}
