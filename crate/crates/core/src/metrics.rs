//! Quality measures of a decomposition and their population means.
//!
//! Two families: the best community (the level with the highest core
//! number), measured by its size and its clique-density; and how vertices
//! spread over levels, measured by the level number, the RMS of the level
//! sizes, and the core-size curve `k -> |{v : core(v) >= k}|`.
//!
//! RMS is taken over per-level counts `n(k) = |{v : core(v) = k}|`. With
//! cumulative core sizes the value would be at least 1 for any graph whose
//! 1-core is the whole graph, which cannot produce values below 1.

use std::collections::BTreeMap;

use crate::decompose::{CoreAssignment, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionReport {
    pub method: Method,
    pub vertex_count: usize,
    pub best_level_size: usize,
    /// `None` when the best level has fewer than two vertices.
    pub best_level_clique_density: Option<f64>,
    pub highest_core_number: usize,
    pub level_number: usize,
    pub rms: f64,
    pub core_size_curve: Vec<(usize, usize)>,
    pub distinct_core_size_curve: Vec<(usize, usize)>,
}

fn non_empty(a: &CoreAssignment) -> Result<usize> {
    a.highest()
        .ok_or_else(|| Error::precondition("metrics are undefined on an empty graph"))
}

/// Vertices with the highest core number.
pub fn best_level(a: &CoreAssignment) -> Result<Vec<usize>> {
    let top = non_empty(a)?;
    Ok((0..a.vertex_count())
        .filter(|&v| a.core_number(v) == top)
        .collect())
}

/// Edges induced by `s` over `C(|s|, 2)`.
pub fn best_level_clique_density(g: &Graph, s: &[usize]) -> Result<f64> {
    let sub = g.induced_subgraph(s)?;
    let k = sub.vertex_count();
    if k < 2 {
        return Err(Error::precondition(format!(
            "clique-density needs at least 2 vertices, got {k}"
        )));
    }
    Ok(sub.edge_count() as f64 / (k * (k - 1) / 2) as f64)
}

/// Per-level vertex counts, keyed by core number; empty levels are absent.
pub fn level_sizes(a: &CoreAssignment) -> BTreeMap<usize, usize> {
    let mut sizes = BTreeMap::new();
    for &c in a.core_numbers() {
        *sizes.entry(c).or_insert(0) += 1;
    }
    sizes
}

/// Number of distinct core numbers.
pub fn level_number(a: &CoreAssignment) -> Result<usize> {
    non_empty(a)?;
    Ok(level_sizes(a).len())
}

/// `sqrt(sum_k (n(k) / n)^2)` over per-level counts.
pub fn rms(a: &CoreAssignment) -> Result<f64> {
    non_empty(a)?;
    let n = a.vertex_count() as f64;
    let sum: f64 = level_sizes(a)
        .values()
        .map(|&c| {
            let share = c as f64 / n;
            share * share
        })
        .sum();
    Ok(sum.sqrt())
}

/// `(k, |{v : core(v) >= k}|)` for `k = 0..=highest`. With `distinct_only`,
/// only values of `k` that some vertex has exactly are kept.
pub fn core_size_curve(a: &CoreAssignment, distinct_only: bool) -> Vec<(usize, usize)> {
    let Some(top) = a.highest() else {
        return Vec::new();
    };
    let sizes = level_sizes(a);
    let mut curve = Vec::with_capacity(top + 1);
    let mut at_least = a.vertex_count();
    for k in 0..=top {
        let here = sizes.get(&k).copied().unwrap_or(0);
        if !distinct_only || here > 0 {
            curve.push((k, at_least));
        }
        at_least -= here;
    }
    curve
}

pub fn report(g: &Graph, a: &CoreAssignment) -> Result<DecompositionReport> {
    if g.vertex_count() != a.vertex_count() {
        return Err(Error::precondition(format!(
            "assignment covers {} vertices but the graph has {}",
            a.vertex_count(),
            g.vertex_count()
        )));
    }
    let best = best_level(a)?;
    let density = if best.len() >= 2 {
        Some(best_level_clique_density(g, &best)?)
    } else {
        None
    };
    Ok(DecompositionReport {
        method: a.method().clone(),
        vertex_count: a.vertex_count(),
        best_level_size: best.len(),
        best_level_clique_density: density,
        highest_core_number: non_empty(a)?,
        level_number: level_number(a)?,
        rms: rms(a)?,
        core_size_curve: core_size_curve(a, false),
        distinct_core_size_curve: core_size_curve(a, true),
    })
}

/// Means of the scalar measures over a population, for one method.
#[derive(Clone, Debug, PartialEq)]
pub struct MeanReport {
    pub method: Method,
    pub graphs: usize,
    pub best_level_size: f64,
    /// Mean over the graphs where the density is defined.
    pub best_level_clique_density: Option<f64>,
    pub density_graphs: usize,
    pub highest_core_number: f64,
    pub level_number: f64,
    pub rms: f64,
    /// Pointwise mean of the core-size curves; a graph contributes 0 past
    /// its highest core number.
    pub core_size_curve: Vec<(usize, f64)>,
    /// Values of `k` that are a non-empty level in at least one graph.
    pub populated_levels: Vec<usize>,
}

impl MeanReport {
    /// The mean curve restricted to populated levels.
    pub fn distinct_core_size_curve(&self) -> Vec<(usize, f64)> {
        self.core_size_curve
            .iter()
            .copied()
            .filter(|(k, _)| self.populated_levels.binary_search(k).is_ok())
            .collect()
    }
}

#[derive(Default)]
struct Accumulator {
    graphs: usize,
    best_level_size: f64,
    density: f64,
    density_graphs: usize,
    highest: f64,
    levels: f64,
    rms: f64,
    curve: Vec<f64>,
    populated: Vec<bool>,
}

impl Accumulator {
    fn add(&mut self, r: &DecompositionReport) {
        self.graphs += 1;
        self.best_level_size += r.best_level_size as f64;
        if let Some(d) = r.best_level_clique_density {
            self.density += d;
            self.density_graphs += 1;
        }
        self.highest += r.highest_core_number as f64;
        self.levels += r.level_number as f64;
        self.rms += r.rms;
        if self.curve.len() < r.core_size_curve.len() {
            self.curve.resize(r.core_size_curve.len(), 0.0);
            self.populated.resize(r.core_size_curve.len(), false);
        }
        for &(k, size) in &r.core_size_curve {
            self.curve[k] += size as f64;
        }
        for &(k, _) in &r.distinct_core_size_curve {
            self.populated[k] = true;
        }
    }

    fn finish(self, method: Method) -> MeanReport {
        let g = self.graphs as f64;
        MeanReport {
            method,
            graphs: self.graphs,
            best_level_size: self.best_level_size / g,
            best_level_clique_density: (self.density_graphs > 0)
                .then(|| self.density / self.density_graphs as f64),
            density_graphs: self.density_graphs,
            highest_core_number: self.highest / g,
            level_number: self.levels / g,
            rms: self.rms / g,
            core_size_curve: self
                .curve
                .iter()
                .enumerate()
                .map(|(k, &s)| (k, s / g))
                .collect(),
            populated_levels: self
                .populated
                .iter()
                .enumerate()
                .filter(|(_, &p)| p)
                .map(|(k, _)| k)
                .collect(),
        }
    }
}

/// Groups reports by method and averages each group, in method order.
pub fn aggregate_means<'a, I>(reports: I) -> Result<Vec<MeanReport>>
where
    I: IntoIterator<Item = &'a DecompositionReport>,
{
    let mut groups: BTreeMap<Method, Accumulator> = BTreeMap::new();
    for r in reports {
        groups.entry(r.method.clone()).or_default().add(r);
    }
    if groups.is_empty() {
        return Err(Error::precondition(
            "cannot average an empty set of reports",
        ));
    }
    Ok(groups
        .into_iter()
        .map(|(method, acc)| acc.finish(method))
        .collect())
}

/// Streaming form of [`aggregate_means`] for populations too large to keep.
#[derive(Default)]
pub struct MeanAggregator {
    groups: BTreeMap<Method, Accumulator>,
}

impl MeanAggregator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, r: &DecompositionReport) {
        self.groups.entry(r.method.clone()).or_default().add(r);
    }

    pub fn finish(self) -> Result<Vec<MeanReport>> {
        if self.groups.is_empty() {
            return Err(Error::precondition(
                "cannot average an empty set of reports",
            ));
        }
        Ok(self
            .groups
            .into_iter()
            .map(|(method, acc)| acc.finish(method))
            .collect())
    }
}
