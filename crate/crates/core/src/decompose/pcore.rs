use super::{CoreAssignment, Method};
use crate::error::{Error, Result};
use crate::graph::{for_each_common, Graph};

/// Read-only view of the vertex set a property is evaluated against.
#[derive(Clone, Copy)]
pub struct VertexSubset<'a> {
    mask: &'a [bool],
}

impl<'a> VertexSubset<'a> {
    pub fn new(mask: &'a [bool]) -> Self {
        VertexSubset { mask }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.mask[v]
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }
}

/// A vertex property `p(v, U)` for `v` in a vertex subset `U`.
///
/// Generalized cores are only nested when `p` is monotone: growing `U`
/// never lowers `p(v, U)`. [`p_core_decompose`] refuses functions that do
/// not declare it.
pub trait PropertyFunction {
    fn name(&self) -> &str;

    fn is_monotone(&self) -> bool;

    fn evaluate(&self, g: &Graph, v: usize, subset: VertexSubset<'_>) -> f64;
}

/// Degree inside the subset. Its p-cores are the k-cores.
#[derive(Clone, Copy, Debug, Default)]
pub struct Degree;

impl PropertyFunction for Degree {
    fn name(&self) -> &str {
        "degree"
    }

    fn is_monotone(&self) -> bool {
        true
    }

    fn evaluate(&self, g: &Graph, v: usize, subset: VertexSubset<'_>) -> f64 {
        g.neighbors(v)
            .iter()
            .filter(|&&w| subset.contains(w))
            .count() as f64
    }
}

/// Triangles through the vertex inside the subset. Its p-cores are the
/// vertex triangle k-cores.
#[derive(Clone, Copy, Debug, Default)]
pub struct VertexTriangles;

impl PropertyFunction for VertexTriangles {
    fn name(&self) -> &str {
        "triangles"
    }

    fn is_monotone(&self) -> bool {
        true
    }

    fn evaluate(&self, g: &Graph, v: usize, subset: VertexSubset<'_>) -> f64 {
        let nv = g.neighbors(v);
        let mut count = 0usize;
        for &w in nv.iter().filter(|&&w| subset.contains(w)) {
            for_each_common(nv, g.neighbors(w), |i, _| {
                let x = nv[i];
                if x > w && subset.contains(x) {
                    count += 1;
                }
            });
        }
        count as f64
    }
}

/// Looks up a built-in property by name together with the integer level
/// grid that covers every value it can take on `g`.
pub fn builtin_property(
    name: &str,
    g: &Graph,
) -> Option<(Box<dyn PropertyFunction + Send + Sync>, Vec<f64>)> {
    let n = g.vertex_count();
    match name {
        "degree" => Some((Box::new(Degree), integer_levels(n.saturating_sub(1)))),
        "triangles" => {
            let max = n.saturating_sub(1) * n.saturating_sub(2) / 2;
            Some((Box::new(VertexTriangles), integer_levels(max)))
        }
        _ => None,
    }
}

/// `0.0, 1.0, ..., max as f64`.
pub fn integer_levels(max: usize) -> Vec<f64> {
    (0..=max).map(|t| t as f64).collect()
}

/// Generalized core decomposition over an ascending grid of levels.
///
/// The p-core at level `t` is found by repeatedly deleting vertices with
/// `p(v, current) < t` until none remain; with a monotone `p` it is contained
/// in the core of every lower level, so each level starts from the previous
/// one and the scan stops once a core comes out empty. A vertex's core
/// number is the index in `levels` of the highest level whose core holds
/// it. Vertices outside even the first level's core also report 0.
pub fn p_core_decompose(
    g: &Graph,
    p: &dyn PropertyFunction,
    levels: &[f64],
) -> Result<CoreAssignment> {
    if !p.is_monotone() {
        return Err(Error::precondition(format!(
            "property function {:?} is not declared monotone; its cores need not be nested",
            p.name()
        )));
    }
    if levels.is_empty() {
        return Err(Error::precondition("level grid is empty"));
    }
    if levels.iter().any(|t| !t.is_finite()) || levels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::precondition(
            "level grid must be finite and strictly ascending",
        ));
    }

    let n = g.vertex_count();
    let mut inside = vec![true; n];
    let mut core = vec![0; n];
    for (index, &t) in levels.iter().enumerate() {
        loop {
            let mut removed = false;
            for v in 0..n {
                if inside[v] && p.evaluate(g, v, VertexSubset::new(&inside)) < t {
                    inside[v] = false;
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        let mut any = false;
        for v in (0..n).filter(|&v| inside[v]) {
            core[v] = index;
            any = true;
        }
        if !any {
            break;
        }
    }
    Ok(CoreAssignment::new(
        Method::PCore(p.name().to_string()),
        core,
    ))
}
