//! Graph populations: small named families, exhaustive enumeration of all
//! labeled graphs on `n` vertices, and seeded G(n, p) random graphs.
//!
//! Edge slots are always taken in lexicographic order
//! `(0,1), (0,2), ..., (n-2,n-1)`. In the exhaustive stream bit `i` of the
//! graph id says whether slot `i` is present, so ids are stable across runs.
//! Random graphs draw one Bernoulli(p) per slot from a ChaCha8 generator
//! seeded with [`rand::SeedableRng::seed_from_u64`]; sample `i` of a random
//! population uses seed `seed + i` (wrapping).

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::snap;

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 6;
/// Hard ceiling for the exhaustive stream: 2^21 graphs at n = 7.
pub const MAX_EXHAUSTIVE_CAP: usize = 7;

pub fn complete(n: usize) -> Graph {
    Graph::from_dense_edges(n, edge_slots(n)).expect("slots in range")
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_dense_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("in range")
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_dense_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("in range")
}

/// Edge slots of `n` vertices in lexicographic order.
pub fn edge_slots(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| ((u + 1)..n).map(move |v| (u, v)))
}

/// Number of labeled graphs on `n` vertices, `2^C(n,2)`.
pub fn population_size(n: usize) -> u128 {
    let slots = n * n.saturating_sub(1) / 2;
    1u128.checked_shl(slots as u32).unwrap_or(u128::MAX)
}

/// Every labeled graph on `n` vertices, one per bitmask over edge slots.
pub fn exhaustive_stream(n: usize) -> Result<ExhaustiveStream> {
    exhaustive_stream_capped(n, DEFAULT_EXHAUSTIVE_CAP)
}

/// As [`exhaustive_stream`] with a raised cap, at most [`MAX_EXHAUSTIVE_CAP`].
pub fn exhaustive_stream_capped(n: usize, cap: usize) -> Result<ExhaustiveStream> {
    if cap > MAX_EXHAUSTIVE_CAP {
        return Err(Error::precondition(format!(
            "exhaustive cap {cap} exceeds the maximum of {MAX_EXHAUSTIVE_CAP}"
        )));
    }
    if n == 0 || n > cap {
        return Err(Error::precondition(format!(
            "exhaustive enumeration needs 1 <= n <= {cap}; n = {n} means {} graphs",
            population_size(n)
        )));
    }
    if n > DEFAULT_EXHAUSTIVE_CAP {
        log::warn!(
            "enumerating {} graphs on {n} vertices; this takes a while",
            population_size(n)
        );
    }
    let slots: Vec<(usize, usize)> = edge_slots(n).collect();
    Ok(ExhaustiveStream {
        n,
        total: 1u64 << slots.len(),
        slots,
        next: 0,
    })
}

pub struct ExhaustiveStream {
    n: usize,
    slots: Vec<(usize, usize)>,
    total: u64,
    next: u64,
}

impl ExhaustiveStream {
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }
}

impl Iterator for ExhaustiveStream {
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.total {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &slot)| slot);
        Some((
            mask,
            Graph::from_dense_edges(self.n, edges).expect("slots in range"),
        ))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

/// G(n, p): each edge slot present independently with probability `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::precondition(format!(
            "edge probability {p} is outside [0, 1]"
        )));
    }
    if n == 0 {
        return Err(Error::precondition(
            "random graphs need at least one vertex",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = edge_slots(n).filter(|_| rng.random_bool(p)).collect();
    Graph::from_dense_edges(n, edges)
}

/// Description of a graph population.
#[derive(Clone, Debug, PartialEq)]
pub enum SampleSpec {
    Exhaustive {
        n: usize,
        cap: usize,
    },
    Random {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    File(PathBuf),
}

impl SampleSpec {
    pub fn exhaustive(n: usize) -> Self {
        SampleSpec::Exhaustive {
            n,
            cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }

    pub fn random(n: usize, p: f64, count: usize, seed: u64) -> Self {
        SampleSpec::Random { n, p, count, seed }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            SampleSpec::Exhaustive { n, cap } => exhaustive_stream_capped(n, cap).map(|_| ()),
            SampleSpec::Random { n, p, count, .. } => {
                if count == 0 {
                    return Err(Error::precondition("sample count must be at least 1"));
                }
                if n == 0 {
                    return Err(Error::precondition(
                        "random graphs need at least one vertex",
                    ));
                }
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::precondition(format!(
                        "edge probability {p} is outside [0, 1]"
                    )));
                }
                Ok(())
            }
            SampleSpec::File(_) => Ok(()),
        }
    }

    /// Upper bound on the vertex count of any graph in the population, if
    /// known without reading files.
    pub fn max_vertices(&self) -> Option<usize> {
        match *self {
            SampleSpec::Exhaustive { n, .. } | SampleSpec::Random { n, .. } => Some(n),
            SampleSpec::File(_) => None,
        }
    }
}

/// Deterministic stream of `(graph_id, graph)` for a spec.
pub fn sample_stream(spec: &SampleSpec) -> Result<SampleStream> {
    spec.validate()?;
    Ok(match *spec {
        SampleSpec::Exhaustive { n, cap } => {
            SampleStream::Exhaustive(exhaustive_stream_capped(n, cap)?)
        }
        SampleSpec::Random { n, p, count, seed } => SampleStream::Random {
            n,
            p,
            seed,
            count: count as u64,
            next: 0,
        },
        SampleSpec::File(ref path) => SampleStream::File(Some(snap::load_graph(path)?)),
    })
}

pub enum SampleStream {
    Exhaustive(ExhaustiveStream),
    Random {
        n: usize,
        p: f64,
        seed: u64,
        count: u64,
        next: u64,
    },
    File(Option<Graph>),
}

impl Iterator for SampleStream {
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        match self {
            SampleStream::Exhaustive(s) => s.next(),
            SampleStream::Random {
                n,
                p,
                seed,
                count,
                next,
            } => {
                if *next >= *count {
                    return None;
                }
                let id = *next;
                *next += 1;
                let g = random_gnp(*n, *p, seed.wrapping_add(id)).expect("validated spec");
                Some((id, g))
            }
            SampleStream::File(g) => g.take().map(|g| (0, g)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive_stream(3).unwrap().count(), 8);
        assert_eq!(exhaustive_stream(5).unwrap().count(), 1024);
        assert_eq!(exhaustive_stream(6).unwrap().len(), 32_768);
        assert_eq!(exhaustive_stream(1).unwrap().count(), 1);
    }

    #[test]
    fn exhaustive_graphs_are_distinct() {
        for n in 2..=5 {
            let mut seen = HashSet::new();
            for (id, g) in exhaustive_stream(n).unwrap() {
                let mask: u64 = edge_slots(n)
                    .enumerate()
                    .filter(|(_, (u, v))| g.has_edge(*u, *v))
                    .map(|(i, _)| 1 << i)
                    .sum();
                assert_eq!(mask, id);
                assert!(seen.insert(mask));
            }
            assert_eq!(seen.len() as u128, population_size(n));
        }
    }

    #[test]
    fn exhaustive_caps() {
        let err = exhaustive_stream(7).err().unwrap().to_string();
        assert!(err.contains("2097152"), "{err}");
        assert!(exhaustive_stream(0).is_err());
        assert_eq!(exhaustive_stream_capped(7, 7).unwrap().len(), 2_097_152);
        assert!(exhaustive_stream_capped(8, 8).is_err());
    }

    #[test]
    fn gnp_extremes() {
        let empty = random_gnp(7, 0.0, 3).unwrap();
        assert_eq!((empty.vertex_count(), empty.edge_count()), (7, 0));
        assert_eq!(random_gnp(7, 1.0, 3).unwrap(), complete(7));
        assert!(random_gnp(7, 1.5, 3).is_err());
        assert!(random_gnp(7, -0.1, 3).is_err());
        assert!(random_gnp(0, 0.5, 3).is_err());
    }

    #[test]
    fn gnp_is_reproducible() {
        assert_eq!(
            random_gnp(20, 0.5, 42).unwrap(),
            random_gnp(20, 0.5, 42).unwrap()
        );
        assert_ne!(
            random_gnp(20, 0.5, 42).unwrap(),
            random_gnp(20, 0.5, 43).unwrap()
        );
    }

    #[test]
    fn random_stream_uses_offset_seeds() {
        let spec = SampleSpec::random(9, 0.5, 5, 100);
        let a: Vec<_> = sample_stream(&spec).unwrap().collect();
        let b: Vec<_> = sample_stream(&spec).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        for (id, g) in a {
            assert_eq!(g, random_gnp(9, 0.5, 100 + id).unwrap());
        }
    }

    #[test]
    fn spec_validation() {
        assert!(SampleSpec::random(9, 0.5, 0, 1).validate().is_err());
        assert!(SampleSpec::random(9, 2.0, 1, 1).validate().is_err());
        assert!(SampleSpec::exhaustive(7).validate().is_err());
        assert!(SampleSpec::Exhaustive { n: 7, cap: 7 }.validate().is_ok());
        assert!(sample_stream(&SampleSpec::File("/nonexistent/graph.txt".into())).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(star(4).degree(0), 4);
    }
}
