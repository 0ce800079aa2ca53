//! Exhaustive references and seeded generators.
//!
//! Randomness comes from PCG64 (`rand_pcg::Pcg64`, the XSL-RR 128/64
//! variant) seeded with `seed_from_u64`, so a seed gives the same output on
//! every platform.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use thiserror::Error;

use crate::model::{
    count_crossings_pairwise, enumerate_perfect_matchings, CrossingCount, Instance, Matching,
};
use crate::reduction::SourceGraph;
use crate::solver::decompose_components;
use crate::ValidationReport;

/// Largest source graph the cover oracle accepts.
pub const MAX_VC_VERTICES: usize = 24;
/// Largest perfect-matching count the crossing oracle enumerates.
pub const MAX_MATCHINGS: u64 = 1 << 20;
/// How many samples a CAM generator draws before giving up.
pub const MAX_RESAMPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("{what} is {actual}, above the oracle limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: u64,
        limit: u64,
    },
    #[error("invalid instance: {0}")]
    Invalid(ValidationReport),
    #[error("unsatisfiable generator config: {0}")]
    Unsatisfiable(String),
}

/// Exact minimum vertex cover, trying subsets by increasing size. Among
/// covers of minimum size the one with the smallest bitmask is returned.
pub fn brute_force_min_vertex_cover(
    graph: &SourceGraph,
) -> Result<(usize, BTreeSet<u32>), OracleError> {
    let n = graph.vertex_count();
    if n > MAX_VC_VERTICES {
        return Err(OracleError::GuardExceeded {
            what: "vertex count",
            actual: n as u64,
            limit: MAX_VC_VERTICES as u64,
        });
    }
    let edge_masks: Vec<u32> = graph
        .edges()
        .iter()
        .map(|&(u, v)| (1 << (u - 1)) | (1 << (v - 1)))
        .collect();
    let limit: u64 = 1 << n;
    for size in 0..=n {
        // Gosper's hack walks the size-element subsets in increasing order
        let mut mask: u64 = (1 << size) - 1;
        while mask < limit {
            if edge_masks.iter().all(|&e| mask as u32 & e != 0) {
                let cover = (0..n as u32)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| i + 1)
                    .collect();
                return Ok((size, cover));
            }
            if mask == 0 {
                break;
            }
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    unreachable!("the full vertex set is a cover")
}

/// Exact minimum by enumerating every perfect matching and counting pairs
/// directly. Returns the first minimum in enumeration (lexicographic) order.
pub fn brute_force_min_crossings(
    instance: &Instance,
) -> Result<(CrossingCount, Matching), OracleError> {
    let report = instance.validate();
    if !report.is_valid() {
        return Err(OracleError::Invalid(report));
    }
    let total = matching_count(instance);
    if total > MAX_MATCHINGS {
        return Err(OracleError::GuardExceeded {
            what: "perfect matching count",
            actual: total,
            limit: MAX_MATCHINGS,
        });
    }
    let mut best: Option<(CrossingCount, Matching)> = None;
    for m in enumerate_perfect_matchings(instance) {
        let c = count_crossings_pairwise(instance, &m).expect("enumerated matchings are perfect");
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, m));
        }
    }
    Ok(best.expect("valid instances have a perfect matching"))
}

/// Perfect-matching count, exact up to [`MAX_MATCHINGS`] and `MAX_MATCHINGS + 1`
/// beyond. Degree-2 instances multiply per-component counts; denser ones are
/// counted by a bounded walk.
pub fn matching_count(instance: &Instance) -> u64 {
    if instance.max_degree() > 2 {
        return enumerate_perfect_matchings(instance)
            .take(MAX_MATCHINGS as usize + 1)
            .count() as u64;
    }
    decompose_components(instance)
        .iter()
        .fold(1u64, |acc, c| acc.saturating_mul(c.choice_count))
        .min(MAX_MATCHINGS + 1)
}

/// Every graph on vertices `1..=n`, one per edge subset, in bitmask order
/// over the pairs `(1,2), (1,3), …, (n−1,n)`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SourceGraph> {
    let pairs: Vec<(u32, u32)> = (1..=n as u32)
        .flat_map(|u| (u + 1..=n as u32).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "too many edge subsets to list");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        SourceGraph::new(n, edges).expect("pairs are distinct and in range")
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    RandomVcGraph,
    RandomCamInstance,
}

/// How many edges to draw.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Density {
    /// each possible edge independently
    Probability(f64),
    /// exactly this many distinct edges, uniformly
    Count(usize),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub kind: GeneratorKind,
    /// source vertices for a graph; total vertices (both lines) for an instance
    pub n: usize,
    pub density: Density,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generated {
    Graph(SourceGraph),
    Instance(Instance),
}

pub fn generate(config: &GeneratorConfig) -> Result<Generated, OracleError> {
    match config.kind {
        GeneratorKind::RandomVcGraph => {
            random_graph(config.n, config.density, config.seed).map(Generated::Graph)
        }
        GeneratorKind::RandomCamInstance => {
            random_instance(config.n, config.density, config.seed).map(Generated::Instance)
        }
    }
}

fn check_density(density: Density, possible: usize) -> Result<(), OracleError> {
    match density {
        Density::Probability(p) if !(0.0..=1.0).contains(&p) => Err(OracleError::Unsatisfiable(
            format!("edge probability {p} outside [0, 1]"),
        )),
        Density::Count(m) if m > possible => Err(OracleError::Unsatisfiable(format!(
            "{m} edges requested but only {possible} are possible"
        ))),
        _ => Ok(()),
    }
}

fn sample<T: Copy>(rng: &mut Pcg64, candidates: &[T], density: Density) -> Vec<T> {
    match density {
        Density::Probability(p) => candidates
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(p))
            .collect(),
        Density::Count(m) => candidates.choose_multiple(rng, m).copied().collect(),
    }
}

pub fn random_graph(n: usize, density: Density, seed: u64) -> Result<SourceGraph, OracleError> {
    let pairs: Vec<(u32, u32)> = (1..=n as u32)
        .flat_map(|u| (u + 1..=n as u32).map(move |v| (u, v)))
        .collect();
    check_density(density, pairs.len())?;
    let mut rng = Pcg64::seed_from_u64(seed);
    Ok(SourceGraph::new(n, sample(&mut rng, &pairs, density))
        .expect("pairs are distinct and in range"))
}

/// `n / 2` vertices per line; samples until the instance validates.
pub fn random_instance(n: usize, density: Density, seed: u64) -> Result<Instance, OracleError> {
    if n % 2 == 1 {
        return Err(OracleError::Unsatisfiable(format!(
            "{n} vertices cannot be perfectly matched"
        )));
    }
    let side = n / 2;
    let pairs: Vec<(u32, u32)> = (1..=side as u32)
        .flat_map(|t| (1..=side as u32).map(move |b| (t, b)))
        .collect();
    check_density(density, pairs.len())?;
    match density {
        Density::Probability(p) if p == 0.0 && side > 0 => {
            return Err(OracleError::Unsatisfiable(
                "edge probability 0 admits no perfect matching".into(),
            ));
        }
        Density::Count(m) if m < side => {
            return Err(OracleError::Unsatisfiable(format!(
                "{m} edges cannot cover {side} vertices per line"
            )));
        }
        _ => {}
    }
    let mut rng = Pcg64::seed_from_u64(seed);
    for _ in 0..MAX_RESAMPLES {
        let mut edges = sample(&mut rng, &pairs, density);
        edges.sort_unstable();
        let instance = Instance::new(side, side, edges);
        if instance.validate().is_valid() {
            return Ok(instance);
        }
    }
    Err(OracleError::Unsatisfiable(format!(
        "no valid instance in {MAX_RESAMPLES} samples"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_oracle_small_cases() {
        assert_eq!(
            brute_force_min_vertex_cover(&SourceGraph::complete(3))
                .unwrap()
                .0,
            2
        );
        assert_eq!(
            brute_force_min_vertex_cover(&SourceGraph::path(2)).unwrap(),
            (1, BTreeSet::from([1]))
        );
        assert_eq!(
            brute_force_min_vertex_cover(&SourceGraph::new(4, []).unwrap())
                .unwrap()
                .0,
            0
        );
        assert_eq!(
            brute_force_min_vertex_cover(&SourceGraph::cycle(5))
                .unwrap()
                .0,
            3
        );
        assert!(matches!(
            brute_force_min_vertex_cover(&SourceGraph::new(25, []).unwrap()),
            Err(OracleError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn cover_witness_is_a_cover() {
        for g in all_graphs(4) {
            let (size, cover) = brute_force_min_vertex_cover(&g).unwrap();
            assert_eq!(cover.len(), size);
            assert!(g.is_cover(&cover));
        }
    }

    #[test]
    fn all_graphs_counts() {
        assert_eq!(all_graphs(5).count(), 1024);
        assert_eq!(all_graphs(0).count(), 1);
    }

    #[test]
    fn crossing_oracle() {
        assert_eq!(
            brute_force_min_crossings(&Instance::identity(5)).unwrap().0,
            CrossingCount(0)
        );
        let k33 = Instance::new(
            3,
            3,
            (1..=3).flat_map(|t| (1..=3).map(move |b| (t, b))).collect(),
        );
        let (c, m) = brute_force_min_crossings(&k33).unwrap();
        assert_eq!(c, CrossingCount(0));
        assert_eq!(m.bottoms(), vec![1, 2, 3]);
        assert!(matches!(
            brute_force_min_crossings(&Instance::new(2, 2, vec![(1, 1)])),
            Err(OracleError::Invalid(_))
        ));
    }

    #[test]
    fn crossing_oracle_guard() {
        let complete = |n: u32| {
            Instance::new(
                n as usize,
                n as usize,
                (1..=n).flat_map(|t| (1..=n).map(move |b| (t, b))).collect(),
            )
        };
        assert_eq!(matching_count(&complete(6)), 720);
        assert_eq!(matching_count(&complete(10)), MAX_MATCHINGS + 1);
        assert!(matches!(
            brute_force_min_crossings(&complete(10)),
            Err(OracleError::GuardExceeded { .. })
        ));
        // 21 disjoint 4-cycles: 2^21 matchings
        let cycles: Vec<(u32, u32)> = (0..21u32)
            .flat_map(|i| {
                let (a, b) = (2 * i + 1, 2 * i + 2);
                [(a, a), (a, b), (b, a), (b, b)]
            })
            .collect();
        assert_eq!(
            matching_count(&Instance::new(42, 42, cycles)),
            MAX_MATCHINGS + 1
        );
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_graph(8, Density::Probability(0.3), 7).unwrap();
        let b = random_graph(8, Density::Probability(0.3), 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            random_graph(5, Density::Probability(1.0), 3).unwrap(),
            SourceGraph::complete(5)
        );
        assert_eq!(
            random_graph(6, Density::Count(4), 1).unwrap().edges().len(),
            4
        );
        assert!(random_graph(3, Density::Count(4), 1).is_err());
        assert!(random_graph(3, Density::Probability(1.5), 1).is_err());
    }

    #[test]
    fn cam_generator_validates() {
        for seed in 0..20 {
            let inst = random_instance(10, Density::Probability(0.3), seed).unwrap();
            assert!(inst.validate().is_valid());
            assert_eq!(
                inst,
                random_instance(10, Density::Probability(0.3), seed).unwrap()
            );
        }
        assert!(random_instance(9, Density::Probability(0.5), 1).is_err());
        assert!(random_instance(6, Density::Count(2), 1).is_err());
        assert!(random_instance(4, Density::Probability(0.0), 1).is_err());
    }
}
