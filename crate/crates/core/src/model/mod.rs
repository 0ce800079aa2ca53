//! Two-layer bipartite instances, perfect matchings and their validation.
//!
//! Vertices are identified with their positions: top vertex `t` is the
//! `t`-th point from the left on the upper line, bottom vertex `b` the
//! `b`-th point on the lower line. Ranks are 1-based.

mod crossings;
mod enumerate;
mod format;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use crossings::{
    count_crossings_fast, count_crossings_pairwise, crossings_between, segments_cross,
};
pub use enumerate::{enumerate_perfect_matchings, PerfectMatchings};
pub use format::{parse_instance, parse_matching, serialize_instance, serialize_matching};

/// A `(top_rank, bottom_rank)` pair.
pub type Edge = (u32, u32);

/// A two-layer bipartite layout with an optional crossing budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub n_top: usize,
    pub n_bottom: usize,
    pub edges: Vec<Edge>,
    pub budget: Option<u64>,
}

impl Instance {
    pub fn new(n_top: usize, n_bottom: usize, edges: Vec<Edge>) -> Self {
        Instance {
            n_top,
            n_bottom,
            edges,
            budget: None,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    /// `n` vertices per line joined straight down: `(i, i)`.
    pub fn identity(n: usize) -> Self {
        Instance::new(n, n, (1..=n as u32).map(|i| (i, i)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n_top + self.n_bottom
    }

    pub fn max_degree(&self) -> usize {
        let mut top = vec![0usize; self.n_top + 1];
        let mut bottom = vec![0usize; self.n_bottom + 1];
        for &(t, b) in &self.edges {
            if let Some(d) = top.get_mut(t as usize) {
                *d += 1;
            }
            if let Some(d) = bottom.get_mut(b as usize) {
                *d += 1;
            }
        }
        top.into_iter().chain(bottom).max().unwrap_or(0)
    }

    pub fn has_edge(&self, edge: Edge) -> bool {
        self.edges.contains(&edge)
    }

    /// Runs every structural and matchability check.
    pub fn validate(&self) -> ValidationReport {
        validate_instance(self)
    }

    /// Adjacency lists, 0-based, neighbours ascending. Out-of-range edges
    /// are skipped.
    pub(crate) fn adjacency(&self) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
        let mut top = vec![Vec::new(); self.n_top];
        let mut bottom = vec![Vec::new(); self.n_bottom];
        for &(t, b) in &self.edges {
            if t == 0 || b == 0 || t as usize > self.n_top || b as usize > self.n_bottom {
                continue;
            }
            top[t as usize - 1].push(b - 1);
            bottom[b as usize - 1].push(t - 1);
        }
        for list in top.iter_mut().chain(bottom.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        (top, bottom)
    }
}

/// A set of top/bottom pairs, kept sorted by top rank.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Matching {
    pairs: Vec<Edge>,
}

impl Matching {
    pub fn new(mut pairs: Vec<Edge>) -> Self {
        pairs.sort_unstable();
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[Edge] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Bottom ranks listed in top-rank order.
    pub fn bottoms(&self) -> Vec<u32> {
        self.pairs.iter().map(|&(_, b)| b).collect()
    }

    /// Checks that this is a perfect matching of `instance` built from its edges.
    pub fn check_against(&self, instance: &Instance) -> Result<(), ModelError> {
        if instance.n_top != instance.n_bottom {
            return Err(ModelError::Unbalanced {
                n_top: instance.n_top,
                n_bottom: instance.n_bottom,
            });
        }
        let edges: BTreeSet<Edge> = instance.edges.iter().copied().collect();
        let mut top_seen = vec![false; instance.n_top + 1];
        let mut bottom_seen = vec![false; instance.n_bottom + 1];
        for &(t, b) in &self.pairs {
            let pair = (t, b);
            if t == 0 || t as usize > instance.n_top || b == 0 || b as usize > instance.n_bottom {
                return Err(ModelError::RankOutOfRange { pair });
            }
            if !edges.contains(&pair) {
                return Err(ModelError::NotAnEdge { pair });
            }
            if std::mem::replace(&mut top_seen[t as usize], true) {
                return Err(ModelError::DuplicateTop { pair });
            }
            if std::mem::replace(&mut bottom_seen[b as usize], true) {
                return Err(ModelError::DuplicateBottom { pair });
            }
        }
        if self.pairs.len() != instance.n_top {
            let top = (1..=instance.n_top)
                .find(|&t| !top_seen[t])
                .expect("fewer pairs than tops leaves one unmatched") as u32;
            return Err(ModelError::Unmatched { top });
        }
        Ok(())
    }
}

impl FromIterator<Edge> for Matching {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Matching::new(iter.into_iter().collect())
    }
}

/// Number of unordered pairs of intersecting matching edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CrossingCount(pub u64);

impl CrossingCount {
    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for CrossingCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("pair ({}, {}) has a rank outside the instance", pair.0, pair.1)]
    RankOutOfRange { pair: Edge },
    #[error("pair ({}, {}) is not an edge of the instance", pair.0, pair.1)]
    NotAnEdge { pair: Edge },
    #[error("pair ({}, {}) reuses top rank {}", pair.0, pair.1, pair.0)]
    DuplicateTop { pair: Edge },
    #[error("pair ({}, {}) reuses bottom rank {}", pair.0, pair.1, pair.1)]
    DuplicateBottom { pair: Edge },
    #[error("top rank {top} is left unmatched")]
    Unmatched { top: u32 },
    #[error("instance has {n_top} top and {n_bottom} bottom vertices")]
    Unbalanced { n_top: usize, n_bottom: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    TopRankOutOfRange {
        edge: Edge,
    },
    BottomRankOutOfRange {
        edge: Edge,
    },
    DuplicateEdge {
        edge: Edge,
    },
    Unbalanced {
        n_top: usize,
        n_bottom: usize,
    },
    /// Maximum matching is smaller than a side; `unmatched_top` / `unmatched_bottom`
    /// name one vertex left uncovered by the maximum matching found.
    NoPerfectMatching {
        maximum: usize,
        unmatched_top: Option<u32>,
        unmatched_bottom: Option<u32>,
    },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::TopRankOutOfRange { edge } => {
                write!(f, "edge ({}, {}): top rank out of range", edge.0, edge.1)
            }
            ValidationIssue::BottomRankOutOfRange { edge } => {
                write!(f, "edge ({}, {}): bottom rank out of range", edge.0, edge.1)
            }
            ValidationIssue::DuplicateEdge { edge } => {
                write!(f, "edge ({}, {}) listed more than once", edge.0, edge.1)
            }
            ValidationIssue::Unbalanced { n_top, n_bottom } => {
                write!(f, "{n_top} top vertices but {n_bottom} bottom vertices")
            }
            ValidationIssue::NoPerfectMatching {
                maximum,
                unmatched_top,
                unmatched_bottom,
            } => {
                write!(
                    f,
                    "no perfect matching: maximum matching has {maximum} edges"
                )?;
                if let Some(t) = unmatched_top {
                    write!(f, ", top {t} unmatched")?;
                }
                if let Some(b) = unmatched_bottom {
                    write!(f, ", bottom {b} unmatched")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

pub fn validate_instance(instance: &Instance) -> ValidationReport {
    let mut issues = Vec::new();
    let mut seen = BTreeSet::new();
    for &edge in &instance.edges {
        let (t, b) = edge;
        if t == 0 || t as usize > instance.n_top {
            issues.push(ValidationIssue::TopRankOutOfRange { edge });
        }
        if b == 0 || b as usize > instance.n_bottom {
            issues.push(ValidationIssue::BottomRankOutOfRange { edge });
        }
        if !seen.insert(edge) {
            issues.push(ValidationIssue::DuplicateEdge { edge });
        }
    }
    if instance.n_top != instance.n_bottom {
        issues.push(ValidationIssue::Unbalanced {
            n_top: instance.n_top,
            n_bottom: instance.n_bottom,
        });
    }
    let (top_adj, _) = instance.adjacency();
    let (top_mate, bottom_mate) = maximum_matching(&top_adj, instance.n_bottom);
    let maximum = top_mate.iter().filter(|m| m.is_some()).count();
    if maximum < instance.n_top.max(instance.n_bottom) {
        issues.push(ValidationIssue::NoPerfectMatching {
            maximum,
            unmatched_top: top_mate
                .iter()
                .position(Option::is_none)
                .map(|t| t as u32 + 1),
            unmatched_bottom: bottom_mate
                .iter()
                .position(Option::is_none)
                .map(|b| b as u32 + 1),
        });
    }
    ValidationReport { issues }
}

/// Kuhn's augmenting-path algorithm. Returns mates for both sides (0-based).
fn maximum_matching(top_adj: &[Vec<u32>], n_bottom: usize) -> (Vec<Option<u32>>, Vec<Option<u32>>) {
    let mut top_mate: Vec<Option<u32>> = vec![None; top_adj.len()];
    let mut bottom_mate: Vec<Option<u32>> = vec![None; n_bottom];

    // greedy start keeps the augmenting phase short on sparse inputs
    for (t, nbrs) in top_adj.iter().enumerate() {
        if let Some(&b) = nbrs.iter().find(|&&b| bottom_mate[b as usize].is_none()) {
            top_mate[t] = Some(b);
            bottom_mate[b as usize] = Some(t as u32);
        }
    }

    let mut visited = vec![usize::MAX; n_bottom];
    for root in 0..top_adj.len() {
        if top_mate[root].is_some() {
            continue;
        }
        // iterative DFS over alternating paths; stack holds (top, next neighbour index)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        let mut path: Vec<u32> = Vec::new();
        let mut found = false;
        while let Some(&mut (t, ref mut idx)) = stack.last_mut() {
            if *idx >= top_adj[t].len() {
                stack.pop();
                path.pop();
                continue;
            }
            let b = top_adj[t][*idx];
            *idx += 1;
            if visited[b as usize] == root {
                continue;
            }
            visited[b as usize] = root;
            path.push(b);
            match bottom_mate[b as usize] {
                None => {
                    found = true;
                    break;
                }
                Some(next) => stack.push((next as usize, 0)),
            }
        }
        if found {
            // stack[i].0 is matched to path[i] after flipping
            for (i, &(t, _)) in stack.iter().enumerate() {
                let b = path[i];
                top_mate[t] = Some(b);
                bottom_mate[b as usize] = Some(t as u32);
            }
        }
    }
    (top_mate, bottom_mate)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_valid() {
        assert!(Instance::new(2, 2, vec![(1, 1), (2, 2)])
            .validate()
            .is_valid());
    }

    #[test]
    fn shared_bottom_has_no_perfect_matching() {
        let report = Instance::new(2, 2, vec![(1, 1), (2, 1)]).validate();
        assert_eq!(
            report.issues,
            vec![ValidationIssue::NoPerfectMatching {
                maximum: 1,
                unmatched_top: Some(2),
                unmatched_bottom: Some(2),
            }]
        );
    }

    #[test]
    fn structural_issues_are_all_reported() {
        let inst = Instance::new(2, 3, vec![(1, 1), (1, 1), (3, 2), (2, 4)]);
        let report = inst.validate();
        assert!(report
            .issues
            .contains(&ValidationIssue::DuplicateEdge { edge: (1, 1) }));
        assert!(report
            .issues
            .contains(&ValidationIssue::TopRankOutOfRange { edge: (3, 2) }));
        assert!(report
            .issues
            .contains(&ValidationIssue::BottomRankOutOfRange { edge: (2, 4) }));
        assert!(report.issues.contains(&ValidationIssue::Unbalanced {
            n_top: 2,
            n_bottom: 3
        }));
    }

    #[test]
    fn empty_instance_is_valid() {
        assert!(Instance::new(0, 0, vec![]).validate().is_valid());
    }

    #[test]
    fn augmenting_paths_are_followed() {
        // greedy picks (1,1) first; top 2 only reaches bottom 1
        let inst = Instance::new(3, 3, vec![(1, 1), (1, 2), (2, 1), (3, 2), (3, 3)]);
        assert!(inst.validate().is_valid());
    }

    #[test]
    fn matching_errors_name_the_pair() {
        let inst = Instance::new(2, 2, vec![(1, 1), (2, 2), (1, 2)]);
        assert_eq!(
            Matching::new(vec![(1, 2), (2, 1)]).check_against(&inst),
            Err(ModelError::NotAnEdge { pair: (2, 1) })
        );
        assert_eq!(
            Matching::new(vec![(1, 2), (2, 2)]).check_against(&inst),
            Err(ModelError::DuplicateBottom { pair: (2, 2) })
        );
        assert_eq!(
            Matching::new(vec![(1, 1)]).check_against(&inst),
            Err(ModelError::Unmatched { top: 2 })
        );
        assert!(Matching::new(vec![(2, 2), (1, 1)])
            .check_against(&inst)
            .is_ok());
    }
}
