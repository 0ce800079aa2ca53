use super::{CrossingCount, Edge, Instance, Matching, ModelError};

/// Two straight segments between the lines intersect iff their endpoint
/// orders are opposite on the two lines.
#[inline]
pub fn segments_cross(first: Edge, second: Edge) -> bool {
    (first.0 < second.0 && first.1 > second.1) || (first.0 > second.0 && first.1 < second.1)
}

/// Quadratic reference counter: checks every unordered pair.
pub fn count_crossings_pairwise(
    instance: &Instance,
    matching: &Matching,
) -> Result<CrossingCount, ModelError> {
    matching.check_against(instance)?;
    let pairs = matching.pairs();
    let mut count = 0u64;
    for (i, &first) in pairs.iter().enumerate() {
        for &second in &pairs[i + 1..] {
            if segments_cross(first, second) {
                count += 1;
            }
        }
    }
    Ok(CrossingCount(count))
}

/// Number of crossing pairs with one segment from each list.
pub fn crossings_between(first: &[Edge], second: &[Edge]) -> u64 {
    first
        .iter()
        .map(|&a| second.iter().filter(|&&b| segments_cross(a, b)).count() as u64)
        .sum()
}

/// Counts inversions of the bottom sequence with a Fenwick tree, O(n log n).
///
/// Only needs the matching itself: ranks must be distinct on each line.
pub fn count_crossings_fast(matching: &Matching) -> Result<CrossingCount, ModelError> {
    let pairs = matching.pairs();
    for w in pairs.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(ModelError::DuplicateTop { pair: w[1] });
        }
    }
    let max_bottom = pairs.iter().map(|&(_, b)| b).max().unwrap_or(0) as usize;
    let mut seen = vec![false; max_bottom + 1];
    for &pair in pairs {
        if pair.0 == 0 || pair.1 == 0 {
            return Err(ModelError::RankOutOfRange { pair });
        }
        if std::mem::replace(&mut seen[pair.1 as usize], true) {
            return Err(ModelError::DuplicateBottom { pair });
        }
    }

    let mut tree = Fenwick::new(max_bottom);
    let mut inversions = 0u64;
    for (placed, &(_, b)) in pairs.iter().enumerate() {
        // earlier tops whose bottom lies to the right of b
        inversions += placed as u64 - tree.prefix_sum(b as usize);
        tree.add(b as usize);
    }
    Ok(CrossingCount(inversions))
}

struct Fenwick {
    tree: Vec<u64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick {
            tree: vec![0; n + 1],
        }
    }

    fn add(&mut self, mut i: usize) {
        while i < self.tree.len() {
            self.tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over positions 1..=i.
    fn prefix_sum(&self, mut i: usize) -> u64 {
        let mut sum = 0;
        while i > 0 {
            sum += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutation_matching(bottoms: &[u32]) -> (Instance, Matching) {
        let n = bottoms.len();
        let edges: Vec<Edge> = bottoms
            .iter()
            .enumerate()
            .map(|(i, &b)| (i as u32 + 1, b))
            .collect();
        (Instance::new(n, n, edges.clone()), Matching::new(edges))
    }

    #[test]
    fn identity_has_no_crossings() {
        let (inst, m) = permutation_matching(&[1, 2, 3, 4, 5]);
        assert_eq!(
            count_crossings_pairwise(&inst, &m).unwrap(),
            CrossingCount(0)
        );
        let big: Vec<u32> = (1..=1000).collect();
        let (_, m) = permutation_matching(&big);
        assert_eq!(count_crossings_fast(&m).unwrap(), CrossingCount(0));
    }

    #[test]
    fn reversal_crosses_every_pair() {
        let (inst, m) = permutation_matching(&[4, 3, 2, 1]);
        assert_eq!(
            count_crossings_pairwise(&inst, &m).unwrap(),
            CrossingCount(6)
        );
        let rev: Vec<u32> = (1..=100).rev().collect();
        let (_, m) = permutation_matching(&rev);
        assert_eq!(count_crossings_fast(&m).unwrap(), CrossingCount(4950));
    }

    #[test]
    fn fast_counter_rejects_duplicates() {
        let m = Matching::new(vec![(1, 2), (2, 2)]);
        assert_eq!(
            count_crossings_fast(&m),
            Err(ModelError::DuplicateBottom { pair: (2, 2) })
        );
        let m = Matching::new(vec![(1, 1), (1, 2)]);
        assert_eq!(
            count_crossings_fast(&m),
            Err(ModelError::DuplicateTop { pair: (1, 2) })
        );
    }

    #[test]
    fn pairwise_counter_rejects_foreign_pairs() {
        let inst = Instance::identity(2);
        let m = Matching::new(vec![(1, 2), (2, 1)]);
        assert_eq!(
            count_crossings_pairwise(&inst, &m),
            Err(ModelError::NotAnEdge { pair: (1, 2) })
        );
    }

    #[test]
    fn empty_matching_counts_zero() {
        let inst = Instance::new(0, 0, vec![]);
        let m = Matching::default();
        assert_eq!(
            count_crossings_pairwise(&inst, &m).unwrap(),
            CrossingCount(0)
        );
        assert_eq!(count_crossings_fast(&m).unwrap(), CrossingCount(0));
    }

    #[test]
    fn sparse_bottom_ranks_are_fine_for_fast_counter() {
        // ranks need not be contiguous
        let m = Matching::new(vec![(1, 10), (5, 3), (7, 8)]);
        assert_eq!(count_crossings_fast(&m).unwrap(), CrossingCount(2));
    }
}
