//! Reference implementations that share no code with the library.

#![allow(dead_code)]

use std::path::PathBuf;

/// Crossing pairs among `(top, bottom)` segments, straight from the
/// definition.
pub fn naive_crossings(pairs: &[(u32, u32)]) -> u64 {
    let mut count = 0;
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (t1, b1) = (pairs[i].0 as i64, pairs[i].1 as i64);
            let (t2, b2) = (pairs[j].0 as i64, pairs[j].1 as i64);
            if (t1 - t2) * (b1 - b2) < 0 {
                count += 1;
            }
        }
    }
    count
}

/// Smallest vertex cover size by checking every subset.
pub fn naive_min_cover(n: usize, edges: &[(u32, u32)]) -> usize {
    (0u32..1 << n)
        .filter(|mask| {
            edges
                .iter()
                .all(|&(u, v)| mask >> (u - 1) & 1 == 1 || mask >> (v - 1) & 1 == 1)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// Minimum crossings over all perfect matchings, by trying every bottom for
/// every top in turn. `None` when there is no perfect matching.
pub fn naive_min_crossings(n_top: usize, n_bottom: usize, edges: &[(u32, u32)]) -> Option<u64> {
    if n_top != n_bottom {
        return None;
    }
    let mut adjacency = vec![Vec::new(); n_top + 1];
    for &(t, b) in edges {
        if !adjacency[t as usize].contains(&b) {
            adjacency[t as usize].push(b);
        }
    }
    fn go(
        t: usize,
        adjacency: &[Vec<u32>],
        used: &mut Vec<bool>,
        chosen: &mut Vec<(u32, u32)>,
        best: &mut Option<u64>,
    ) {
        if t == adjacency.len() {
            let c = naive_crossings(chosen);
            if best.is_none_or(|b| c < b) {
                *best = Some(c);
            }
            return;
        }
        for &b in &adjacency[t] {
            if !used[b as usize] {
                used[b as usize] = true;
                chosen.push((t as u32, b));
                go(t + 1, adjacency, used, chosen, best);
                chosen.pop();
                used[b as usize] = false;
            }
        }
    }
    let mut best = None;
    go(
        1,
        &adjacency,
        &mut vec![false; n_bottom + 1],
        &mut Vec::new(),
        &mut best,
    );
    best
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn read_data(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}
