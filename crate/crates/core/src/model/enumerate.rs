use super::{Edge, Instance, Matching};

const FREE: u32 = u32::MAX;

/// Lazily yields every perfect matching of `instance`, each exactly once,
/// in lexicographic order of the bottom sequence.
///
/// Branching is on the leftmost unmatched top, partners ascending. After
/// every choice, vertices left with a single free neighbour are matched to
/// it and vertices with none cut the branch, so degree-2 instances never
/// reach a dead end.
pub fn enumerate_perfect_matchings(instance: &Instance) -> PerfectMatchings {
    PerfectMatchings::new(instance)
}

pub struct PerfectMatchings {
    top_adj: Vec<Vec<u32>>,
    bottom_adj: Vec<Vec<u32>>,
    top_mate: Vec<u32>,
    bottom_mate: Vec<u32>,
    /// free neighbours of each unmatched vertex
    top_free: Vec<u32>,
    bottom_free: Vec<u32>,
    trail: Vec<Edge>,
    frames: Vec<Frame>,
    started: bool,
    done: bool,
}

struct Frame {
    top: u32,
    next: usize,
    trail_len: usize,
}

impl PerfectMatchings {
    fn new(instance: &Instance) -> Self {
        let (top_adj, bottom_adj) = instance.adjacency();
        let top_free = top_adj.iter().map(|n| n.len() as u32).collect();
        let bottom_free = bottom_adj.iter().map(|n| n.len() as u32).collect();
        PerfectMatchings {
            top_mate: vec![FREE; top_adj.len()],
            bottom_mate: vec![FREE; bottom_adj.len()],
            done: top_adj.len() != bottom_adj.len(),
            top_adj,
            bottom_adj,
            top_free,
            bottom_free,
            trail: Vec::new(),
            frames: Vec::new(),
            started: false,
        }
    }

    /// Matches `(t, b)` and propagates forced pairs; false on contradiction.
    /// Everything it did is on the trail, so `undo_to` restores state even
    /// after a failure.
    fn assign(&mut self, t: u32, b: u32) -> bool {
        let mut queue = vec![(t, b)];
        let mut ok = true;
        while let Some((t, b)) = queue.pop() {
            let (tu, bu) = (t as usize, b as usize);
            if self.top_mate[tu] != FREE || self.bottom_mate[bu] != FREE {
                if self.top_mate[tu] == b {
                    continue;
                }
                return false;
            }
            self.top_mate[tu] = b;
            self.bottom_mate[bu] = t;
            self.trail.push((t, b));
            for i in 0..self.top_adj[tu].len() {
                let nb = self.top_adj[tu][i] as usize;
                if self.bottom_mate[nb] != FREE {
                    continue;
                }
                self.bottom_free[nb] -= 1;
                match self.bottom_free[nb] {
                    0 => ok = false,
                    1 => {
                        let nt = self.free_top_of(nb);
                        queue.push((nt, nb as u32));
                    }
                    _ => {}
                }
            }
            for i in 0..self.bottom_adj[bu].len() {
                let nt = self.bottom_adj[bu][i] as usize;
                if self.top_mate[nt] != FREE {
                    continue;
                }
                self.top_free[nt] -= 1;
                match self.top_free[nt] {
                    0 => ok = false,
                    1 => {
                        let nb = self.free_bottom_of(nt);
                        queue.push((nt as u32, nb));
                    }
                    _ => {}
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }

    fn free_top_of(&self, b: usize) -> u32 {
        *self.bottom_adj[b]
            .iter()
            .find(|&&t| self.top_mate[t as usize] == FREE)
            .expect("free count says one top remains")
    }

    fn free_bottom_of(&self, t: usize) -> u32 {
        *self.top_adj[t]
            .iter()
            .find(|&&b| self.bottom_mate[b as usize] == FREE)
            .expect("free count says one bottom remains")
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let (t, b) = self.trail.pop().unwrap();
            let (tu, bu) = (t as usize, b as usize);
            // mirror of `assign`: t and b still count as matched here
            for &nb in &self.top_adj[tu] {
                if self.bottom_mate[nb as usize] == FREE {
                    self.bottom_free[nb as usize] += 1;
                }
            }
            for &nt in &self.bottom_adj[bu] {
                if self.top_mate[nt as usize] == FREE {
                    self.top_free[nt as usize] += 1;
                }
            }
            self.top_mate[tu] = FREE;
            self.bottom_mate[bu] = FREE;
        }
    }

    /// Forces every degree-one vertex before the first branch.
    fn initial_propagation(&mut self) -> bool {
        if self
            .top_free
            .iter()
            .chain(&self.bottom_free)
            .any(|&d| d == 0)
        {
            return false;
        }
        for t in 0..self.top_adj.len() {
            if self.top_mate[t] == FREE && self.top_free[t] == 1 {
                let b = self.free_bottom_of(t);
                if !self.assign(t as u32, b) {
                    return false;
                }
            }
        }
        for b in 0..self.bottom_adj.len() {
            if self.bottom_mate[b] == FREE && self.bottom_free[b] == 1 {
                let t = self.free_top_of(b);
                if !self.assign(t, b as u32) {
                    return false;
                }
            }
        }
        true
    }

    fn first_free_top(&self, from: usize) -> Option<u32> {
        (from..self.top_mate.len())
            .find(|&t| self.top_mate[t] == FREE)
            .map(|t| t as u32)
    }

    fn current(&self) -> Matching {
        Matching::new(
            self.top_mate
                .iter()
                .enumerate()
                .map(|(t, &b)| (t as u32 + 1, b + 1))
                .collect(),
        )
    }
}

impl Iterator for PerfectMatchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        let mut descend = false;
        if !self.started {
            self.started = true;
            if !self.initial_propagation() {
                self.done = true;
                return None;
            }
            descend = true;
        }
        loop {
            if descend {
                let from = self.frames.last().map_or(0, |f| f.top as usize + 1);
                match self.first_free_top(from) {
                    None => return Some(self.current()),
                    Some(top) => self.frames.push(Frame {
                        top,
                        next: 0,
                        trail_len: self.trail.len(),
                    }),
                }
            }
            let Some(frame) = self.frames.last_mut() else {
                self.done = true;
                return None;
            };
            let (top, trail_len) = (frame.top, frame.trail_len);
            let chosen = self.top_adj[top as usize].get(frame.next).copied();
            if chosen.is_some() {
                frame.next += 1;
            }
            self.undo_to(trail_len);
            match chosen {
                Some(b) => {
                    if self.bottom_mate[b as usize] != FREE {
                        descend = false;
                        continue;
                    }
                    descend = self.assign(top, b);
                    if !descend {
                        self.undo_to(trail_len);
                    }
                }
                None => {
                    self.frames.pop();
                    descend = false;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(inst: &Instance) -> usize {
        enumerate_perfect_matchings(inst).count()
    }

    #[test]
    fn empty_instance_has_one_empty_matching() {
        let all: Vec<_> = enumerate_perfect_matchings(&Instance::new(0, 0, vec![])).collect();
        assert_eq!(all, vec![Matching::default()]);
    }

    #[test]
    fn complete_bipartite_gives_all_permutations_in_order() {
        let edges = (1..=3).flat_map(|t| (1..=3).map(move |b| (t, b))).collect();
        let all: Vec<Vec<u32>> = enumerate_perfect_matchings(&Instance::new(3, 3, edges))
            .map(|m| m.bottoms())
            .collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
    }

    #[test]
    fn no_perfect_matching_yields_nothing() {
        assert_eq!(count(&Instance::new(2, 2, vec![(1, 1), (2, 1)])), 0);
        assert_eq!(count(&Instance::new(2, 3, vec![(1, 1), (2, 2)])), 0);
    }

    #[test]
    fn six_cycle_has_two_matchings() {
        // 1-1-2-2-3-3-1 around
        let inst = Instance::new(3, 3, vec![(1, 1), (1, 3), (2, 1), (2, 2), (3, 2), (3, 3)]);
        assert_eq!(count(&inst), 2);
    }

    #[test]
    fn disjoint_union_multiplies() {
        // two 4-cycles side by side plus a forced edge
        let inst = Instance::new(
            5,
            5,
            vec![
                (1, 1),
                (1, 2),
                (2, 1),
                (2, 2),
                (3, 3),
                (4, 4),
                (4, 5),
                (5, 4),
                (5, 5),
            ],
        );
        assert_eq!(count(&inst), 4);
    }

    #[test]
    fn yields_are_perfect_matchings() {
        let edges = vec![
            (1, 1),
            (1, 2),
            (2, 2),
            (2, 3),
            (3, 1),
            (3, 3),
            (4, 4),
            (3, 4),
            (4, 1),
        ];
        let inst = Instance::new(4, 4, edges);
        let all: Vec<_> = enumerate_perfect_matchings(&inst).collect();
        assert!(!all.is_empty());
        for m in &all {
            m.check_against(&inst).unwrap();
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);
    }
}
