//! Exact minimisation of crossings over perfect matchings.
//!
//! The instance splits into connected components; a perfect matching is one
//! local perfect matching ("choice") per component. Crossings decompose into
//! per-choice internal counts plus pairwise tables between components, and
//! the search branches over components from left to right.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use thiserror::Error;

use crate::model::{
    count_crossings_fast, crossings_between, enumerate_perfect_matchings, CrossingCount, Edge,
    Instance, Matching, ValidationReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Path,
    EvenCycle,
    General,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentKind::Path => "path",
            ComponentKind::EvenCycle => "even-cycle",
            ComponentKind::General => "general",
        })
    }
}

/// A connected component of the instance graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub id: usize,
    pub tops: Vec<u32>,
    pub bottoms: Vec<u32>,
    pub edges: Vec<Edge>,
    pub kind: ComponentKind,
    /// Number of perfect matchings of the component on its own.
    pub choice_count: u64,
}

impl Component {
    pub fn leftmost_top(&self) -> Option<u32> {
        self.tops.first().copied()
    }

    /// Every perfect matching of the component, lexicographically ordered.
    pub fn choices(&self) -> Vec<Vec<Edge>> {
        match self.kind {
            ComponentKind::Path if self.tops.len() == self.bottoms.len() => {
                // a path alternates, so its only perfect matching is forced
                local_matchings(self)
            }
            ComponentKind::Path => Vec::new(),
            _ => local_matchings(self),
        }
    }
}

fn local_matchings(component: &Component) -> Vec<Vec<Edge>> {
    let local_top = |t: u32| component.tops.binary_search(&t).unwrap() as u32 + 1;
    let local_bottom = |b: u32| component.bottoms.binary_search(&b).unwrap() as u32 + 1;
    let edges = component
        .edges
        .iter()
        .map(|&(t, b)| (local_top(t), local_bottom(b)))
        .collect();
    let local = Instance::new(component.tops.len(), component.bottoms.len(), edges);
    enumerate_perfect_matchings(&local)
        .map(|m| {
            m.pairs()
                .iter()
                .map(|&(t, b)| {
                    (
                        component.tops[t as usize - 1],
                        component.bottoms[b as usize - 1],
                    )
                })
                .collect()
        })
        .collect()
}

/// Connected components ordered by smallest top rank.
pub fn decompose_components(instance: &Instance) -> Vec<Component> {
    let n_top = instance.n_top;
    let total = n_top + instance.n_bottom;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges: Vec<Edge> = instance
        .edges
        .iter()
        .copied()
        .filter(|&(t, b)| {
            t >= 1 && b >= 1 && t as usize <= n_top && b as usize <= instance.n_bottom
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    for &(t, b) in &edges {
        let (x, y) = (
            find(&mut parent, t as usize - 1),
            find(&mut parent, n_top + b as usize - 1),
        );
        if x != y {
            parent[x.max(y)] = x.min(y);
        }
    }

    let mut by_root: HashMap<usize, usize> = HashMap::new();
    let mut groups: Vec<(Vec<u32>, Vec<u32>, Vec<Edge>)> = Vec::new();
    for v in 0..total {
        let root = find(&mut parent, v);
        let idx = *by_root.entry(root).or_insert_with(|| {
            groups.push(Default::default());
            groups.len() - 1
        });
        if v < n_top {
            groups[idx].0.push(v as u32 + 1);
        } else {
            groups[idx].1.push((v - n_top) as u32 + 1);
        }
    }
    for &(t, b) in &edges {
        let root = find(&mut parent, t as usize - 1);
        groups[by_root[&root]].2.push((t, b));
    }
    groups.sort_by_key(|(tops, bottoms, _)| {
        (
            tops.first().copied().unwrap_or(u32::MAX),
            bottoms.first().copied(),
        )
    });

    let mut degree_top = vec![0usize; n_top + 1];
    let mut degree_bottom = vec![0usize; instance.n_bottom + 1];
    for &(t, b) in &edges {
        degree_top[t as usize] += 1;
        degree_bottom[b as usize] += 1;
    }

    groups
        .into_iter()
        .enumerate()
        .map(|(id, (tops, bottoms, edges))| {
            let vertices = tops.len() + bottoms.len();
            let max_degree = tops
                .iter()
                .map(|&t| degree_top[t as usize])
                .chain(bottoms.iter().map(|&b| degree_bottom[b as usize]))
                .max()
                .unwrap_or(0);
            let kind = if max_degree <= 2 && edges.len() + 1 == vertices {
                ComponentKind::Path
            } else if max_degree <= 2 && edges.len() == vertices {
                ComponentKind::EvenCycle
            } else {
                ComponentKind::General
            };
            let mut component = Component {
                id,
                tops,
                bottoms,
                edges,
                kind,
                choice_count: 0,
            };
            component.choice_count = match kind {
                ComponentKind::Path => u64::from(component.tops.len() == component.bottoms.len()),
                ComponentKind::EvenCycle => 2,
                ComponentKind::General => local_matchings(&component).len() as u64,
            };
            component
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Method {
    Enumeration,
    #[default]
    BranchAndBound,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::BranchAndBound => "branch_and_bound",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub method: Method,
    /// Worker threads for branch-and-bound; results do not depend on it.
    pub threads: usize,
    pub deadline: Option<Instant>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            method: Method::BranchAndBound,
            threads: 1,
            deadline: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub min_crossings: CrossingCount,
    /// Lexicographically least optimal matching (see [`solve_with`]).
    pub witness: Matching,
    pub nodes_explored: u64,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub feasible: bool,
    pub witness: Option<Matching>,
    pub witness_crossings: Option<CrossingCount>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("invalid instance:\n{0}")]
    Invalid(ValidationReport),
    #[error("deadline reached before the search finished")]
    Timeout,
}

pub fn solve_min_crossings(instance: &Instance) -> Result<SolveResult, SolveError> {
    solve_with(instance, &SolveOptions::default())
}

/// Exact minimum with witness.
///
/// Ties are broken towards the lexicographically least vector of component
/// choices (components by leftmost top, choices in local lexicographic
/// order). When every component has at most two perfect matchings this is
/// also the lexicographically least matching, and it is what enumeration
/// returns.
pub fn solve_with(instance: &Instance, options: &SolveOptions) -> Result<SolveResult, SolveError> {
    let report = instance.validate();
    if !report.is_valid() {
        return Err(SolveError::Invalid(report));
    }
    match options.method {
        Method::Enumeration => solve_by_enumeration(instance, options.deadline),
        Method::BranchAndBound => {
            let problem = Problem::build(instance);
            let outcome = problem.run(Goal::Minimize, options.threads.max(1), options.deadline)?;
            let (cost, choices) = outcome
                .best
                .expect("a valid instance has a perfect matching");
            Ok(SolveResult {
                min_crossings: CrossingCount(cost),
                witness: problem.matching(&choices),
                nodes_explored: outcome.nodes,
                method: Method::BranchAndBound,
            })
        }
    }
}

fn solve_by_enumeration(
    instance: &Instance,
    deadline: Option<Instant>,
) -> Result<SolveResult, SolveError> {
    let mut best: Option<(u64, Matching)> = None;
    let mut nodes = 0u64;
    for matching in enumerate_perfect_matchings(instance) {
        nodes += 1;
        if nodes.is_multiple_of(1024) && deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(SolveError::Timeout);
        }
        let count = count_crossings_fast(&matching)
            .expect("enumerated matchings are perfect")
            .0;
        if best.as_ref().is_none_or(|(c, _)| count < *c) {
            best = Some((count, matching));
        }
    }
    let (cost, witness) = best.expect("a valid instance has a perfect matching");
    Ok(SolveResult {
        min_crossings: CrossingCount(cost),
        witness,
        nodes_explored: nodes,
        method: Method::Enumeration,
    })
}

/// Is there a perfect matching with at most `budget` crossings?
pub fn decide(instance: &Instance, budget: u64) -> Result<Decision, SolveError> {
    decide_with(instance, budget, &SolveOptions::default())
}

pub fn decide_with(
    instance: &Instance,
    budget: u64,
    options: &SolveOptions,
) -> Result<Decision, SolveError> {
    let report = instance.validate();
    if !report.is_valid() {
        return Err(SolveError::Invalid(report));
    }
    if options.method == Method::Enumeration {
        return decide_by_enumeration(instance, budget, options.deadline);
    }
    let problem = Problem::build(instance);
    let outcome = problem.run(
        Goal::AtMost(budget),
        options.threads.max(1),
        options.deadline,
    )?;
    Ok(match outcome.best {
        Some((cost, choices)) => Decision {
            feasible: true,
            witness: Some(problem.matching(&choices)),
            witness_crossings: Some(CrossingCount(cost)),
            nodes_explored: outcome.nodes,
        },
        None => Decision {
            feasible: false,
            witness: None,
            witness_crossings: None,
            nodes_explored: outcome.nodes,
        },
    })
}

fn decide_by_enumeration(
    instance: &Instance,
    budget: u64,
    deadline: Option<Instant>,
) -> Result<Decision, SolveError> {
    let mut nodes = 0u64;
    for matching in enumerate_perfect_matchings(instance) {
        nodes += 1;
        if nodes.is_multiple_of(1024) && deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(SolveError::Timeout);
        }
        let count = count_crossings_fast(&matching).expect("enumerated matchings are perfect");
        if count.0 <= budget {
            return Ok(Decision {
                feasible: true,
                witness: Some(matching),
                witness_crossings: Some(count),
                nodes_explored: nodes,
            });
        }
    }
    Ok(Decision {
        feasible: false,
        witness: None,
        witness_crossings: None,
        nodes_explored: nodes,
    })
}

#[derive(Clone, Copy, Debug)]
enum Goal {
    Minimize,
    AtMost(u64),
}

/// A component with at least two choices.
struct Branch {
    choices: Vec<Vec<Edge>>,
    /// cost of each choice on its own, after moving separable pair terms in
    unary: Vec<u64>,
    /// non-separable remainders towards later branches
    links: Vec<Link>,
    /// largest branch index this one links to
    last_link: Option<usize>,
}

struct Link {
    to: usize,
    /// row-major, `rows = self.choices.len()`, `cols = to.choices.len()`
    table: Vec<u64>,
}

struct Problem {
    forced: Vec<Edge>,
    base: u64,
    branches: Vec<Branch>,
    /// frontier[d]: branches before d that still link to d or later
    frontier: Vec<Vec<usize>>,
}

struct Outcome {
    best: Option<(u64, Vec<usize>)>,
    nodes: u64,
}

impl Problem {
    fn build(instance: &Instance) -> Problem {
        let components = decompose_components(instance);
        let choices: Vec<Vec<Vec<Edge>>> = components.iter().map(Component::choices).collect();
        let mut unary: Vec<Vec<u64>> = choices
            .iter()
            .map(|cs| {
                cs.iter()
                    .map(|c| count_crossings_fast(&Matching::new(c.clone())).unwrap().0)
                    .collect()
            })
            .collect();
        let spans: Vec<Span> = components.iter().map(Span::of).collect();

        // Pair tables T(a, b) are rewritten as rowmin(a) + colmin(b) + R(a, b)
        // with R >= 0; the mins move into the unary costs and only nonzero R
        // is kept. R vanishes exactly when T is separable.
        let mut residuals: Vec<(usize, usize, Vec<u64>)> = Vec::new();
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                if !spans[i].may_cross(&spans[j]) {
                    continue;
                }
                let (rows, cols) = (choices[i].len(), choices[j].len());
                let mut table = Vec::with_capacity(rows * cols);
                for a in &choices[i] {
                    for b in &choices[j] {
                        table.push(crossings_between(a, b));
                    }
                }
                for r in 0..rows {
                    let row = &mut table[r * cols..(r + 1) * cols];
                    let min = *row.iter().min().unwrap();
                    row.iter_mut().for_each(|x| *x -= min);
                    unary[i][r] += min;
                }
                for c in 0..cols {
                    let min = (0..rows).map(|r| table[r * cols + c]).min().unwrap();
                    (0..rows).for_each(|r| table[r * cols + c] -= min);
                    unary[j][c] += min;
                }
                if table.iter().any(|&x| x > 0) {
                    residuals.push((i, j, table));
                }
            }
        }

        let mut forced = Vec::new();
        let mut base = 0;
        let mut branch_of = vec![usize::MAX; components.len()];
        let mut branches = Vec::new();
        for (idx, (cs, un)) in choices.into_iter().zip(unary).enumerate() {
            if cs.len() == 1 {
                forced.extend_from_slice(&cs[0]);
                base += un[0];
            } else {
                branch_of[idx] = branches.len();
                branches.push(Branch {
                    choices: cs,
                    unary: un,
                    links: Vec::new(),
                    last_link: None,
                });
            }
        }
        for (i, j, table) in residuals {
            // a single-choice side leaves nothing after the row/column pass
            let (bi, bj) = (branch_of[i], branch_of[j]);
            debug_assert!(bi != usize::MAX && bj != usize::MAX);
            branches[bi].links.push(Link { to: bj, table });
            branches[bi].last_link = Some(branches[bi].last_link.map_or(bj, |l: usize| l.max(bj)));
        }

        let n = branches.len();
        let frontier = (0..=n)
            .map(|d| {
                (0..d)
                    .filter(|&i| branches[i].last_link.is_some_and(|l| l >= d))
                    .collect()
            })
            .collect();
        Problem {
            forced,
            base,
            branches,
            frontier,
        }
    }

    fn matching(&self, choices: &[usize]) -> Matching {
        let mut pairs = self.forced.clone();
        for (branch, &c) in self.branches.iter().zip(choices) {
            pairs.extend_from_slice(&branch.choices[c]);
        }
        Matching::new(pairs)
    }

    fn run(
        &self,
        goal: Goal,
        threads: usize,
        deadline: Option<Instant>,
    ) -> Result<Outcome, SolveError> {
        let n = self.branches.len();
        // split on a prefix only when there is enough work to hand out
        let mut split = 0;
        let mut tasks = 1usize;
        if threads > 1 {
            while split < n && tasks < threads * 4 {
                tasks = tasks.saturating_mul(self.branches[split].choices.len());
                split += 1;
            }
        }
        if threads <= 1 || split == 0 {
            let mut search = Search::new(self, goal, deadline);
            search.run_from(&[]);
            return search.finish();
        }

        let radices: Vec<usize> = self.branches[..split]
            .iter()
            .map(|b| b.choices.len())
            .collect();
        let prefix_of = |mut index: usize| {
            let mut prefix = vec![0; split];
            for d in (0..split).rev() {
                prefix[d] = index % radices[d];
                index /= radices[d];
            }
            prefix
        };
        let next = AtomicUsize::new(0);
        let results: Mutex<Vec<Option<Result<Outcome, SolveError>>>> =
            Mutex::new((0..tasks).map(|_| None).collect());
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| loop {
                    let index = next.fetch_add(1, Ordering::Relaxed);
                    if index >= tasks {
                        break;
                    }
                    let mut search = Search::new(self, goal, deadline);
                    search.run_from(&prefix_of(index));
                    results.lock().unwrap()[index] = Some(search.finish());
                });
            }
        });

        // lowest task index wins ties: prefixes are in lexicographic order
        let mut best: Option<(u64, Vec<usize>)> = None;
        let mut nodes = 0;
        for result in results.into_inner().unwrap() {
            let outcome = result.expect("every task ran")?;
            nodes += outcome.nodes;
            if let Some((cost, choices)) = outcome.best {
                if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                    best = Some((cost, choices));
                }
            }
            if matches!(goal, Goal::AtMost(_)) && best.is_some() {
                break;
            }
        }
        Ok(Outcome { best, nodes })
    }
}

#[derive(Clone, Copy)]
struct Span {
    top: (u32, u32),
    bottom: (u32, u32),
}

impl Span {
    fn of(component: &Component) -> Span {
        let top = (
            component.tops.first().copied().unwrap_or(0),
            component.tops.last().copied().unwrap_or(0),
        );
        let bottom = (
            component.bottoms.first().copied().unwrap_or(0),
            component.bottoms.last().copied().unwrap_or(0),
        );
        Span { top, bottom }
    }

    /// False when one component lies entirely left of the other on both lines.
    fn may_cross(&self, other: &Span) -> bool {
        let left_of = |a: &Span, b: &Span| a.top.1 < b.top.0 && a.bottom.1 < b.bottom.0;
        !(left_of(self, other) || left_of(other, self))
    }
}

const MEMO_CAP: usize = 1 << 22;

struct Search<'a> {
    problem: &'a Problem,
    goal: Goal,
    deadline: Option<Instant>,
    choice: Vec<usize>,
    /// per undecided branch and choice: unary plus residuals towards fixed branches
    acc: Vec<Vec<u64>>,
    minval: Vec<u64>,
    rest: u64,
    cost: u64,
    /// incumbent cost, or budget + 1 when deciding
    limit: Option<u64>,
    best: Option<(u64, Vec<usize>)>,
    memo: Vec<HashMap<Vec<u32>, u64>>,
    memo_size: usize,
    nodes: u64,
    timed_out: bool,
    stop: bool,
}

impl<'a> Search<'a> {
    fn new(problem: &'a Problem, goal: Goal, deadline: Option<Instant>) -> Self {
        let acc: Vec<Vec<u64>> = problem.branches.iter().map(|b| b.unary.clone()).collect();
        let minval: Vec<u64> = acc.iter().map(|a| *a.iter().min().unwrap()).collect();
        let n = problem.branches.len();
        Search {
            problem,
            goal,
            deadline,
            choice: vec![0; n],
            rest: minval.iter().sum(),
            acc,
            minval,
            cost: problem.base,
            limit: match goal {
                Goal::Minimize => None,
                Goal::AtMost(m) => Some(m.saturating_add(1)),
            },
            best: None,
            memo: (0..=n).map(|_| HashMap::new()).collect(),
            memo_size: 0,
            nodes: 0,
            timed_out: false,
            stop: false,
        }
    }

    fn fix(&mut self, d: usize, c: usize) {
        self.choice[d] = c;
        self.cost += self.acc[d][c];
        self.rest -= self.minval[d];
        for link in &self.problem.branches[d].links {
            let j = link.to;
            let cols = self.acc[j].len();
            let row = &link.table[c * cols..(c + 1) * cols];
            for (a, r) in self.acc[j].iter_mut().zip(row) {
                *a += r;
            }
            let new_min = *self.acc[j].iter().min().unwrap();
            self.rest = self.rest - self.minval[j] + new_min;
            self.minval[j] = new_min;
        }
    }

    fn unfix(&mut self, d: usize, c: usize) {
        for link in self.problem.branches[d].links.iter().rev() {
            let j = link.to;
            let cols = self.acc[j].len();
            let row = &link.table[c * cols..(c + 1) * cols];
            for (a, r) in self.acc[j].iter_mut().zip(row) {
                *a -= r;
            }
            let new_min = *self.acc[j].iter().min().unwrap();
            self.rest = self.rest - self.minval[j] + new_min;
            self.minval[j] = new_min;
        }
        self.rest += self.minval[d];
        self.cost -= self.acc[d][c];
    }

    /// Decides whether the node at `depth` (branches before it fixed) is expanded.
    fn enter(&mut self, depth: usize) -> bool {
        if self.stop {
            return false;
        }
        if depth == self.problem.branches.len() {
            if self.limit.is_none_or(|l| self.cost < l) {
                self.limit = Some(self.cost);
                self.best = Some((self.cost, self.choice.clone()));
                if matches!(self.goal, Goal::AtMost(_)) {
                    self.stop = true;
                }
            }
            return false;
        }
        if self.limit.is_some_and(|l| self.cost + self.rest >= l) {
            return false;
        }
        // two prefixes agreeing on the frontier have identical futures
        let key: Vec<u32> = self.problem.frontier[depth]
            .iter()
            .map(|&i| self.choice[i] as u32)
            .collect();
        match self.memo[depth].get_mut(&key) {
            Some(seen) if *seen <= self.cost => return false,
            Some(seen) => *seen = self.cost,
            None if self.memo_size < MEMO_CAP => {
                self.memo[depth].insert(key, self.cost);
                self.memo_size += 1;
            }
            None => {}
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
            self.stop = true;
            return false;
        }
        true
    }

    fn run_from(&mut self, prefix: &[usize]) {
        for (d, &c) in prefix.iter().enumerate() {
            self.fix(d, c);
        }
        let start = prefix.len();
        if !self.enter(start) {
            return;
        }
        let n = self.problem.branches.len();
        let mut next = vec![0usize; n + 1];
        let mut d = start;
        loop {
            let c = next[d];
            if c < self.problem.branches[d].choices.len() {
                next[d] += 1;
                self.fix(d, c);
                if self.enter(d + 1) {
                    d += 1;
                    next[d] = 0;
                    continue;
                }
                self.unfix(d, c);
            } else {
                if d == start {
                    break;
                }
                d -= 1;
                let c = next[d] - 1;
                self.unfix(d, c);
            }
            if self.stop {
                break;
            }
        }
    }

    fn finish(self) -> Result<Outcome, SolveError> {
        if self.timed_out {
            return Err(SolveError::Timeout);
        }
        Ok(Outcome {
            best: self.best,
            nodes: self.nodes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::count_crossings_pairwise;

    fn brute_min(inst: &Instance) -> u64 {
        enumerate_perfect_matchings(inst)
            .map(|m| count_crossings_pairwise(inst, &m).unwrap().0)
            .min()
            .unwrap()
    }

    /// two 4-cycles interleaved so that their choices interact
    fn interleaved() -> Instance {
        Instance::new(
            4,
            4,
            vec![
                (1, 1),
                (1, 3),
                (3, 1),
                (3, 3),
                (2, 2),
                (2, 4),
                (4, 2),
                (4, 4),
            ],
        )
    }

    #[test]
    fn components_are_classified() {
        let comps = decompose_components(&interleaved());
        assert_eq!(comps.len(), 2);
        assert!(comps
            .iter()
            .all(|c| c.kind == ComponentKind::EvenCycle && c.choice_count == 2));
        assert_eq!(comps[0].tops, vec![1, 3]);

        let comps = decompose_components(&Instance::identity(3));
        assert_eq!(comps.len(), 3);
        assert!(comps
            .iter()
            .all(|c| c.kind == ComponentKind::Path && c.choice_count == 1));

        let k22_plus = Instance::new(2, 2, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(
            decompose_components(&k22_plus)[0].kind,
            ComponentKind::EvenCycle
        );
        let k33 = Instance::new(
            3,
            3,
            (1..=3).flat_map(|t| (1..=3).map(move |b| (t, b))).collect(),
        );
        let comps = decompose_components(&k33);
        assert_eq!(comps[0].kind, ComponentKind::General);
        assert_eq!(comps[0].choice_count, 6);
    }

    #[test]
    fn identity_solves_to_zero() {
        let r = solve_min_crossings(&Instance::identity(6)).unwrap();
        assert_eq!(r.min_crossings, CrossingCount(0));
        assert_eq!(r.witness.bottoms(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(r.nodes_explored, 0);
    }

    #[test]
    fn interacting_cycles_match_brute_force() {
        let inst = interleaved();
        let r = solve_min_crossings(&inst).unwrap();
        assert_eq!(r.min_crossings.0, brute_min(&inst));
        let e = solve_with(
            &inst,
            &SolveOptions {
                method: Method::Enumeration,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.min_crossings, e.min_crossings);
        assert_eq!(r.witness, e.witness);
    }

    #[test]
    fn general_component_matches_brute_force() {
        let edges = vec![
            (1, 2),
            (1, 3),
            (2, 1),
            (2, 3),
            (3, 1),
            (3, 2),
            (3, 3),
            (4, 4),
            (4, 1),
            (1, 4),
        ];
        let inst = Instance::new(4, 4, edges);
        assert!(inst.validate().is_valid());
        let r = solve_min_crossings(&inst).unwrap();
        assert_eq!(r.min_crossings.0, brute_min(&inst));
        r.witness.check_against(&inst).unwrap();
    }

    #[test]
    fn invalid_instance_is_rejected() {
        let inst = Instance::new(2, 2, vec![(1, 1), (2, 1)]);
        assert!(matches!(
            solve_min_crossings(&inst),
            Err(SolveError::Invalid(_))
        ));
        assert!(matches!(decide(&inst, 3), Err(SolveError::Invalid(_))));
    }

    #[test]
    fn decide_is_monotone_on_small_case() {
        let inst = interleaved();
        let min = solve_min_crossings(&inst).unwrap().min_crossings.0;
        for m in 0..min + 3 {
            let d = decide(&inst, m).unwrap();
            assert_eq!(d.feasible, m >= min, "budget {m}");
            if let Some(w) = d.witness {
                assert!(count_crossings_pairwise(&inst, &w).unwrap().0 <= m);
            }
        }
    }

    #[test]
    fn threads_do_not_change_the_answer() {
        let inst = interleaved();
        let seq = solve_min_crossings(&inst).unwrap();
        let par = solve_with(
            &inst,
            &SolveOptions {
                threads: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq.min_crossings, par.min_crossings);
        assert_eq!(seq.witness, par.witness);
    }

    #[test]
    fn empty_instance() {
        let r = solve_min_crossings(&Instance::new(0, 0, vec![])).unwrap();
        assert_eq!(r.min_crossings, CrossingCount(0));
        assert!(r.witness.is_empty());
        assert!(decide(&Instance::new(0, 0, vec![]), 0).unwrap().feasible);
    }
}
