//! Vertex Cover to crossing-avoiding matching.
//!
//! Every non-isolated source vertex `v` becomes a vertex gadget of size
//! `2·d(v)`, placed left to right by vertex id. Every source edge becomes a
//! 6-cycle edge gadget with two vertices in each of two consecutive slots of
//! its endpoints. For any perfect matching `M` of the result,
//!
//! ```text
//! crossings(M) = cnt_s(M) + 2·cnt_nsc(M) + c5
//! ```
//!
//! where `cnt_s` counts selected vertex gadgets and `cnt_nsc` counts edge
//! gadgets whose covered side sits in an unselected vertex gadget. The
//! budget is `m = k + c5`.

mod format;
mod gadgets;
mod layout;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::format::ParseError;
use crate::model::{count_crossings_pairwise, Instance, Matching, ModelError};

pub use format::{parse_map, parse_vc, serialize_map, serialize_vc};
pub use gadgets::{
    build_edge_gadget, build_vertex_gadget, crossings_between_segments, crossings_within,
    CoveredSide, EdgeGadget, Segment, Side, VertexGadget, VertexState,
};
pub use layout::{Assembly, GadgetLayout};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("vertex gadget for {owner} would have size 0")]
    ZeroSizeGadget { owner: u32 },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: u32 },
    #[error("edge {{{u}, {v}}} listed twice")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("vertex {v} outside 1..={n}")]
    VertexOutOfRange { v: u32, n: usize },
    #[error("slots {slots:?} on the {side} of gadget {owner} are not consecutive")]
    NonConsecutiveSlots {
        owner: u32,
        side: Side,
        slots: [usize; 2],
    },
    #[error("slot {slot} on the {side} of gadget {owner} does not exist")]
    SlotOutOfRange { owner: u32, side: Side, slot: usize },
    #[error("slot {slot} on the {side} of gadget {owner} is already used")]
    SlotOccupied { owner: u32, side: Side, slot: usize },
    #[error("gadget {u} is not strictly left of gadget {v}")]
    NotLeftOf { u: u32, v: u32 },
    #[error("no gadget with index {index}")]
    UnknownGadget { index: usize },
    #[error("vertex {v} is not an endpoint of edge {{{}, {}}}", edge.0, edge.1)]
    NotIncident { v: u32, edge: (u32, u32) },
    #[error("no gadget for source {what}")]
    NoSuchGadget { what: String },
    #[error("matching agrees with neither local matching of the {what}")]
    InconsistentGadget { what: String },
    #[error(transparent)]
    Matching(#[from] ModelError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// The Vertex Cover input graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SourceGraph {
    n: usize,
    /// normalised `u < v`, sorted
    edges: Vec<(u32, u32)>,
}

impl SourceGraph {
    /// Rejects self-loops, repeated edges and out-of-range endpoints.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, ReductionError> {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w as usize > n {
                    return Err(ReductionError::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(ReductionError::SelfLoop { v: u });
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(ReductionError::DuplicateEdge { u: e.0, v: e.1 });
            }
        }
        Ok(SourceGraph {
            n,
            edges: seen.into_iter().collect(),
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n as u32).flat_map(|u| (u + 1..=n as u32).map(move |v| (u, v)));
        SourceGraph::new(n, edges).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need three vertices");
        let edges = (1..=n as u32).map(|u| (u, u % n as u32 + 1));
        SourceGraph::new(n, edges).unwrap()
    }

    pub fn path(n: usize) -> Self {
        SourceGraph::new(n, (1..n as u32).map(|u| (u, u + 1))).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_cover(&self, cover: &BTreeSet<u32>) -> bool {
        self.edges
            .iter()
            .all(|(u, v)| cover.contains(u) || cover.contains(v))
    }
}

impl fmt::Display for SourceGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, E={{", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "}})")
    }
}

/// Slot pairs chosen for one source edge `(u, v)`, `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeSlots {
    pub edge: (u32, u32),
    /// on the right side of `u`'s gadget
    pub u_slots: [usize; 2],
    /// on the left side of `v`'s gadget
    pub v_slots: [usize; 2],
}

/// Assigns each edge a consecutive slot pair at both endpoints.
///
/// Gadgets are ordered by vertex id, so an edge leaves the right side of its
/// smaller endpoint and enters the left side of the larger one. Per gadget
/// side, incident edges sorted by partner id descending take pairs (1,2),
/// (3,4), … from the outside in.
pub fn allocate_slots(graph: &SourceGraph) -> Vec<EdgeSlots> {
    let mut right: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut left: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &(u, v) in &graph.edges {
        right.entry(u).or_default().push(v);
        left.entry(v).or_default().push(u);
    }
    let pair_index = |lists: &BTreeMap<u32, Vec<u32>>, owner: u32, partner: u32| {
        let mut partners = lists[&owner].clone();
        partners.sort_unstable_by(|a, b| b.cmp(a));
        let i = partners.iter().position(|&p| p == partner).unwrap();
        [2 * i + 1, 2 * i + 2]
    };
    graph
        .edges
        .iter()
        .map(|&(u, v)| EdgeSlots {
            edge: (u, v),
            u_slots: pair_index(&right, u, v),
            v_slots: pair_index(&left, v, u),
        })
        .collect()
}

/// Everything needed to read a reduced instance back in source terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetMap {
    pub source: SourceGraph,
    pub assembly: Assembly,
    /// source vertex → index into `assembly.vertex_gadgets`
    pub vertex_index: BTreeMap<u32, usize>,
    /// source edge → index into `assembly.edge_gadgets`
    pub edge_index: BTreeMap<(u32, u32), usize>,
    pub c5: u64,
    pub k: u64,
    pub m: u64,
    pub dropped_isolated: Vec<u32>,
}

impl GadgetMap {
    pub fn vertex_gadget(&self, v: u32) -> Option<&VertexGadget> {
        self.vertex_index
            .get(&v)
            .map(|&i| &self.assembly.vertex_gadgets[i])
    }

    pub fn edge_gadget(&self, edge: (u32, u32)) -> Option<&EdgeGadget> {
        let key = (edge.0.min(edge.1), edge.0.max(edge.1));
        self.edge_index
            .get(&key)
            .map(|&i| &self.assembly.edge_gadgets[i])
    }

    /// Vertices that received a gadget.
    pub fn gadget_vertices(&self) -> usize {
        self.assembly.vertex_gadgets.len()
    }

    /// All vertex gadgets selected, all edge gadgets covered on `side`.
    pub fn reference_matching(&self, side: CoveredSide) -> Matching {
        self.assembly
            .matching_for(|_| VertexState::Selected, |_| side)
    }

    /// Matching realising a vertex set: gadgets of `cover` selected, every
    /// edge covered at a selected endpoint when it has one (left preferred).
    pub fn matching_for_cover(&self, cover: &BTreeSet<u32>) -> Matching {
        self.assembly.matching_for(
            |g| {
                if cover.contains(&g.owner) {
                    VertexState::Selected
                } else {
                    VertexState::NotSelected
                }
            },
            |e| {
                if !cover.contains(&e.owner.0) && cover.contains(&e.owner.1) {
                    CoveredSide::Right
                } else {
                    CoveredSide::Left
                }
            },
        )
    }
}

/// Builds the instance for `(graph, k)` with budget `k + c5`.
pub fn reduce_vc(graph: &SourceGraph, k: u64) -> Result<(Instance, GadgetMap), ReductionError> {
    // SourceGraph's constructor already rejects loops and repeats
    let mut layout = GadgetLayout::new();
    let mut vertex_index = BTreeMap::new();
    let mut dropped_isolated = Vec::new();
    for v in 1..=graph.n as u32 {
        let d = graph.degree(v);
        if d == 0 {
            dropped_isolated.push(v);
            continue;
        }
        vertex_index.insert(v, layout.add_vertex_gadget(v, 2 * d)?);
    }
    let mut edge_index = BTreeMap::new();
    for slots in allocate_slots(graph) {
        let (u, v) = slots.edge;
        let idx = layout.add_edge_gadget(
            vertex_index[&u],
            slots.u_slots,
            vertex_index[&v],
            slots.v_slots,
        )?;
        edge_index.insert(slots.edge, idx);
    }
    let assembly = layout.finish();

    let mut map = GadgetMap {
        source: graph.clone(),
        assembly,
        vertex_index,
        edge_index,
        c5: 0,
        k,
        m: 0,
        dropped_isolated,
    };
    let instance = map.assembly.instance.clone();
    map.c5 = compute_c5(&instance, &map)?;
    map.m = k + map.c5;
    let instance = instance.with_budget(map.m);
    map.assembly.instance.budget = Some(map.m);
    Ok((instance, map))
}

/// `c5 = crossings(M0) − |V'|` for the reference matching `M0`: every vertex
/// gadget selected, every edge gadget covered on the left.
pub fn compute_c5(instance: &Instance, map: &GadgetMap) -> Result<u64, ReductionError> {
    let reference = map.reference_matching(CoveredSide::Left);
    let crossings = count_crossings_pairwise(instance, &reference)?.0;
    Ok(crossings - map.gadget_vertices() as u64)
}

/// Gadget states read off a matching, plus the incidence tallies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateReport {
    pub vertex_states: BTreeMap<u32, VertexState>,
    pub edge_states: BTreeMap<(u32, u32), CoveredSide>,
    pub cnt_s: u64,
    /// covered side selected
    pub cnt_sc: u64,
    /// uncovered side selected
    pub cnt_snc: u64,
    /// covered side not selected
    pub cnt_nsc: u64,
    /// uncovered side not selected
    pub cnt_nsnc: u64,
}

impl StateReport {
    /// `cnt_s + 2·cnt_nsc + c5`.
    pub fn predicted_crossings(&self, c5: u64) -> u64 {
        self.cnt_s + 2 * self.cnt_nsc + c5
    }
}

fn state_of(assembly: &Assembly, by_top: &[u32], segments: &[Segment]) -> bool {
    segments.iter().all(|&s| {
        let (t, b) = assembly.to_edge(s);
        by_top[t as usize] == b
    })
}

pub fn classify_gadget_states(
    matching: &Matching,
    map: &GadgetMap,
) -> Result<StateReport, ReductionError> {
    let instance = &map.assembly.instance;
    matching.check_against(instance)?;
    let mut by_top = vec![0u32; instance.n_top + 1];
    for &(t, b) in matching.pairs() {
        by_top[t as usize] = b;
    }
    let asm = &map.assembly;

    let mut vertex_states = BTreeMap::new();
    for g in &asm.vertex_gadgets {
        let state = if state_of(asm, &by_top, &g.selected) {
            VertexState::Selected
        } else if state_of(asm, &by_top, &g.not_selected) {
            VertexState::NotSelected
        } else {
            return Err(ReductionError::InconsistentGadget {
                what: format!("vertex gadget {}", g.owner),
            });
        };
        vertex_states.insert(g.owner, state);
    }

    let mut report = StateReport {
        cnt_s: vertex_states
            .values()
            .filter(|&&s| s == VertexState::Selected)
            .count() as u64,
        vertex_states,
        edge_states: BTreeMap::new(),
        cnt_sc: 0,
        cnt_snc: 0,
        cnt_nsc: 0,
        cnt_nsnc: 0,
    };
    for e in &asm.edge_gadgets {
        let side = if state_of(asm, &by_top, &e.covered_left()) {
            CoveredSide::Left
        } else if state_of(asm, &by_top, &e.covered_right()) {
            CoveredSide::Right
        } else {
            return Err(ReductionError::InconsistentGadget {
                what: format!("edge gadget {{{}, {}}}", e.owner.0, e.owner.1),
            });
        };
        let other = match side {
            CoveredSide::Left => CoveredSide::Right,
            CoveredSide::Right => CoveredSide::Left,
        };
        let selected = |v: u32| report.vertex_states[&v] == VertexState::Selected;
        let (covered, uncovered) = (selected(e.endpoint(side)), selected(e.endpoint(other)));
        match covered {
            true => report.cnt_sc += 1,
            false => report.cnt_nsc += 1,
        }
        match uncovered {
            true => report.cnt_snc += 1,
            false => report.cnt_nsnc += 1,
        }
        report.edge_states.insert(e.owner, side);
    }
    Ok(report)
}

/// Vertices whose gadget is selected.
pub fn extract_cover(
    matching: &Matching,
    map: &GadgetMap,
) -> Result<BTreeSet<u32>, ReductionError> {
    let report = classify_gadget_states(matching, map)?;
    Ok(report
        .vertex_states
        .into_iter()
        .filter(|&(_, s)| s == VertexState::Selected)
        .map(|(v, _)| v)
        .collect())
}

/// Crossings between the gadget of `v` and the gadget of `edge` under the
/// given states, counted pair by pair.
pub fn incidence_case_count(
    map: &GadgetMap,
    v: u32,
    edge: (u32, u32),
    vertex_state: VertexState,
    edge_state: CoveredSide,
) -> Result<u64, ReductionError> {
    let key = (edge.0.min(edge.1), edge.0.max(edge.1));
    if v != key.0 && v != key.1 {
        return Err(ReductionError::NotIncident { v, edge });
    }
    let vi = *map
        .vertex_index
        .get(&v)
        .ok_or_else(|| ReductionError::NoSuchGadget {
            what: format!("vertex {v}"),
        })?;
    let ei = *map
        .edge_index
        .get(&key)
        .ok_or_else(|| ReductionError::NoSuchGadget {
            what: format!("edge {{{}, {}}}", key.0, key.1),
        })?;
    Ok(map
        .assembly
        .pair_crossings(vi, vertex_state, ei, edge_state))
}

/// The covered side of an edge gadget that puts the covered end at `v`
/// (`covered = true`) or away from it.
pub fn side_for(edge: (u32, u32), v: u32, covered: bool) -> CoveredSide {
    let at_left = v == edge.0.min(edge.1);
    match (at_left, covered) {
        (true, true) | (false, false) => CoveredSide::Left,
        _ => CoveredSide::Right,
    }
}
