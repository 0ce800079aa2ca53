//! Placing gadgets side by side and compressing x-coordinates to ranks.

use std::collections::HashSet;

use super::gadgets::{
    build_edge_gadget, build_vertex_gadget, crossings_between_segments, CoveredSide, EdgeGadget,
    Segment, Side, VertexGadget, VertexState,
};
use super::ReductionError;
use crate::model::{Edge, Instance, Matching};

/// Incremental builder: vertex gadgets go left to right with one unused
/// even offset between neighbours; edge gadgets go into free slots.
#[derive(Debug, Default)]
pub struct GadgetLayout {
    vertex_gadgets: Vec<VertexGadget>,
    edge_gadgets: Vec<EdgeGadget>,
    occupied: HashSet<(usize, Side, usize)>,
    next_left: i64,
}

impl GadgetLayout {
    pub fn new() -> Self {
        GadgetLayout {
            next_left: 1,
            ..Default::default()
        }
    }

    /// Appends a vertex gadget to the right of everything placed so far.
    pub fn add_vertex_gadget(&mut self, owner: u32, size: usize) -> Result<usize, ReductionError> {
        let origin = self.next_left + 4 * size as i64 - 1;
        let gadget = build_vertex_gadget(owner, size, origin)?;
        self.next_left = gadget.span().1 + 2;
        self.vertex_gadgets.push(gadget);
        Ok(self.vertex_gadgets.len() - 1)
    }

    /// Adds an edge gadget using right slots `u_slots` of gadget `u` and left
    /// slots `v_slots` of gadget `v` (indices as returned by
    /// [`Self::add_vertex_gadget`]).
    pub fn add_edge_gadget(
        &mut self,
        u: usize,
        u_slots: [usize; 2],
        v: usize,
        v_slots: [usize; 2],
    ) -> Result<usize, ReductionError> {
        let (Some(gu), Some(gv)) = (self.vertex_gadgets.get(u), self.vertex_gadgets.get(v)) else {
            return Err(ReductionError::UnknownGadget { index: u.max(v) });
        };
        let gadget = build_edge_gadget(gu, u_slots, gv, v_slots)?;
        let wanted = [
            (u, Side::Right, gadget.u_slots.0),
            (u, Side::Right, gadget.u_slots.1),
            (v, Side::Left, gadget.v_slots.0),
            (v, Side::Left, gadget.v_slots.1),
        ];
        for &(g, side, slot) in &wanted {
            if self.occupied.contains(&(g, side, slot)) {
                return Err(ReductionError::SlotOccupied {
                    owner: self.vertex_gadgets[g].owner,
                    side,
                    slot,
                });
            }
        }
        self.occupied.extend(wanted);
        self.edge_gadgets.push(gadget);
        Ok(self.edge_gadgets.len() - 1)
    }

    pub fn finish(self) -> Assembly {
        let mut top_x: Vec<i64> = Vec::new();
        let mut bottom_x: Vec<i64> = Vec::new();
        for g in &self.vertex_gadgets {
            let xs = g.xs();
            top_x.extend(&xs);
            bottom_x.extend(&xs);
        }
        for e in &self.edge_gadgets {
            top_x.extend(e.top_xs());
            bottom_x.extend(e.bottom_xs());
        }
        top_x.sort_unstable();
        bottom_x.sort_unstable();
        debug_assert!(
            top_x.windows(2).all(|w| w[0] < w[1]),
            "two top vertices share an x"
        );
        debug_assert!(
            bottom_x.windows(2).all(|w| w[0] < w[1]),
            "two bottom vertices share an x"
        );

        let mut assembly = Assembly {
            instance: Instance::new(top_x.len(), bottom_x.len(), Vec::new()),
            vertex_gadgets: self.vertex_gadgets,
            edge_gadgets: self.edge_gadgets,
            top_x,
            bottom_x,
        };
        let mut edges: Vec<Edge> = assembly
            .vertex_gadgets
            .iter()
            .flat_map(VertexGadget::edges)
            .chain(assembly.edge_gadgets.iter().flat_map(EdgeGadget::edges))
            .map(|s| assembly.to_edge(s))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        assembly.instance.edges = edges;
        assembly
    }
}

/// A finished layout: the instance plus the geometry behind every rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assembly {
    pub instance: Instance,
    pub vertex_gadgets: Vec<VertexGadget>,
    pub edge_gadgets: Vec<EdgeGadget>,
    /// x of top rank `r` at index `r - 1`
    pub top_x: Vec<i64>,
    pub bottom_x: Vec<i64>,
}

impl Assembly {
    pub fn top_rank(&self, x: i64) -> Option<u32> {
        self.top_x.binary_search(&x).ok().map(|i| i as u32 + 1)
    }

    pub fn bottom_rank(&self, x: i64) -> Option<u32> {
        self.bottom_x.binary_search(&x).ok().map(|i| i as u32 + 1)
    }

    /// Rank pair of a gadget segment.
    pub fn to_edge(&self, segment: Segment) -> Edge {
        (
            self.top_rank(segment.top)
                .expect("segment top is a placed vertex"),
            self.bottom_rank(segment.bottom)
                .expect("segment bottom is a placed vertex"),
        )
    }

    pub fn to_segment(&self, (t, b): Edge) -> Segment {
        Segment::new(self.top_x[t as usize - 1], self.bottom_x[b as usize - 1])
    }

    /// Matching made of one local matching per gadget.
    pub fn matching_for(
        &self,
        vertex_state: impl Fn(&VertexGadget) -> VertexState,
        edge_state: impl Fn(&EdgeGadget) -> CoveredSide,
    ) -> Matching {
        let mut pairs: Vec<Edge> = Vec::new();
        for g in &self.vertex_gadgets {
            pairs.extend(g.matching(vertex_state(g)).iter().map(|&s| self.to_edge(s)));
        }
        for e in &self.edge_gadgets {
            pairs.extend(e.matching(edge_state(e)).iter().map(|&s| self.to_edge(s)));
        }
        Matching::new(pairs)
    }

    /// Crossings between vertex gadget `vertex` and edge gadget `edge`
    /// (indices into this assembly) under the given states.
    pub fn pair_crossings(
        &self,
        vertex: usize,
        state: VertexState,
        edge: usize,
        side: CoveredSide,
    ) -> u64 {
        crossings_between_segments(
            self.vertex_gadgets[vertex].matching(state),
            &self.edge_gadgets[edge].matching(side),
        )
    }
}
