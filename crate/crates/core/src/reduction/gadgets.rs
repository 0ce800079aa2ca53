//! Vertex and edge gadgets in integer x-coordinates.
//!
//! A vertex gadget of size `s` centred at `o` has one column at `o` (the
//! centre edge) and `2s` columns per side at `o ± 1, o ± 3, …, o ± (4s − 1)`,
//! each column holding one top and one bottom vertex. Slot `k` of a side sits
//! at `o ± (4(s − k) + 2)`, so slot 1 is the outermost.

use std::cmp::Ordering;
use std::fmt;

use super::ReductionError;

/// A straight segment from `(top, upper line)` to `(bottom, lower line)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub top: i64,
    pub bottom: i64,
}

impl Segment {
    pub const fn new(top: i64, bottom: i64) -> Self {
        Segment { top, bottom }
    }

    pub fn crosses(&self, other: &Segment) -> bool {
        matches!(
            (self.top.cmp(&other.top), self.bottom.cmp(&other.bottom)),
            (Ordering::Less, Ordering::Greater) | (Ordering::Greater, Ordering::Less)
        )
    }
}

/// Crossing pairs with one segment from each side.
pub fn crossings_between_segments(first: &[Segment], second: &[Segment]) -> u64 {
    first
        .iter()
        .map(|a| second.iter().filter(|b| a.crosses(b)).count() as u64)
        .sum()
}

/// Crossing pairs within one segment set.
pub fn crossings_within(segments: &[Segment]) -> u64 {
    let mut count = 0;
    for (i, a) in segments.iter().enumerate() {
        count += segments[i + 1..].iter().filter(|b| a.crosses(b)).count() as u64;
    }
    count
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn sign(self) -> i64 {
        match self {
            Side::Left => -1,
            Side::Right => 1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexState {
    Selected,
    NotSelected,
}

impl fmt::Display for VertexState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexState::Selected => "selected",
            VertexState::NotSelected => "not_selected",
        })
    }
}

/// Which endpoint an edge gadget's matching covers. `Left` is the gadget of
/// the left endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoveredSide {
    Left,
    Right,
}

impl fmt::Display for CoveredSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoveredSide::Left => "covered_left",
            CoveredSide::Right => "covered_right",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexGadget {
    pub owner: u32,
    pub size: usize,
    /// x of the centre column
    pub origin: i64,
    /// the alternating "selected" matching, centre edge included
    pub selected: Vec<Segment>,
    pub not_selected: Vec<Segment>,
}

/// Builds a vertex gadget of `size` slots per side centred at `x_offset`.
pub fn build_vertex_gadget(
    owner: u32,
    size: usize,
    x_offset: i64,
) -> Result<VertexGadget, ReductionError> {
    if size == 0 {
        return Err(ReductionError::ZeroSizeGadget { owner });
    }
    let col = |side: Side, i: usize| x_offset + side.sign() * (2 * i as i64 - 1);
    let columns = 2 * size;
    let centre = Segment::new(x_offset, x_offset);

    let mut selected = vec![centre];
    let mut not_selected = vec![centre];
    for side in [Side::Left, Side::Right] {
        for i in 1..=size {
            let (p, q) = (col(side, 2 * i - 1), col(side, 2 * i));
            not_selected.push(Segment::new(p, q));
            not_selected.push(Segment::new(q, p));
        }
        for i in 1..size {
            let (p, q) = (col(side, 2 * i), col(side, 2 * i + 1));
            selected.push(Segment::new(p, q));
            selected.push(Segment::new(q, p));
        }
        let outer = col(side, columns);
        selected.push(Segment::new(outer, outer));
    }
    let (l, r) = (col(Side::Left, 1), col(Side::Right, 1));
    selected.push(Segment::new(l, r));
    selected.push(Segment::new(r, l));
    selected.sort_unstable();
    not_selected.sort_unstable();
    Ok(VertexGadget {
        owner,
        size,
        origin: x_offset,
        selected,
        not_selected,
    })
}

impl VertexGadget {
    /// x of column `i` (1 = innermost, `2s` = outermost).
    pub fn column_x(&self, side: Side, i: usize) -> i64 {
        self.origin + side.sign() * (2 * i as i64 - 1)
    }

    /// x of slot `k` (1 = outermost, `s` = innermost).
    pub fn slot_x(&self, side: Side, k: usize) -> i64 {
        self.origin + side.sign() * (4 * (self.size - k) as i64 + 2)
    }

    /// Leftmost and rightmost column x.
    pub fn span(&self) -> (i64, i64) {
        (
            self.column_x(Side::Left, 2 * self.size),
            self.column_x(Side::Right, 2 * self.size),
        )
    }

    /// Every column x, ascending. Each holds one top and one bottom vertex.
    pub fn xs(&self) -> Vec<i64> {
        let (lo, hi) = self.span();
        (lo..=hi)
            .filter(|x| (x - self.origin) % 2 != 0 || *x == self.origin)
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.xs().len()
    }

    pub fn matching(&self, state: VertexState) -> &[Segment] {
        match state {
            VertexState::Selected => &self.selected,
            VertexState::NotSelected => &self.not_selected,
        }
    }

    /// Union of both matchings; the gadget's edge set.
    pub fn edges(&self) -> Vec<Segment> {
        let mut all: Vec<Segment> = self
            .selected
            .iter()
            .chain(&self.not_selected)
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeGadget {
    /// (left endpoint, right endpoint) in gadget order
    pub owner: (u32, u32),
    /// (outer, inner) slot numbers on the right side of the left gadget
    pub u_slots: (usize, usize),
    /// (outer, inner) slot numbers on the left side of the right gadget
    pub v_slots: (usize, usize),
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

fn slot_pair(
    gadget: &VertexGadget,
    side: Side,
    slots: [usize; 2],
) -> Result<(usize, usize), ReductionError> {
    let (outer, inner) = (slots[0].min(slots[1]), slots[0].max(slots[1]));
    if inner != outer + 1 {
        return Err(ReductionError::NonConsecutiveSlots {
            owner: gadget.owner,
            side,
            slots,
        });
    }
    if outer == 0 || inner > gadget.size {
        return Err(ReductionError::SlotOutOfRange {
            owner: gadget.owner,
            side,
            slot: if outer == 0 { 0 } else { inner },
        });
    }
    Ok((outer, inner))
}

/// Places an edge gadget between the right slots `u_slots` of `u` and the
/// left slots `v_slots` of `v`. `u` must lie strictly left of `v`.
///
/// `a`, `b` go in the geometrically left slot of `u`'s pair and `c` in the
/// right one; `d` goes in the left slot of `v`'s pair and `e`, `f` in the
/// right one.
pub fn build_edge_gadget(
    u: &VertexGadget,
    u_slots: [usize; 2],
    v: &VertexGadget,
    v_slots: [usize; 2],
) -> Result<EdgeGadget, ReductionError> {
    if u.span().1 >= v.span().0 {
        return Err(ReductionError::NotLeftOf {
            u: u.owner,
            v: v.owner,
        });
    }
    let (u_outer, u_inner) = slot_pair(u, Side::Right, u_slots)?;
    let (v_outer, v_inner) = slot_pair(v, Side::Left, v_slots)?;
    // on the right side the inner slot is the left one; on the left side the outer one is
    let (ab, c) = (
        u.slot_x(Side::Right, u_inner),
        u.slot_x(Side::Right, u_outer),
    );
    let (d, ef) = (v.slot_x(Side::Left, v_outer), v.slot_x(Side::Left, v_inner));
    Ok(EdgeGadget {
        owner: (u.owner, v.owner),
        u_slots: (u_outer, u_inner),
        v_slots: (v_outer, v_inner),
        a: ab,
        b: ab,
        c,
        d,
        e: ef,
        f: ef,
    })
}

impl EdgeGadget {
    /// a–b, c–e, d–f: the left endpoint covers the edge.
    pub fn covered_left(&self) -> [Segment; 3] {
        [
            Segment::new(self.a, self.b),
            Segment::new(self.e, self.c),
            Segment::new(self.d, self.f),
        ]
    }

    /// a–c, b–d, e–f: the right endpoint covers the edge.
    pub fn covered_right(&self) -> [Segment; 3] {
        [
            Segment::new(self.a, self.c),
            Segment::new(self.d, self.b),
            Segment::new(self.e, self.f),
        ]
    }

    pub fn matching(&self, side: CoveredSide) -> [Segment; 3] {
        match side {
            CoveredSide::Left => self.covered_left(),
            CoveredSide::Right => self.covered_right(),
        }
    }

    pub fn edges(&self) -> Vec<Segment> {
        let mut all: Vec<Segment> = self
            .covered_left()
            .into_iter()
            .chain(self.covered_right())
            .collect();
        all.sort_unstable();
        all
    }

    pub fn top_xs(&self) -> [i64; 3] {
        [self.a, self.d, self.e]
    }

    pub fn bottom_xs(&self) -> [i64; 3] {
        [self.b, self.c, self.f]
    }

    /// Which endpoint the covered side refers to.
    pub fn endpoint(&self, side: CoveredSide) -> u32 {
        match side {
            CoveredSide::Left => self.owner.0,
            CoveredSide::Right => self.owner.1,
        }
    }
}
