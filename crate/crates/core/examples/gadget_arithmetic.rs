//! Crossing counts of single gadgets and of incident gadget pairs.
//!
//! ```text
//! cargo run --example gadget_arithmetic
//! ```

use crossmatch::reduction::{
    build_vertex_gadget, crossings_within, CoveredSide, GadgetLayout, VertexState,
};

pub fn run_example() -> String {
    let mut report = String::from("vertex gadget  selected  not_selected\n");
    for s in 1..=6 {
        let g = build_vertex_gadget(1, s, 0).unwrap();
        report += &format!(
            "s = {s}          {:>8}  {:>12}\n",
            crossings_within(&g.selected),
            crossings_within(&g.not_selected)
        );
    }

    report += "\nincident pair, outer slot s: (sel,cov) (sel,unc) (unsel,cov) (unsel,unc)\n";
    for s in 1..=3 {
        let mut layout = GadgetLayout::new();
        let u = layout.add_vertex_gadget(1, 4).unwrap();
        let v = layout.add_vertex_gadget(2, 4).unwrap();
        let e = layout.add_edge_gadget(u, [s, s + 1], v, [1, 2]).unwrap();
        let asm = layout.finish();
        let edge = &asm.edge_gadgets[e];
        report += &format!(
            "s = {s}  edge gadget alone: {}  ",
            crossings_within(&edge.matching(CoveredSide::Left))
        );
        // the edge is covered at u exactly when its left side is covered
        let row: Vec<u64> = [
            (VertexState::Selected, CoveredSide::Left),
            (VertexState::Selected, CoveredSide::Right),
            (VertexState::NotSelected, CoveredSide::Left),
            (VertexState::NotSelected, CoveredSide::Right),
        ]
        .iter()
        .map(|&(state, side)| asm.pair_crossings(u, state, e, side))
        .collect();
        report += &format!("{row:?}\n");
    }
    report
}

fn main() {
    print!("{}", run_example());
}
