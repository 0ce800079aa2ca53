//! Turn a vertex-cover instance into a crossing instance and read a cover
//! back out of an optimal matching.
//!
//! ```text
//! cargo run --example reduce_vertex_cover
//! ```

use crossmatch::reduction::{classify_gadget_states, extract_cover, serialize_map};
use crossmatch::{reduce_vc, solve_min_crossings, SourceGraph};

pub fn run_example() -> String {
    // a triangle with a pendant vertex; its minimum cover has two vertices
    let graph = SourceGraph::new(4, [(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
    let k = 2;
    let (instance, map) = reduce_vc(&graph, k).unwrap();
    let mut report = format!(
        "{graph}\n|V(H)| = {}  |E(H)| = {}  max degree {}\nc5 = {}  m = k + c5 = {}\n",
        instance.vertex_count(),
        instance.edges.len(),
        instance.max_degree(),
        map.c5,
        map.m
    );

    let best = solve_min_crossings(&instance).unwrap();
    let states = classify_gadget_states(&best.witness, &map).unwrap();
    let cover = extract_cover(&best.witness, &map).unwrap();
    report += &format!(
        "min crossings {} = cnt_s {} + 2*cnt_nsc {} + c5 {}\ncover {:?} (valid: {})\n",
        best.min_crossings,
        states.cnt_s,
        states.cnt_nsc,
        map.c5,
        cover,
        graph.is_cover(&cover)
    );
    report += "map file:\n";
    report += &serialize_map(&map);
    report
}

fn main() {
    print!("{}", run_example());
}
