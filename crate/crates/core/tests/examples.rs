//! Every example under `examples/` runs and reports what it should.

#[allow(dead_code)]
#[path = "../examples/crossing_counters.rs"]
mod crossing_counters;
#[allow(dead_code)]
#[path = "../examples/file_formats.rs"]
mod file_formats;
#[allow(dead_code)]
#[path = "../examples/gadget_arithmetic.rs"]
mod gadget_arithmetic;
#[allow(dead_code)]
#[path = "../examples/reduce_vertex_cover.rs"]
mod reduce_vertex_cover;
#[allow(dead_code)]
#[path = "../examples/render_gadgets.rs"]
mod render_gadgets;
#[allow(dead_code)]
#[path = "../examples/scaling_bench.rs"]
mod scaling_bench;
#[allow(dead_code)]
#[path = "../examples/solve_instance.rs"]
mod solve_instance;
#[allow(dead_code)]
#[path = "../examples/verify_reduction.rs"]
mod verify_reduction;

#[test]
fn solve_instance_runs() {
    let out = solve_instance::run_example();
    assert!(out.starts_with("min crossings 2"));
    assert!(out.contains("at most 1? no"));
    assert!(out.contains("at most 2? yes"));
}

#[test]
fn reduce_vertex_cover_runs() {
    let out = reduce_vertex_cover::run_example();
    assert!(out.contains("max degree 2"));
    assert!(out.contains("cnt_s 2 + 2*cnt_nsc 0"));
    assert!(out.contains("(valid: true)"));
    assert!(out.contains("p map 4 4"));
}

#[test]
fn gadget_arithmetic_runs() {
    let out = gadget_arithmetic::run_example();
    assert!(out.contains("s = 6                13            12"));
    assert!(out.contains("s = 2  edge gadget alone: 1  [3, 7, 5, 7]"));
}

#[test]
fn verify_reduction_runs() {
    assert!(verify_reduction::run_example().starts_with("1044 graphs, all consistent"));
}

#[test]
fn render_gadgets_runs() {
    let dir = tempfile::tempdir().unwrap();
    let files = render_gadgets::write_drawings(dir.path());
    assert_eq!(files.len(), 5);
    for f in files {
        let text = std::fs::read_to_string(f).unwrap();
        roxmltree::Document::parse(&text).unwrap();
    }
}

#[test]
fn crossing_counters_runs() {
    assert_eq!(crossing_counters::run_example().lines().count(), 5);
}

#[test]
fn scaling_bench_runs() {
    let out = scaling_bench::run_example();
    assert!(out.contains("C7"));
    assert!(!out.contains("C8"));
}

#[test]
fn file_formats_runs() {
    let out = file_formats::run_example();
    assert!(out.contains("map: 6 lines"));
    assert!(out.contains("diagnostic: line 2:"));
}
