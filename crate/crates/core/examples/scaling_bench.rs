//! Solver effort on reduced cycles of growing length.
//!
//! ```text
//! cargo run --release --example scaling_bench [longest-cycle]
//! ```

use crossmatch::cli::bench_cycles;

pub fn run(to: usize) -> String {
    let (rows, _) = bench_cycles(3, to, 1, None);
    let mut report = String::from("cycle  |V(H)|  nodes   min\n");
    for r in rows {
        report += &format!(
            "C{:<4} {:>7} {:>6} {:>5}\n",
            r.cycle, r.vertices, r.nodes_explored, r.min_crossings
        );
    }
    report
}

pub fn run_example() -> String {
    run(7)
}

fn main() {
    let to = std::env::args()
        .nth(1)
        .map_or(10, |a| a.parse().expect("cycle length is a number"));
    print!("{}", run(to));
}
