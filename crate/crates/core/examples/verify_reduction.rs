//! Check that min crossings − c5 equals the minimum vertex cover size on
//! every graph with five vertices and a batch of random graphs.
//!
//! ```text
//! cargo run --release --example verify_reduction [samples] [seed]
//! ```

use crossmatch::cli::{check_graph, verification_graphs};

pub fn run(samples: usize, seed: u64) -> String {
    let graphs = verification_graphs(8, samples, seed);
    let mut by_cover = [0usize; 9];
    for g in &graphs {
        let check = check_graph(g, 1).unwrap();
        assert!(check.failures.is_empty(), "{g}: {:?}", check.failures);
        by_cover[check.cover_size] += 1;
    }
    let mut report = format!("{} graphs, all consistent\n", graphs.len());
    for (size, count) in by_cover.iter().enumerate().filter(|(_, &c)| c > 0) {
        report += &format!("  cover size {size}: {count} graphs\n");
    }
    report
}

pub fn run_example() -> String {
    run(20, 1)
}

fn main() {
    let mut args = std::env::args().skip(1);
    let samples = args
        .next()
        .map_or(100, |a| a.parse().expect("samples is a number"));
    let seed = args
        .next()
        .map_or(0, |a| a.parse().expect("seed is a number"));
    print!("{}", run(samples, seed));
}
