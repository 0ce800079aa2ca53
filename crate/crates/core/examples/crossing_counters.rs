//! The O(n log n) inversion counter against the all-pairs definition.
//!
//! ```text
//! cargo run --release --example crossing_counters
//! ```

use std::time::Instant;

use crossmatch::model::{count_crossings_fast, count_crossings_pairwise};
use crossmatch::{Instance, Matching};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_pcg::Pcg64;

pub fn run_example() -> String {
    let mut rng = Pcg64::seed_from_u64(42);
    let mut report = String::from("     n   crossings   fast (us)   pairwise (us)\n");
    for n in [10usize, 100, 1000, 3000] {
        let mut bottoms: Vec<u32> = (1..=n as u32).collect();
        bottoms.shuffle(&mut rng);
        let pairs: Vec<(u32, u32)> = (1..=n as u32).zip(bottoms).collect();
        let instance = Instance::new(n, n, pairs.clone());
        let matching = Matching::new(pairs);

        let t = Instant::now();
        let fast = count_crossings_fast(&matching).unwrap();
        let fast_us = t.elapsed().as_micros();
        let t = Instant::now();
        let slow = count_crossings_pairwise(&instance, &matching).unwrap();
        let slow_us = t.elapsed().as_micros();
        assert_eq!(fast, slow);
        report += &format!("{n:>6} {fast:>11} {fast_us:>11} {slow_us:>15}\n");
    }
    report
}

fn main() {
    print!("{}", run_example());
}
