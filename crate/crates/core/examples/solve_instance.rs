//! Minimise crossings on a small instance, then ask the budget question.
//!
//! ```text
//! cargo run --example solve_instance
//! ```

use crossmatch::model::{count_crossings_fast, parse_instance, serialize_matching};
use crossmatch::{decide, solve_min_crossings};

const INSTANCE: &str = "\
# two interleaved 4-cycles and a forced edge
p cam 5 5 9
e 1 2
e 1 4
e 2 1
e 2 3
e 3 2
e 3 4
e 4 1
e 4 3
e 5 5
";

pub fn run_example() -> String {
    let instance = parse_instance(INSTANCE).expect("example instance parses");
    let result = solve_min_crossings(&instance).expect("example instance is valid");
    let mut report = format!(
        "min crossings {} after {} nodes\nwitness:\n{}",
        result.min_crossings,
        result.nodes_explored,
        serialize_matching(&result.witness)
    );
    assert_eq!(
        count_crossings_fast(&result.witness).unwrap(),
        result.min_crossings
    );

    for budget in [
        result.min_crossings.0.saturating_sub(1),
        result.min_crossings.0,
    ] {
        let d = decide(&instance, budget).unwrap();
        report += &format!(
            "at most {budget}? {}\n",
            if d.feasible { "yes" } else { "no" }
        );
    }
    report
}

fn main() {
    print!("{}", run_example());
}
