//! Every text format, written and read back.
//!
//! ```text
//! cargo run --example file_formats
//! ```

use crossmatch::model::{parse_instance, parse_matching, serialize_instance, serialize_matching};
use crossmatch::reduce_vc;
use crossmatch::reduction::{parse_map, parse_vc, serialize_map, serialize_vc, CoveredSide};

pub fn run_example() -> String {
    let vc = parse_vc("p vc 3 2\ne 1 2\ne 2 3\n").unwrap();
    let (instance, map) = reduce_vc(&vc, 1).unwrap();
    let matching = map.reference_matching(CoveredSide::Left);

    let texts = [
        ("vc", serialize_vc(&vc)),
        ("cam", serialize_instance(&instance)),
        ("map", serialize_map(&map)),
        ("matching", serialize_matching(&matching)),
    ];
    assert_eq!(serialize_vc(&parse_vc(&texts[0].1).unwrap()), texts[0].1);
    assert_eq!(
        serialize_instance(&parse_instance(&texts[1].1).unwrap()),
        texts[1].1
    );
    assert_eq!(serialize_map(&parse_map(&texts[2].1).unwrap()), texts[2].1);
    assert_eq!(
        serialize_matching(&parse_matching(&texts[3].1).unwrap()),
        texts[3].1
    );

    let mut report = String::new();
    for (name, text) in &texts {
        let head: Vec<&str> = text.lines().take(3).collect();
        report += &format!(
            "{name}: {} lines, starts\n  {}\n",
            text.lines().count(),
            head.join("\n  ")
        );
    }
    match parse_instance("p cam 2 2 1\ne 1 two\n") {
        Err(e) => report += &format!("diagnostic: {e}\n"),
        Ok(_) => unreachable!(),
    }
    report
}

fn main() {
    print!("{}", run_example());
}
