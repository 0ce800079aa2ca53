//! Line-oriented text formats for instances (`p cam`) and matchings (`m`).

use std::fmt::Write as _;

use super::{Edge, Instance, Matching};
use crate::format::{parse_u32, parse_u64, parse_usize, records, ParseError};

/// Parses a `p cam` file. Ranks are not range-checked here; that is
/// [`super::validate_instance`]'s job.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut budget = None;
    for (line, fields) in records(text) {
        match (fields[0], header) {
            ("p", None) => {
                if fields.len() != 5 || fields[1] != "cam" {
                    return Err(ParseError::new(
                        line,
                        "expected `p cam <n_top> <n_bottom> <n_edges>`",
                    ));
                }
                header = Some((
                    parse_usize(line, fields[2])?,
                    parse_usize(line, fields[3])?,
                    parse_usize(line, fields[4])?,
                ));
            }
            ("p", Some(_)) => return Err(ParseError::new(line, "duplicate `p` header")),
            (_, None) => {
                return Err(ParseError::new(
                    line,
                    "first record must be the `p cam` header",
                ))
            }
            ("e", Some(_)) => {
                if fields.len() != 3 {
                    return Err(ParseError::new(
                        line,
                        "expected `e <top_rank> <bottom_rank>`",
                    ));
                }
                edges.push((parse_u32(line, fields[1])?, parse_u32(line, fields[2])?));
            }
            ("b", Some(_)) => {
                if fields.len() != 2 {
                    return Err(ParseError::new(line, "expected `b <budget>`"));
                }
                if budget.is_some() {
                    return Err(ParseError::new(line, "budget given more than once"));
                }
                budget = Some(parse_u64(line, fields[1])?);
            }
            (other, Some(_)) => {
                return Err(ParseError::new(
                    line,
                    format!("unknown record type `{other}`"),
                ));
            }
        }
    }
    let Some((n_top, n_bottom, n_edges)) = header else {
        return Err(ParseError::new(0, "missing `p cam` header"));
    };
    if edges.len() != n_edges {
        return Err(ParseError::new(
            0,
            format!(
                "header announces {n_edges} edges but {} were given",
                edges.len()
            ),
        ));
    }
    Ok(Instance {
        n_top,
        n_bottom,
        edges,
        budget,
    })
}

/// Canonical form: header, edges sorted lexicographically, then the budget.
pub fn serialize_instance(instance: &Instance) -> String {
    let mut edges = instance.edges.clone();
    edges.sort_unstable();
    let mut out = String::new();
    writeln!(
        out,
        "p cam {} {} {}",
        instance.n_top,
        instance.n_bottom,
        edges.len()
    )
    .unwrap();
    for (t, b) in edges {
        writeln!(out, "e {t} {b}").unwrap();
    }
    if let Some(m) = instance.budget {
        writeln!(out, "b {m}").unwrap();
    }
    out
}

pub fn parse_matching(text: &str) -> Result<Matching, ParseError> {
    let mut pairs = Vec::new();
    for (line, fields) in records(text) {
        if fields[0] != "m" || fields.len() != 3 {
            return Err(ParseError::new(
                line,
                "expected `m <top_rank> <bottom_rank>`",
            ));
        }
        pairs.push((parse_u32(line, fields[1])?, parse_u32(line, fields[2])?));
    }
    Ok(Matching::new(pairs))
}

pub fn serialize_matching(matching: &Matching) -> String {
    let mut out = String::new();
    for &(t, b) in matching.pairs() {
        writeln!(out, "m {t} {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_canonical_instance() {
        let text = "p cam 2 2 3\ne 1 1\ne 1 2\ne 2 2\nb 4\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.budget, Some(4));
        assert_eq!(serialize_instance(&inst), text);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a comment\n\np cam 1 1 1 # trailing\n  e 1 1\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.edges, vec![(1, 1)]);
        assert_eq!(inst.budget, None);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_instance("p cam 1 1 1\ne 1 x\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_instance("e 1 1\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_instance("p cam 1 1 1\ne 1 1\nb 1\nb 2\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(parse_instance("p cam 1 1 2\ne 1 1\n").is_err());
        assert!(parse_instance("").is_err());
    }

    #[test]
    fn out_of_range_ranks_parse_but_do_not_validate() {
        let inst = parse_instance("p cam 1 1 1\ne 5 1\n").unwrap();
        assert!(!inst.validate().is_valid());
    }

    #[test]
    fn matching_round_trip() {
        let m = parse_matching("m 2 1\nm 1 2\n").unwrap();
        assert_eq!(m.pairs(), &[(1, 2), (2, 1)]);
        assert_eq!(serialize_matching(&m), "m 1 2\nm 2 1\n");
        assert_eq!(parse_matching("m 1\n").unwrap_err().line, 1);
    }
}
