//! Text formats for source graphs (`p vc`) and gadget maps (`p map`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use super::gadgets::Side;
use super::{reduce_vc, GadgetMap, ReductionError, SourceGraph};
use crate::format::{parse_u32, parse_u64, parse_usize, records, ParseError};

pub fn parse_vc(text: &str) -> Result<SourceGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, fields) in records(text) {
        match (fields[0], header) {
            ("p", None) => {
                if fields.len() != 4 || fields[1] != "vc" {
                    return Err(ParseError::new(line, "expected `p vc <n> <m>`"));
                }
                header = Some((parse_usize(line, fields[2])?, parse_usize(line, fields[3])?));
            }
            ("p", Some(_)) => return Err(ParseError::new(line, "duplicate `p` header")),
            (_, None) => {
                return Err(ParseError::new(
                    line,
                    "first record must be the `p vc` header",
                ))
            }
            ("e", Some((n, _))) => {
                if fields.len() != 3 {
                    return Err(ParseError::new(line, "expected `e <u> <v>`"));
                }
                let (u, v) = (parse_u32(line, fields[1])?, parse_u32(line, fields[2])?);
                for w in [u, v] {
                    if w == 0 || w as usize > n {
                        return Err(ParseError::new(line, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(ParseError::new(line, format!("self-loop at vertex {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(ParseError::new(
                        line,
                        format!("edge {{{u}, {v}}} listed twice"),
                    ));
                }
                edges.push((u, v));
            }
            (other, Some(_)) => {
                return Err(ParseError::new(
                    line,
                    format!("unknown record type `{other}`"),
                ))
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(ParseError::new(0, "missing `p vc` header"));
    };
    if edges.len() != m {
        return Err(ParseError::new(
            0,
            format!("header announces {m} edges but {} were given", edges.len()),
        ));
    }
    SourceGraph::new(n, edges).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn serialize_vc(graph: &SourceGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p vc {} {}", graph.vertex_count(), graph.edges().len()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Header values, `vg` values by vertex, `eg` values by edge.
type MapRecords = (
    Vec<u64>,
    BTreeMap<u32, Vec<u64>>,
    BTreeMap<(u32, u32), Vec<u64>>,
);

fn map_records(map: &GadgetMap) -> MapRecords {
    let asm = &map.assembly;
    let header = vec![
        map.source.vertex_count() as u64,
        map.source.edges().len() as u64,
        map.c5,
        map.k,
        map.m,
    ];
    let top = |x| asm.top_rank(x).expect("placed") as u64;
    let bottom = |x| asm.bottom_rank(x).expect("placed") as u64;
    let vgs = asm
        .vertex_gadgets
        .iter()
        .map(|g| {
            let (lo, hi) = (
                g.column_x(Side::Left, 2 * g.size),
                g.column_x(Side::Right, 2 * g.size),
            );
            (
                g.owner,
                vec![
                    g.size as u64,
                    top(g.origin),
                    bottom(g.origin),
                    top(lo),
                    top(hi),
                ],
            )
        })
        .collect();
    let egs = asm
        .edge_gadgets
        .iter()
        .map(|e| {
            (
                e.owner,
                vec![
                    top(e.a),
                    bottom(e.b),
                    bottom(e.c),
                    top(e.d),
                    top(e.e),
                    bottom(e.f),
                ],
            )
        })
        .collect();
    (header, vgs, egs)
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Header, then `vg` lines by vertex, `eg` lines by edge, `drop` lines.
pub fn serialize_map(map: &GadgetMap) -> String {
    let (header, vgs, egs) = map_records(map);
    let mut out = String::new();
    writeln!(out, "p map {}", join(&header)).unwrap();
    for (v, values) in vgs {
        writeln!(out, "vg {v} {}", join(&values)).unwrap();
    }
    for ((u, v), values) in egs {
        writeln!(out, "eg {u} {v} {}", join(&values)).unwrap();
    }
    for v in &map.dropped_isolated {
        writeln!(out, "drop {v}").unwrap();
    }
    out
}

/// Reads a map back. The source graph is recovered from the `eg` lines and
/// reduced again; every recorded rank must agree with the rebuilt layout.
pub fn parse_map(text: &str) -> Result<GadgetMap, ParseError> {
    let mut header: Option<(usize, Vec<u64>)> = None;
    let mut vgs: Vec<(usize, u32, Vec<u64>)> = Vec::new();
    let mut egs: Vec<(usize, (u32, u32), Vec<u64>)> = Vec::new();
    let mut drops: Vec<(usize, u32)> = Vec::new();
    let numbers = |line: usize, fields: &[&str]| -> Result<Vec<u64>, ParseError> {
        fields.iter().map(|f| parse_u64(line, f)).collect()
    };
    for (line, fields) in records(text) {
        let arity = |want: usize, shape: &str| {
            if fields.len() == want {
                Ok(())
            } else {
                Err(ParseError::new(line, format!("expected `{shape}`")))
            }
        };
        match (fields[0], header.is_some()) {
            ("p", false) => {
                arity(7, "p map <n> <n_edges> <c5> <k> <m>")?;
                if fields[1] != "map" {
                    return Err(ParseError::new(line, "expected `p map` header"));
                }
                header = Some((line, numbers(line, &fields[2..])?));
            }
            ("p", true) => return Err(ParseError::new(line, "duplicate `p` header")),
            (_, false) => {
                return Err(ParseError::new(
                    line,
                    "first record must be the `p map` header",
                ))
            }
            ("vg", true) => {
                arity(7, "vg <v> <s> <purple_top> <purple_bottom> <first> <last>")?;
                vgs.push((
                    line,
                    parse_u32(line, fields[1])?,
                    numbers(line, &fields[2..])?,
                ));
            }
            ("eg", true) => {
                arity(9, "eg <u> <v> <a> <b> <c> <d> <e> <f>")?;
                let edge = (parse_u32(line, fields[1])?, parse_u32(line, fields[2])?);
                egs.push((line, edge, numbers(line, &fields[3..])?));
            }
            ("drop", true) => {
                arity(2, "drop <v>")?;
                drops.push((line, parse_u32(line, fields[1])?));
            }
            (other, true) => {
                return Err(ParseError::new(
                    line,
                    format!("unknown record type `{other}`"),
                ))
            }
        }
    }
    let Some((header_line, values)) = header else {
        return Err(ParseError::new(0, "missing `p map` header"));
    };
    let (n, n_edges, k) = (values[0] as usize, values[1] as usize, values[3]);
    if egs.len() != n_edges {
        return Err(ParseError::new(
            header_line,
            format!(
                "header announces {n_edges} edge gadgets but {} were given",
                egs.len()
            ),
        ));
    }
    let graph = SourceGraph::new(n, egs.iter().map(|(_, e, _)| *e)).map_err(|e| {
        let line = match e {
            ReductionError::DuplicateEdge { u, v } => egs
                .iter()
                .filter(|(_, (a, b), _)| (*a.min(b), *a.max(b)) == (u, v))
                .nth(1)
                .map_or(0, |r| r.0),
            _ => header_line,
        };
        ParseError::new(line, e.to_string())
    })?;
    let (_, map) = reduce_vc(&graph, k).map_err(|e| ParseError::new(header_line, e.to_string()))?;
    let (want_header, want_vgs, want_egs) = map_records(&map);
    if values != want_header {
        return Err(ParseError::new(
            header_line,
            format!(
                "header disagrees with the rebuilt reduction `p map {}`",
                join(&want_header)
            ),
        ));
    }
    if vgs.len() != want_vgs.len() {
        return Err(ParseError::new(
            0,
            format!(
                "expected {} vertex gadgets, found {}",
                want_vgs.len(),
                vgs.len()
            ),
        ));
    }
    for (line, v, got) in &vgs {
        match want_vgs.get(v) {
            Some(want) if want == got => {}
            Some(want) => {
                return Err(ParseError::new(
                    *line,
                    format!("expected `vg {v} {}`", join(want)),
                ));
            }
            None => return Err(ParseError::new(*line, format!("vertex {v} has no gadget"))),
        }
    }
    for (line, (u, v), got) in &egs {
        let want = &want_egs[&(*u.min(v), *u.max(v))];
        if u > v || want != got {
            return Err(ParseError::new(
                *line,
                format!("expected `eg {} {} {}`", u.min(v), u.max(v), join(want)),
            ));
        }
    }
    let dropped: Vec<u32> = drops.iter().map(|&(_, v)| v).collect();
    if dropped != map.dropped_isolated {
        let line = drops.first().map_or(header_line, |d| d.0);
        return Err(ParseError::new(
            line,
            format!("expected dropped vertices {:?}", map.dropped_isolated),
        ));
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vc_round_trip_and_errors() {
        let text = "p vc 3 3\ne 1 2\ne 1 3\ne 2 3\n";
        let g = parse_vc(text).unwrap();
        assert_eq!(g, SourceGraph::complete(3));
        assert_eq!(serialize_vc(&g), text);
        assert_eq!(parse_vc("p vc 2 1\ne 2 2\n").unwrap_err().line, 2);
        assert_eq!(parse_vc("p vc 2 2\ne 1 2\ne 2 1\n").unwrap_err().line, 3);
        assert_eq!(parse_vc("p vc 2 1\ne 1 3\n").unwrap_err().line, 2);
        assert!(parse_vc("p vc 2 2\ne 1 2\n").is_err());
    }

    #[test]
    fn map_round_trip() {
        let g = SourceGraph::new(4, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let (_, map) = reduce_vc(&g, 2).unwrap();
        let text = serialize_map(&map);
        assert!(text.starts_with(&format!("p map 4 3 {} 2 {}\n", map.c5, map.m)));
        assert!(text.ends_with("drop 4\n"));
        let back = parse_map(&text).unwrap();
        assert_eq!(back, map);
        assert_eq!(serialize_map(&back), text);
    }

    #[test]
    fn tampered_map_is_rejected_at_the_line() {
        let (_, map) = reduce_vc(&SourceGraph::path(2), 1).unwrap();
        let text = serialize_map(&map);
        let mut lines: Vec<String> = text.lines().map(String::from).collect();
        lines[1] = lines[1].replace("vg 1 2", "vg 1 3");
        let err = parse_map(&lines.join("\n")).unwrap_err();
        assert_eq!(err.line, 2);
    }
}
