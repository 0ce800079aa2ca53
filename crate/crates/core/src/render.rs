//! Static SVG drawings of instances and matchings.
//!
//! Top vertices sit on an upper horizontal line, bottom vertices on a lower
//! one, and every edge is a straight segment. With an [`Assembly`] the
//! drawing uses the layout's x-coordinates (so gadgets keep their spacing
//! and slots can be shown) and edges are coloured by gadget role.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{segments_cross, Edge, Instance, Matching, ModelError};
use crate::reduction::{Assembly, Side};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    /// pixels per x unit
    pub scale: f64,
    pub show_slots: bool,
    pub highlight_crossings: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 12.0,
            show_slots: true,
            highlight_crossings: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("scale must be a positive finite number")]
    BadScale,
    #[error("matching does not fit the instance: {0}")]
    Matching(#[from] ModelError),
}

const PURPLE: &str = "#7b2d8e";
const BLUE: &str = "#1f5fbf";
const ORANGE: &str = "#e07b00";
const GREEN: &str = "#2e8b57";
const RED: &str = "#c0392b";
const GRAY: &str = "#8c8c8c";

fn role_colours(assembly: &Assembly) -> BTreeMap<Edge, &'static str> {
    let mut colours = BTreeMap::new();
    for g in &assembly.vertex_gadgets {
        let selected: BTreeSet<_> = g.selected.iter().copied().collect();
        let not_selected: BTreeSet<_> = g.not_selected.iter().copied().collect();
        for s in g.edges() {
            let colour = match (selected.contains(&s), not_selected.contains(&s)) {
                (true, true) => PURPLE,
                (true, false) => BLUE,
                _ => ORANGE,
            };
            colours.insert(assembly.to_edge(s), colour);
        }
    }
    for e in &assembly.edge_gadgets {
        for s in e.covered_left() {
            colours.insert(assembly.to_edge(s), GREEN);
        }
        for s in e.covered_right() {
            colours.insert(assembly.to_edge(s), RED);
        }
    }
    colours
}

/// Renders `instance`, optionally with its layout and a perfect matching.
/// Emits only `line`, `circle`, `rect` and `text` elements.
pub fn render_svg(
    instance: &Instance,
    options: &RenderOptions,
    assembly: Option<&Assembly>,
    matching: Option<&Matching>,
) -> Result<String, RenderError> {
    if !(options.scale.is_finite() && options.scale > 0.0) {
        return Err(RenderError::BadScale);
    }
    if let Some(m) = matching {
        m.check_against(instance)?;
    }
    let assembly = assembly
        .filter(|a| a.instance.n_top == instance.n_top && a.instance.n_bottom == instance.n_bottom);

    // x in layout units, shifted so the leftmost vertex is at 1
    let (top_x, bottom_x): (Vec<f64>, Vec<f64>) = match assembly {
        Some(a) => {
            let min = a
                .top_x
                .iter()
                .chain(&a.bottom_x)
                .min()
                .copied()
                .unwrap_or(1);
            (
                a.top_x.iter().map(|&x| (x - min + 1) as f64).collect(),
                a.bottom_x.iter().map(|&x| (x - min + 1) as f64).collect(),
            )
        }
        None => (
            (1..=instance.n_top).map(|r| r as f64).collect(),
            (1..=instance.n_bottom).map(|r| r as f64).collect(),
        ),
    };
    let scale = options.scale;
    let margin = 2.0 * scale;
    let width_units = top_x
        .iter()
        .chain(&bottom_x)
        .fold(1.0f64, |acc, &x| acc.max(x));
    let width = 2.0 * margin + width_units * scale;
    let y_top = margin;
    let y_bottom = margin + 8.0 * scale;
    let height = y_bottom + margin + scale;
    let px = |x: f64| margin + (x - 1.0) * scale;
    let top = |t: u32| px(top_x[t as usize - 1]);
    let bottom = |b: u32| px(bottom_x[b as usize - 1]);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();

    if let (Some(a), true) = (assembly, options.show_slots) {
        let shift = a
            .top_x
            .iter()
            .chain(&a.bottom_x)
            .min()
            .copied()
            .unwrap_or(1)
            - 1;
        for g in &a.vertex_gadgets {
            for side in [Side::Left, Side::Right] {
                for k in 1..=g.size {
                    let x = px((g.slot_x(side, k) - shift) as f64);
                    writeln!(
                        out,
                        r##"<rect class="slot" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="#d9d9d9" stroke="none"/>"##,
                        x - 0.8 * scale,
                        y_top - 0.6 * scale,
                        1.6 * scale,
                        y_bottom - y_top + 1.2 * scale
                    )
                    .unwrap();
                }
            }
        }
    }

    for y in [y_top, y_bottom] {
        writeln!(
            out,
            r##"<line class="layer" x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#000000" stroke-width="0.5"/>"##,
            margin - scale,
            width - margin + scale
        )
        .unwrap();
    }

    let colours = assembly.map(role_colours).unwrap_or_default();
    let matched: BTreeSet<Edge> = matching
        .map(|m| m.pairs().iter().copied().collect())
        .unwrap_or_default();
    let mut edges = instance.edges.clone();
    edges.sort_unstable();
    edges.dedup();
    for &(t, b) in &edges {
        if t == 0 || b == 0 || t as usize > instance.n_top || b as usize > instance.n_bottom {
            continue;
        }
        let colour = colours.get(&(t, b)).copied().unwrap_or(GRAY);
        let (class, stroke_width, opacity) = match (matching.is_some(), matched.contains(&(t, b))) {
            (true, true) => ("edge matched", 0.25 * scale, "1"),
            (true, false) => ("edge", 0.08 * scale, "0.35"),
            (false, _) => ("edge", 0.12 * scale, "1"),
        };
        writeln!(
            out,
            r#"<line class="{class}" x1="{:.2}" y1="{y_top:.2}" x2="{:.2}" y2="{y_bottom:.2}" stroke="{colour}" stroke-width="{stroke_width:.2}" stroke-opacity="{opacity}"/>"#,
            top(t),
            bottom(b)
        )
        .unwrap();
    }

    let radius = 0.3 * scale;
    for t in 1..=instance.n_top as u32 {
        writeln!(
            out,
            r##"<circle class="vertex top" cx="{:.2}" cy="{y_top:.2}" r="{radius:.2}" fill="#000000"/>"##,
            top(t)
        )
        .unwrap();
    }
    for b in 1..=instance.n_bottom as u32 {
        writeln!(
            out,
            r##"<circle class="vertex bottom" cx="{:.2}" cy="{y_bottom:.2}" r="{radius:.2}" fill="#000000"/>"##,
            bottom(b)
        )
        .unwrap();
    }

    if let Some(m) = matching {
        let pairs = m.pairs();
        let mut crossings = 0u64;
        for (i, &(t1, b1)) in pairs.iter().enumerate() {
            for &(t2, b2) in &pairs[i + 1..] {
                if !segments_cross((t1, b1), (t2, b2)) {
                    continue;
                }
                crossings += 1;
                if !options.highlight_crossings {
                    continue;
                }
                let (xt1, xb1, xt2, xb2) = (top(t1), bottom(b1), top(t2), bottom(b2));
                let lambda = (xt2 - xt1) / ((xb1 - xt1) - (xb2 - xt2));
                writeln!(
                    out,
                    r##"<circle class="crossing" cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="#d40000" stroke-width="{:.2}"/>"##,
                    xt1 + lambda * (xb1 - xt1),
                    y_top + lambda * (y_bottom - y_top),
                    0.35 * scale,
                    0.08 * scale
                )
                .unwrap();
            }
        }
        writeln!(
            out,
            r#"<text class="caption" x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="{:.2}">crossings: {crossings}</text>"#,
            margin,
            height - 0.5 * scale,
            0.9 * scale
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{GadgetLayout, VertexState};

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!("class=\"{class}\"")).count()
    }

    #[test]
    fn identity_has_no_markers() {
        let inst = Instance::identity(4);
        let m = Matching::new(inst.edges.clone());
        let svg = render_svg(&inst, &RenderOptions::default(), None, Some(&m)).unwrap();
        assert_eq!(count(&svg, "crossing"), 0);
        assert_eq!(count(&svg, "vertex top") + count(&svg, "vertex bottom"), 8);
        assert!(svg.contains("crossings: 0"));
    }

    #[test]
    fn vertex_gadget_with_slots() {
        let mut layout = GadgetLayout::new();
        layout.add_vertex_gadget(1, 3).unwrap();
        let asm = layout.finish();
        let m = asm.matching_for(|_| VertexState::Selected, |_| unreachable!());
        let svg = render_svg(
            &asm.instance,
            &RenderOptions::default(),
            Some(&asm),
            Some(&m),
        )
        .unwrap();
        assert_eq!(count(&svg, "vertex top") + count(&svg, "vertex bottom"), 26);
        assert_eq!(count(&svg, "slot"), 6);
        assert_eq!(count(&svg, "crossing"), 7);
        assert_eq!(count(&svg, "edge matched"), 13);
    }

    #[test]
    fn rejects_bad_inputs() {
        let inst = Instance::identity(2);
        let bad = RenderOptions {
            scale: 0.0,
            ..Default::default()
        };
        assert_eq!(
            render_svg(&inst, &bad, None, None),
            Err(RenderError::BadScale)
        );
        let m = Matching::new(vec![(1, 2), (2, 1)]);
        assert!(matches!(
            render_svg(&inst, &RenderOptions::default(), None, Some(&m)),
            Err(RenderError::Matching(_))
        ));
    }

    #[test]
    fn output_is_deterministic() {
        let inst = Instance::new(3, 3, vec![(1, 3), (2, 2), (3, 1), (1, 1), (3, 3)]);
        let m = Matching::new(vec![(1, 3), (2, 2), (3, 1)]);
        let a = render_svg(&inst, &RenderOptions::default(), None, Some(&m)).unwrap();
        assert_eq!(
            a,
            render_svg(&inst, &RenderOptions::default(), None, Some(&m)).unwrap()
        );
        assert_eq!(count(&a, "crossing"), 3);
    }
}
