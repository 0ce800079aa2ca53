//! Draw a vertex gadget, an edge gadget between two vertex gadgets and the
//! optimal matching of a reduced path, as SVG files.
//!
//! ```text
//! cargo run --example render_gadgets [output-dir]
//! ```

use std::path::{Path, PathBuf};

use crossmatch::reduction::{CoveredSide, GadgetLayout, VertexState};
use crossmatch::render::{render_svg, RenderOptions};
use crossmatch::{reduce_vc, solve_min_crossings, SourceGraph};

pub fn write_drawings(dir: &Path) -> Vec<PathBuf> {
    std::fs::create_dir_all(dir).unwrap();
    let options = RenderOptions::default();
    let mut written = Vec::new();
    let mut save = |name: &str, svg: String| {
        let path = dir.join(name);
        std::fs::write(&path, svg).unwrap();
        written.push(path);
    };

    let mut layout = GadgetLayout::new();
    layout.add_vertex_gadget(1, 3).unwrap();
    let asm = layout.finish();
    for state in [VertexState::Selected, VertexState::NotSelected] {
        let m = asm.matching_for(|_| state, |_| CoveredSide::Left);
        save(
            &format!("vertex_gadget_{state}.svg"),
            render_svg(&asm.instance, &options, Some(&asm), Some(&m)).unwrap(),
        );
    }

    let mut layout = GadgetLayout::new();
    let u = layout.add_vertex_gadget(1, 2).unwrap();
    let v = layout.add_vertex_gadget(2, 2).unwrap();
    layout.add_edge_gadget(u, [1, 2], v, [1, 2]).unwrap();
    let asm = layout.finish();
    for side in [CoveredSide::Left, CoveredSide::Right] {
        let m = asm.matching_for(|_| VertexState::NotSelected, |_| side);
        save(
            &format!("edge_gadget_{side}.svg"),
            render_svg(&asm.instance, &options, Some(&asm), Some(&m)).unwrap(),
        );
    }

    let (instance, map) = reduce_vc(&SourceGraph::path(3), 1).unwrap();
    let best = solve_min_crossings(&instance).unwrap();
    save(
        "reduced_path_optimal.svg",
        render_svg(
            &instance,
            &options,
            Some(&map.assembly),
            Some(&best.witness),
        )
        .unwrap(),
    );
    written
}

pub fn run_example() -> String {
    let dir = std::env::temp_dir().join("crossmatch-drawings");
    let files = write_drawings(&dir);
    files
        .iter()
        .map(|p| format!("wrote {}\n", p.display()))
        .collect()
}

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map_or_else(|| PathBuf::from("drawings"), PathBuf::from);
    for p in write_drawings(&dir) {
        println!("wrote {}", p.display());
    }
}
