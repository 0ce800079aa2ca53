//! The `crossmatch` binary: output and exit codes of each subcommand.

mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::data;

fn crossmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crossmatch"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_identity() {
    let out = crossmatch(&["solve", path(&data("identity.cam"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("min 0\n"));
}

#[test]
fn solve_vertex_gadget_of_size_one() {
    for method in ["bb", "enum"] {
        let out = crossmatch(&[
            "solve",
            path(&data("vertex_gadget_s1.cam")),
            "--method",
            method,
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).starts_with("min 2\n"));
    }
}

#[test]
fn embedded_budget_decides() {
    // K3 needs two cover vertices, but the file was reduced with k = 1
    let out = crossmatch(&["solve", path(&data("k3_k1.cam"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("no\n"));

    let out = crossmatch(&["solve", path(&data("k3_k1.cam")), "--budget", "77"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("yes\n"));
}

#[test]
fn solve_writes_witness() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.matching");
    let out = crossmatch(&[
        "solve",
        path(&data("p2.cam")),
        "--budget",
        "1000",
        "--out",
        path(&witness),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let count = crossmatch(&["count", path(&data("p2.cam")), "--matching", path(&witness)]);
    assert_eq!(count.status.code(), Some(0));
}

#[test]
fn invalid_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cam");
    std::fs::write(&bad, "p cam 2 2 1\ne 1 x\n").unwrap();
    let out = crossmatch(&["solve", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    std::fs::write(&bad, "p cam 2 2 1\ne 1 1\n").unwrap();
    assert_eq!(crossmatch(&["solve", path(&bad)]).status.code(), Some(2));
    assert_eq!(crossmatch(&["solve"]).status.code(), Some(2));
    assert_eq!(crossmatch(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(crossmatch(&["--help"]).status.code(), Some(0));
}

#[test]
fn reduce_reproduces_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let (cam, map) = (dir.path().join("k3.cam"), dir.path().join("k3.map"));
    let out = crossmatch(&[
        "reduce",
        path(&data("k3.vc")),
        "--k",
        "1",
        "--out",
        path(&cam),
        "--map",
        path(&map),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "c5 75\nm 76\nvertices 120\nedges 117\n");
    assert_eq!(
        std::fs::read(&cam).unwrap(),
        std::fs::read(data("k3_k1.cam")).unwrap()
    );
    assert_eq!(
        std::fs::read(&map).unwrap(),
        std::fs::read(data("k3_k1.map")).unwrap()
    );
}

#[test]
fn reduce_edgeless_and_bad_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let (cam, map) = (dir.path().join("e.cam"), dir.path().join("e.map"));
    let out = crossmatch(&[
        "reduce",
        path(&data("edgeless.vc")),
        "--k",
        "0",
        "--out",
        path(&cam),
        "--map",
        path(&map),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("c5 0\nm 0\nvertices 0\n"));

    let looped = dir.path().join("loop.vc");
    std::fs::write(&looped, "p vc 2 1\ne 2 2\n").unwrap();
    let out = crossmatch(&[
        "reduce",
        path(&looped),
        "--k",
        "0",
        "--out",
        path(&cam),
        "--map",
        path(&map),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_with_map_reports_states() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.matching");
    crossmatch(&[
        "solve",
        path(&data("k3_k1.cam")),
        "--budget",
        "1000",
        "--out",
        path(&witness),
    ]);
    let out = crossmatch(&[
        "count",
        path(&data("k3_k1.cam")),
        "--matching",
        path(&witness),
        "--map",
        path(&data("k3_k1.map")),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cnt_nsc 0\n"));
    assert!(text.contains(" ok\n"));
}

#[test]
fn count_selected_gadget_and_identity() {
    let out = crossmatch(&[
        "count",
        path(&data("vertex_gadget_s3.cam")),
        "--matching",
        path(&data("vertex_gadget_s3_selected.matching")),
    ]);
    assert!(stdout(&out).starts_with("crossings 7\n"));
    let out = crossmatch(&[
        "count",
        path(&data("identity.cam")),
        "--matching",
        path(&data("identity.matching")),
    ]);
    assert!(stdout(&out).starts_with("crossings 0\n"));

    let dir = tempfile::tempdir().unwrap();
    let partial = dir.path().join("p.matching");
    std::fs::write(&partial, "m 1 1\n").unwrap();
    let out = crossmatch(&[
        "count",
        path(&data("identity.cam")),
        "--matching",
        path(&partial),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_runs_and_guards() {
    let out = crossmatch(&["verify", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "pass 1034/1034\n");

    let out = crossmatch(&["verify", path(&data("k3.vc"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("min_cross - c5 = 77 - 75 = 2\n"));

    let out = crossmatch(&["verify", path(&data("edgeless.vc"))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        crossmatch(&["verify", "--max-n", "9"]).status.code(),
        Some(2)
    );
}

#[test]
fn gen_is_reproducible() {
    let a = crossmatch(&["gen", "vc", "--n", "6", "--seed", "1"]);
    let b = crossmatch(&["gen", "vc", "--n", "6", "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, std::fs::read(data("gen_vc_n6_s1.vc")).unwrap());
    let c = crossmatch(&["gen", "cam", "--n", "10", "--p", "0.3", "--seed", "7"]);
    assert_eq!(c.stdout, std::fs::read(data("gen_cam_n10_s7.cam")).unwrap());
    assert_eq!(
        crossmatch(&["gen", "cam", "--n", "9"]).status.code(),
        Some(2)
    );
}

#[test]
fn bench_rows_and_timeout() {
    let out = crossmatch(&["bench"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let nodes: Vec<u64> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(4).unwrap().parse().unwrap())
        .collect();
    assert_eq!(nodes.len(), 5);
    assert!(nodes.windows(2).all(|w| w[0] <= w[1]));

    let out = crossmatch(&["bench", "--timeout", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("timeout after"));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("p2.svg");
    let out = crossmatch(&[
        "render",
        path(&data("p2.cam")),
        "--map",
        path(&data("p2.map")),
        "--matching",
        path(&data("p2_optimal.matching")),
        "--out",
        path(&svg),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        std::fs::read(&svg).unwrap(),
        std::fs::read(data("p2_optimal.svg")).unwrap()
    );
    let out = crossmatch(&["render", path(&data("identity.cam")), "--solve"]);
    assert!(stdout(&out).contains("crossings: 0"));
}
