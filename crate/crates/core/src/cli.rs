//! The `crossmatch` command line.
//!
//! Every subcommand returns a [`CommandOutcome`] instead of printing, so the
//! binary stays a few lines long and tests can drive commands in-process.
//! Exit codes: 0 success or "yes", 1 "no" or a failed check, 2 usage or
//! input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use crate::model::{
    count_crossings_fast, count_crossings_pairwise, parse_instance, parse_matching,
    serialize_instance, serialize_matching, Instance, Matching,
};
use crate::oracle::{
    all_graphs, brute_force_min_vertex_cover, random_graph, random_instance, Density,
};
use crate::reduction::{
    classify_gadget_states, extract_cover, parse_map, parse_vc, reduce_vc, serialize_map,
    serialize_vc, GadgetMap, SourceGraph,
};
use crate::render::{render_svg, RenderOptions};
use crate::solver::{decide_with, solve_with, Method, SolveError, SolveOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest source graph `verify` accepts.
pub const VERIFY_MAX_N: usize = 8;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    /// the report, for standard output
    pub stdout: String,
    /// diagnostics, for standard error
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CommandOutcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "crossmatch",
    version,
    about = "Crossing-avoiding perfect matchings in two-layer drawings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimise crossings, or decide a budget.
    Solve(SolveArgs),
    /// Build the crossing instance for a vertex-cover instance.
    Reduce(ReduceArgs),
    /// Check min crossings − c5 against brute-force vertex cover.
    Verify(VerifyArgs),
    /// Count the crossings of a matching.
    Count(CountArgs),
    /// Write a seeded random graph or instance.
    Gen(GenArgs),
    /// Time the solver on reduced cycles.
    Bench(BenchArgs),
    /// Draw an instance as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Bb,
    Enum,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Bb => Method::BranchAndBound,
            MethodArg::Enum => Method::Enumeration,
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    input: PathBuf,
    /// decide "at most M crossings?" instead of minimising; overrides the file's budget
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value = "bb")]
    method: MethodArg,
    /// write the witness matching here
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// give up after this many seconds
    #[arg(long)]
    timeout: Option<f64>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    input: PathBuf,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    map: PathBuf,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// check just this graph
    input: Option<PathBuf>,
    #[arg(long, default_value_t = VERIFY_MAX_N)]
    max_n: usize,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// where to write a counterexample
    #[arg(long, default_value = "counterexample")]
    out_dir: PathBuf,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args, Debug)]
struct CountArgs {
    input: PathBuf,
    #[arg(long)]
    matching: PathBuf,
    /// also report gadget states
    #[arg(long)]
    map: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Vc,
    Cam,
}

#[derive(Args, Debug)]
struct GenArgs {
    kind: GenKind,
    /// source vertices (vc) or total vertices on both lines (cam)
    #[arg(long)]
    n: usize,
    /// edge probability
    #[arg(long, conflicts_with = "edges")]
    p: Option<f64>,
    /// exact edge count
    #[arg(long)]
    edges: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// write here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// shortest cycle
    #[arg(long, default_value_t = 3)]
    from: usize,
    /// longest cycle
    #[arg(long, default_value_t = 7)]
    to: usize,
    /// stop after this many seconds, reporting the rows finished so far
    #[arg(long)]
    timeout: Option<f64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args, Debug)]
struct RenderArgs {
    input: PathBuf,
    #[arg(long)]
    matching: Option<PathBuf>,
    /// use the layout recorded by `reduce`
    #[arg(long)]
    map: Option<PathBuf>,
    /// draw the optimal matching
    #[arg(long, conflicts_with = "matching")]
    solve: bool,
    #[arg(long, default_value_t = 12.0)]
    scale: f64,
    #[arg(long)]
    no_slots: bool,
    #[arg(long)]
    no_crossings: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CommandOutcome::ok(text)
            } else {
                CommandOutcome::usage(text)
            };
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Count(a) => cmd_count(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Render(a) => cmd_render(a),
    };
    result.unwrap_or_else(CommandOutcome::usage)
}

type Outcome = Result<CommandOutcome, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_instance(path: &Path) -> Result<Instance, String> {
    let instance = parse_instance(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let report = instance.validate();
    if !report.is_valid() {
        return Err(format!("{}: invalid instance\n{report}", path.display()));
    }
    Ok(instance)
}

fn load_matching(path: &Path) -> Result<Matching, String> {
    parse_matching(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_map(path: &Path) -> Result<GadgetMap, String> {
    parse_map(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_vc(path: &Path) -> Result<SourceGraph, String> {
    parse_vc(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn deadline(seconds: Option<f64>) -> Result<Option<Instant>, String> {
    match seconds {
        None => Ok(None),
        Some(s) if s.is_finite() && s >= 0.0 => {
            Ok(Some(Instant::now() + Duration::from_secs_f64(s)))
        }
        Some(s) => Err(format!("invalid timeout {s}")),
    }
}

fn cmd_solve(args: SolveArgs) -> Outcome {
    let instance = load_instance(&args.input)?;
    let options = SolveOptions {
        method: args.method.into(),
        threads: args.threads.max(1),
        deadline: deadline(args.timeout)?,
    };
    let mut out = String::new();
    let solver_error = |e: SolveError| e.to_string();
    match args.budget.or(instance.budget) {
        Some(budget) => {
            let decision = decide_with(&instance, budget, &options).map_err(solver_error)?;
            let code = if decision.feasible { EXIT_OK } else { EXIT_NO };
            writeln!(out, "{}", if decision.feasible { "yes" } else { "no" }).unwrap();
            writeln!(out, "budget {budget}").unwrap();
            if let Some(c) = decision.witness_crossings {
                writeln!(out, "witness_crossings {c}").unwrap();
            }
            writeln!(out, "nodes {}", decision.nodes_explored).unwrap();
            if let (Some(path), Some(w)) = (&args.out, &decision.witness) {
                write(path, &serialize_matching(w))?;
            }
            Ok(CommandOutcome {
                code,
                stdout: out,
                stderr: String::new(),
            })
        }
        None => {
            let result = solve_with(&instance, &options).map_err(solver_error)?;
            writeln!(out, "min {}", result.min_crossings).unwrap();
            writeln!(out, "method {}", result.method).unwrap();
            writeln!(out, "nodes {}", result.nodes_explored).unwrap();
            if let Some(path) = &args.out {
                write(path, &serialize_matching(&result.witness))?;
            }
            Ok(CommandOutcome::ok(out))
        }
    }
}

fn cmd_reduce(args: ReduceArgs) -> Outcome {
    let graph = load_vc(&args.input)?;
    let (instance, map) = reduce_vc(&graph, args.k).map_err(|e| e.to_string())?;
    write(&args.out, &serialize_instance(&instance))?;
    write(&args.map, &serialize_map(&map))?;
    let mut out = String::new();
    writeln!(out, "c5 {}", map.c5).unwrap();
    writeln!(out, "m {}", map.m).unwrap();
    writeln!(out, "vertices {}", instance.vertex_count()).unwrap();
    writeln!(out, "edges {}", instance.edges.len()).unwrap();
    if !map.dropped_isolated.is_empty() {
        writeln!(out, "dropped {:?}", map.dropped_isolated).unwrap();
    }
    Ok(CommandOutcome::ok(out))
}

/// Result of checking one source graph in `verify`.
#[derive(Clone, Debug)]
pub struct GraphCheck {
    pub graph: SourceGraph,
    pub cover_size: usize,
    pub c5: u64,
    pub min_crossings: u64,
    pub failures: Vec<String>,
    pub instance: Instance,
    pub map: GadgetMap,
    pub witness: Matching,
}

/// Reduces `graph` with `k` = its minimum cover size, solves exactly and
/// checks every claim of the equivalence on the result.
pub fn check_graph(graph: &SourceGraph, threads: usize) -> Result<GraphCheck, String> {
    let (cover_size, _) = brute_force_min_vertex_cover(graph).map_err(|e| e.to_string())?;
    let (instance, map) = reduce_vc(graph, cover_size as u64).map_err(|e| e.to_string())?;
    let options = SolveOptions {
        threads,
        ..SolveOptions::default()
    };
    let result = solve_with(&instance, &options).map_err(|e| e.to_string())?;
    let min = result.min_crossings.0;
    let mut failures = Vec::new();
    if min < map.c5 || min - map.c5 != cover_size as u64 {
        failures.push(format!(
            "min crossings {min} - c5 {} != minimum cover size {cover_size}",
            map.c5
        ));
    }
    match classify_gadget_states(&result.witness, &map) {
        Ok(report) => {
            if report.cnt_nsc != 0 {
                failures.push(format!("optimal witness has cnt_nsc = {}", report.cnt_nsc));
            }
            if report.predicted_crossings(map.c5) != min {
                failures.push("identity cnt_s + 2 cnt_nsc + c5 does not hold".into());
            }
        }
        Err(e) => failures.push(format!("cannot classify witness: {e}")),
    }
    match extract_cover(&result.witness, &map) {
        Ok(cover) if !graph.is_cover(&cover) => {
            failures.push(format!("extracted set {cover:?} is not a cover"))
        }
        Ok(cover) if cover.len() != cover_size => failures.push(format!(
            "extracted cover has {} vertices, expected {cover_size}",
            cover.len()
        )),
        Ok(_) => {}
        Err(e) => failures.push(format!("cannot extract cover: {e}")),
    }
    Ok(GraphCheck {
        graph: graph.clone(),
        cover_size,
        c5: map.c5,
        min_crossings: min,
        failures,
        instance,
        map,
        witness: result.witness,
    })
}

/// The graphs `verify` runs on: every graph on 5 vertices, then `samples`
/// seeded random graphs on 1..=max_n vertices.
pub fn verification_graphs(max_n: usize, samples: usize, seed: u64) -> Vec<SourceGraph> {
    let mut graphs: Vec<SourceGraph> = all_graphs(5.min(max_n)).collect();
    let mut rng = Pcg64::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(1..=max_n.max(1));
        let p = rng.gen_range(0.1..0.9);
        graphs.push(
            random_graph(n, Density::Probability(p), rng.gen()).expect("probability in range"),
        );
    }
    graphs
}

fn write_bundle(dir: &Path, check: &GraphCheck) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    write(&dir.join("graph.vc"), &serialize_vc(&check.graph))?;
    write(
        &dir.join("instance.cam"),
        &serialize_instance(&check.instance),
    )?;
    write(&dir.join("instance.map"), &serialize_map(&check.map))?;
    write(
        &dir.join("witness.matching"),
        &serialize_matching(&check.witness),
    )?;
    let mut notes = String::new();
    for f in &check.failures {
        writeln!(notes, "{f}").unwrap();
    }
    write(&dir.join("failures.txt"), &notes)
}

fn cmd_verify(args: VerifyArgs) -> Outcome {
    if args.max_n > VERIFY_MAX_N {
        return Err(format!("--max-n is at most {VERIFY_MAX_N}"));
    }
    let single = args.input.is_some();
    let graphs = match &args.input {
        Some(path) => {
            let g = load_vc(path)?;
            if g.vertex_count() > VERIFY_MAX_N {
                return Err(format!(
                    "graph has {} vertices, at most {VERIFY_MAX_N} allowed",
                    g.vertex_count()
                ));
            }
            vec![g]
        }
        None => verification_graphs(args.max_n, args.samples, args.seed),
    };
    let mut out = String::new();
    let mut passed = 0usize;
    for graph in &graphs {
        let check = check_graph(graph, args.threads.max(1))?;
        if single {
            writeln!(
                out,
                "min_cross - c5 = {} - {} = {}",
                check.min_crossings,
                check.c5,
                check.min_crossings.saturating_sub(check.c5)
            )
            .unwrap();
            writeln!(out, "min vertex cover = {}", check.cover_size).unwrap();
        }
        if !check.failures.is_empty() {
            write_bundle(&args.out_dir, &check)?;
            writeln!(out, "FAIL {graph}").unwrap();
            for f in &check.failures {
                writeln!(out, "  {f}").unwrap();
            }
            writeln!(out, "counterexample written to {}", args.out_dir.display()).unwrap();
            writeln!(out, "passed {passed}/{}", graphs.len()).unwrap();
            return Ok(CommandOutcome {
                code: EXIT_NO,
                stdout: out,
                stderr: String::new(),
            });
        }
        passed += 1;
    }
    writeln!(out, "pass {passed}/{}", graphs.len()).unwrap();
    Ok(CommandOutcome::ok(out))
}

fn cmd_count(args: CountArgs) -> Outcome {
    let instance = load_instance(&args.input)?;
    let matching = load_matching(&args.matching)?;
    matching
        .check_against(&instance)
        .map_err(|e| format!("{}: {e}", args.matching.display()))?;
    let pairwise = count_crossings_pairwise(&instance, &matching).map_err(|e| e.to_string())?;
    let fast = count_crossings_fast(&matching).map_err(|e| e.to_string())?;
    if pairwise != fast {
        return Err(format!(
            "counters disagree: pairwise {pairwise}, fast {fast}"
        ));
    }
    let mut out = String::new();
    writeln!(out, "crossings {pairwise}").unwrap();
    writeln!(out, "pairwise {pairwise}").unwrap();
    writeln!(out, "fast {fast}").unwrap();
    let mut code = EXIT_OK;
    if let Some(path) = &args.map {
        let map = load_map(path)?;
        if map.assembly.instance.edges != {
            let mut e = instance.edges.clone();
            e.sort_unstable();
            e
        } {
            return Err(format!(
                "{}: map does not describe this instance",
                path.display()
            ));
        }
        let report = classify_gadget_states(&matching, &map).map_err(|e| e.to_string())?;
        let predicted = report.predicted_crossings(map.c5);
        writeln!(out, "cnt_s {}", report.cnt_s).unwrap();
        writeln!(out, "cnt_sc {}", report.cnt_sc).unwrap();
        writeln!(out, "cnt_snc {}", report.cnt_snc).unwrap();
        writeln!(out, "cnt_nsc {}", report.cnt_nsc).unwrap();
        writeln!(out, "cnt_nsnc {}", report.cnt_nsnc).unwrap();
        writeln!(out, "c5 {}", map.c5).unwrap();
        let verdict = if predicted == pairwise.0 {
            "ok"
        } else {
            "MISMATCH"
        };
        writeln!(
            out,
            "identity {} = {} + 2*{} + {} {verdict}",
            pairwise, report.cnt_s, report.cnt_nsc, map.c5
        )
        .unwrap();
        if predicted != pairwise.0 {
            code = EXIT_NO;
        }
    }
    Ok(CommandOutcome {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

fn cmd_gen(args: GenArgs) -> Outcome {
    let density = match (args.p, args.edges) {
        (_, Some(m)) => Density::Count(m),
        (Some(p), None) => Density::Probability(p),
        (None, None) => Density::Probability(0.5),
    };
    let text = match args.kind {
        GenKind::Vc => {
            serialize_vc(&random_graph(args.n, density, args.seed).map_err(|e| e.to_string())?)
        }
        GenKind::Cam => serialize_instance(
            &random_instance(args.n, density, args.seed).map_err(|e| e.to_string())?,
        ),
    };
    match &args.out {
        Some(path) => {
            write(path, &text)?;
            Ok(CommandOutcome::ok(format!("wrote {}\n", path.display())))
        }
        None => Ok(CommandOutcome::ok(text)),
    }
}

/// One row of `bench`.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub cycle: usize,
    pub vertices: usize,
    pub edges: usize,
    pub min_crossings: u64,
    pub nodes_explored: u64,
    pub millis: f64,
}

/// Solves the reduced cycles `C_from..=C_to`; stops at the first one the
/// deadline cuts off and returns the rows finished before it.
pub fn bench_cycles(
    from: usize,
    to: usize,
    threads: usize,
    deadline: Option<Instant>,
) -> (Vec<BenchRow>, bool) {
    let mut rows = Vec::new();
    for n in from.max(3)..=to {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return (rows, true);
        }
        let (instance, _) = reduce_vc(&SourceGraph::cycle(n), 0).expect("cycles reduce");
        let options = SolveOptions {
            threads,
            deadline,
            ..SolveOptions::default()
        };
        let start = Instant::now();
        match solve_with(&instance, &options) {
            Ok(result) => rows.push(BenchRow {
                cycle: n,
                vertices: instance.vertex_count(),
                edges: instance.edges.len(),
                min_crossings: result.min_crossings.0,
                nodes_explored: result.nodes_explored,
                millis: start.elapsed().as_secs_f64() * 1e3,
            }),
            Err(_) => return (rows, true),
        }
    }
    (rows, false)
}

fn cmd_bench(args: BenchArgs) -> Outcome {
    let (rows, timed_out) = bench_cycles(
        args.from,
        args.to,
        args.threads.max(1),
        deadline(args.timeout)?,
    );
    let mut out = String::new();
    writeln!(
        out,
        "{:>6} {:>8} {:>8} {:>10} {:>10} {:>10}",
        "cycle", "|V(H)|", "|E(H)|", "min", "nodes", "ms"
    )
    .unwrap();
    for r in &rows {
        writeln!(
            out,
            "{:>6} {:>8} {:>8} {:>10} {:>10} {:>10.3}",
            format!("C{}", r.cycle),
            r.vertices,
            r.edges,
            r.min_crossings,
            r.nodes_explored,
            r.millis
        )
        .unwrap();
    }
    if timed_out {
        writeln!(out, "timeout after {} rows", rows.len()).unwrap();
    }
    Ok(CommandOutcome::ok(out))
}

fn cmd_render(args: RenderArgs) -> Outcome {
    let instance = load_instance(&args.input)?;
    let map = args.map.as_deref().map(load_map).transpose()?;
    let matching = match (&args.matching, args.solve) {
        (Some(path), _) => Some(load_matching(path)?),
        (None, true) => Some(
            solve_with(&instance, &SolveOptions::default())
                .map_err(|e| e.to_string())?
                .witness,
        ),
        (None, false) => None,
    };
    let options = RenderOptions {
        scale: args.scale,
        show_slots: !args.no_slots,
        highlight_crossings: !args.no_crossings,
    };
    let svg = render_svg(
        &instance,
        &options,
        map.as_ref().map(|m| &m.assembly),
        matching.as_ref(),
    )
    .map_err(|e| e.to_string())?;
    match &args.out {
        Some(path) => {
            write(path, &svg)?;
            Ok(CommandOutcome::ok(format!("wrote {}\n", path.display())))
        }
        None => Ok(CommandOutcome::ok(svg)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexample_bundle_reads_back() {
        let mut check = check_graph(&SourceGraph::complete(3), 1).unwrap();
        assert!(check.failures.is_empty());
        check.failures.push("forced".into());
        let dir = std::env::temp_dir().join(format!("crossmatch-bundle-{}", std::process::id()));
        write_bundle(&dir, &check).unwrap();
        let cam = dir.join("instance.cam");
        let witness = dir.join("witness.matching");
        let map = dir.join("instance.map");
        let out = run([
            "crossmatch",
            "count",
            cam.to_str().unwrap(),
            "--matching",
            witness.to_str().unwrap(),
            "--map",
            map.to_str().unwrap(),
        ]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        assert!(out.stdout.starts_with("crossings 77\n"));
        let out = run(["crossmatch", "solve", cam.to_str().unwrap()]);
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(
            parse_vc(&fs::read_to_string(dir.join("graph.vc")).unwrap()).unwrap(),
            check.graph
        );
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn missing_file_is_a_usage_error() {
        let out = run(["crossmatch", "solve", "/nonexistent.cam", "--timeout", "-1"]);
        assert_eq!(out.code, EXIT_USAGE);
    }
}
