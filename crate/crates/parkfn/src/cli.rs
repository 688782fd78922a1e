//! Command-line dispatch for the `parkfn` binary.
//!
//! Subcommands: `burn`, `unburn`, `enumerate`, `poly`, `count`, `verify`,
//! `classify`. Vectors are accepted as comma-separated integers or `@path`
//! to a JSON array; structured inputs (graphs, trees, orders) as inline JSON,
//! `@path`, or `-` for stdin. Exit codes: 0 on success or all-pass, 1 when a
//! burn fails or a verification suite reports failures, 2 on usage or parse
//! errors.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::burning::{
    mg_dfs_burn, mg_dfs_burn_traced, mg_dfs_unburn, vec_dfs_burn, vec_dfs_burn_traced,
    vec_dfs_unburn, BurnOutcome, EdgeLabeling, VecBurnOutcome, VectorBurnResult,
};
use crate::classify::classify;
use crate::enumerators::{
    corollary_count, inversion_enum_labeled_trees, pitman_stanley_count,
    rsum_enum_graphical_brute, rsum_enum_increasing, rsum_enum_kungyan, rsum_enum_main,
    rsum_enum_tree_side, rsum_enum_vector_brute, specialization_report,
};
use crate::graph::Multigraph;
use crate::parking::{
    enumerate_graphical_pf, enumerate_increasing_vector_pf, enumerate_vector_pf,
    maximal_graphical_pf, maximal_vector_pf,
};
use crate::qpoly::QPoly;
use crate::tree::{RootedPlaneTree, RootedTree, VertexOrder};
use crate::verify::{all_suites, run_suite, VerifyConfig, VerifyReport};
use crate::{Caps, Error, Result};

#[derive(Parser)]
#[command(name = "parkfn", version, about = "Parking functions, burning bijections, and tree-inversion enumerators in exact arithmetic")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Cap on vector length / non-root vertex count.
    #[arg(long, global = true, default_value_t = 8)]
    cap_n: usize,
    /// Cap on edge weights taken from input.
    #[arg(long, global = true, default_value_t = 64)]
    cap_weight: u64,
    /// Cap on the candidate space of set enumerations.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    cap_set_size: u64,
    /// Seed for the sampled instances in `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Multigraph,
    Vector,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a DFS-burning algorithm on a parking function.
    Burn(BurnArgs),
    /// Invert a burn: recover the parking function of a labeled tree.
    Unburn(UnburnArgs),
    /// List parking-function sets.
    Enumerate(EnumerateArgs),
    /// Compute an enumerator polynomial.
    Poly(PolyArgs),
    /// Count parking functions by both closed formulas.
    Count(CountArgs),
    /// Run identity verification suites.
    Verify(VerifyArgs),
    /// Classify a multigraph by permutation invariance of its parking set.
    Classify(ClassifyArgs),
}

#[derive(Args)]
struct BurnArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Multigraph JSON (multigraph mode).
    #[arg(long)]
    graph: Option<String>,
    /// Vertex order as a comma list, smallest first (multigraph mode;
    /// defaults to natural order).
    #[arg(long)]
    order: Option<String>,
    /// Vector x (vector mode).
    #[arg(long)]
    x: Option<String>,
    /// The candidate parking function.
    #[arg(long)]
    alpha: String,
    /// Emit the event log as JSON lines before the result.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct UnburnArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    order: Option<String>,
    #[arg(long)]
    x: Option<String>,
    /// Tree JSON {"n": .., "parent": [..]}.
    #[arg(long)]
    tree: Option<String>,
    /// Edge labels, one per child vertex, comma-separated.
    #[arg(long)]
    labels: Option<String>,
    /// A full burn-output JSON object (alternative to --tree/--labels/--order);
    /// use `-` to read stdin, so burn output can be piped back in.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SetKind {
    Vector,
    Graphical,
    Increasing,
    MaximalVector,
    MaximalGraphical,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    kind: SetKind,
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Formula {
    /// Brute-force reversed-sum enumerator over PF(x).
    VectorBrute,
    /// Plane-tree formula for the vector enumerator.
    Main,
    /// Composition formula for the vector enumerator.
    Kungyan,
    /// Brute-force reversed-sum enumerator over PF(G).
    GraphicalBrute,
    /// Spanning-tree formula for the graphical enumerator.
    TreeSide,
    /// Inversion enumerator for labeled trees on n+1 vertices.
    Inversion,
    /// Reversed-sum enumerator over weakly increasing PF(x).
    IncreasingPf,
    /// Partition-complement enumerator under the staircase.
    IncreasingPartition,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    order: Option<String>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    x: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (eq1, thm3.1, thm1.7, kungyan, cor1.8, increasing, spec-q,
    /// exceptional, classify) or `all`.
    suite: String,
    /// Sweep bound on vector length / vertex count.
    #[arg(long)]
    max_n: Option<usize>,
    /// Exhaustive x-grids use entries 0..=x-range.
    #[arg(long)]
    x_range: Option<u64>,
    /// Exhaustive graph sweeps use weights 0..=weight-range.
    #[arg(long)]
    weight_range: Option<u64>,
    #[arg(long)]
    random_graphs: Option<usize>,
    #[arg(long)]
    random_orders: Option<usize>,
    #[arg(long)]
    random_x: Option<usize>,
    #[arg(long)]
    random_x_range: Option<u64>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    graph: String,
}

/// Entry point used by `main` and by tests; returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let caps = Caps {
        max_n: cli.cap_n,
        max_weight: cli.cap_weight,
        max_pf_set_size: cli.cap_set_size,
    };
    match dispatch(&cli, &caps, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run(&args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn dispatch(cli: &Cli, caps: &Caps, out: &mut dyn Write) -> Result<i32> {
    let json = cli.output == Output::Json;
    match &cli.cmd {
        Cmd::Burn(a) => cmd_burn(a, caps, json, out),
        Cmd::Unburn(a) => cmd_unburn(a, json, out),
        Cmd::Enumerate(a) => cmd_enumerate(a, caps, json, out),
        Cmd::Poly(a) => cmd_poly(a, caps, json, out),
        Cmd::Count(a) => cmd_count(a, caps, json, out),
        Cmd::Verify(a) => cmd_verify(a, cli.seed, caps, json, out),
        Cmd::Classify(a) => cmd_classify(a, caps, json, out),
    }
}

// ---- input parsing -------------------------------------------------------

fn load_text(spec: &str) -> Result<String> {
    if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Json(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else if let Some(path) = spec.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Error::Json(format!("reading {path}: {e}")))
    } else {
        Ok(spec.to_string())
    }
}

fn load_json(spec: &str) -> Result<serde_json::Value> {
    let text = load_text(spec)?;
    serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()))
}

/// Comma-separated nonnegative integers, or a JSON array (inline or @path).
fn parse_vec(spec: &str) -> Result<Vec<u64>> {
    let text = load_text(spec)?;
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let v: Vec<u64> =
            serde_json::from_str(trimmed).map_err(|e| Error::Json(e.to_string()))?;
        return Ok(v);
    }
    if trimmed.is_empty() {
        return Ok(vec![]);
    }
    trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|e| Error::InvalidInput(format!("bad integer {part:?}: {e}")))
        })
        .collect()
}

fn parse_graph(spec: &str, caps: &Caps) -> Result<Multigraph> {
    let g = Multigraph::from_json(&load_json(spec)?)?;
    g.check_caps(caps)?;
    Ok(g)
}

fn parse_order(spec: &str) -> Result<VertexOrder> {
    let text = load_text(spec)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let v: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| Error::Json(e.to_string()))?;
        return VertexOrder::from_json(&v);
    }
    let seq = parse_vec(trimmed)?;
    VertexOrder::new(seq.into_iter().map(|v| v as usize).collect())
}

fn parse_tree(spec: &str) -> Result<RootedTree> {
    RootedTree::from_json(&load_json(spec)?)
}

// ---- output helpers ------------------------------------------------------

fn emit_value(out: &mut dyn Write, v: &serde_json::Value) -> Result<i32> {
    writeln!(out, "{v}").map_err(|e| Error::Json(e.to_string()))?;
    Ok(0)
}

fn emit_poly(out: &mut dyn Write, p: &QPoly, json: bool) -> Result<i32> {
    if json {
        emit_value(out, &p.to_json())
    } else {
        writeln!(out, "{p}").map_err(|e| Error::Json(e.to_string()))?;
        Ok(0)
    }
}

// ---- subcommands ---------------------------------------------------------

fn cmd_burn(a: &BurnArgs, caps: &Caps, json: bool, out: &mut dyn Write) -> Result<i32> {
    let alpha = parse_vec(&a.alpha)?;
    match a.mode {
        Mode::Multigraph => {
            let g = parse_graph(
                a.graph
                    .as_deref()
                    .ok_or_else(|| Error::InvalidInput("--graph required".into()))?,
                caps,
            )?;
            let order = match &a.order {
                Some(o) => parse_order(o)?,
                None => VertexOrder::natural(g.n()),
            };
            let (outcome, events) = if a.trace {
                mg_dfs_burn_traced(&g, &order, &alpha)?
            } else {
                (mg_dfs_burn(&g, &order, &alpha)?, vec![])
            };
            for e in &events {
                writeln!(out, "{}", e.to_json_line()).map_err(|e| Error::Json(e.to_string()))?;
            }
            match outcome {
                BurnOutcome::Spanning { tree, labels } => {
                    let v = serde_json::json!({
                        "ok": true,
                        "tree": tree.to_json(),
                        "labels": labels.to_json(&tree),
                    });
                    if json {
                        emit_value(out, &v)
                    } else {
                        writeln!(out, "tree: {}", tree.to_json())
                            .and_then(|_| writeln!(out, "labels: {}", labels.to_json(&tree)))
                            .map_err(|e| Error::Json(e.to_string()))?;
                        Ok(0)
                    }
                }
                BurnOutcome::Stuck { unburnt } => {
                    let v = serde_json::json!({ "ok": false, "certificate": unburnt });
                    emit_value(out, &v)?;
                    Ok(1)
                }
            }
        }
        Mode::Vector => {
            let x = parse_vec(
                a.x.as_deref()
                    .ok_or_else(|| Error::InvalidInput("--x required".into()))?,
            )?;
            caps.check_n(x.len())?;
            let (outcome, events) = if a.trace {
                vec_dfs_burn_traced(&x, &alpha)?
            } else {
                (vec_dfs_burn(&x, &alpha)?, vec![])
            };
            for e in &events {
                writeln!(out, "{}", e.to_json_line()).map_err(|e| Error::Json(e.to_string()))?;
            }
            match outcome {
                VecBurnOutcome::Complete(r) => {
                    let mut v = r.to_json();
                    v["ok"] = serde_json::json!(true);
                    if json {
                        emit_value(out, &v)
                    } else {
                        writeln!(out, "tree: {}", r.tree.to_json())
                            .and_then(|_| writeln!(out, "labels: {}", r.labels.to_json(r.tree.tree())))
                            .and_then(|_| writeln!(out, "order: {}", r.order.to_json()))
                            .map_err(|e| Error::Json(e.to_string()))?;
                        Ok(0)
                    }
                }
                VecBurnOutcome::Stuck { unburnt } => {
                    let v = serde_json::json!({ "ok": false, "certificate": unburnt });
                    emit_value(out, &v)?;
                    Ok(1)
                }
            }
        }
    }
}

fn cmd_unburn(a: &UnburnArgs, json: bool, out: &mut dyn Write) -> Result<i32> {
    match a.mode {
        Mode::Multigraph => {
            let caps = Caps::default();
            let g = parse_graph(
                a.graph
                    .as_deref()
                    .ok_or_else(|| Error::InvalidInput("--graph required".into()))?,
                &caps,
            )?;
            let order = match &a.order {
                Some(o) => parse_order(o)?,
                None => VertexOrder::natural(g.n()),
            };
            let (tree, labels) = if let Some(input) = &a.input {
                let v = load_json(input)?;
                let tree = RootedTree::from_json(
                    v.get("tree").ok_or_else(|| Error::Json("missing tree".into()))?,
                )?;
                let labels = EdgeLabeling::from_json(
                    v.get("labels").ok_or_else(|| Error::Json("missing labels".into()))?,
                    &tree,
                )?;
                (tree, labels)
            } else {
                let tree = parse_tree(
                    a.tree
                        .as_deref()
                        .ok_or_else(|| Error::InvalidInput("--tree or --input required".into()))?,
                )?;
                let labels = EdgeLabeling::new(parse_vec(
                    a.labels
                        .as_deref()
                        .ok_or_else(|| Error::InvalidInput("--labels required".into()))?,
                )?);
                (tree, labels)
            };
            let alpha = mg_dfs_unburn(&g, &order, &tree, &labels)?;
            if json {
                emit_value(out, &serde_json::json!(alpha))
            } else {
                writeln!(out, "{}", serde_json::json!(alpha))
                    .map_err(|e| Error::Json(e.to_string()))?;
                Ok(0)
            }
        }
        Mode::Vector => {
            let x = parse_vec(
                a.x.as_deref()
                    .ok_or_else(|| Error::InvalidInput("--x required".into()))?,
            )?;
            let result = if let Some(input) = &a.input {
                VectorBurnResult::from_json(&load_json(input)?)?
            } else {
                let tree = RootedPlaneTree::new(parse_tree(
                    a.tree
                        .as_deref()
                        .ok_or_else(|| Error::InvalidInput("--tree or --input required".into()))?,
                )?)?;
                let labels = EdgeLabeling::new(parse_vec(
                    a.labels
                        .as_deref()
                        .ok_or_else(|| Error::InvalidInput("--labels required".into()))?,
                )?);
                let order = parse_order(
                    a.order
                        .as_deref()
                        .ok_or_else(|| Error::InvalidInput("--order required".into()))?,
                )?;
                VectorBurnResult { tree, labels, order }
            };
            let alpha = vec_dfs_unburn(&x, &result)?;
            emit_value(out, &serde_json::json!(alpha))
        }
    }
}

fn cmd_enumerate(a: &EnumerateArgs, caps: &Caps, json: bool, out: &mut dyn Write) -> Result<i32> {
    let need_x = || -> Result<Vec<u64>> {
        parse_vec(
            a.x.as_deref()
                .ok_or_else(|| Error::InvalidInput("--x required for this kind".into()))?,
        )
    };
    let need_graph = || -> Result<Multigraph> {
        parse_graph(
            a.graph
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("--graph required for this kind".into()))?,
            caps,
        )
    };
    let items: Vec<Vec<u64>> = match a.kind {
        SetKind::Vector => enumerate_vector_pf(&need_x()?, caps)?,
        SetKind::Graphical => enumerate_graphical_pf(&need_graph()?, caps)?,
        SetKind::Increasing => enumerate_increasing_vector_pf(&need_x()?, caps)?,
        SetKind::MaximalVector => maximal_vector_pf(&need_x()?),
        SetKind::MaximalGraphical => maximal_graphical_pf(&need_graph()?, caps)?,
    };
    if json {
        emit_value(out, &serde_json::json!(items))
    } else {
        for item in &items {
            writeln!(out, "{}", serde_json::json!(item)).map_err(|e| Error::Json(e.to_string()))?;
        }
        Ok(0)
    }
}

fn cmd_poly(a: &PolyArgs, caps: &Caps, json: bool, out: &mut dyn Write) -> Result<i32> {
    let need_x = || -> Result<Vec<u64>> {
        parse_vec(
            a.x.as_deref()
                .ok_or_else(|| Error::InvalidInput("--x required for this formula".into()))?,
        )
    };
    let need_graph = || -> Result<Multigraph> {
        parse_graph(
            a.graph
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("--graph required for this formula".into()))?,
            caps,
        )
    };
    let poly = match a.formula {
        Formula::VectorBrute => rsum_enum_vector_brute(&need_x()?, caps)?,
        Formula::Main => rsum_enum_main(&need_x()?, caps)?,
        Formula::Kungyan => rsum_enum_kungyan(&need_x()?, caps)?,
        Formula::GraphicalBrute => rsum_enum_graphical_brute(&need_graph()?, caps)?,
        Formula::TreeSide => {
            let g = need_graph()?;
            let order = match &a.order {
                Some(o) => parse_order(o)?,
                None => VertexOrder::natural(g.n()),
            };
            rsum_enum_tree_side(&g, &order, caps)?
        }
        Formula::Inversion => {
            let n = a
                .n
                .ok_or_else(|| Error::InvalidInput("--n required for this formula".into()))?;
            inversion_enum_labeled_trees(n, caps)?
        }
        Formula::IncreasingPf => rsum_enum_increasing(&need_x()?, caps)?.parking_side,
        Formula::IncreasingPartition => rsum_enum_increasing(&need_x()?, caps)?.partition_side,
    };
    emit_poly(out, &poly, json)
}

fn cmd_count(a: &CountArgs, caps: &Caps, json: bool, out: &mut dyn Write) -> Result<i32> {
    let x = parse_vec(&a.x)?;
    let ps: BigInt = pitman_stanley_count(&x, caps)?;
    let cor: BigInt = corollary_count(&x, caps)?;
    let spec = specialization_report(&x, caps)?;
    if json {
        emit_value(
            out,
            &serde_json::json!({
                "pitman_stanley": ps.to_string(),
                "corollary": cor.to_string(),
                "specializations": spec.to_json(),
            }),
        )
    } else {
        writeln!(out, "pitman_stanley = {ps}")
            .and_then(|_| writeln!(out, "corollary = {cor}"))
            .and_then(|_| {
                writeln!(
                    out,
                    "q=1: {}  q=0: {}  q=-1: {}",
                    spec.at_one, spec.at_zero, spec.at_minus_one
                )
            })
            .map_err(|e| Error::Json(e.to_string()))?;
        Ok(0)
    }
}

fn cmd_verify(
    a: &VerifyArgs,
    seed: u64,
    caps: &Caps,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let mut cfg = VerifyConfig {
        seed,
        caps: caps.clone(),
        ..VerifyConfig::default()
    };
    if let Some(v) = a.max_n {
        cfg.max_n = v;
    }
    if let Some(v) = a.x_range {
        cfg.x_range = v;
    }
    if let Some(v) = a.weight_range {
        cfg.weight_range = v;
    }
    if let Some(v) = a.random_graphs {
        cfg.random_graphs = v;
    }
    if let Some(v) = a.random_orders {
        cfg.random_orders = v;
    }
    if let Some(v) = a.random_x {
        cfg.random_x = v;
    }
    if let Some(v) = a.random_x_range {
        cfg.random_x_range = v;
    }
    let reports: Vec<VerifyReport> = if a.suite == "all" {
        all_suites(&cfg)?
    } else {
        vec![run_suite(&a.suite, &cfg)?]
    };
    let all_pass = reports.iter().all(|r| r.passed());
    if json {
        let v = serde_json::json!(reports.iter().map(|r| r.to_json()).collect::<Vec<_>>());
        emit_value(out, &v)?;
    } else {
        for r in &reports {
            writeln!(
                out,
                "{}: {} instances, {} failures: {}",
                r.identity,
                r.instances,
                r.failures.len(),
                if r.passed() { "PASS" } else { "FAIL" }
            )
            .map_err(|e| Error::Json(e.to_string()))?;
            for f in &r.failures {
                writeln!(out, "  {f}").map_err(|e| Error::Json(e.to_string()))?;
            }
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_classify(a: &ClassifyArgs, caps: &Caps, json: bool, out: &mut dyn Write) -> Result<i32> {
    let g = parse_graph(&a.graph, caps)?;
    let c = classify(&g, caps)?;
    if json {
        emit_value(out, &c.to_json())
    } else {
        writeln!(out, "{}", c.to_json()).map_err(|e| Error::Json(e.to_string()))?;
        Ok(0)
    }
}
