//! Command-line front end: analyze graphs, emit certificates as JSON,
//! verify certificates, run oracle cross-checks, and generate fixture or
//! random graphs.
//!
//! Exit codes: 0 = success, 2 = negative answer carrying a certificate,
//! 1 = usage, parse, or budget error.

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use wheelkit::coloring::{color3, color4_long, verify_coloring, Coloring, ColoringError};
use wheelkit::connectivity::{is_minimally_3_connected, kappa, KappaWitness};
use wheelkit::cycle3::{
    cycle_or_splitter, verify_cycle_through, verify_splitter, Cycle3Error, CycleOrSplitter,
    Splitter,
};
use wheelkit::graph::{parse_edge_list, parse_graph, parse_graph6, write_graph, write_graph6, Graph};
use wheelkit::oracle::{
    alpha_omega, brute_cycle_through, brute_hub, brute_k33_subdivision, chromatic_number,
    OracleBudget,
};
use wheelkit::structure::{reduction_step, twin_pairs};
use wheelkit::wheels::{classify, find_hub, find_long_wheel, find_wheel, WheelWitness};
use wheelkit::zoo::{fixture, make_wheel_free, random_graph, Fixture};

const SCHEMA: &str = "wheelkit/1";

#[derive(Parser)]
#[command(name = "wheelkit", version, about = "Wheel detection, cycle-through-three certificates, connectivity structure, and constructive coloring for simple graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    El,
    G6,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file (edge list or graph6, auto-detected by default)
    file: PathBuf,
    /// Force the input format
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Emit JSON (the default and only output form)
    #[arg(long, default_value_t = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report: classification, connectivity, twins, reduction, coloring
    Analyze(InputArgs),
    /// Search for a wheel (or k-hub) subgraph witness
    FindWheel {
        #[command(flatten)]
        input: InputArgs,
        /// Hub order (3 = plain wheels)
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Decide cycle-through-three-vertices; emits the cycle or a splitter
    Cycle3 {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        z: usize,
    },
    /// Constructive coloring: 3 colors for wheel-free input, 4 for
    /// long-wheel-free input
    Color {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=4))]
        colors: u8,
    },
    /// Re-check a certificate (cycle, splitter, wheel, or coloring JSON)
    /// against a graph
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Certificate file as emitted by the other subcommands
        cert: PathBuf,
    },
    /// Emit a fixture or generated graph
    Gen {
        /// Fixture name (k4, k33, k33-minus-e, diamond, cube, petersen,
        /// r35, glued-k33-pair, cycle:N, theta:P,Q,R), or `random`, or
        /// `wheel-free`
        name: String,
        /// Vertex count for `random`
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability for `random`
        #[arg(long)]
        p: Option<f64>,
        /// Seed for randomized generators (required there)
        #[arg(long)]
        seed: Option<u64>,
        /// Base graph file for `wheel-free`
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output encoding
        #[arg(long, value_enum, default_value_t = Format::El)]
        format: Format,
    },
    /// Brute-force ground truth (budgeted)
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        op: OracleOp,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        y: Option<usize>,
        #[arg(long)]
        z: Option<usize>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Override the vertex budget (also via WHEELKIT_BUDGET)
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleOp {
    CycleThrough,
    Wheel,
    Hub,
    Chromatic,
    AlphaOmega,
    K33Subdivision,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit 2; reserve that for negative answers
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            println!("{}", json!({ "schema": SCHEMA, "error": format!("{e:#}") }));
            ExitCode::from(1)
        }
    }
}

fn load_graph(path: &Path, format: Option<Format>) -> Result<(Graph, String)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let g = match format {
        None => parse_graph(&text)?,
        Some(Format::El) => parse_edge_list(&text)?,
        Some(Format::G6) => parse_graph6(&text)?,
    };
    let digest = format!("sha256:{}", hex(&Sha256::digest(write_graph(&g).as_bytes())));
    Ok((g, digest))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn emit(value: &Value) {
    println!("{value}");
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Analyze(input) => analyze(&input),
        Cmd::FindWheel { input, k } => find_wheel_cmd(&input, k),
        Cmd::Cycle3 { input, x, y, z } => cycle3_cmd(&input, x, y, z),
        Cmd::Color { input, colors } => color_cmd(&input, colors),
        Cmd::Verify { input, cert } => verify_cmd(&input, &cert),
        Cmd::Gen { name, n, p, seed, input, format } => gen_cmd(&name, n, p, seed, input, format),
        Cmd::Oracle { input, op, x, y, z, k, budget } => oracle_cmd(&input, op, x, y, z, k, budget),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn checked_wheel(g: &Graph, w: &WheelWitness, min_rim: usize) -> Result<Value> {
    let viols = w.verify(g, min_rim);
    if !viols.is_empty() {
        return Err(anyhow!("internal: emitted wheel witness fails verification: {viols:?}"));
    }
    Ok(to_value(w))
}

fn checked_coloring(g: &Graph, c: &Coloring) -> Result<Value> {
    let viols = verify_coloring(g, c, c.max);
    if !viols.is_empty() {
        return Err(anyhow!("internal: emitted coloring fails verification: {viols:?}"));
    }
    Ok(to_value(c))
}

fn checked_splitter(g: &Graph, x: usize, y: usize, z: usize, s: &Splitter) -> Result<Value> {
    let viols = verify_splitter(g, x, y, z, s);
    if !viols.is_empty() {
        return Err(anyhow!("internal: emitted splitter fails verification: {viols:?}"));
    }
    Ok(to_value(s))
}

fn analyze(input: &InputArgs) -> Result<u8> {
    let (g, digest) = load_graph(&input.file, input.format)?;
    let classification = classify(&g);
    let kappa_part = match kappa(&g) {
        Ok((k, w)) => json!({ "value": k, "witness": witness_json(&w) }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let wheel = find_wheel(&g);
    let long_wheel = find_long_wheel(&g);
    let reduction = if g.n() >= 2 {
        let r = reduction_step(&g)?;
        if !r.verify(&g) {
            return Err(anyhow!("internal: reduction outcome fails verification"));
        }
        to_value(&r)
    } else {
        Value::Null
    };
    let coloring = match (&wheel, &long_wheel) {
        (None, _) => Some(color3(&g).map_err(|e| anyhow!("internal: {e}"))?),
        (Some(_), None) => Some(color4_long(&g).map_err(|e| anyhow!("internal: {e}"))?),
        _ => None,
    };
    let coloring_json = match &coloring {
        Some(c) => checked_coloring(&g, c)?,
        None => Value::Null,
    };
    let wheel_json = match &wheel {
        Some(w) => checked_wheel(&g, w, 3)?,
        None => Value::Null,
    };
    let long_json = match &long_wheel {
        Some(w) => checked_wheel(&g, w, 4)?,
        None => Value::Null,
    };
    emit(&json!({
        "schema": SCHEMA,
        "input": { "digest": digest, "n": g.n(), "m": g.edge_count() },
        "classification": to_value(&classification),
        "kappa": kappa_part,
        "minimally_3_connected": is_minimally_3_connected(&g),
        "twin_pairs": to_value(&twin_pairs(&g)),
        "reduction": reduction,
        "wheel": wheel_json,
        "long_wheel": long_json,
        "coloring": coloring_json,
    }));
    Ok(0)
}

fn witness_json(w: &KappaWitness) -> Value {
    to_value(w)
}

fn find_wheel_cmd(input: &InputArgs, k: usize) -> Result<u8> {
    let (g, digest) = load_graph(&input.file, input.format)?;
    let found = find_hub(&g, k)?;
    let wheel_json = match &found {
        Some(w) => checked_wheel(&g, w, 3)?,
        None => Value::Null,
    };
    emit(&json!({
        "schema": SCHEMA,
        "input": { "digest": digest, "n": g.n(), "m": g.edge_count() },
        "k": k,
        "wheel": wheel_json,
    }));
    Ok(0)
}

fn cycle3_cmd(input: &InputArgs, x: usize, y: usize, z: usize) -> Result<u8> {
    let (g, digest) = load_graph(&input.file, input.format)?;
    match cycle_or_splitter(&g, x, y, z) {
        Ok(CycleOrSplitter::Cycle(c)) => {
            let viols = verify_cycle_through(&g, c.vertices(), &[x, y, z]);
            if !viols.is_empty() {
                return Err(anyhow!("internal: emitted cycle fails verification: {viols:?}"));
            }
            emit(&json!({
                "schema": SCHEMA,
                "input": { "digest": digest, "n": g.n(), "m": g.edge_count() },
                "x": x, "y": y, "z": z,
                "cycle": to_value(&c),
                "splitter": Value::Null,
            }));
            Ok(0)
        }
        Ok(CycleOrSplitter::Splitter(s)) => {
            let splitter = checked_splitter(&g, x, y, z, &s)?;
            emit(&json!({
                "schema": SCHEMA,
                "input": { "digest": digest, "n": g.n(), "m": g.edge_count() },
                "x": x, "y": y, "z": z,
                "cycle": Value::Null,
                "splitter": splitter,
            }));
            Ok(0)
        }
        Err(Cycle3Error::NotTwoConnected(defect)) => {
            emit(&json!({
                "schema": SCHEMA,
                "error": "not 2-connected",
                "defect": to_value(&defect),
            }));
            Ok(2)
        }
        Err(e) => Err(anyhow!(e)),
    }
}

fn color_cmd(input: &InputArgs, colors: u8) -> Result<u8> {
    let (g, digest) = load_graph(&input.file, input.format)?;
    let outcome = if colors == 3 { color3(&g) } else { color4_long(&g) };
    match outcome {
        Ok(c) => {
            let coloring = checked_coloring(&g, &c)?;
            emit(&json!({
                "schema": SCHEMA,
                "input": { "digest": digest, "n": g.n(), "m": g.edge_count() },
                "coloring": coloring,
            }));
            Ok(0)
        }
        Err(ColoringError::NotWheelFree { witness }) => {
            let w = checked_wheel(&g, &witness, 3)?;
            emit(&json!({ "schema": SCHEMA, "error": "not wheel-free", "witness": w }));
            Ok(2)
        }
        Err(ColoringError::NotLongWheelFree { witness }) => {
            let w = checked_wheel(&g, &witness, 4)?;
            emit(&json!({ "schema": SCHEMA, "error": "not long-wheel-free", "witness": w }));
            Ok(2)
        }
    }
}

fn verify_cmd(input: &InputArgs, cert_path: &Path) -> Result<u8> {
    let (g, digest) = load_graph(&input.file, input.format)?;
    let cert_text = std::fs::read_to_string(cert_path)
        .with_context(|| format!("cannot read {}", cert_path.display()))?;
    let cert: Value = serde_json::from_str(&cert_text).context("certificate is not JSON")?;
    let mut checked = Vec::new();
    let mut violations: Vec<Value> = Vec::new();

    let terminals: Option<(usize, usize, usize)> = match (&cert["x"], &cert["y"], &cert["z"]) {
        (Value::Number(x), Value::Number(y), Value::Number(z)) => Some((
            x.as_u64().unwrap_or(u64::MAX) as usize,
            y.as_u64().unwrap_or(u64::MAX) as usize,
            z.as_u64().unwrap_or(u64::MAX) as usize,
        )),
        _ => None,
    };

    if let Some(cycle) = cert.get("cycle").filter(|v| !v.is_null()) {
        checked.push("cycle");
        let verts: Vec<usize> = serde_json::from_value(cycle.clone()).context("cycle must be a vertex array")?;
        let required: Vec<usize> = terminals.map(|(x, y, z)| vec![x, y, z]).unwrap_or_default();
        for v in verify_cycle_through(&g, &verts, &required) {
            violations.push(json!({ "certificate": "cycle", "reason": v.reason }));
        }
    }
    if let Some(splitter) = cert.get("splitter").filter(|v| !v.is_null()) {
        checked.push("splitter");
        let (x, y, z) = terminals.ok_or_else(|| anyhow!("splitter certificate needs x, y, z"))?;
        let s: Splitter = serde_json::from_value(splitter.clone()).context("malformed splitter")?;
        for v in verify_splitter(&g, x, y, z, &s) {
            violations.push(json!({
                "certificate": "splitter",
                "condition": v.condition.tag(),
                "detail": v.detail,
            }));
        }
    }
    if let Some(wheel) = cert.get("wheel").or(cert.get("witness")).filter(|v| !v.is_null()) {
        checked.push("wheel");
        let w: WheelWitness = serde_json::from_value(wheel.clone()).context("malformed wheel witness")?;
        for v in w.verify(&g, 3) {
            violations.push(json!({ "certificate": "wheel", "reason": v.reason }));
        }
    }
    if let Some(coloring) = cert.get("coloring").filter(|v| !v.is_null()) {
        checked.push("coloring");
        let c: Coloring = serde_json::from_value(coloring.clone()).context("malformed coloring")?;
        for v in verify_coloring(&g, &c, c.max) {
            violations.push(json!({ "certificate": "coloring", "reason": v.reason }));
        }
    }
    if checked.is_empty() {
        return Err(anyhow!("no recognized certificate key (cycle, splitter, wheel, coloring)"));
    }
    let valid = violations.is_empty();
    emit(&json!({
        "schema": SCHEMA,
        "input": { "digest": digest, "n": g.n(), "m": g.edge_count() },
        "checked": checked,
        "valid": valid,
        "violations": violations,
    }));
    Ok(if valid { 0 } else { 2 })
}

fn gen_cmd(
    name: &str,
    n: Option<usize>,
    p: Option<f64>,
    seed: Option<u64>,
    input: Option<PathBuf>,
    format: Format,
) -> Result<u8> {
    let g = match name {
        "random" => {
            let n = n.ok_or_else(|| anyhow!("random needs --n"))?;
            let p = p.ok_or_else(|| anyhow!("random needs --p"))?;
            let seed = seed.ok_or_else(|| anyhow!("random needs --seed"))?;
            random_graph(n, p, seed)?
        }
        "wheel-free" => {
            let path = input.ok_or_else(|| anyhow!("wheel-free needs --input"))?;
            let seed = seed.ok_or_else(|| anyhow!("wheel-free needs --seed"))?;
            let (base, _) = load_graph(&path, None)?;
            make_wheel_free(&base, seed)
        }
        other => fixture(Fixture::parse(other)?)?,
    };
    match format {
        Format::El => print!("{}", write_graph(&g)),
        Format::G6 => println!("{}", write_graph6(&g)),
    }
    Ok(0)
}

fn oracle_cmd(
    input: &InputArgs,
    op: OracleOp,
    x: Option<usize>,
    y: Option<usize>,
    z: Option<usize>,
    k: usize,
    budget_override: Option<usize>,
) -> Result<u8> {
    let (g, digest) = load_graph(&input.file, input.format)?;
    let mut budget = match op {
        OracleOp::Chromatic | OracleOp::AlphaOmega => OracleBudget::chromatic(),
        OracleOp::K33Subdivision => OracleBudget::subdivision(),
        _ => OracleBudget::cycles(),
    };
    if let Ok(env) = std::env::var("WHEELKIT_BUDGET") {
        budget.max_vertices = env.parse().context("WHEELKIT_BUDGET must be an integer")?;
    }
    if let Some(b) = budget_override {
        budget.max_vertices = b;
    }
    let need_xyz = || -> Result<(usize, usize, usize)> {
        match (x, y, z) {
            (Some(x), Some(y), Some(z)) => Ok((x, y, z)),
            _ => Err(anyhow!("this op needs --x, --y, --z")),
        }
    };
    let result = match op {
        OracleOp::CycleThrough => {
            let (x, y, z) = need_xyz()?;
            let found = brute_cycle_through(&g, x, y, z, &budget)?;
            json!({ "cycle": to_value(&found) })
        }
        OracleOp::Wheel => {
            let found = brute_hub(&g, 3, &budget)?;
            json!({ "wheel": to_value(&found) })
        }
        OracleOp::Hub => {
            let found = brute_hub(&g, k, &budget)?;
            json!({ "k": k, "wheel": to_value(&found) })
        }
        OracleOp::Chromatic => {
            let chi = chromatic_number(&g, &budget)?;
            json!({ "chromatic_number": chi })
        }
        OracleOp::AlphaOmega => {
            let (alpha, omega) = alpha_omega(&g, &budget)?;
            json!({ "alpha": alpha, "omega": omega })
        }
        OracleOp::K33Subdivision => {
            let found = brute_k33_subdivision(&g, &budget)?;
            let val = found.map(|w| {
                json!({
                    "side_a": w.side_a,
                    "side_b": w.side_b,
                    "paths": to_value(&w.paths),
                })
            });
            json!({ "k33_subdivision": val })
        }
    };
    emit(&json!({
        "schema": SCHEMA,
        "input": { "digest": digest, "n": g.n(), "m": g.edge_count() },
        "oracle": result,
    }));
    Ok(0)
}
