use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use geomforge::catalog::{self, Built};
use geomforge::claims::{self, ClaimError, Report, Status};
use geomforge::graph6::{from_graph6, to_graph6};
use geomforge::hyperovals::{
    enumerate_hyperovals, h6_counting_check, hyperovals_of_gf4_rank3, HyperovalError, SearchOptions,
};
use geomforge::spaces::{polar_space, PolarKind};

#[derive(Parser)]
#[command(name = "geomforge", version, about = "Finite geometries, hyperoval censuses and claim checks")]
struct Cli {
    /// Worker threads (results do not depend on this).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Node cap for backtracking searches.
    #[arg(long, global = true)]
    node_cap: Option<u64>,
    /// Wall-clock cap for backtracking searches.
    #[arg(long, global = true)]
    time_cap_secs: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a geometry or graph and write it out.
    Build {
        kind: String,
        /// Dimension for `gf3` and `u`.
        #[arg(long)]
        n: Option<usize>,
        /// Discriminant for `gf3` (+1 or -1).
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<i8>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        graph6: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Hyperoval census of a polar space.
    Census {
        kind: String,
        /// Print every hyperoval as a sorted index list, one per line.
        #[arg(long)]
        emit_all: bool,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the induced subgraph of each type representative.
        #[arg(long)]
        graph6: Option<PathBuf>,
    },
    /// Check registered claims (`all` or a list of ids).
    Verify {
        ids: Vec<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    /// Exit code 1.
    Error(String),
    /// Exit code 2.
    ResourceCap(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

impl From<HyperovalError> for Failure {
    fn from(e: HyperovalError) -> Self {
        match e {
            HyperovalError::Infeasible { .. } => Failure::ResourceCap(e.to_string()),
            other => Failure::Error(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let mut opts = SearchOptions::default();
    if let Some(c) = cli.node_cap {
        opts.node_cap = c;
    }
    opts.time_cap = cli.time_cap_secs.map(Duration::from_secs);
    let result = match cli.command {
        Command::Build {
            kind,
            n,
            eps,
            json,
            graph6,
            dot,
        } => cmd_build(&kind, n, eps, json, graph6, dot),
        Command::Census {
            kind,
            emit_all,
            json,
            graph6,
        } => cmd_census(&kind, emit_all, json, graph6, &opts),
        Command::Verify { ids, json } => cmd_verify(&ids, json, &opts),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Error(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::ResourceCap(msg)) => {
            eprintln!("aborted: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_or_print(path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// Build record for `kind`, from `GEOMFORGE_CACHE_DIR` when present there.
fn cached_build(kind: &str, n: Option<usize>, eps: Option<i8>) -> Result<Value, Failure> {
    let label = catalog::label(kind, n, eps);
    let cache = std::env::var_os("GEOMFORGE_CACHE_DIR").map(PathBuf::from);
    if let Some(dir) = &cache {
        let path = dir.join(format!("{label}.json"));
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(v) = serde_json::from_str::<Value>(&text) {
                if v["schema"] == catalog::BUILD_SCHEMA {
                    return Ok(v);
                }
            }
        }
    }
    let built: Built = catalog::build(kind, n, eps).map_err(|e| Failure::Error(e.to_string()))?;
    let v = catalog::build_json(&built);
    if let Some(dir) = &cache {
        fs::create_dir_all(dir)?;
        fs::write(dir.join(format!("{label}.json")), serde_json::to_string(&v).expect("serializes"))?;
    }
    Ok(v)
}

fn cmd_build(
    kind: &str,
    n: Option<usize>,
    eps: Option<i8>,
    json_out: Option<PathBuf>,
    graph6: Option<PathBuf>,
    dot: Option<PathBuf>,
) -> Result<ExitCode, Failure> {
    let record = cached_build(kind, n, eps)?;
    let g6 = record["graph6"].as_str().unwrap_or_default().to_string();
    if let Some(p) = &graph6 {
        fs::write(p, format!("{g6}\n"))?;
    }
    if let Some(p) = &dot {
        let g = from_graph6(&g6).map_err(|e| Failure::Error(e.to_string()))?;
        if g.order() > 200 {
            return Err(Failure::Error(format!("DOT export is limited to 200 vertices, graph has {}", g.order())));
        }
        fs::write(p, g.to_dot(record["kind"].as_str().unwrap_or(kind)))?;
    }
    if json_out.is_some() || (graph6.is_none() && dot.is_none()) {
        write_or_print(json_out.as_deref(), &pretty(&record))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_census(
    kind: &str,
    emit_all: bool,
    json_out: Option<PathBuf>,
    graph6: Option<PathBuf>,
    opts: &SearchOptions,
) -> Result<ExitCode, Failure> {
    let kind: PolarKind = kind.parse().map_err(|e: geomforge::spaces::SpaceError| Failure::Error(e.to_string()))?;
    let geo = polar_space(kind).map_err(|e| Failure::Error(e.to_string()))?;
    let (report, sets, reps): (Value, Vec<Vec<usize>>, Vec<Vec<usize>>) = match kind {
        PolarKind::Q5plus4 | PolarKind::H5_4 | PolarKind::S5_4 | PolarKind::Q7minus4 => {
            if emit_all {
                return Err(Failure::Error(format!(
                    "--emit-all needs a full census; {kind} is classified by types only"
                )));
            }
            let out = hyperovals_of_gf4_rank3(kind, opts)?;
            let reps = out.types().iter().map(|t| t.representative.clone()).collect();
            (serde_json::to_value(&out).expect("serializes"), Vec::new(), reps)
        }
        PolarKind::H6_4 => {
            if emit_all {
                return Err(Failure::Error("H(6,4) has no hyperovals to emit".into()));
            }
            let cert = h6_counting_check()?;
            (serde_json::to_value(&cert).expect("serializes"), Vec::new(), Vec::new())
        }
        _ => {
            let census = enumerate_hyperovals(&geo, opts)?;
            let reps = census.types.iter().map(|t| t.representative.clone()).collect();
            let v = serde_json::to_value(&census).expect("serializes");
            (v, census.hyperovals, reps)
        }
    };
    let report = json!({"schema": "geomforge-census/1", "version": env!("CARGO_PKG_VERSION"), "census": report});
    if emit_all {
        let mut out = io::BufWriter::new(io::stdout().lock());
        for s in &sets {
            let line: Vec<String> = s.iter().map(|p| p.to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        out.flush()?;
    }
    if let Some(p) = &graph6 {
        let col = geo.collinearity_graph();
        let lines: String = reps
            .iter()
            .map(|r| format!("{}\n", to_graph6(&col.induced_ordered(r))))
            .collect();
        fs::write(p, lines)?;
    }
    if json_out.is_some() || !emit_all {
        write_or_print(json_out.as_deref(), &pretty(&report))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(ids: &[String], json_out: Option<PathBuf>, opts: &SearchOptions) -> Result<ExitCode, Failure> {
    let records = match claims::run_claims(ids, opts) {
        Ok(r) => r,
        Err(e @ ClaimError::UnknownClaim(_)) => {
            return Err(Failure::Error(format!("{e}; known ids: {}", claims::claim_ids().join(", "))))
        }
        Err(e) => return Err(Failure::Error(e.to_string())),
    };
    for r in &records {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        eprintln!("{tag} {} ({} ms){}", r.id, r.wall_clock_ms, r.note.as_ref().map(|n| format!(": {n}")).unwrap_or_default());
    }
    let failed = records.iter().any(|r| r.status == Status::Fail);
    let capped = records.iter().any(|r| r.status == Status::Skipped);
    write_or_print(json_out.as_deref(), &pretty(&Report::new(records)))?;
    Ok(if failed {
        ExitCode::from(1)
    } else if capped {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}
