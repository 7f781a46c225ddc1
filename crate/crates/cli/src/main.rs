use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bcf_engine::{BcfError, EnumCaps};
use chromabound::checks::{run_all, Level};
use chromabound::output::{
    default_pairs, parse_girth, parse_pairs, sweep_csv, sweep_rows, table_csv, table_json,
    table_rows, SweepMode,
};
use graph_core::EdgeOrderPolicy;
use root_locator::{verify_zero_free_with_tolerance, RootError, RESIDUAL_TOL};

/// Certified zero-free radii for chromatic polynomials: bound tables,
/// parameter sweeps, per-graph verification, and self-checks.
#[derive(Parser)]
#[command(name = "chromabound", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Grid density for the maximizations over a (minimum 33).
    #[arg(long, global = true, default_value_t = 2049)]
    grid: usize,

    /// Root-residual acceptance tolerance used by `verify`.
    #[arg(long, global = true, default_value_t = RESIDUAL_TOL)]
    tol: f64,

    /// Edge-order policy applied to input graphs: input | lex | random.
    #[arg(long, global = true, default_value = "input")]
    order: String,

    /// Seed for the random edge-order policy.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format for table/sweep: csv | json.
    #[arg(long, global = true, default_value = "csv")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the bound table for (delta, g) pairs.
    Table {
        /// Comma-separated delta:g pairs, e.g. "3:3,20:3,3:inf"; defaults to
        /// the standard ten rows.
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Sweep C/delta along one parameter.
    Sweep {
        /// by-delta (fixed g) or by-g (fixed delta).
        #[arg(long)]
        mode: String,
        /// The fixed parameter: g (number or "inf") for by-delta, delta for by-g.
        #[arg(long)]
        fixed: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Verify that every chromatic root of a graph lies inside |q| < C.
    Verify {
        /// Edge-list file (or DIMACS .col when the extension is .col).
        path: PathBuf,
    },
    /// Run the cross-module invariant suites.
    Selfcheck {
        /// quick | full
        #[arg(long, default_value = "quick")]
        level: String,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.grid < 33 {
        eprintln!("error: --grid must be at least 33");
        return ExitCode::from(EXIT_INPUT);
    }
    if !cli.tol.is_finite() || cli.tol <= 0.0 {
        eprintln!("error: --tol must be positive");
        return ExitCode::from(EXIT_INPUT);
    }
    if cli.format != "csv" && cli.format != "json" {
        eprintln!("error: --format must be csv or json");
        return ExitCode::from(EXIT_INPUT);
    }
    match run(&cli) {
        Ok(code) => code,
        Err(CmdError { message, code }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct CmdError {
    message: String,
    code: u8,
}

fn input_err(message: impl Into<String>) -> CmdError {
    CmdError {
        message: message.into(),
        code: EXIT_INPUT,
    }
}

fn emit(cli: &Cli, content: &str) -> Result<(), CmdError> {
    match &cli.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| input_err(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn caps_from_env() -> EnumCaps {
    let caps = EnumCaps::DEFAULT;
    match std::env::var("CHROMABOUND_MAX_EDGES") {
        Ok(v) => match v.parse::<usize>() {
            Ok(n) => caps.with_max_edges(n),
            Err(_) => {
                eprintln!("warning: ignoring non-numeric CHROMABOUND_MAX_EDGES={v:?}");
                caps
            }
        },
        Err(_) => caps,
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CmdError> {
    match &cli.command {
        Command::Table { pairs } => {
            let pairs = match pairs {
                Some(s) => parse_pairs(s).map_err(input_err)?,
                None => default_pairs(),
            };
            let rows = table_rows(&pairs, cli.grid)
                .map_err(|e| input_err(e.to_string()))?;
            let content = if cli.format == "json" {
                table_json(&rows)
            } else {
                table_csv(&rows)
            };
            emit(cli, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { mode, fixed, from, to } => {
            let mode = match mode.as_str() {
                "by-delta" => SweepMode::ByDelta {
                    g: parse_girth(fixed).map_err(input_err)?,
                },
                "by-g" => SweepMode::ByG {
                    delta: fixed
                        .parse()
                        .ok()
                        .filter(|&d| d >= 1)
                        .ok_or_else(|| input_err(format!("invalid delta {fixed:?}")))?,
                },
                other => return Err(input_err(format!("unknown sweep mode {other:?}"))),
            };
            let rows = sweep_rows(&mode, *from, *to, cli.grid).map_err(input_err)?;
            let content = if cli.format == "json" {
                let items: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(v, c)| serde_json::json!({"value": v, "c_over_delta": c}))
                    .collect();
                serde_json::to_string_pretty(&items).expect("json")
            } else {
                sweep_csv(&mode, &rows)
            };
            emit(cli, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { path } => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))?;
            let parsed = if path.extension().is_some_and(|e| e == "col") {
                graph_core::parse_dimacs_col(&text)
            } else {
                graph_core::parse_edge_list(&text)
            }
            .map_err(|e| input_err(e.to_string()))?;
            let policy = EdgeOrderPolicy::parse(&cli.order, cli.seed)
                .map_err(|_| input_err(format!("unknown edge order {:?}", cli.order)))?;
            let graph = policy.apply(&parsed.graph);
            let graph_id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "graph".to_string());
            let caps = caps_from_env();
            let report = verify_zero_free_with_tolerance(&graph, &graph_id, &caps, cli.tol)
                .map_err(|e| match e {
                    RootError::Bcf(BcfError::SizeCap { .. }) => CmdError {
                        message: e.to_string(),
                        code: EXIT_CAP,
                    },
                    other => input_err(other.to_string()),
                })?;
            emit(cli, &(report.to_json() + "\n"))?;
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            })
        }
        Command::Selfcheck { level } => {
            let level = match level.as_str() {
                "quick" => Level::Quick,
                "full" => Level::Full,
                other => return Err(input_err(format!("unknown level {other:?}"))),
            };
            let mut out = std::io::stdout();
            let failed = run_all(level, &mut out);
            if failed.is_empty() {
                writeln!(out, "selfcheck passed").ok();
                Ok(ExitCode::SUCCESS)
            } else {
                writeln!(out, "selfcheck FAILED: {}", failed.join(", ")).ok();
                Ok(ExitCode::from(EXIT_FAIL))
            }
        }
    }
}
