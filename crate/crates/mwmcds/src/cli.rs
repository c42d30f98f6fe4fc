//! Command-line front end: `generate`, `solve`, `exact`, `verify`, `bench`.
//!
//! Machine-readable output (csv, json-lines) is stable and deterministic
//! for a fixed seed; wall-clock time appears only in the human-readable
//! text format. Exit codes: 0 success/feasible, 2 parse or I/O error,
//! 3 infeasible solution, 4 enumeration cap exceeded, 5 config error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::annealer::{self, CoolingReading, SAParams};
use crate::bench::{self, BenchConfig, BenchRecord};
use crate::graph::{Graph, VertexSet};
use crate::instance::{self, GeneratorConfig};
use crate::objective::{eval_scalarized, ScalarWeights};
use crate::oracle;

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;
pub const EXIT_CAP: u8 = 4;
pub const EXIT_CONFIG: u8 = 5;

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(EXIT_PARSE, format!("io error: {e}"))
    }
}

impl From<crate::graph::GraphError> for CliError {
    fn from(e: crate::graph::GraphError) -> Self {
        CliError::new(EXIT_PARSE, e.to_string())
    }
}

impl From<crate::annealer::AnnealError> for CliError {
    fn from(e: crate::annealer::AnnealError) -> Self {
        CliError::new(EXIT_CONFIG, e.to_string())
    }
}

impl From<crate::oracle::OracleError> for CliError {
    fn from(e: crate::oracle::OracleError) -> Self {
        match e {
            oracle::OracleError::TooLarge { .. } => CliError::new(EXIT_CAP, e.to_string()),
            _ => CliError::new(EXIT_PARSE, e.to_string()),
        }
    }
}

impl From<crate::instance::InstanceError> for CliError {
    fn from(e: crate::instance::InstanceError) -> Self {
        CliError::new(EXIT_CONFIG, e.to_string())
    }
}

impl From<crate::bench::BenchError> for CliError {
    fn from(e: crate::bench::BenchError) -> Self {
        CliError::new(EXIT_CONFIG, e.to_string())
    }
}

impl From<crate::objective::ObjectiveError> for CliError {
    fn from(e: crate::objective::ObjectiveError) -> Self {
        CliError::new(EXIT_CONFIG, e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    JsonLines,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CoolingFlag {
    /// Multiply by 1 - gamma at the end of each level.
    Literal,
    /// Multiply by gamma at the end of each level.
    Gamma,
}

impl From<CoolingFlag> for CoolingReading {
    fn from(f: CoolingFlag) -> Self {
        match f {
            CoolingFlag::Literal => CoolingReading::Literal,
            CoolingFlag::Gamma => CoolingReading::Gamma,
        }
    }
}

/// Solver flags shared by `solve` and `bench`; every flag can also be set
/// through an `MWMCDS_`-prefixed environment variable.
#[derive(Debug, Args)]
pub struct SolverFlags {
    #[arg(long, default_value_t = 0, env = "MWMCDS_SEED")]
    pub seed: u64,
    #[arg(long, default_value_t = 0.5, env = "MWMCDS_ALPHA")]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.5, env = "MWMCDS_BETA")]
    pub beta: f64,
    #[arg(long, default_value_t = 100.0, env = "MWMCDS_T0")]
    pub t0: f64,
    #[arg(long, default_value_t = 3, env = "MWMCDS_K")]
    pub k: usize,
    #[arg(long, default_value_t = 0.9, env = "MWMCDS_GAMMA")]
    pub gamma: f64,
    #[arg(long, value_enum, default_value_t = CoolingFlag::Literal, env = "MWMCDS_COOLING_MULTIPLIER")]
    pub cooling_multiplier: CoolingFlag,
    #[arg(long, default_value_t = 50, env = "MWMCDS_SOL_SIZE")]
    pub sol_size: usize,
    #[arg(long, default_value_t = 10_000, env = "MWMCDS_MAX_ITERS")]
    pub max_iters: usize,
}

impl SolverFlags {
    pub fn to_params(&self, trace: bool) -> SAParams {
        SAParams {
            alpha: self.alpha,
            beta: self.beta,
            t0: self.t0,
            k: self.k,
            gamma: self.gamma,
            cooling: self.cooling_multiplier.into(),
            sol_size: self.sol_size,
            max_iterations: self.max_iters,
            seed: self.seed,
            greedy_move_threshold: 0.5,
            trace,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mwmcds", version, about = "Connected-dominating-set solver and benchmark harness")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random connected benchmark instance.
    Generate {
        #[arg(long)]
        n: usize,
        /// Edge count target.
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0, env = "MWMCDS_SEED")]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        p_t: f64,
        #[arg(long, default_value_t = 0.5)]
        p_d: f64,
        #[arg(long, default_value_t = 1)]
        dist_min: u64,
        #[arg(long, default_value_t = 100)]
        dist_max: u64,
        #[arg(long, default_value_t = 1)]
        instants: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the annealer on an instance file.
    Solve {
        instance: PathBuf,
        #[command(flatten)]
        solver: SolverFlags,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text, env = "MWMCDS_FORMAT")]
        format: OutputFormat,
        /// Write a per-iteration CSV trace to this path.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exhaustively solve a small instance to optimality.
    Exact {
        instance: PathBuf,
        #[arg(long, default_value_t = oracle::DEFAULT_ENUM_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 0.5, env = "MWMCDS_ALPHA")]
        alpha: f64,
        #[arg(long, default_value_t = 0.5, env = "MWMCDS_BETA")]
        beta: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text, env = "MWMCDS_FORMAT")]
        format: OutputFormat,
    },
    /// Check a comma-separated vertex list against an instance.
    Verify {
        instance: PathBuf,
        /// Solution as comma-separated vertex ids, e.g. "1,2".
        set: String,
        #[arg(long, default_value_t = 0.5, env = "MWMCDS_ALPHA")]
        alpha: f64,
        #[arg(long, default_value_t = 0.5, env = "MWMCDS_BETA")]
        beta: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text, env = "MWMCDS_FORMAT")]
        format: OutputFormat,
    },
    /// Run the benchmark grid and emit a CSV table.
    Bench {
        /// TOML config; the built-in grid when omitted.
        config: Option<PathBuf>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Flat result record shared by `solve` and `exact`.
#[derive(Debug, Serialize)]
pub struct SolveRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub exact: bool,
    pub size: usize,
    pub f_w1: f64,
    pub f_w2: f64,
    pub f_w: f64,
    pub f: f64,
    pub alpha: f64,
    pub beta: f64,
    pub seed: Option<u64>,
    pub iterations: Option<usize>,
    pub best_found_at: Option<usize>,
    pub dominators: Vec<usize>,
    #[serde(skip)]
    pub wall_time_ms: Option<f64>,
}

impl SolveRecord {
    pub const CSV_HEADER: &'static str =
        "instance,n,m,exact,size,f_w1,f_w2,f_w,f,alpha,beta,seed,iterations,best_found_at,dominators";

    fn fmt_opt<T: std::fmt::Display>(v: &Option<T>) -> String {
        v.as_ref().map(|x| x.to_string()).unwrap_or_default()
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => {
                let mut out = String::new();
                let _ = writeln!(out, "instance: {}", self.instance);
                let _ = writeln!(out, "n: {}", self.n);
                let _ = writeln!(out, "m: {}", self.m);
                let _ = writeln!(out, "exact: {}", self.exact);
                let _ = writeln!(out, "size: {}", self.size);
                let _ = writeln!(out, "f_w1: {}", self.f_w1);
                let _ = writeln!(out, "f_w2: {}", self.f_w2);
                let _ = writeln!(out, "f_w: {}", self.f_w);
                let _ = writeln!(out, "f: {}", self.f);
                let _ = writeln!(out, "alpha: {}", self.alpha);
                let _ = writeln!(out, "beta: {}", self.beta);
                if let Some(seed) = self.seed {
                    let _ = writeln!(out, "seed: {seed}");
                }
                if let Some(iters) = self.iterations {
                    let _ = writeln!(out, "iterations: {iters}");
                }
                if let Some(at) = self.best_found_at {
                    let _ = writeln!(out, "best_found_at: {at}");
                }
                let _ = writeln!(
                    out,
                    "dominators: {}",
                    self.dominators
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                if let Some(ms) = self.wall_time_ms {
                    let _ = writeln!(out, "wall_time_ms: {ms:.3}");
                }
                out
            }
            OutputFormat::Csv => {
                let dominators = self
                    .dominators
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                format!(
                    "{}\n{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    Self::CSV_HEADER,
                    self.instance,
                    self.n,
                    self.m,
                    self.exact,
                    self.size,
                    self.f_w1,
                    self.f_w2,
                    self.f_w,
                    self.f,
                    self.alpha,
                    self.beta,
                    Self::fmt_opt(&self.seed),
                    Self::fmt_opt(&self.iterations),
                    Self::fmt_opt(&self.best_found_at),
                    dominators
                )
            }
            OutputFormat::JsonLines => {
                let mut line = serde_json::to_string(self).expect("record serializes");
                line.push('\n');
                line
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub instance: String,
    pub set: Vec<usize>,
    pub dominating: bool,
    pub connected: bool,
    pub feasible: bool,
    pub f_c: usize,
    pub f_w: Option<f64>,
    pub f: Option<f64>,
}

impl VerifyRecord {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => {
                let mut out = String::new();
                let _ = writeln!(out, "instance: {}", self.instance);
                let _ = writeln!(
                    out,
                    "set: {}",
                    self.set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                );
                let _ = writeln!(out, "dominating: {}", self.dominating);
                let _ = writeln!(out, "connected: {}", self.connected);
                let _ = writeln!(out, "feasible: {}", self.feasible);
                let _ = writeln!(out, "f_c: {}", self.f_c);
                if let Some(f_w) = self.f_w {
                    let _ = writeln!(out, "f_w: {f_w}");
                }
                if let Some(f) = self.f {
                    let _ = writeln!(out, "f: {f}");
                }
                out
            }
            OutputFormat::Csv => {
                let set = self.set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
                format!(
                    "instance,set,dominating,connected,feasible,f_c,f_w,f\n{},{},{},{},{},{},{},{}\n",
                    self.instance,
                    set,
                    self.dominating,
                    self.connected,
                    self.feasible,
                    self.f_c,
                    self.f_w.map(|v| v.to_string()).unwrap_or_default(),
                    self.f.map(|v| v.to_string()).unwrap_or_default(),
                )
            }
            OutputFormat::JsonLines => {
                let mut line = serde_json::to_string(self).expect("record serializes");
                line.push('\n');
                line
            }
        }
    }
}

fn load_instance(path: &PathBuf) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(Graph::parse(&text)?)
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

/// Executes a parsed command, returning printed output. Split from `main`
/// so integration tests can drive it in-process.
pub fn execute(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Generate { n, m, seed, p_t, p_d, dist_min, dist_max, instants, out } => {
            let cfg = GeneratorConfig {
                n,
                target_m: m,
                p_t,
                p_d,
                distance_range: (dist_min, dist_max),
                instants,
                seed,
            };
            let g = instance::generate_instance(&cfg)?;
            let text = instance::instance_text(&cfg, &g);
            write_or_print(&out, &text)?;
            Ok(if out.is_some() { String::new() } else { text })
        }
        Command::Solve { instance, solver, format, trace } => {
            let g = load_instance(&instance)?;
            let params = solver.to_params(trace.is_some());
            let result = annealer::run(&g, &params)?;
            if let (Some(path), Some(records)) = (&trace, &result.trace) {
                let mut csv =
                    String::from("iteration,temperature,incumbent_f,neighbor_f,accepted,best_f\n");
                for r in records {
                    let _ = writeln!(
                        csv,
                        "{},{},{},{},{},{}",
                        r.iteration, r.temperature, r.incumbent_f, r.neighbor_f, r.accepted, r.best_f
                    );
                }
                std::fs::write(path, csv)?;
            }
            let record = SolveRecord {
                instance: instance.display().to_string(),
                n: g.n(),
                m: g.m(),
                exact: false,
                size: result.objective.f_c,
                f_w1: result.objective.f_w1,
                f_w2: result.objective.f_w2,
                f_w: result.objective.f_w,
                f: result.objective.f,
                alpha: params.alpha,
                beta: params.beta,
                seed: Some(params.seed),
                iterations: Some(result.iterations_executed),
                best_found_at: Some(result.best_found_at),
                dominators: result.best_solution.members(),
                wall_time_ms: (format == OutputFormat::Text)
                    .then(|| result.wall_time.as_secs_f64() * 1000.0),
            };
            let rendered = record.render(format);
            print!("{rendered}");
            Ok(rendered)
        }
        Command::Exact { instance, cap, alpha, beta, format } => {
            let g = load_instance(&instance)?;
            let sw = ScalarWeights::new(alpha, beta)?;
            let (s, obj) = oracle::exact_optimum(&g, &sw, cap)?;
            let record = SolveRecord {
                instance: instance.display().to_string(),
                n: g.n(),
                m: g.m(),
                exact: true,
                size: obj.f_c,
                f_w1: obj.f_w1,
                f_w2: obj.f_w2,
                f_w: obj.f_w,
                f: obj.f,
                alpha,
                beta,
                seed: None,
                iterations: None,
                best_found_at: None,
                dominators: s.members(),
                wall_time_ms: None,
            };
            let rendered = record.render(format);
            print!("{rendered}");
            Ok(rendered)
        }
        Command::Verify { instance, set, alpha, beta, format } => {
            let g = load_instance(&instance)?;
            let sw = ScalarWeights::new(alpha, beta)?;
            let members = parse_vertex_list(&set, g.n())?;
            let s = VertexSet::from_members(g.n(), &members);
            let dominating = g.is_dominating(&s);
            let connected = g.is_connected_induced(&s);
            let feasible = dominating && connected;
            let obj = feasible.then(|| eval_scalarized(&g, &s, &sw)).transpose()?;
            let record = VerifyRecord {
                instance: instance.display().to_string(),
                set: s.members(),
                dominating,
                connected,
                feasible,
                f_c: s.len(),
                f_w: obj.map(|o| o.f_w),
                f: obj.map(|o| o.f),
            };
            let rendered = record.render(format);
            print!("{rendered}");
            if !feasible {
                return Err(CliError::new(EXIT_INFEASIBLE, "solution is not a connected dominating set"));
            }
            Ok(rendered)
        }
        Command::Bench { config, out } => {
            let cfg = match config {
                Some(path) => BenchConfig::from_toml(&std::fs::read_to_string(&path)?)?,
                None => BenchConfig::paper_grid(),
            };
            let records = bench::run_bench(&cfg)?;
            let mut csv = String::from(BenchRecord::CSV_HEADER);
            csv.push('\n');
            for r in &records {
                csv.push_str(&r.csv_line());
                csv.push('\n');
            }
            write_or_print(&out, &csv)?;
            Ok(if out.is_some() { String::new() } else { csv })
        }
    }
}

fn parse_vertex_list(text: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let mut members = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: usize = part
            .parse()
            .map_err(|e| CliError::new(EXIT_PARSE, format!("bad vertex id {part:?}: {e}")))?;
        if v >= n {
            return Err(CliError::new(
                EXIT_PARSE,
                format!("vertex {v} out of range (n = {n})"),
            ));
        }
        members.push(v);
    }
    Ok(members)
}
