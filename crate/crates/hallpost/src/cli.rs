//! Command-line front end: single-point evaluations, ratio curves, grid
//! audits and oracle runs, emitted as CSV (default) or a JSON run record.
//!
//! CSV output starts with `#`-prefixed metadata lines (command echo and
//! tool version), then a header row, then data rows with floats printed to
//! 15 significant digits, so files are both machine-readable and
//! self-describing. Identical command lines produce byte-identical CSV.
//!
//! Exit codes: 0 success, 1 an audited inequality or oracle tolerance
//! failed, 2 usage or domain error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{
    audit_grid, betaprime_calogero, betaprime_ddim, betaprime_hyper, default_g_grid,
    hp_report_calogero_1d, hp_report_calogero_d, hp_report_hyper_coulomb, ratio_limits,
    AuditOutcome, BoundReport, Model,
};
use crate::couplings::{beta_from_g, beta_from_g_ddim};
use crate::error::{Error, Result};
use crate::models::{
    eigenstate_gauss_coeff, energy_calogero_1d, energy_calogero_d, energy_hyper_coulomb,
    Calogero1DParams, CalogeroDParams, HyperCoulombParams, WavefunctionParams,
};
use crate::oracle::{residual_stats_with, solve_two_body_radial, RadialProblem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Entry point used by the `hallpost` binary.
pub fn main() -> ExitCode {
    init_thread_pool_from_env();
    ExitCode::from(run(Cli::parse()) as u8)
}

/// Cap internal parallelism from the HALLPOST_THREADS environment variable.
/// Grid and sample evaluations collect in input order, so results are
/// identical for any thread count.
pub fn init_thread_pool_from_env() {
    if let Ok(raw) = std::env::var("HALLPOST_THREADS") {
        if let Ok(threads) = raw.trim().parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    match execute(&cli) {
        Ok(output) => match write_output(&cli, &output) {
            Ok(()) => output.exit,
            // The reader went away (e.g. piped into head); not our error.
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => output.exit,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "hallpost",
    version,
    about = "Exact solvable N-body ground states and Hall-Post lower-bound audits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit a JSON run record instead of CSV.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact ground-state energy at one parameter point.
    Energy(EnergyArgs),
    /// Saturation-ratio rows at one coupling or over a sweep.
    Ratio(RatioArgs),
    /// Audit the bound inequalities over a parameter grid.
    Audit(AuditArgs),
    /// Run a numerical oracle against the closed forms.
    Oracle(OracleArgs),
    /// Reference ratio curves (201 points on g in [0, 20], N = 5).
    Figure(FigureArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelArg {
    Calogero1d,
    Hypercoulomb,
    Calogerod,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Calogero1d => Model::Calogero1D,
            ModelArg::Hypercoulomb => Model::HyperCoulomb,
            ModelArg::Calogerod => Model::CalogeroD,
        }
    }
}

#[derive(Args, Debug)]
pub struct EnergyArgs {
    pub model: ModelArg,
    #[arg(long)]
    pub n: u32,
    /// Space dimension (calogerod only).
    #[arg(long)]
    pub dim: Option<u32>,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub g: f64,
}

#[derive(Args, Debug)]
pub struct RatioArgs {
    pub model: ModelArg,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub dim: Option<u32>,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Single coupling value (alternative to a sweep).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["g_min", "g_max", "points", "log"])]
    pub g: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires = "g_max")]
    pub g_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires = "g_min")]
    pub g_max: Option<f64>,
    #[arg(long, default_value_t = 81)]
    pub points: usize,
    /// Logarithmic sweep spacing (requires a positive --g-min).
    #[arg(long)]
    pub log: bool,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    pub model: ModelArg,
    /// Smallest particle count (defaults to the model's minimum).
    #[arg(long)]
    pub n_min: Option<u32>,
    #[arg(long, default_value_t = 10)]
    pub n_max: u32,
    /// Dimension range (calogerod only).
    #[arg(long)]
    pub dim_min: Option<u32>,
    #[arg(long)]
    pub dim_max: Option<u32>,
    /// Comma-separated coupling grid; defaults to 0..5 in steps of 1/4 plus
    /// the decades 10, 100, 1000, 10000.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub g_grid: Option<Vec<f64>>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleTarget {
    /// Local-energy constancy of the one-dimensional ground state.
    Calogero1d,
    /// Two-body radial eigensolver against the reduced closed forms.
    Twobody,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadialKindArg {
    Oscillator,
    Coulomb,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    pub target: OracleTarget,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub g: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Finite-difference step; defaults to 1e-4 times the smallest pair
    /// separation of each sampled configuration.
    #[arg(long)]
    pub h: Option<f64>,
    /// Use the Gaussian coefficient omega/sqrt(2N) instead of the eigenstate
    /// value omega/(2 sqrt(2N)); the local energy then varies from
    /// configuration to configuration and the run exits 1.
    #[arg(long)]
    pub paper_gauss: bool,
    /// Reduced potential for the twobody target.
    #[arg(long)]
    pub kind: Option<RadialKindArg>,
    /// Override the radial domain cut (twobody).
    #[arg(long)]
    pub x_max: Option<f64>,
    /// Override the radial grid size (twobody).
    #[arg(long)]
    pub grid_points: Option<usize>,
    /// Tolerance on |mean - reference|/|reference|, analytic derivatives.
    #[arg(long, default_value_t = 1e-8)]
    pub tol_rel: f64,
    /// Tolerance on stddev/|reference|, analytic derivatives.
    #[arg(long, default_value_t = 1e-6)]
    pub tol_stddev: f64,
    /// Tolerance on both finite-difference checks.
    #[arg(long, default_value_t = 1e-4)]
    pub tol_fd: f64,
    /// Tolerance on the twobody eigenvalue against the closed form.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureKind {
    Fig1,
    Fig2,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    pub which: FigureKind,
}

/// Sweep spacing for ratio curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Spacing {
    Linear,
    Log,
}

/// A validated coupling sweep for one model: N (and D), a g interval, the
/// number of points and the spacing.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SweepSpec {
    pub model: Model,
    pub n: u32,
    pub d: Option<u32>,
    pub g_min: f64,
    pub g_max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl SweepSpec {
    pub fn new(
        model: Model,
        n: u32,
        d: Option<u32>,
        g_min: f64,
        g_max: f64,
        points: usize,
        spacing: Spacing,
    ) -> Result<Self> {
        if !(g_min < g_max) {
            return Err(Error::InvalidArguments(format!(
                "need g_min < g_max, got [{g_min}, {g_max}]"
            )));
        }
        if points < 2 {
            return Err(Error::InvalidArguments(format!(
                "need at least 2 points, got {points}"
            )));
        }
        if spacing == Spacing::Log && !(g_min > 0.0) {
            return Err(Error::InvalidArguments(format!(
                "log spacing needs a positive g_min, got {g_min}"
            )));
        }
        Ok(Self {
            model,
            n,
            d,
            g_min,
            g_max,
            points,
            spacing,
        })
    }

    /// The sweep's coupling values, end points exact.
    pub fn values(&self) -> Vec<f64> {
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.g_min;
                }
                if i == self.points - 1 {
                    return self.g_max;
                }
                let t = i as f64 / (self.points - 1) as f64;
                match self.spacing {
                    Spacing::Linear => self.g_min + (self.g_max - self.g_min) * t,
                    Spacing::Log => {
                        (self.g_min.ln() + (self.g_max.ln() - self.g_min.ln()) * t).exp()
                    }
                }
            })
            .collect()
    }
}

/// The sweep behind each reference figure: N = 5, g in [0, 20], 201 linear
/// points; fig1 is the one-dimensional model, fig2 the hypercentral Coulomb
/// one.
pub fn figure_spec(which: FigureKind) -> SweepSpec {
    let model = match which {
        FigureKind::Fig1 => Model::Calogero1D,
        FigureKind::Fig2 => Model::HyperCoulomb,
    };
    SweepSpec::new(model, 5, None, 0.0, 20.0, 201, Spacing::Linear).expect("static sweep")
}

/// One row of a ratio curve.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CurveRow {
    pub g: f64,
    pub beta: f64,
    pub betaprime: f64,
    pub energy: f64,
    pub bound: f64,
    pub ratio: f64,
    pub limit_at_infinity: f64,
}

/// Exponents plus saturation report at a single coupling.
pub fn curve_point(
    model: Model,
    n: u32,
    d: Option<u32>,
    omega: f64,
    alpha: f64,
    g: f64,
) -> Result<(f64, f64, BoundReport)> {
    match model {
        Model::Calogero1D => {
            let beta = beta_from_g(g)?;
            Ok((
                beta,
                betaprime_calogero(n, beta)?,
                hp_report_calogero_1d(n, omega, g)?,
            ))
        }
        Model::HyperCoulomb => {
            let beta = beta_from_g(g)?;
            Ok((
                beta,
                betaprime_hyper(n, beta)?,
                hp_report_hyper_coulomb(n, g, alpha)?,
            ))
        }
        Model::CalogeroD => {
            let dim = d.ok_or(Error::InvalidArguments(
                "the D-dimensional model needs --dim".into(),
            ))?;
            let beta = beta_from_g_ddim(g, dim)?;
            Ok((
                beta,
                betaprime_ddim(n, dim, beta)?,
                hp_report_calogero_d(n, dim, omega, g)?,
            ))
        }
    }
}

/// Evaluate a full ratio curve; a domain error at any coupling aborts the
/// curve and names the offending g.
pub fn ratio_curve(spec: &SweepSpec, omega: f64, alpha: f64) -> Result<Vec<CurveRow>> {
    let limit = ratio_limits(spec.model, spec.n, spec.d)?.at_infinity;
    spec.values()
        .into_iter()
        .map(|g| {
            let (beta, betaprime, report) =
                curve_point(spec.model, spec.n, spec.d, omega, alpha, g)
                    .map_err(|e| Error::InvalidArguments(format!("at g = {g}: {e}")))?;
            Ok(CurveRow {
                g,
                beta,
                betaprime,
                energy: report.energy,
                bound: report.bound,
                ratio: report.ratio,
                limit_at_infinity: limit,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Output assembly
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Cell {
    Int(u64),
    Float(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => fmt_float(*v),
            Cell::Text(v) => csv_escape(v),
            Cell::Bool(v) => v.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) => json!(v),
            Cell::Text(v) => json!(v),
            Cell::Bool(v) => json!(v),
            Cell::Empty => Value::Null,
        }
    }
}

/// Floats carry 15 significant digits in CSV output.
fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.14e}")
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn json_rows(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let map: serde_json::Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| (c.to_string(), cell.json()))
                    .collect();
                Value::Object(map)
            })
            .collect()
    }
}

struct Output {
    table: Table,
    parameters: Value,
    /// Extra final line for CSV (the audit summary), mirrored into JSON.
    trailer: Option<(String, Value)>,
    exit: i32,
}

fn command_echo() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

/// Wall-clock seconds since the epoch, overridable through
/// SOURCE_DATE_EPOCH so that JSON run records can be made reproducible.
fn timestamp() -> String {
    std::env::var("SOURCE_DATE_EPOCH").unwrap_or_else(|_| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs().to_string())
            .unwrap_or_else(|_| "0".to_string())
    })
}

fn write_output(cli: &Cli, output: &Output) -> std::io::Result<()> {
    let rendered = if cli.json {
        let mut record = json!({
            "command": command_echo(),
            "parameters": output.parameters,
            "outputs": output.table.json_rows(),
            "tool_version": env!("CARGO_PKG_VERSION"),
            "timestamp": timestamp(),
        });
        if let Some((_, summary)) = &output.trailer {
            record["summary"] = summary.clone();
        }
        let mut s = serde_json::to_string_pretty(&record).expect("serializable record");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "# command: {}", command_echo());
        let _ = writeln!(s, "# version: hallpost {}", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(s, "{}", output.table.columns.join(","));
        for row in &output.table.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(s, "{}", cells.join(","));
        }
        if let Some((line, _)) = &output.trailer {
            let _ = writeln!(s, "{line}");
        }
        s
    };
    match &cli.out {
        Some(path) => std::fs::write(path, rendered),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(rendered.as_bytes())?;
            stdout.flush()
        }
    }
}

// ---------------------------------------------------------------------------
// Command implementations
// ---------------------------------------------------------------------------

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Energy(args) => energy_output(args),
        Command::Ratio(args) => ratio_output(args),
        Command::Audit(args) => audit_output(args),
        Command::Oracle(args) => oracle_output(args),
        Command::Figure(args) => {
            let spec = figure_spec(args.which);
            sweep_output(&spec, 1.0, 1.0)
        }
    }
}

fn require_dim(model: Model, dim: Option<u32>) -> Result<Option<u32>> {
    match (model.needs_dimension(), dim) {
        (true, Some(d)) => Ok(Some(d)),
        (true, None) => Err(Error::InvalidArguments(
            "the D-dimensional model needs --dim".into(),
        )),
        (false, Some(_)) => Err(Error::InvalidArguments(
            "--dim only applies to calogerod".into(),
        )),
        (false, None) => Ok(None),
    }
}

fn energy_output(args: &EnergyArgs) -> Result<Output> {
    let model = Model::from(args.model);
    require_dim(model, args.dim)?;
    let (table, parameters) = match model {
        Model::Calogero1D => {
            let p = Calogero1DParams::new(args.n, args.omega, args.g)?;
            let mut t = Table::new(vec!["n", "omega", "g", "beta", "energy"]);
            t.push(vec![
                Cell::Int(args.n.into()),
                Cell::Float(p.omega()),
                Cell::Float(p.g()),
                Cell::Float(p.beta()),
                Cell::Float(energy_calogero_1d(&p)),
            ]);
            (
                t,
                json!({"model": "calogero1d", "n": args.n, "omega": args.omega, "g": args.g}),
            )
        }
        Model::HyperCoulomb => {
            let p = HyperCoulombParams::new(args.n, args.g, args.alpha)?;
            let mut t = Table::new(vec!["n", "alpha", "g", "beta", "energy"]);
            t.push(vec![
                Cell::Int(args.n.into()),
                Cell::Float(p.alpha()),
                Cell::Float(p.g()),
                Cell::Float(p.beta()),
                Cell::Float(energy_hyper_coulomb(&p)),
            ]);
            (
                t,
                json!({"model": "hypercoulomb", "n": args.n, "alpha": args.alpha, "g": args.g}),
            )
        }
        Model::CalogeroD => {
            let dim = args.dim.expect("checked by require_dim");
            let p = CalogeroDParams::new(args.n, dim, args.omega, args.g)?;
            let mut t = Table::new(vec![
                "n",
                "dim",
                "omega",
                "g",
                "beta",
                "three_body",
                "energy",
            ]);
            t.push(vec![
                Cell::Int(args.n.into()),
                Cell::Int(dim.into()),
                Cell::Float(p.omega()),
                Cell::Float(p.g()),
                Cell::Float(p.beta()),
                Cell::Float(p.three_body()),
                Cell::Float(energy_calogero_d(&p)),
            ]);
            (
                t,
                json!({"model": "calogerod", "n": args.n, "dim": dim, "omega": args.omega, "g": args.g}),
            )
        }
    };
    Ok(Output {
        table,
        parameters,
        trailer: None,
        exit: EXIT_OK,
    })
}

fn ratio_output(args: &RatioArgs) -> Result<Output> {
    let model = Model::from(args.model);
    let d = require_dim(model, args.dim)?;
    match (args.g, args.g_min, args.g_max) {
        (Some(g), _, _) => {
            let limit = ratio_limits(model, args.n, d)?.at_infinity;
            let (beta, betaprime, report) =
                curve_point(model, args.n, d, args.omega, args.alpha, g)?;
            let row = CurveRow {
                g,
                beta,
                betaprime,
                energy: report.energy,
                bound: report.bound,
                ratio: report.ratio,
                limit_at_infinity: limit,
            };
            let mut table = curve_table();
            let exit = push_curve_row(&mut table, &row, &report);
            Ok(Output {
                table,
                parameters: ratio_parameters(args, "point"),
                trailer: None,
                exit,
            })
        }
        (None, Some(g_min), Some(g_max)) => {
            let spacing = if args.log {
                Spacing::Log
            } else {
                Spacing::Linear
            };
            let spec = SweepSpec::new(model, args.n, d, g_min, g_max, args.points, spacing)?;
            let mut output = sweep_output(&spec, args.omega, args.alpha)?;
            output.parameters = ratio_parameters(args, "sweep");
            Ok(output)
        }
        _ => Err(Error::InvalidArguments(
            "give either --g or a --g-min/--g-max sweep".into(),
        )),
    }
}

fn ratio_parameters(args: &RatioArgs, mode: &str) -> Value {
    json!({
        "model": Model::from(args.model),
        "mode": mode,
        "n": args.n,
        "dim": args.dim,
        "omega": args.omega,
        "alpha": args.alpha,
        "g": args.g,
        "g_min": args.g_min,
        "g_max": args.g_max,
        "points": args.points,
        "log": args.log,
    })
}

fn curve_table() -> Table {
    Table::new(vec![
        "g",
        "beta",
        "betaprime",
        "energy",
        "bound",
        "ratio",
        "limit_at_infinity",
    ])
}

/// Emit one curve row, re-validating the report invariant; returns the exit
/// code contribution (violations flip the exit code to 1).
fn push_curve_row(table: &mut Table, row: &CurveRow, report: &BoundReport) -> i32 {
    table.push(vec![
        Cell::Float(row.g),
        Cell::Float(row.beta),
        Cell::Float(row.betaprime),
        Cell::Float(row.energy),
        Cell::Float(row.bound),
        Cell::Float(row.ratio),
        Cell::Float(row.limit_at_infinity),
    ]);
    if report.invariant_holds() && report.satisfied {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn sweep_output(spec: &SweepSpec, omega: f64, alpha: f64) -> Result<Output> {
    let rows = ratio_curve(spec, omega, alpha)?;
    let mut table = curve_table();
    let mut exit = EXIT_OK;
    for row in &rows {
        let (_, _, report) = curve_point(spec.model, spec.n, spec.d, omega, alpha, row.g)
            .expect("row already evaluated once");
        exit = exit.max(push_curve_row(&mut table, row, &report));
    }
    Ok(Output {
        table,
        parameters: json!({
            "model": spec.model,
            "n": spec.n,
            "dim": spec.d,
            "omega": omega,
            "alpha": alpha,
            "sweep": spec,
        }),
        trailer: None,
        exit,
    })
}

fn audit_output(args: &AuditArgs) -> Result<Output> {
    let model = Model::from(args.model);
    let n_min = args.n_min.unwrap_or_else(|| model.min_particles());
    if args.n_max < n_min {
        return Err(Error::InvalidArguments(format!(
            "need n_min <= n_max, got [{n_min}, {}]",
            args.n_max
        )));
    }
    let d_range = if model.needs_dimension() {
        let lo = args.dim_min.unwrap_or(2);
        let hi = args.dim_max.unwrap_or(6);
        if hi < lo {
            return Err(Error::InvalidArguments(format!(
                "need dim_min <= dim_max, got [{lo}, {hi}]"
            )));
        }
        Some(lo..=hi)
    } else {
        if args.dim_min.is_some() || args.dim_max.is_some() {
            return Err(Error::InvalidArguments(
                "--dim-min/--dim-max only apply to calogerod".into(),
            ));
        }
        None
    };
    let grid = args.g_grid.clone().unwrap_or_else(default_g_grid);
    let outcome = audit_grid(model, n_min..=args.n_max, d_range.clone(), &grid)?;

    let table = audit_table(model, &outcome);
    let summary_line = format!(
        "violations={} worst_margin={}",
        outcome.summary.violations,
        fmt_float(outcome.summary.worst_margin)
    );
    let exit = if outcome.summary.violations == 0 {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(Output {
        table,
        parameters: json!({
            "model": model,
            "n_min": n_min,
            "n_max": args.n_max,
            "dim_min": d_range.as_ref().map(|r| *r.start()),
            "dim_max": d_range.as_ref().map(|r| *r.end()),
            "g_grid": grid,
        }),
        trailer: Some((
            summary_line,
            serde_json::to_value(outcome.summary).expect("summary"),
        )),
        exit,
    })
}

fn audit_table(model: Model, outcome: &AuditOutcome) -> Table {
    let with_dim = model.needs_dimension();
    let mut columns = vec!["n"];
    if with_dim {
        columns.push("dim");
    }
    columns.extend(["g", "energy", "bound", "ratio", "margin", "satisfied"]);
    if with_dim {
        columns.push("three_body_margin");
    }
    columns.push("status");

    let mut table = Table::new(columns);
    for row in &outcome.rows {
        let mut cells = vec![Cell::Int(row.n.into())];
        if with_dim {
            cells.push(Cell::Int(row.d.expect("dimensioned audit").into()));
        }
        cells.push(Cell::Float(row.g));
        match &row.report {
            Some(r) => {
                cells.extend([
                    Cell::Float(r.energy),
                    Cell::Float(r.bound),
                    Cell::Float(r.ratio),
                    Cell::Float(r.margin),
                    Cell::Bool(r.satisfied),
                ]);
            }
            None => cells.extend([
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
            ]),
        }
        if with_dim {
            cells.push(match row.three_body_margin {
                Some(m) => Cell::Float(m),
                None => Cell::Empty,
            });
        }
        let status = match &row.error {
            Some(e) => format!("error: {e}"),
            // The formulas stay real down to g = -1/4 even though the
            // audited figures use g >= 0; mark that strip.
            None if row.g < 0.0 => "ok (negative-coupling strip)".to_string(),
            None => "ok".to_string(),
        };
        cells.push(Cell::Text(status));
        table.push(cells);
    }
    table
}

fn oracle_output(args: &OracleArgs) -> Result<Output> {
    match args.target {
        OracleTarget::Calogero1d => oracle_residual_output(args),
        OracleTarget::Twobody => oracle_twobody_output(args),
    }
}

fn oracle_residual_output(args: &OracleArgs) -> Result<Output> {
    if args.kind.is_some() {
        return Err(Error::InvalidArguments(
            "--kind only applies to the twobody target".into(),
        ));
    }
    let n = args.n.ok_or(Error::InvalidArguments(
        "the calogero1d oracle needs --n".into(),
    ))?;
    let p = Calogero1DParams::new(n, args.omega, args.g)?;
    let w = if args.paper_gauss {
        WavefunctionParams::with_gauss_coeff(&p, 2.0 * eigenstate_gauss_coeff(n, args.omega))?
    } else {
        WavefunctionParams::eigenstate(&p)
    };
    let summary = residual_stats_with(&p, &w, args.samples, args.seed, args.h)?;

    let reference = summary.analytic.reference.abs();
    let ok = summary.analytic.rel_error <= args.tol_rel
        && summary.analytic.stddev <= args.tol_stddev * reference
        && summary.finite_difference.rel_error <= args.tol_fd
        && summary.finite_difference.stddev <= args.tol_fd * reference;

    let mut table = Table::new(vec![
        "method",
        "samples",
        "mean",
        "stddev",
        "max_dev",
        "reference",
        "rel_error",
    ]);
    for (name, report) in [
        ("analytic", &summary.analytic),
        ("finite_difference", &summary.finite_difference),
    ] {
        table.push(vec![
            Cell::Text(name.to_string()),
            Cell::Int(summary.samples as u64),
            Cell::Float(report.mean),
            Cell::Float(report.stddev),
            Cell::Float(report.max_dev),
            Cell::Float(report.reference),
            Cell::Float(report.rel_error),
        ]);
    }
    Ok(Output {
        table,
        parameters: json!({
            "target": "calogero1d",
            "n": n,
            "omega": args.omega,
            "g": args.g,
            "samples": args.samples,
            "seed": args.seed,
            "h": args.h,
            "paper_gauss": args.paper_gauss,
            "gauss_coeff": w.gauss_coeff(),
            "tolerances": {"rel": args.tol_rel, "stddev": args.tol_stddev, "fd": args.tol_fd},
        }),
        trailer: None,
        exit: if ok { EXIT_OK } else { EXIT_VIOLATION },
    })
}

fn oracle_twobody_output(args: &OracleArgs) -> Result<Output> {
    if args.paper_gauss || args.n.is_some() {
        return Err(Error::InvalidArguments(
            "--n/--paper-gauss only apply to the calogero1d target".into(),
        ));
    }
    let kind = args.kind.ok_or(Error::InvalidArguments(
        "the twobody oracle needs --kind oscillator|coulomb".into(),
    ))?;
    let (mut prob, kind_name, strength) = match kind {
        RadialKindArg::Oscillator => (
            RadialProblem::oscillator(args.omega, args.g)?,
            "oscillator",
            args.omega,
        ),
        RadialKindArg::Coulomb => (
            RadialProblem::coulomb(args.lambda, args.g)?,
            "coulomb",
            args.lambda,
        ),
    };
    if let Some(x_max) = args.x_max {
        prob.x_max = x_max;
        prob.x_min = x_max * RadialProblem::X_MIN_FRACTION;
    }
    if let Some(points) = args.grid_points {
        prob.grid_points = points;
    }
    let e0 = solve_two_body_radial(&prob)?;
    let reference = prob.reference_energy()?;
    let rel_error = (e0 - reference).abs() / reference.abs();
    let family_n2 = prob.hyper_family_n2().transpose()?;

    let mut table = Table::new(vec![
        "kind",
        "g",
        "strength",
        "e0",
        "reference",
        "rel_error",
        "hypercoulomb_n2",
    ]);
    table.push(vec![
        Cell::Text(kind_name.to_string()),
        Cell::Float(args.g),
        Cell::Float(strength),
        Cell::Float(e0),
        Cell::Float(reference),
        Cell::Float(rel_error),
        match family_n2 {
            Some(v) => Cell::Float(v),
            None => Cell::Empty,
        },
    ]);
    Ok(Output {
        table,
        parameters: json!({
            "target": "twobody",
            "kind": kind_name,
            "g": args.g,
            "strength": strength,
            "x_min": prob.x_min,
            "x_max": prob.x_max,
            "grid_points": prob.grid_points,
            "tol": args.tol,
        }),
        trailer: None,
        exit: if rel_error <= args.tol {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn sweep_values_hit_both_ends_exactly() {
        let spec =
            SweepSpec::new(Model::Calogero1D, 5, None, 0.0, 20.0, 201, Spacing::Linear).unwrap();
        let values = spec.values();
        assert_eq!(values.len(), 201);
        assert_eq!(values[0], 0.0);
        assert_eq!(values[200], 20.0);
        assert!(values.windows(2).all(|w| w[0] < w[1]));

        let spec = SweepSpec::new(Model::Calogero1D, 5, None, 0.1, 100.0, 4, Spacing::Log).unwrap();
        let values = spec.values();
        assert_eq!(values[0], 0.1);
        assert_eq!(values[3], 100.0);
        assert_relative_eq!(
            values[1] / values[0],
            values[2] / values[1],
            max_relative = 1e-12
        );
    }

    #[test]
    fn sweep_validation() {
        assert!(SweepSpec::new(Model::Calogero1D, 5, None, 2.0, 1.0, 10, Spacing::Linear).is_err());
        assert!(SweepSpec::new(Model::Calogero1D, 5, None, 0.0, 1.0, 1, Spacing::Linear).is_err());
        assert!(SweepSpec::new(Model::Calogero1D, 5, None, 0.0, 1.0, 10, Spacing::Log).is_err());
    }

    #[test]
    fn figure_specs_match_their_models() {
        assert_eq!(figure_spec(FigureKind::Fig1).model, Model::Calogero1D);
        assert_eq!(figure_spec(FigureKind::Fig2).model, Model::HyperCoulomb);
        assert_eq!(figure_spec(FigureKind::Fig1).points, 201);
    }

    #[test]
    fn ratio_curve_reference_end_points() {
        let spec = figure_spec(FigureKind::Fig1);
        let rows = ratio_curve(&spec, 1.0, 1.0).unwrap();
        assert_relative_eq!(rows[0].ratio, 1.2, max_relative = 1e-12);
        assert!(rows.windows(2).all(|w| w[1].ratio < w[0].ratio));

        let spec = figure_spec(FigureKind::Fig2);
        let rows = ratio_curve(&spec, 1.0, 1.0).unwrap();
        assert_relative_eq!(rows[0].ratio, 4900.0 / 8464.0, max_relative = 1e-12);
        assert!(rows.windows(2).all(|w| w[1].ratio > w[0].ratio));
        assert!(rows.iter().all(|r| r.ratio <= 0.75 + 1e-12));
    }

    #[test]
    fn ratio_curve_names_the_offending_coupling() {
        let spec =
            SweepSpec::new(Model::Calogero1D, 5, None, -0.24, 0.0, 3, Spacing::Linear).unwrap();
        let err = ratio_curve(&spec, 1.0, 1.0).unwrap_err();
        assert!(err.to_string().contains("at g = -0.24"));
    }

    #[test]
    fn float_formatting_is_fifteen_digits() {
        assert_eq!(fmt_float(1.2), "1.20000000000000e0");
        assert_eq!(fmt_float(-1.0 / 2645.0), "-3.78071833648393e-4");
        assert_eq!(fmt_float(f64::NAN), "nan");
    }

    #[test]
    fn csv_escaping_quotes_commas() {
        assert_eq!(csv_escape("ok"), "ok");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("a\"b"), "\"a\"\"b\"");
    }
}
