//! `symtomo`: plot data and checks for symplectic tomograms.
//!
//! Every run writes `<command>.csv` and/or `<command>.json` plus
//! `manifest.json` into `--out-dir`. Exit codes: 0 success, 1 check ran but
//! the state is not quantum, 2 domain or numerical error, 3 I/O or parse error.

mod args;
mod output;
mod states;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use symtomo::shutter::{self, ShutterParams};
use symtomo::transforms::{InverseRadon, InverseRadonConfig, LineGrids};
use symtomo::{
    classify_state, density_matrix_from_tomogram, evolve, radon_forward, ClassifyConfig, Error,
    EvolutionKind, Grid1D, Tomogram, WignerFunction,
};

use args::{Axis, Probe};
use output::{Cell, Run};
use states::Builtin;

#[derive(Debug)]
pub enum CliError {
    /// The computation was rejected or failed.
    Compute(Error),
    /// Bad flags, unreadable or malformed input, failed writes.
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Data(m) => CliError::Input(m),
            other => CliError::Compute(other),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Compute(_) => 2,
            CliError::Input(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Input(m) => write!(f, "input error: {m}"),
        }
    }
}

#[derive(Parser)]
#[command(name = "symtomo", version, about = "Symplectic tomography toolkit")]
struct Cli {
    /// Directory receiving data files and manifest.json.
    #[arg(long, global = true, default_value = ".")]
    out_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Moshinsky shutter: density, Wigner function or tomogram.
    Shutter(ShutterArgs),
    /// Radon transform, its inverse, or density-matrix reconstruction.
    Transform(TransformArgs),
    /// Normalization, homogeneity, entropic bound and quantum/classical verdict.
    Check(CheckArgs),
    /// Free or oscillator evolution of a tomogram.
    Evolve(EvolveArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Representation {
    Density,
    Wigner,
    Tomogram,
}

#[derive(Args)]
struct ShutterArgs {
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    k: f64,
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    #[arg(long = "repr", value_enum)]
    repr: Representation,
    /// Position axis for the density.
    #[arg(long, allow_hyphen_values = true, default_value = "-10:30:401")]
    x: Axis,
    #[arg(long, allow_hyphen_values = true, default_value = "-5:5:101")]
    q: Axis,
    #[arg(long, allow_hyphen_values = true, default_value = "-3:3:61")]
    p: Axis,
    /// Quadrature axis for the tomogram.
    #[arg(
        id = "X",
        long = "X",
        allow_hyphen_values = true,
        default_value = "-10:10:201"
    )]
    big_x: Axis,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    mu: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    nu: f64,
}

#[derive(Args)]
struct Source {
    /// Builtin state: ground, excited1, coherent:q0,p0, squeezed:s, subheisenberg:var, shutter:k,t.
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with = "input",
        required_unless_present = "input"
    )]
    state: Option<String>,
    /// Sampled input: CSV with header q,p,value (Wigner) or theta,X,value (tomogram).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct InverseArgs {
    /// Frequency cutoff R of the (mu, nu) integral.
    #[arg(long, default_value_t = 8.0)]
    cutoff: f64,
    /// Damping eps in exp(-eps (mu^2 + nu^2)).
    #[arg(long, default_value_t = 1e-4)]
    regularization: f64,
    /// Phase-space radius covered by the X window.
    #[arg(long, default_value_t = 10.0)]
    window: f64,
    /// Quadrature points per axis (X, mu, nu).
    #[arg(long, default_value_t = 256)]
    counts: usize,
}

impl InverseArgs {
    fn config(&self) -> InverseRadonConfig {
        InverseRadonConfig {
            cutoff: self.cutoff,
            regularization: self.regularization,
            x_half_width: self.window,
            x_count: self.counts,
            mu_count: self.counts,
            nu_count: self.counts,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Radon,
    Iradon,
    Rho,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long = "dir", value_enum)]
    direction: Direction,
    #[command(flatten)]
    source: Source,
    #[arg(id = "X", long = "X", allow_hyphen_values = true, default_value = "0")]
    big_x: Axis,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    mu: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    nu: f64,
    /// Line-integral parameter grid for builtin states (half-width).
    #[arg(long, default_value_t = 10.0)]
    line_half_width: f64,
    #[arg(long, default_value_t = 2001)]
    line_count: usize,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    q: Axis,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    p: Axis,
    /// Position grid of the density matrix.
    #[arg(long, allow_hyphen_values = true, default_value = "-5:5:64")]
    xgrid: Axis,
    #[command(flatten)]
    inverse: InverseArgs,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    theta: f64,
    /// Halve every quadrature step.
    #[arg(long)]
    refine: bool,
    #[arg(long, allow_hyphen_values = true, default_value = "-5:5:64")]
    xgrid: Axis,
    /// Phase-space scan axis (both q and p) for the Wigner minimum.
    #[arg(long, allow_hyphen_values = true, default_value = "-4:4:41")]
    scan: Axis,
    /// Positivity tolerance for the density matrix, relative to its norm.
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    /// Absolute positivity tolerance for the reconstructed Wigner function.
    #[arg(long, default_value_t = 1e-4)]
    wigner_tolerance: f64,
    #[command(flatten)]
    inverse: InverseArgs,
}

#[derive(Args)]
struct EvolveArgs {
    #[command(flatten)]
    source: Source,
    /// free or oscillator.
    #[arg(long)]
    kind: String,
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    /// Point X=..,mu=..,nu=..; repeatable. Without probes the --X axis is used.
    #[arg(long)]
    probe: Vec<Probe>,
    #[arg(
        id = "X",
        long = "X",
        allow_hyphen_values = true,
        default_value = "-10:10:201"
    )]
    big_x: Axis,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    mu: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    nu: f64,
}

fn require_grid(axis: &Axis, flag: &str) -> Result<Grid1D, CliError> {
    axis.as_grid()
        .ok_or_else(|| CliError::Input(format!("--{flag} needs a range min:max:count")))
}

/// Prints small outputs in full, otherwise a one-line summary.
fn report(text: &str, rows: usize, what: &str) {
    if rows <= 10 {
        print!("{text}");
    } else {
        println!("{what}: {rows} rows");
    }
}

fn run_shutter(a: &ShutterArgs, run: &mut Run) -> Result<(), CliError> {
    let params = ShutterParams::new(a.k, a.t)?;
    let (header, rows): (&[&str], Vec<Vec<Cell>>) = match a.repr {
        Representation::Density => (
            &["x", "value"],
            a.x.values()
                .into_iter()
                .map(|x| Ok(vec![Cell::Num(x), Cell::Num(shutter::density(x, params)?)]))
                .collect::<Result<_, Error>>()?,
        ),
        Representation::Wigner => {
            let state = shutter::ShutterState::new(a.k, a.t)?;
            let mut rows = Vec::new();
            for q in a.q.values() {
                for p in a.p.values() {
                    rows.push(vec![
                        Cell::Num(q),
                        Cell::Num(p),
                        Cell::Num(state.wigner(q, p)?),
                    ]);
                }
            }
            (&["q", "p", "value"], rows)
        }
        Representation::Tomogram => (
            &["X", "mu", "nu", "value"],
            a.big_x
                .values()
                .into_iter()
                .map(|x| {
                    let v = shutter::tomogram(x, a.mu, a.nu, params)?;
                    Ok(vec![
                        Cell::Num(x),
                        Cell::Num(a.mu),
                        Cell::Num(a.nu),
                        Cell::Num(v),
                    ])
                })
                .collect::<Result<_, Error>>()?,
        ),
    };
    let text = run.csv(header, &rows)?;
    report(&text, rows.len(), "shutter.csv");
    Ok(())
}

/// A resolved `--state` / `--input` for commands that need a tomogram.
enum TomogramSource {
    Builtin(Builtin),
    Sampled(symtomo::SampledTomogram),
}

impl Tomogram for TomogramSource {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> symtomo::Result<f64> {
        match self {
            TomogramSource::Builtin(b) => b.eval(x, mu, nu),
            TomogramSource::Sampled(s) => s.eval(x, mu, nu),
        }
    }
}

fn tomogram_source(s: &Source) -> Result<TomogramSource, CliError> {
    match (&s.state, &s.input) {
        (Some(spec), _) => Ok(TomogramSource::Builtin(Builtin::parse(spec)?)),
        (None, Some(path)) => Ok(TomogramSource::Sampled(states::read_tomogram(path)?)),
        (None, None) => Err(CliError::Input(
            "either --state or --input is required".into(),
        )),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RhoReport {
    trace: f64,
    hermiticity_defect: f64,
    min_eigenvalue: f64,
    max_eigenvalue: f64,
    purity: f64,
}

fn run_transform(a: &TransformArgs, run: &mut Run) -> Result<(), CliError> {
    match a.direction {
        Direction::Radon => {
            let (rows, header): (Vec<Vec<Cell>>, &[&str]) = {
                let eval = |w: &dyn Fn(f64) -> symtomo::Result<symtomo::RadonSample>| {
                    a.big_x
                        .values()
                        .into_iter()
                        .map(|x| {
                            let s = w(x)?;
                            Ok(vec![
                                Cell::Num(x),
                                Cell::Num(a.mu),
                                Cell::Num(a.nu),
                                Cell::Num(s.value),
                                Cell::Bool(s.truncated),
                            ])
                        })
                        .collect::<Result<Vec<_>, Error>>()
                };
                let rows = match (&a.source.state, &a.source.input) {
                    (Some(spec), _) => {
                        let state = Builtin::parse(spec)?;
                        let lines = LineGrids::symmetric(a.line_half_width, a.line_count)?;
                        eval(&|x| radon_forward(&state, x, a.mu, a.nu, &lines))?
                    }
                    (None, Some(path)) => {
                        let field = states::read_wigner_field(path)?;
                        let lines = LineGrids::for_field(&field);
                        eval(&|x| radon_forward(&field, x, a.mu, a.nu, &lines))?
                    }
                    (None, None) => {
                        return Err(CliError::Input(
                            "either --state or --input is required".into(),
                        ))
                    }
                };
                (rows, &["X", "mu", "nu", "value", "truncated"])
            };
            let text = run.csv(header, &rows)?;
            report(&text, rows.len(), "transform.csv");
        }
        Direction::Iradon => {
            let w = tomogram_source(&a.source)?;
            let inv = InverseRadon::new(&w, &a.inverse.config())?;
            let mut rows = Vec::new();
            if let (Some(qg), Some(pg)) = (a.q.as_grid(), a.p.as_grid()) {
                let field = inv.eval_grid(qg, pg)?;
                for (i, q) in qg.points().enumerate() {
                    for (j, p) in pg.points().enumerate() {
                        rows.push(vec![Cell::Num(q), Cell::Num(p), Cell::Num(field.at(i, j))]);
                    }
                }
            } else {
                for q in a.q.values() {
                    for p in a.p.values() {
                        rows.push(vec![Cell::Num(q), Cell::Num(p), Cell::Num(inv.eval(q, p)?)]);
                    }
                }
            }
            let text = run.csv(&["q", "p", "value"], &rows)?;
            report(&text, rows.len(), "transform.csv");
        }
        Direction::Rho => {
            let w = tomogram_source(&a.source)?;
            let grid = require_grid(&a.xgrid, "xgrid")?;
            let rho = density_matrix_from_tomogram(&w, grid, &a.inverse.config())?;
            let mut rows = Vec::new();
            for (i, x) in grid.points().enumerate() {
                for (j, y) in grid.points().enumerate() {
                    let z = rho.get(i, j);
                    rows.push(vec![
                        Cell::Num(x),
                        Cell::Num(y),
                        Cell::Num(z.re),
                        Cell::Num(z.im),
                    ]);
                }
            }
            run.csv(&["x", "xprime", "re", "im"], &rows)?;
            let eig = rho.eigenvalues();
            let summary = RhoReport {
                trace: rho.trace(),
                hermiticity_defect: rho.hermiticity_defect(),
                min_eigenvalue: eig.first().copied().unwrap_or(0.0),
                max_eigenvalue: eig.last().copied().unwrap_or(0.0),
                purity: rho.purity(),
            };
            print!("{}", run.json(&summary)?);
        }
    }
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CheckReport {
    theta: f64,
    normalization_error: f64,
    homogeneity_error: f64,
    entropy_sum: f64,
    entropy_bound: f64,
    entropy_satisfied: bool,
    rho_min_eigenvalue: f64,
    rho_tolerance: f64,
    wigner_min_value: f64,
    verdict: &'static str,
}

fn run_check(a: &CheckArgs, run: &mut Run) -> Result<bool, CliError> {
    let w = tomogram_source(&a.source)?;
    let mut cfg = ClassifyConfig {
        inverse: a.inverse.config(),
        rho_grid: require_grid(&a.xgrid, "xgrid")?,
        scan_grid: require_grid(&a.scan, "scan")?,
        rho_tolerance: a.tolerance,
        wigner_tolerance: a.wigner_tolerance,
        theta: a.theta,
        ..ClassifyConfig::default()
    };
    if a.refine {
        cfg = cfg.refined();
    }
    let r = classify_state(&w, &cfg)?;
    let text = run.json(&CheckReport {
        theta: a.theta,
        normalization_error: r.normalization_error,
        homogeneity_error: r.homogeneity_error,
        entropy_sum: r.entropy_sum,
        entropy_bound: r.entropy_bound,
        entropy_satisfied: r.entropy_satisfied,
        rho_min_eigenvalue: r.rho_min_eigenvalue,
        rho_tolerance: r.rho_tolerance,
        wigner_min_value: r.wigner_min_value,
        verdict: r.verdict.as_str(),
    })?;
    print!("{text}");
    Ok(r.verdict.is_quantum())
}

fn run_evolve(a: &EvolveArgs, run: &mut Run) -> Result<(), CliError> {
    let kind: EvolutionKind = a.kind.parse()?;
    let w = evolve(tomogram_source(&a.source)?, kind, a.t)?;
    let probes: Vec<Probe> = if a.probe.is_empty() {
        a.big_x
            .values()
            .into_iter()
            .map(|x| Probe {
                x,
                mu: a.mu,
                nu: a.nu,
            })
            .collect()
    } else {
        a.probe.clone()
    };
    let rows = probes
        .iter()
        .map(|p| {
            let v = w.eval(p.x, p.mu, p.nu)?;
            Ok(vec![
                Cell::Num(p.x),
                Cell::Num(p.mu),
                Cell::Num(p.nu),
                Cell::Num(a.t),
                Cell::Num(v),
            ])
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let text = run.csv(&["X", "mu", "nu", "t", "value"], &rows)?;
    report(&text, rows.len(), "evolve.csv");
    Ok(())
}

/// Every flag of the subcommand as given or defaulted, for the manifest.
fn parameters(sub: &clap::Command, matches: &ArgMatches) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    for arg in sub.get_arguments() {
        let id = arg.get_id().as_str();
        // the output location is not a parameter of the computation
        if id == "out_dir" {
            continue;
        }
        if let Ok(Some(raw)) = matches.try_get_raw(id) {
            let vals: Vec<String> = raw.map(|v| v.to_string_lossy().into_owned()).collect();
            out.insert(id.to_string(), vals.join(" "));
        }
    }
    out
}

fn execute(cli: &Cli, matches: &ArgMatches) -> Result<bool, CliError> {
    let (name, sub) = matches.subcommand().expect("subcommand is required");
    let name: &'static str = match name {
        "shutter" => "shutter",
        "transform" => "transform",
        "check" => "check",
        _ => "evolve",
    };
    let command = Cli::command();
    let spec = command.find_subcommand(name).expect("known subcommand");
    let mut run = Run::new(Path::new(&cli.out_dir), name, parameters(spec, sub))?;
    let mut passed = true;
    match &cli.command {
        Command::Shutter(a) => run_shutter(a, &mut run)?,
        Command::Transform(a) => run_transform(a, &mut run)?,
        Command::Check(a) => passed = run_check(a, &mut run)?,
        Command::Evolve(a) => run_evolve(a, &mut run)?,
    }
    run.finish()?;
    Ok(passed)
}

fn main() -> ExitCode {
    let matches = match Cli::command().try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(3);
        }
    };
    match execute(&cli, &matches) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
