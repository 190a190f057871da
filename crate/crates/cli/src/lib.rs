//! Command-line front end for spinweave: seeded verification sweeps and
//! JSON-in/JSON-out solvers.
//!
//! Exit codes: 0 when every case passes, 1 on a residual failure, 2 on usage
//! or schema errors, 3 on an off-shell or past-pointing momentum.

pub mod commands;
pub mod report;
pub mod suites;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use spinweave_core::SpinError;
use thiserror::Error;

use crate::commands::{Outcome, SolveArgs};
use crate::suites::Suite;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("schema: {0}")]
    Schema(String),
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("off-shell momentum: {0}")]
    OffShell(SpinError),
    #[error(transparent)]
    Core(SpinError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::OffShell(_) => 3,
            _ => 2,
        }
    }
}

impl From<SpinError> for CliError {
    fn from(e: SpinError) -> Self {
        match e {
            SpinError::OffShell { .. } | SpinError::PastPointing => CliError::OffShell(e),
            other => CliError::Core(other),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "spinweave", version, about = "Two-spinor higher-spin algebra: verification and solvers")]
pub struct Cli {
    /// Tolerance applied to every floating-point case.
    #[arg(long, global = true, env = "SPINWEAVE_TOL")]
    pub tol: Option<f64>,

    /// Seed of the trial generator.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Also write the output to this file.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Add `summary.wallclock_ms` (makes reports run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PhysArgs {
    /// Mass `m > 0`.
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,

    /// `P1,P2,P3` spatial components (energy from the mass shell) or
    /// `P0,P1,P2,P3`; rest frame when omitted.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub momentum: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Spin `j`, a nonnegative multiple of ½.
    #[arg(long)]
    pub spin: f64,

    #[command(flatten)]
    pub phys: PhysArgs,

    /// Main sector `plain(2j,0)` as sector-tensor JSON; random when omitted.
    #[arg(long, alias = "input")]
    pub main: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an invariant sweep and print a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Solve the algebraic equation from a main sector.
    Solve(FieldArgs),
    /// Evaluate the solved plane wave at a point.
    Planewave {
        #[command(flatten)]
        field: FieldArgs,
        /// `X0,X1,X2,X3`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0,0,0,0")]
        at: Vec<f64>,
    },
    /// Extend a complex vector field `V` (2×2 JSON, random when omitted).
    SolveVector {
        #[command(flatten)]
        phys: PhysArgs,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Solve the antisymmetric equation from its `Λ²U` value (`[re, im]`, default 1).
    SolveAntisym {
        #[command(flatten)]
        phys: PhysArgs,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Split a spin-2 field (16 `[re, im]` pairs) into check and dilaton parts.
    DecomposeSpin2 {
        #[arg(long)]
        input: PathBuf,
    },
}

fn field_args<'a>(f: &'a FieldArgs, cli: &Cli) -> SolveArgs<'a> {
    SolveArgs {
        spin: f.spin,
        mass: f.phys.mass,
        momentum: f.phys.momentum.as_deref(),
        main: f.main.as_deref(),
        seed: cli.seed,
        tol: cli.tol,
    }
}

/// Runs one command; the report has `wallclock_ms` only with `--timing`.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t >= 0.0) {
            return Err(CliError::Usage(format!("tolerance must be finite and nonnegative, got {t}")));
        }
    }
    let start = Instant::now();
    let mut out = match &cli.command {
        Command::Verify { suite, trials } => {
            if *trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            Outcome {
                report: suites::run(*suite, cli.seed, *trials, cli.tol)?,
                artifact: None,
            }
        }
        Command::Solve(f) => commands::solve(&field_args(f, cli))?,
        Command::Planewave { field, at } => {
            let at: [f64; 4] = at
                .as_slice()
                .try_into()
                .map_err(|_| CliError::Usage(format!("--at takes 4 components, got {}", at.len())))?;
            commands::planewave(&field_args(field, cli), at)?
        }
        Command::SolveVector { phys, input } => commands::solve_vector(
            phys.mass,
            phys.momentum.as_deref(),
            input.as_deref(),
            cli.seed,
            cli.tol,
        )?,
        Command::SolveAntisym { phys, input } => commands::solve_antisym(
            phys.mass,
            phys.momentum.as_deref(),
            input.as_deref(),
            cli.seed,
            cli.tol,
        )?,
        Command::DecomposeSpin2 { input } => commands::decompose_spin2(input, cli.seed, cli.tol)?,
    };
    if cli.timing {
        out.report.summary.wallclock_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(out)
}

/// Writes `--output` (the artifact, or the report for `verify`).
pub fn write_output(path: &Path, out: &Outcome) -> Result<(), CliError> {
    let text = match &out.artifact {
        Some(v) => serde_json::to_string_pretty(v).expect("artifacts serialize") + "\n",
        None => out.report.to_json(),
    };
    std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}

/// Full run: parse-free entry used by the binary; returns the exit code.
pub fn run(cli: &Cli, stdout: &mut impl std::io::Write, stderr: &mut impl std::io::Write) -> i32 {
    let out = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    if let Some(path) = &cli.output {
        if let Err(e) = write_output(path, &out) {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    }
    if let Some(table) = out.report.extra.get("casimir_table").and_then(|v| v.as_array()) {
        let _ = writeln!(stderr, "{:>3}  {:>12}  {:>12}", "r", "eigenvalue", "(r/2)^2+r/2");
        for row in table {
            let _ = writeln!(stderr, "{:>3}  {:>12.9}  {:>12.9}", row["r"].as_u64().unwrap_or(0), row["eigenvalue"].as_f64().unwrap_or(f64::NAN), row["expected"].as_f64().unwrap_or(f64::NAN));
        }
    }
    let _ = stdout.write_all(out.report.to_json().as_bytes());
    if out.report.all_pass() {
        0
    } else {
        for c in out.report.cases.iter().filter(|c| !c.pass) {
            let _ = writeln!(stderr, "FAIL {}: residual {:e} > {:e}", c.name, c.residual, c.tolerance);
        }
        1
    }
}
