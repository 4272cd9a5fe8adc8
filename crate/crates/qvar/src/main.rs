//! Command-line front door: figure sweeps, one-shot bound comparisons,
//! randomized audits, and Bloch-ball gap minimization.
//!
//! Exit codes: 0 on success with nothing broken, 1 when an audit reports
//! violations or a computed instance breaches a bound, 2 on usage or
//! input-format errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qvar::formats::{parse_angle, parse_obs_spec, parse_state_spec, parse_usize_list};
use qvar::render::{minimization_text, report_json, report_table};
use qvar::sweep::{sweep_fig1, sweep_fig2, sweep_fig2_phi_slice, write_csv, SweepGrid};
use qvar_core::bounds::compare_all;
use qvar_core::factory::RngSeed;
use qvar_core::verify::{audit_random, minimize_diff_bloch, AuditConfig, DiffTarget};

/// Bounds below the variance sum by more than this mean a broken instance.
const BREACH_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "qvar",
    about = "Variance-sum uncertainty bounds: sweeps, comparisons, audits, minimization",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the Pauli triple over the qubit family, θ ∈ [0, π], to CSV.
    SweepFig1 {
        /// Number of θ grid points (endpoint-inclusive).
        #[arg(long)]
        steps: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep the spin-1 triple over the (θ, φ) family to CSV.
    SweepFig2 {
        /// Number of θ grid points over [0, π].
        #[arg(long)]
        theta_steps: usize,
        /// Number of φ grid points over [0, 2π].
        #[arg(long)]
        phi_steps: usize,
        /// Fix φ to one value (accepts `pi` literals) instead of sweeping it.
        #[arg(long)]
        phi_slice: Option<String>,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate every applicable bound for one (observables, state) instance.
    Compare {
        /// Observables: `pauli`, `spin1`, or `file:a.mat,b.mat,...`.
        #[arg(long)]
        obs: String,
        /// State: `bloch:x,y,z`, `example1:theta`, `example2:theta,phi`,
        /// `haar:dim,seed`, or `file:path`.
        #[arg(long)]
        state: String,
        /// Emit one JSON object instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// Run a randomized falsification campaign over every identity and bound.
    Audit {
        /// Number of seeded trials.
        #[arg(long)]
        trials: u64,
        /// Comma-separated Hilbert-space dimensions, each in [2, 16].
        #[arg(long)]
        dims: String,
        /// Comma-separated observable counts, each ≥ 2.
        #[arg(long)]
        n_obs: String,
        /// Master seed; every violation row carries its replayable sub-seed.
        #[arg(long)]
        seed: u64,
        /// Optional CSV of violations (`check,seed,lhs,rhs,gap`).
        #[arg(long)]
        violations_out: Option<PathBuf>,
    },
    /// Minimize a bound gap over the closed Bloch ball.
    Minimize {
        /// Which gap to minimize.
        #[arg(long, value_enum)]
        target: TargetArg,
        /// Cubic grid step in (0, 1].
        #[arg(long)]
        grid_step: f64,
        /// Coordinate-descent rounds; the step halves each round.
        #[arg(long)]
        refine: u32,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum TargetArg {
    NewMinusPb2,
    NewMinusChen,
}

impl TargetArg {
    fn to_core(self) -> DiffTarget {
        match self {
            Self::NewMinusPb2 => DiffTarget::NewMinusPb2,
            Self::NewMinusChen => DiffTarget::NewMinusChen,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Self::NewMinusPb2 => "new-minus-pb2",
            Self::NewMinusChen => "new-minus-chen",
        }
    }
}

fn run(cli: Cli) -> qvar::Result<ExitCode> {
    match cli.command {
        Command::SweepFig1 { steps, out } => {
            let rows = sweep_fig1(steps)?;
            write_csv(&rows, &out)?;
            println!("wrote {} rows to {}", rows.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::SweepFig2 {
            theta_steps,
            phi_steps,
            phi_slice,
            out,
        } => {
            let rows = match phi_slice {
                Some(spec) => sweep_fig2_phi_slice(theta_steps, parse_angle(&spec)?)?,
                None => sweep_fig2(SweepGrid::new(theta_steps, phi_steps)?)?,
            };
            write_csv(&rows, &out)?;
            println!("wrote {} rows to {}", rows.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { obs, state, json } => {
            let observables = parse_obs_spec(&obs)?;
            let quantum_state = parse_state_spec(&state)?;
            let report = compare_all(&observables, &quantum_state)?;
            if json {
                println!("{}", report_json(&report));
            } else {
                print!("{}", report_table(&report));
            }
            let floor = report
                .fb_chen
                .unwrap_or(f64::NEG_INFINITY)
                .max(report.lb_new)
                .max(report.pb1_plus)
                .max(report.pb2_minus);
            if report.sum_of_variances < floor - BREACH_TOL {
                eprintln!("bound breach: sum of variances {} below a bound {floor}", report.sum_of_variances);
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit {
            trials,
            dims,
            n_obs,
            seed,
            violations_out,
        } => {
            let cfg = AuditConfig::new(
                trials,
                parse_usize_list(&dims)?,
                parse_usize_list(&n_obs)?,
                RngSeed(seed),
            );
            let report = audit_random(&cfg)?;
            print!("{}", report.summary());
            if let Some(path) = violations_out {
                fs::write(&path, report.violations_csv())?;
                println!("violations csv written to {}", path.display());
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Minimize {
            target,
            grid_step,
            refine,
        } => {
            let result = minimize_diff_bloch(target.to_core(), grid_step, refine)?;
            print!("{}", minimization_text(target.name(), &result));
            if result.min_value < -BREACH_TOL {
                eprintln!(
                    "gap breach: minimum {} is negative, the ordering claim fails here",
                    result.min_value
                );
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
