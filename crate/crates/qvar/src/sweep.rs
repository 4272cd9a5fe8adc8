//! Parameter sweeps over the two worked state families, written as
//! deterministic CSV.
//!
//! The first sweep walks the qubit family over θ ∈ [0, π] against the Pauli
//! triple; the second walks the spin-1 family over a (θ, φ) ∈ [0, π] × [0, 2π]
//! grid against the angular momentum triple, carrying the three bound-gap
//! columns for the difference panels. Grids are endpoint-inclusive with
//! spacing `range/(steps − 1)`, so θ = 0 and θ = π/2 land exactly on odd-step
//! grids.

use std::fs;
use std::io::Write;
use std::path::Path;

use qvar_core::bounds::compare_all;
use qvar_core::factory::{example1_state, example2_state, pauli, spin1_ops};

use crate::render::fmt_sig12;
use crate::{Error, Result};

/// Endpoint-inclusive sweep grid; θ over `[0, π]`, φ over `[0, 2π]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepGrid {
    pub theta_steps: usize,
    pub phi_steps: usize,
}

impl SweepGrid {
    pub fn new(theta_steps: usize, phi_steps: usize) -> Result<Self> {
        if theta_steps < 2 {
            return Err(Error::Core(qvar_core::Error::BadGrid {
                reason: "theta_steps must be at least 2",
            }));
        }
        if phi_steps < 1 {
            return Err(Error::Core(qvar_core::Error::BadGrid {
                reason: "phi_steps must be at least 1",
            }));
        }
        Ok(Self {
            theta_steps,
            phi_steps,
        })
    }
}

/// One grid point: the variance sum, the four sum bounds, and the three
/// pairwise gaps between them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    /// Present only on (θ, φ) sweeps.
    pub phi: Option<f64>,
    pub sv: f64,
    pub lb_new: f64,
    pub fb_chen: f64,
    pub pb1: f64,
    pub pb2: f64,
    pub diff_lb_fb: f64,
    pub diff_lb_pb2: f64,
    pub diff_fb_pb2: f64,
}

fn grid_value(range: f64, steps: usize, index: usize) -> f64 {
    if steps == 1 {
        0.0
    } else {
        range * index as f64 / (steps - 1) as f64
    }
}

fn row_at(
    obs: &[qvar_core::Observable],
    state: &qvar_core::QuantumState,
    theta: f64,
    phi: Option<f64>,
) -> Result<SweepRow> {
    let rep = compare_all(obs, state)?;
    let fb = rep.fb_chen.expect("triples always carry the pairwise-sum bound");
    Ok(SweepRow {
        theta,
        phi,
        sv: rep.sum_of_variances,
        lb_new: rep.lb_new,
        fb_chen: fb,
        pb1: rep.pb1_plus,
        pb2: rep.pb2_minus,
        diff_lb_fb: rep.lb_new - fb,
        diff_lb_pb2: rep.lb_new - rep.pb2_minus,
        diff_fb_pb2: fb - rep.pb2_minus,
    })
}

/// Pauli triple against the qubit family on a uniform θ grid over `[0, π]`.
pub fn sweep_fig1(theta_steps: usize) -> Result<Vec<SweepRow>> {
    let grid = SweepGrid::new(theta_steps, 1)?;
    let ops = pauli();
    let mut rows = Vec::with_capacity(grid.theta_steps);
    for i in 0..grid.theta_steps {
        let theta = grid_value(std::f64::consts::PI, grid.theta_steps, i);
        rows.push(row_at(&ops, &example1_state(theta), theta, None)?);
    }
    Ok(rows)
}

/// Spin-1 triple against the (θ, φ) family; θ outer, φ inner, so row order is
/// the grid iteration order.
pub fn sweep_fig2(grid: SweepGrid) -> Result<Vec<SweepRow>> {
    let ops = spin1_ops();
    let mut rows = Vec::with_capacity(grid.theta_steps * grid.phi_steps);
    for i in 0..grid.theta_steps {
        let theta = grid_value(std::f64::consts::PI, grid.theta_steps, i);
        for j in 0..grid.phi_steps {
            let phi = grid_value(2.0 * std::f64::consts::PI, grid.phi_steps, j);
            rows.push(row_at(
                &ops,
                &example2_state(theta, phi),
                theta,
                Some(phi),
            )?);
        }
    }
    Ok(rows)
}

/// Spin-1 sweep along θ at one fixed φ (the single-slice panel).
pub fn sweep_fig2_phi_slice(theta_steps: usize, phi: f64) -> Result<Vec<SweepRow>> {
    let grid = SweepGrid::new(theta_steps, 1)?;
    let ops = spin1_ops();
    let mut rows = Vec::with_capacity(grid.theta_steps);
    for i in 0..grid.theta_steps {
        let theta = grid_value(std::f64::consts::PI, grid.theta_steps, i);
        rows.push(row_at(&ops, &example2_state(theta, phi), theta, Some(phi))?);
    }
    Ok(rows)
}

/// Renders rows as CSV text: 12 significant digits, `.` decimal separator,
/// LF line endings. The φ column and the three difference columns appear
/// exactly when the rows carry a φ.
pub fn csv_text(rows: &[SweepRow]) -> String {
    let with_phi = rows.first().is_some_and(|r| r.phi.is_some());
    let mut out = String::new();
    if with_phi {
        out.push_str(
            "theta,phi,sv,lb_new,fb_chen,pb1_plus,pb2_minus,diff_lb_fb,diff_lb_pb2,diff_fb_pb2\n",
        );
    } else {
        out.push_str("theta,sv,lb_new,fb_chen,pb1_plus,pb2_minus\n");
    }
    for r in rows {
        if with_phi {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                fmt_sig12(r.theta),
                fmt_sig12(r.phi.expect("phi-bearing rows")),
                fmt_sig12(r.sv),
                fmt_sig12(r.lb_new),
                fmt_sig12(r.fb_chen),
                fmt_sig12(r.pb1),
                fmt_sig12(r.pb2),
                fmt_sig12(r.diff_lb_fb),
                fmt_sig12(r.diff_lb_pb2),
                fmt_sig12(r.diff_fb_pb2),
            ));
        } else {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                fmt_sig12(r.theta),
                fmt_sig12(r.sv),
                fmt_sig12(r.lb_new),
                fmt_sig12(r.fb_chen),
                fmt_sig12(r.pb1),
                fmt_sig12(r.pb2),
            ));
        }
    }
    out
}

/// Writes the CSV to `path`; byte-identical across runs for identical rows.
pub fn write_csv(rows: &[SweepRow], path: &Path) -> Result<()> {
    let mut file = fs::File::create(path)?;
    file.write_all(csv_text(rows).as_bytes())?;
    Ok(())
}
