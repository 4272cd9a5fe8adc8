//! Observables, quantum states, and the statistical primitives — expectation,
//! variance, standard deviation, commutator, anticommutator — that every
//! uncertainty bound is built from.
//!
//! Both pure vectors and density matrices are supported throughout; the
//! variance of an observable `A` in a state `s` is `⟨A²⟩ − ⟨A⟩²` with
//! `⟨X⟩ = ⟨ψ|X|ψ⟩` or `Tr[ρX]`.

use alloc::vec::Vec;
use core::ops::{Add, Sub};


#[allow(unused_imports)] // no_std float math; std's inherent methods shadow it in test builds
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::C64;

/// Relative gate on conjugate symmetry for observable inputs.
const HERMITICITY_TOL: f64 = 1e-10;
/// Gate on the Euclidean norm of pure-state vectors.
const NORM_TOL: f64 = 1e-10;
/// Gate on the trace of density matrices.
const TRACE_TOL: f64 = 1e-10;
/// Density-matrix eigenvalues may undershoot zero by round-off this much.
const POSITIVITY_TOL: f64 = 1e-9;
/// Imaginary residue allowed in an expectation value before it is an error.
const IMAG_TOL: f64 = 1e-9;
/// Variances in `[−NEG_VAR_TOL, 0)` clamp to zero; below that is an error.
const NEG_VAR_TOL: f64 = 1e-9;

/// Absolute/relative tolerance pair used by comparison helpers and audits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            rel_tol: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        if abs_tol < 0.0 || rel_tol < 0.0 || !abs_tol.is_finite() || !rel_tol.is_finite() {
            return Err(Error::BadStep { step: abs_tol.min(rel_tol) });
        }
        Ok(Self { abs_tol, rel_tol })
    }

    /// Allowed slack when testing `lhs ≥ rhs`, scaled to the magnitudes involved.
    pub fn slack(&self, lhs: f64, rhs: f64) -> f64 {
        self.abs_tol + self.rel_tol * lhs.abs().max(rhs.abs())
    }
}

/// A validated Hermitian operator.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    matrix: ComplexMatrix,
}

impl Observable {
    /// Validates Hermiticity within `1e−10 · (1 + max |entry|)` and finiteness.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let asym = matrix.hermitian_asymmetry();
        if asym > HERMITICITY_TOL * (1.0 + matrix.max_abs()) {
            return Err(Error::NotHermitian {
                max_asymmetry: asym,
            });
        }
        Ok(Self { matrix })
    }

    /// Wraps a matrix that is Hermitian by construction (sums of observables,
    /// `(G+G†)/2`, …) without re-running the gate.
    pub fn new_unchecked(matrix: ComplexMatrix) -> Self {
        debug_assert!(
            matrix.hermitian_asymmetry() <= HERMITICITY_TOL * (1.0 + matrix.max_abs())
        );
        Self { matrix }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Sum of a slice of observables; `None` on an empty slice.
    pub fn sum(obs: &[Observable]) -> Option<Observable> {
        let (first, rest) = obs.split_first()?;
        let mut acc = first.matrix.clone();
        for o in rest {
            acc = &acc + &o.matrix;
        }
        Some(Observable { matrix: acc })
    }
}

// Sums and differences of Hermitian matrices stay exactly conjugate-symmetric
// in IEEE arithmetic, so no re-validation.
impl Add for &Observable {
    type Output = Observable;
    fn add(self, rhs: &Observable) -> Observable {
        Observable {
            matrix: &self.matrix + &rhs.matrix,
        }
    }
}

impl Sub for &Observable {
    type Output = Observable;
    fn sub(self, rhs: &Observable) -> Observable {
        Observable {
            matrix: &self.matrix - &rhs.matrix,
        }
    }
}

/// Validates Hermiticity and finiteness; the free-function spelling of
/// [`Observable::new`].
pub fn validate_observable(matrix: ComplexMatrix) -> Result<Observable> {
    Observable::new(matrix)
}

/// A pure state vector or a density matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum QuantumState {
    Pure(Vec<C64>),
    Mixed(ComplexMatrix),
}

impl QuantumState {
    /// Validates a pure state: finite amplitudes with unit norm within 1e−10.
    /// The stored vector is renormalized to kill residual drift.
    pub fn pure(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::BadDimension { dim: 0 });
        }
        if !amplitudes
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let norm = amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        let inv = 1.0 / norm;
        Ok(Self::Pure(
            amplitudes.into_iter().map(|z| z * inv).collect(),
        ))
    }

    /// Validates a density matrix: Hermitian and unit-trace within 1e−10,
    /// smallest eigenvalue ≥ −1e−9 by a power-iteration estimate.
    pub fn mixed(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let asym = matrix.hermitian_asymmetry();
        if asym > HERMITICITY_TOL * (1.0 + matrix.max_abs()) {
            return Err(Error::NotHermitian {
                max_asymmetry: asym,
            });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::NotUnitTrace { trace: tr.re });
        }
        let min_eig = matrix.min_eigenvalue_estimate();
        if min_eig < -POSITIVITY_TOL {
            return Err(Error::NotPositive {
                min_eigenvalue: min_eig,
            });
        }
        Ok(Self::Mixed(matrix))
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Pure(v) => v.len(),
            Self::Mixed(m) => m.dim(),
        }
    }

    pub fn is_pure_vector(&self) -> bool {
        matches!(self, Self::Pure(_))
    }

    /// The density matrix `|ψ⟩⟨ψ|` or `ρ` itself.
    pub fn density_matrix(&self) -> ComplexMatrix {
        match self {
            Self::Pure(v) => {
                let d = v.len();
                let mut m = ComplexMatrix::zeros(d);
                for i in 0..d {
                    for j in 0..d {
                        m[(i, j)] = v[i] * v[j].conj();
                    }
                }
                m
            }
            Self::Mixed(m) => m.clone(),
        }
    }

    fn check_dim(&self, other: usize) -> Result<()> {
        if self.dim() != other {
            return Err(Error::DimensionMismatch {
                expected: other,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

/// Raw state input as it arrives from a file or the CLI.
pub enum StateInput {
    Vector(Vec<C64>),
    Matrix(ComplexMatrix),
}

/// Validates either flavor of raw state.
pub fn validate_state(raw: StateInput) -> Result<QuantumState> {
    match raw {
        StateInput::Vector(v) => QuantumState::pure(v),
        StateInput::Matrix(m) => QuantumState::mixed(m),
    }
}

/// Complex expectation `⟨ψ|M|ψ⟩` or `Tr[ρM]` of an arbitrary matrix.
fn expectation_complex(m: &ComplexMatrix, state: &QuantumState) -> C64 {
    match state {
        QuantumState::Pure(v) => {
            let mv = m.mul_vec(v);
            v.iter().zip(&mv).map(|(a, b)| a.conj() * b).sum()
        }
        QuantumState::Mixed(rho) => rho.trace_product(m),
    }
}

/// `⟨A⟩` in the given state. Imaginary residue ≤ 1e−9 is discarded; a larger
/// one means the inputs were not honestly Hermitian and is an error.
pub fn expectation(a: &Observable, state: &QuantumState) -> Result<f64> {
    state.check_dim(a.dim())?;
    let e = expectation_complex(a.matrix(), state);
    if e.im.abs() > IMAG_TOL {
        return Err(Error::NonRealExpectation { imaginary: e.im });
    }
    Ok(e.re)
}

/// `(ΔA)² = ⟨A²⟩ − ⟨A⟩²`. Round-off in `[−1e−9, 0)` clamps to zero so that
/// eigenstates do not break downstream square roots; anything below −1e−9 is
/// an error.
pub fn variance(a: &Observable, state: &QuantumState) -> Result<f64> {
    state.check_dim(a.dim())?;
    let mean = expectation(a, state)?;
    let second = match state {
        QuantumState::Pure(v) => {
            // ⟨A²⟩ = ‖Aψ‖² for Hermitian A.
            let av = a.matrix().mul_vec(v);
            av.iter().map(|z| z.norm_sqr()).sum::<f64>()
        }
        QuantumState::Mixed(rho) => {
            let sq = a.matrix() * a.matrix();
            let e = rho.trace_product(&sq);
            if e.im.abs() > IMAG_TOL {
                return Err(Error::NonRealExpectation { imaginary: e.im });
            }
            e.re
        }
    };
    let var = second - mean * mean;
    if var < -NEG_VAR_TOL {
        return Err(Error::NegativeVariance { value: var });
    }
    Ok(var.max(0.0))
}

/// `ΔA = √(ΔA)²`.
pub fn std_dev(a: &Observable, state: &QuantumState) -> Result<f64> {
    Ok(variance(a, state)?.sqrt())
}

/// `[A, B] = AB − BA`; anti-Hermitian.
pub fn commutator(a: &Observable, b: &Observable) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let ab = a.matrix() * b.matrix();
    let ba = b.matrix() * a.matrix();
    Ok(&ab - &ba)
}

/// `{A, B} = AB + BA`; Hermitian, returned as an observable.
pub fn anticommutator(a: &Observable, b: &Observable) -> Result<Observable> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let ab = a.matrix() * b.matrix();
    let ba = b.matrix() * a.matrix();
    // (AB)† = B†A† = BA, so AB + BA is Hermitian up to round-off; symmetrize
    // the round-off away so the result passes the gate exactly.
    let sum = &ab + &ba;
    let sym = &sum + &sum.adjoint();
    Ok(Observable::new_unchecked(sym.scale(C64::new(0.5, 0.0))))
}
