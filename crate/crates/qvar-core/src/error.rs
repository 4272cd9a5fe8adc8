//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while validating inputs or evaluating a
/// bound. Numerical audit *violations* are data, not errors; see
/// [`crate::verify::AuditReport`].
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max asymmetry {max_asymmetry:.3e})")]
    NotHermitian { max_asymmetry: f64 },
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },
    #[error("density matrix is not positive semidefinite (smallest eigenvalue estimate {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },
    #[error("density matrix trace is {trace}, expected 1")]
    NotUnitTrace { trace: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("expectation value has imaginary residue {imaginary:.3e}")]
    NonRealExpectation { imaginary: f64 },
    #[error("variance {value:.3e} is negative beyond round-off")]
    NegativeVariance { value: f64 },
    #[error("observable list is empty")]
    EmptyList,
    #[error("need at least two observables, found {found}")]
    NeedAtLeastTwo { found: usize },
    #[error("need at least three observables, found {found}")]
    NeedAtLeastThree { found: usize },
    #[error("states are not orthogonal (overlap {overlap:.3e})")]
    NotOrthogonal { overlap: f64 },
    #[error("operation requires a pure state")]
    MixedStateUnsupported,
    #[error("Bloch vector has squared norm {norm_sq} > 1")]
    BlochNormExceeded { norm_sq: f64 },
    #[error("radicand {value:.3e} is negative beyond round-off")]
    NegativeRadicand { value: f64 },
    #[error("dimension {dim} is not supported here")]
    BadDimension { dim: usize },
    #[error("saturating orthogonal state degenerates (norm {norm:.3e})")]
    DegenerateSaturation { norm: f64 },
    #[error("grid step {step} out of range")]
    BadStep { step: f64 },
    #[error("bad sweep grid: {reason}")]
    BadGrid { reason: &'static str },
}

pub type Result<T> = core::result::Result<T, Error>;
