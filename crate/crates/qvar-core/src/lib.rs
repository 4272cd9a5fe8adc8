//! Variance-based sum uncertainty bounds for N incompatible observables.
//!
//! The crate provides the dense complex-matrix substrate (observables,
//! pure/mixed states, expectation and variance), constructors for the Pauli
//! and spin-1 operator triples and their companion state families, a catalog
//! of uncertainty-relation lower bounds on the variance sum, the qubit
//! closed forms of those bounds on the Bloch ball, and a verifier that
//! falsification-tests every identity and inequality on seeded random draws
//! and certifies the two bound-gap minima by grid search plus coordinate
//! descent.
//!
//! Everything here is a pure function of immutable inputs: no IO, no global
//! state, no hidden RNG. The crate is `no_std` (with `alloc`); file formats,
//! CSV sweeps and the command-line front end live in the companion `qvar`
//! crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod closed_form;
pub mod error;
pub mod factory;
pub mod matrix;
pub mod quantum;
pub mod rng;
pub mod verify;

pub use bounds::{compare_all, BoundReport, PairProductBound};
pub use error::{Error, Result};
pub use factory::{BlochVector, RngSeed};
pub use matrix::ComplexMatrix;
pub use quantum::{Observable, QuantumState, Tolerance};

/// Complex scalar used throughout: `f64` real and imaginary parts.
pub type C64 = num_complex::Complex64;
