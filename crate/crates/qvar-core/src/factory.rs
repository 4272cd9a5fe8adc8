//! Constructors for the operator triples and state families under study,
//! plus the seeded random generators behind the audit suite.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;


#[allow(unused_imports)] // no_std float math; std's inherent methods shadow it in test builds
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::quantum::{Observable, QuantumState};
use crate::rng::SplitMix64;
use crate::C64;

/// Real three-vector `r = (x, y, z)` parametrizing a qubit density matrix
/// `ρ = ½(I + r·σ)`; physical when `‖r‖ ≤ 1`, pure on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Errors unless `x² + y² + z² ≤ 1 + 1e−12`; NaN components are rejected.
    pub fn check_in_ball(&self) -> Result<()> {
        let n = self.norm_sq();
        if n.is_nan() || n > 1.0 + 1e-12 {
            return Err(Error::BlochNormExceeded { norm_sq: n });
        }
        Ok(())
    }
}

/// Seed for the deterministic generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngSeed(pub u64);

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        Self(seed)
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// The Pauli triple `(σₓ, σ_y, σ_z)`.
pub fn pauli() -> [Observable; 3] {
    let zero = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let sx = ComplexMatrix::from_rows(&[&[zero, one], &[one, zero]]);
    let sy = ComplexMatrix::from_rows(&[&[zero, c(0.0, -1.0)], &[c(0.0, 1.0), zero]]);
    let sz = ComplexMatrix::from_rows(&[&[one, zero], &[zero, c(-1.0, 0.0)]]);
    [
        Observable::new_unchecked(sx),
        Observable::new_unchecked(sy),
        Observable::new_unchecked(sz),
    ]
}

/// The spin-1 angular momentum triple `(Lₓ, L_y, L_z)` in the basis
/// `(|1⟩, |0⟩, |−1⟩)`, with ħ = 1.
pub fn spin1_ops() -> [Observable; 3] {
    let zero = c(0.0, 0.0);
    let s = FRAC_1_SQRT_2;
    let lx = ComplexMatrix::from_rows(&[
        &[zero, c(s, 0.0), zero],
        &[c(s, 0.0), zero, c(s, 0.0)],
        &[zero, c(s, 0.0), zero],
    ]);
    let ly = ComplexMatrix::from_rows(&[
        &[zero, c(0.0, -s), zero],
        &[c(0.0, s), zero, c(0.0, -s)],
        &[zero, c(0.0, s), zero],
    ]);
    let lz = ComplexMatrix::diag_real(&[1.0, 0.0, -1.0]);
    [
        Observable::new_unchecked(lx),
        Observable::new_unchecked(ly),
        Observable::new_unchecked(lz),
    ]
}

/// Density matrix `ρ = ½(I + xσₓ + yσ_y + zσ_z)` for a Bloch vector inside
/// the closed unit ball.
pub fn qubit_from_bloch(r: BlochVector) -> Result<QuantumState> {
    r.check_in_ball()?;
    let rho = ComplexMatrix::from_rows(&[
        &[c(0.5 * (1.0 + r.z), 0.0), c(0.5 * r.x, -0.5 * r.y)],
        &[c(0.5 * r.x, 0.5 * r.y), c(0.5 * (1.0 - r.z), 0.0)],
    ]);
    // Hermitian and unit-trace by construction; the norm gate above is the
    // positivity check (eigenvalues are (1 ± ‖r‖)/2).
    Ok(QuantumState::Mixed(rho))
}

/// The qubit family of Bloch vectors `(cosθ/√2, cosθ/√2, sinθ)`; always on
/// the unit sphere, hence pure.
pub fn example1_state(theta: f64) -> QuantumState {
    let ct = theta.cos() * FRAC_1_SQRT_2;
    qubit_from_bloch(BlochVector::new(ct, ct, theta.sin()))
        .expect("unit-sphere Bloch vector is always in the ball")
}

/// The spin-1 family `sinθcosφ|1⟩ + sinθsinφ|0⟩ + cosθ|−1⟩` in the basis
/// `(|1⟩, |0⟩, |−1⟩)`.
pub fn example2_state(theta: f64, phi: f64) -> QuantumState {
    let st = theta.sin();
    QuantumState::pure(vec![
        c(st * phi.cos(), 0.0),
        c(st * phi.sin(), 0.0),
        c(theta.cos(), 0.0),
    ])
    .expect("sin/cos amplitudes have unit norm")
}

fn require_dim(dim: usize) -> Result<()> {
    if dim < 2 {
        return Err(Error::BadDimension { dim });
    }
    Ok(())
}

/// Haar-random pure state: `2·dim` standard normals as real/imaginary parts,
/// then normalized. Deterministic for a fixed `(dim, seed)`.
pub fn haar_random_pure(dim: usize, seed: RngSeed) -> Result<QuantumState> {
    require_dim(dim)?;
    let mut rng = SplitMix64::new(seed.0);
    loop {
        let v: Vec<C64> = (0..dim).map(|_| rng.next_complex_normal()).collect();
        let norm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq > 1e-300 {
            let inv = norm_sq.sqrt().recip();
            return QuantumState::pure(v.into_iter().map(|z| z * inv).collect());
        }
        // A zero draw has probability ~0 but would poison the normalization.
    }
}

/// Random density matrix `GG†/Tr(GG†)` with `G` square complex Gaussian
/// (a Ginibre draw). Deterministic per seed.
pub fn random_density(dim: usize, seed: RngSeed) -> Result<QuantumState> {
    require_dim(dim)?;
    let mut rng = SplitMix64::new(seed.0);
    loop {
        let mut g = ComplexMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                g[(i, j)] = rng.next_complex_normal();
            }
        }
        let gg = &g * &g.adjoint();
        let tr = gg.trace().re;
        if tr > 1e-300 {
            return Ok(QuantumState::Mixed(gg.scale(c(1.0 / tr, 0.0))));
        }
    }
}

/// Random Hermitian observable `(G + G†)/2` with complex Gaussian `G`.
pub fn random_hermitian(dim: usize, seed: RngSeed) -> Result<Observable> {
    require_dim(dim)?;
    let mut rng = SplitMix64::new(seed.0);
    let mut g = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            g[(i, j)] = rng.next_complex_normal();
        }
    }
    let herm = (&g + &g.adjoint()).scale(c(0.5, 0.0));
    Ok(Observable::new_unchecked(herm))
}

/// Bloch vector uniform in the closed unit ball: a normalized Gaussian
/// direction scaled by `u^(1/3)`. Deterministic transform, no rejection.
pub fn random_bloch(seed: RngSeed) -> BlochVector {
    let mut rng = SplitMix64::new(seed.0);
    loop {
        let (a, b, d) = (rng.next_normal(), rng.next_normal(), rng.next_normal());
        let n = (a * a + b * b + d * d).sqrt();
        if n > 1e-150 {
            let radius = rng.next_f64().powf(1.0 / 3.0);
            let s = radius / n;
            return BlochVector::new(a * s, b * s, d * s);
        }
    }
}
