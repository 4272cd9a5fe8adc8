//! Dense square complex matrices, row-major.
//!
//! The dimensions of interest are 2 and 3 (≤ 16 in audits), so a plain
//! `Vec<Complex64>` with O(d³) schoolbook products is the right tool; no
//! sparse or structured storage.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};


#[allow(unused_imports)] // no_std float math; std's inherent methods shadow it in test builds
use num_traits::Float;

use crate::error::{Error, Result};
use crate::C64;

/// A `dim × dim` complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given dimension. Panics if `dim == 0`.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            dim,
            entries: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    /// Identity matrix.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Diagonal matrix from real entries.
    pub fn diag_real(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        m
    }

    /// Builds a matrix from row-major entries; `entries.len()` must be a
    /// perfect square.
    pub fn from_entries(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::BadDimension { dim });
        }
        Ok(Self { dim, entries })
    }

    /// Convenience constructor from nested real/imag pairs, row by row.
    pub fn from_rows(rows: &[&[C64]]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix rows must form a square");
            entries.extend_from_slice(row);
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    /// True when every entry is finite.
    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    /// Largest deviation from conjugate symmetry, `max |M[i][j] − conj(M[j][i])|`.
    pub fn hermitian_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Matrix-vector product `M v`. Panics on length mismatch.
    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim, "vector length must match dimension");
        let mut out = vec![C64::new(0.0, 0.0); self.dim];
        for i in 0..self.dim {
            let mut acc = C64::new(0.0, 0.0);
            for j in 0..self.dim {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// `Tr(self · other)`, evaluated without forming the product.
    pub fn trace_product(&self, other: &Self) -> C64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += self[(i, j)] * other[(j, i)];
            }
        }
        acc
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// Entrywise maximum distance to `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }

    /// Estimate of the smallest eigenvalue of a Hermitian matrix.
    ///
    /// Power iteration on `cI − M` with `c` a Gershgorin upper bound; good to
    /// far better than the 1e−9 positivity gate needs for d ≤ 16. Only used
    /// for the density-matrix positivity check.
    pub fn min_eigenvalue_estimate(&self) -> f64 {
        let d = self.dim;
        // Gershgorin: every eigenvalue is at most max_i sum_j |M[i][j]|.
        let mut c = 0.0f64;
        for i in 0..d {
            let row: f64 = (0..d).map(|j| self[(i, j)].norm()).sum();
            c = c.max(row);
        }
        if c == 0.0 {
            return 0.0;
        }
        let mut shifted = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                shifted[(i, j)] = -self[(i, j)];
            }
            shifted[(i, i)] += C64::new(c, 0.0);
        }
        // Deterministic full-support start vector.
        let mut rng = crate::rng::SplitMix64::new(0xd1a6_0519);
        let mut v: Vec<C64> = (0..d)
            .map(|_| C64::new(rng.next_f64() + 0.5, rng.next_f64() - 0.5))
            .collect();
        normalize(&mut v);
        for _ in 0..(100 * d.max(4)) {
            let w = shifted.mul_vec(&v);
            let n = vec_norm(&w);
            if n == 0.0 {
                // The start vector is annihilated, so the shifted matrix is
                // (numerically) zero and every eigenvalue of M equals c.
                return c;
            }
            v = w;
            let inv = 1.0 / n;
            for z in &mut v {
                *z *= inv;
            }
        }
        // Rayleigh quotient at the converged vector; ≤ λ_max(cI − M), so the
        // returned value can only err toward the positive side.
        let w = shifted.mul_vec(&v);
        let rayleigh: f64 = v.iter().zip(&w).map(|(a, b)| (a.conj() * b).re).sum();
        c - rayleigh
    }
}

fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn normalize(v: &mut [C64]) {
    let n = vec_norm(v);
    if n > 0.0 {
        let inv = 1.0 / n;
        for z in v.iter_mut() {
            *z *= inv;
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.entries[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = ComplexMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..d {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}
