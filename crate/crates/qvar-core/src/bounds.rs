//! Lower bounds on the variance sum `Σᵢ (ΔAᵢ)²` of N observables, plus the
//! classic pairwise product bounds, each as a pure function of
//! `(observables, state)`.
//!
//! Naming used throughout (and in the CSV/CLI output):
//!
//! * `sum_of_variances` — the left-hand side `Σᵢ (ΔAᵢ)²` (SV);
//! * `bound_new` — `(1/N)[Δ(ΣAᵢ)]² + (2/(N²(N−1)))[Σ_{i<j} Δ(Aᵢ−Aⱼ)]²` (LB);
//! * `bound_chen` — the N-observable bound built from pairwise sums (FB);
//! * `bound_pb1` / `bound_pb2` — `(1/(2(N−1))) Σ_{i<j} [Δ(Aᵢ±Aⱼ)]²` (PB1/PB2);
//! * `bound_pb1_form13` / `bound_new_form15` — the rearranged forms whose
//!   numeric values differ from PB1/LB while bounding the same quantity.
//!
//! All bounds accept mixed states; only `mp_sum1` requires purity (it is
//! defined through an orthogonal companion vector).

use alloc::vec::Vec;


#[allow(unused_imports)] // no_std float math; std's inherent methods shadow it in test builds
use num_traits::Float;

use crate::error::{Error, Result};
use crate::quantum::{anticommutator, commutator, expectation, std_dev, variance};
use crate::quantum::{Observable, QuantumState};
use crate::C64;

/// Sign picked on the right-hand side of the two-observable sum bound: `+`
/// when `i⟨[A,B]⟩ > 0`, `−` when negative, `+` on a tie so outputs stay
/// reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignChoice {
    Plus,
    Minus,
}

impl SignChoice {
    pub fn from_commutator_term(c: f64) -> Self {
        if c < 0.0 {
            Self::Minus
        } else {
            Self::Plus
        }
    }

    pub fn factor(self) -> f64 {
        match self {
            Self::Plus => 1.0,
            Self::Minus => -1.0,
        }
    }
}

/// Every applicable bound value for one `(observables, state)` instance.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub sum_of_variances: f64,
    /// The N-observable sum bound (LB).
    pub lb_new: f64,
    /// The pairwise-sum N-observable bound (FB); absent when N = 2.
    pub fb_chen: Option<f64>,
    /// Pairwise plus bound (PB1).
    pub pb1_plus: f64,
    /// Pairwise minus bound (PB2).
    pub pb2_minus: f64,
    /// Product bounds for each pair `i < j`.
    pub pairwise_product_bounds: Vec<PairProductBound>,
}

/// Robertson and Schrödinger lower bounds on `(ΔAᵢ)²(ΔAⱼ)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairProductBound {
    pub i: usize,
    pub j: usize,
    pub robertson: f64,
    pub schrodinger: f64,
}

/// Checks a non-empty observable list for equal dimensions matching the state.
fn common_dim(obs: &[Observable], state: &QuantumState) -> Result<usize> {
    let first = obs.first().ok_or(Error::EmptyList)?;
    let dim = first.dim();
    for o in obs {
        if o.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: o.dim(),
            });
        }
    }
    if state.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: state.dim(),
        });
    }
    Ok(dim)
}

fn require_at_least(obs: &[Observable], n: usize) -> Result<()> {
    match n {
        2 if obs.len() < 2 => Err(Error::NeedAtLeastTwo { found: obs.len() }),
        3 if obs.len() < 3 => Err(Error::NeedAtLeastThree { found: obs.len() }),
        _ => Ok(()),
    }
}

/// `Σᵢ (ΔAᵢ)²`.
pub fn sum_of_variances(obs: &[Observable], state: &QuantumState) -> Result<f64> {
    common_dim(obs, state)?;
    let mut acc = 0.0;
    for a in obs {
        acc += variance(a, state)?;
    }
    Ok(acc)
}

/// Standard deviations `Δ(Aᵢ − Aⱼ)` for all pairs `i < j`, in row order.
fn pairwise_diff_devs(obs: &[Observable], state: &QuantumState) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(obs.len() * (obs.len() - 1) / 2);
    for i in 0..obs.len() {
        for j in (i + 1)..obs.len() {
            out.push(std_dev(&(&obs[i] - &obs[j]), state)?);
        }
    }
    Ok(out)
}

/// Standard deviations `Δ(Aᵢ + Aⱼ)` for all pairs `i < j`.
fn pairwise_sum_devs(obs: &[Observable], state: &QuantumState) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(obs.len() * (obs.len() - 1) / 2);
    for i in 0..obs.len() {
        for j in (i + 1)..obs.len() {
            out.push(std_dev(&(&obs[i] + &obs[j]), state)?);
        }
    }
    Ok(out)
}

/// The new sum bound:
/// `(1/N)[Δ(Σᵢ Aᵢ)]² + (2/(N²(N−1))) [Σ_{i<j} Δ(Aᵢ−Aⱼ)]²`.
///
/// For N = 2 this degenerates, via the parallelogram identity, to the exact
/// variance sum.
pub fn bound_new(obs: &[Observable], state: &QuantumState) -> Result<f64> {
    require_at_least(obs, 2)?;
    common_dim(obs, state)?;
    let n = obs.len() as f64;
    let total = Observable::sum(obs).expect("list is non-empty");
    let collective = variance(&total, state)?;
    let dev_sum: f64 = pairwise_diff_devs(obs, state)?.iter().sum();
    Ok(collective / n + 2.0 / (n * n * (n - 1.0)) * dev_sum * dev_sum)
}

/// Covariance-style term `⟨{Aᵢ,Aⱼ}⟩ − 2⟨Aᵢ⟩⟨Aⱼ⟩` summed over pairs `i < j`.
fn anticommutator_cov_sum(obs: &[Observable], state: &QuantumState) -> Result<f64> {
    let means: Vec<f64> = obs
        .iter()
        .map(|a| expectation(a, state))
        .collect::<Result<_>>()?;
    let mut acc = 0.0;
    for i in 0..obs.len() {
        for j in (i + 1)..obs.len() {
            let anti = anticommutator(&obs[i], &obs[j])?;
            acc += expectation(&anti, state)? - 2.0 * means[i] * means[j];
        }
    }
    Ok(acc)
}

/// The expanded form of the new bound (valid for N ≥ 3):
/// `(1/(N−1)) Σ_{i<j} [⟨{Aᵢ,Aⱼ}⟩ − 2⟨Aᵢ⟩⟨Aⱼ⟩]
///  + (2/((N−2)(N²−1))) Σ_{(i,j)≠(i′,j′)} Δ(Aᵢ−Aⱼ)Δ(A_{i′}−A_{j′})`.
///
/// As an inequality this is the same relation as [`bound_new`] — the gap to
/// the variance sum has the same sign — but the numeric bound value differs,
/// which is why it is exposed separately.
pub fn bound_new_form15(obs: &[Observable], state: &QuantumState) -> Result<f64> {
    require_at_least(obs, 3)?;
    common_dim(obs, state)?;
    let n = obs.len() as f64;
    let cov = anticommutator_cov_sum(obs, state)?;
    let devs = pairwise_diff_devs(obs, state)?;
    let total: f64 = devs.iter().sum();
    let squares: f64 = devs.iter().map(|d| d * d).sum();
    // Ordered cross-term sum over distinct pairs-of-pairs: (Σd)² − Σd².
    let cross = total * total - squares;
    Ok(cov / (n - 1.0) + 2.0 / ((n - 2.0) * (n * n - 1.0)) * cross)
}

/// The pairwise-sum N-observable bound (N ≥ 3; the `1/(N−2)` prefactor is
/// undefined at N = 2):
/// `(1/(N−2)) { Σ_{i<j} [Δ(Aᵢ+Aⱼ)]² − (1/(N−1)²) [Σ_{i<j} Δ(Aᵢ+Aⱼ)]² }`.
pub fn bound_chen(obs: &[Observable], state: &QuantumState) -> Result<f64> {
    require_at_least(obs, 3)?;
    common_dim(obs, state)?;
    let n = obs.len() as f64;
    let devs = pairwise_sum_devs(obs, state)?;
    let total: f64 = devs.iter().sum();
    let squares: f64 = devs.iter().map(|d| d * d).sum();
    Ok((squares - total * total / ((n - 1.0) * (n - 1.0))) / (n - 2.0))
}

/// Pairwise plus bound: `(1/(2(N−1))) Σ_{i<j} [Δ(Aᵢ+Aⱼ)]²`.
pub fn bound_pb1(obs: &[Observable], state: &QuantumState) -> Result<f64> {
    require_at_least(obs, 2)?;
    common_dim(obs, state)?;
    let n = obs.len() as f64;
    let squares: f64 = pairwise_sum_devs(obs, state)?.iter().map(|d| d * d).sum();
    Ok(squares / (2.0 * (n - 1.0)))
}

/// Pairwise minus bound: `(1/(2(N−1))) Σ_{i<j} [Δ(Aᵢ−Aⱼ)]²`.
pub fn bound_pb2(obs: &[Observable], state: &QuantumState) -> Result<f64> {
    require_at_least(obs, 2)?;
    common_dim(obs, state)?;
    let n = obs.len() as f64;
    let squares: f64 = pairwise_diff_devs(obs, state)?.iter().map(|d| d * d).sum();
    Ok(squares / (2.0 * (n - 1.0)))
}

/// Simplified form of the pairwise plus bound:
/// `(1/(N−1)) Σ_{i<j} [⟨{Aᵢ,Aⱼ}⟩ − 2⟨Aᵢ⟩⟨Aⱼ⟩]`.
pub fn bound_pb1_form13(obs: &[Observable], state: &QuantumState) -> Result<f64> {
    require_at_least(obs, 2)?;
    common_dim(obs, state)?;
    let n = obs.len() as f64;
    Ok(anticommutator_cov_sum(obs, state)? / (n - 1.0))
}

/// Robertson product bound `|½⟨[A,B]⟩|²` on `(ΔA)²(ΔB)²`.
pub fn robertson(a: &Observable, b: &Observable, state: &QuantumState) -> Result<f64> {
    if a.dim() != b.dim() || state.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: if a.dim() != b.dim() { b.dim() } else { state.dim() },
        });
    }
    let c = commutator_mean(a, b, state)?;
    Ok(0.25 * c.norm_sqr())
}

/// Schrödinger product bound
/// `|½⟨[A,B]⟩|² + (½⟨{A,B}⟩ − ⟨A⟩⟨B⟩)²`; always ≥ the Robertson bound.
pub fn schrodinger(a: &Observable, b: &Observable, state: &QuantumState) -> Result<f64> {
    let base = robertson(a, b, state)?;
    let anti = anticommutator(a, b)?;
    let cov = 0.5 * expectation(&anti, state)? - expectation(a, state)? * expectation(b, state)?;
    Ok(base + cov * cov)
}

/// `⟨[A,B]⟩` as a complex number (purely imaginary for honest inputs).
fn commutator_mean(a: &Observable, b: &Observable, state: &QuantumState) -> Result<C64> {
    let comm = commutator(a, b)?;
    Ok(match state {
        QuantumState::Pure(v) => {
            let mv = comm.mul_vec(v);
            v.iter().zip(&mv).map(|(x, y)| x.conj() * y).sum()
        }
        QuantumState::Mixed(rho) => rho.trace_product(&comm),
    })
}

fn pure_vector(state: &QuantumState) -> Result<&[C64]> {
    match state {
        QuantumState::Pure(v) => Ok(v),
        QuantumState::Mixed(_) => Err(Error::MixedStateUnsupported),
    }
}

fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Default orthogonal companion: Gram–Schmidt of the standard basis vector
/// with the smallest overlap against `psi`, ties broken by lowest index.
fn default_perp(psi: &[C64]) -> Vec<C64> {
    let mut k = 0;
    let mut best = f64::INFINITY;
    for (idx, z) in psi.iter().enumerate() {
        let mag = z.norm_sqr();
        if mag < best {
            best = mag;
            k = idx;
        }
    }
    let mut w: Vec<C64> = psi.iter().map(|z| -(z * psi[k].conj())).collect();
    w[k] += C64::new(1.0, 0.0);
    // ‖w‖² = 1 − |ψ_k|² ≥ 1/2 for a unit vector of dimension ≥ 2.
    let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let inv = 1.0 / norm;
    w.into_iter().map(|z| z * inv).collect()
}

fn mp_sum1_with_perp(
    a: &Observable,
    b: &Observable,
    psi: &[C64],
    perp: &[C64],
) -> Result<f64> {
    // c = i⟨[A,B]⟩ is real for Hermitian inputs.
    let e = {
        let comm = crate::quantum::commutator(a, b)?;
        let mv = comm.mul_vec(psi);
        psi.iter()
            .zip(&mv)
            .map(|(x, y)| x.conj() * y)
            .sum::<C64>()
    };
    let c = -e.im;
    let sign = SignChoice::from_commutator_term(c);
    let s = sign.factor();
    let m = a.matrix() + &b.matrix().scale(C64::new(0.0, s));
    let amp = inner(psi, &m.mul_vec(perp));
    Ok(s * c + amp.norm_sqr())
}

/// The two-observable sum bound with an orthogonal companion state:
/// `±i⟨ψ|[A,B]|ψ⟩ + |⟨ψ|A ± iB|ψ⊥⟩|²`, sign per [`SignChoice`].
///
/// `psi` must be pure. When `perp` is `None`, the default basis companion is
/// used; a provided companion must be pure and orthogonal to `psi` within
/// 1e−8. The bound holds for every orthogonal choice.
pub fn mp_sum1(
    a: &Observable,
    b: &Observable,
    psi: &QuantumState,
    perp: Option<&QuantumState>,
) -> Result<f64> {
    if a.dim() != b.dim() || psi.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: if a.dim() != b.dim() { b.dim() } else { psi.dim() },
        });
    }
    let v = pure_vector(psi)?;
    match perp {
        Some(p) => {
            if p.dim() != psi.dim() {
                return Err(Error::DimensionMismatch {
                    expected: psi.dim(),
                    found: p.dim(),
                });
            }
            let w = pure_vector(p)?;
            let overlap = inner(v, w).norm();
            if overlap > 1e-8 {
                return Err(Error::NotOrthogonal { overlap });
            }
            mp_sum1_with_perp(a, b, v, w)
        }
        None => {
            let w = default_perp(v);
            mp_sum1_with_perp(a, b, v, &w)
        }
    }
}

/// [`mp_sum1`] with the saturating companion `ψ⊥ ∝ (A + s·iB − ⟨A + s·iB⟩)|ψ⟩`.
/// Errors when that vector degenerates (norm < 1e−12), which happens exactly
/// when `ψ` is a common eigenstate.
pub fn mp_sum1_saturating(
    a: &Observable,
    b: &Observable,
    psi: &QuantumState,
) -> Result<f64> {
    if a.dim() != b.dim() || psi.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: if a.dim() != b.dim() { b.dim() } else { psi.dim() },
        });
    }
    let v = pure_vector(psi)?;
    let e = {
        let comm = crate::quantum::commutator(a, b)?;
        let mv = comm.mul_vec(v);
        v.iter().zip(&mv).map(|(x, y)| x.conj() * y).sum::<C64>()
    };
    let s = SignChoice::from_commutator_term(-e.im).factor();
    let m = a.matrix() + &b.matrix().scale(C64::new(0.0, s));
    let mv = m.mul_vec(v);
    let mean = inner(v, &mv);
    let u: Vec<C64> = mv.iter().zip(v).map(|(x, y)| x - mean * y).collect();
    let norm = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm < 1e-12 {
        return Err(Error::DegenerateSaturation { norm });
    }
    let inv = 1.0 / norm;
    let w: Vec<C64> = u.into_iter().map(|z| z * inv).collect();
    mp_sum1_with_perp(a, b, v, &w)
}

/// The collective-observable two-term bound `½[Δ(A+B)]²`; valid for mixed
/// states as well.
pub fn mp_sum2(a: &Observable, b: &Observable, state: &QuantumState) -> Result<f64> {
    if a.dim() != b.dim() || state.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: if a.dim() != b.dim() { b.dim() } else { state.dim() },
        });
    }
    Ok(0.5 * variance(&(a + b), state)?)
}

/// Evaluates every applicable bound for the instance. `fb_chen` is `None`
/// when N = 2.
pub fn compare_all(obs: &[Observable], state: &QuantumState) -> Result<BoundReport> {
    require_at_least(obs, 2)?;
    common_dim(obs, state)?;
    let fb_chen = if obs.len() >= 3 {
        Some(bound_chen(obs, state)?)
    } else {
        None
    };
    let mut pairwise = Vec::new();
    for i in 0..obs.len() {
        for j in (i + 1)..obs.len() {
            pairwise.push(PairProductBound {
                i,
                j,
                robertson: robertson(&obs[i], &obs[j], state)?,
                schrodinger: schrodinger(&obs[i], &obs[j], state)?,
            });
        }
    }
    Ok(BoundReport {
        sum_of_variances: sum_of_variances(obs, state)?,
        lb_new: bound_new(obs, state)?,
        fb_chen,
        pb1_plus: bound_pb1(obs, state)?,
        pb2_minus: bound_pb2(obs, state)?,
        pairwise_product_bounds: pairwise,
    })
}
