//! Closed-form qubit expressions for the Pauli-triple bounds as functions of
//! the Bloch vector, plus the two bound-gap differences whose minima over the
//! ball certify the tightness ordering.
//!
//! Deliberately free of any matrix arithmetic: these formulas and the generic
//! operator path in [`crate::bounds`] are mutual oracles, so they must not
//! share code.


#[allow(unused_imports)] // no_std float math; std's inherent methods shadow it in test builds
use num_traits::Float;

use crate::error::{Error, Result};
use crate::factory::BlochVector;

/// Square root with the round-off guard the ball constraint justifies:
/// radicands in `[−1e−12, 0)` clamp to zero, anything lower is an error
/// (impossible for `‖r‖ ≤ 1` up to representation noise).
fn guarded_sqrt(radicand: f64) -> Result<f64> {
    if radicand < -1e-12 {
        return Err(Error::NegativeRadicand { value: radicand });
    }
    Ok(radicand.max(0.0).sqrt())
}

/// `α(r) = √(2−(x−y)²) + √(2−(x−z)²) + √(2−(y−z)²)`.
pub fn alpha(r: BlochVector) -> Result<f64> {
    r.check_in_ball()?;
    Ok(guarded_sqrt(2.0 - (r.x - r.y).powi(2))?
        + guarded_sqrt(2.0 - (r.x - r.z).powi(2))?
        + guarded_sqrt(2.0 - (r.y - r.z).powi(2))?)
}

/// `β(r) = √(2−(x+y)²) + √(2−(x+z)²) + √(2−(y+z)²)`.
pub fn beta(r: BlochVector) -> Result<f64> {
    r.check_in_ball()?;
    Ok(guarded_sqrt(2.0 - (r.x + r.y).powi(2))?
        + guarded_sqrt(2.0 - (r.x + r.z).powi(2))?
        + guarded_sqrt(2.0 - (r.y + r.z).powi(2))?)
}

/// Variance sum of the Pauli triple: `3 − ‖r‖²`.
pub fn sv_qubit(r: BlochVector) -> Result<f64> {
    r.check_in_ball()?;
    Ok(3.0 - r.norm_sq())
}

/// The new sum bound on the Pauli triple: `(1/9)α² + (1/3)(3 − (x+y+z)²)`.
pub fn lb_new_qubit(r: BlochVector) -> Result<f64> {
    let a = alpha(r)?;
    let s = r.x + r.y + r.z;
    Ok(a * a / 9.0 + (3.0 - s * s) / 3.0)
}

/// The pairwise minus bound on the Pauli triple:
/// `½(3 − (x²+y²+z²) + xy + xz + yz)`.
pub fn lb_pb2_qubit(r: BlochVector) -> Result<f64> {
    r.check_in_ball()?;
    let cross = r.x * r.y + r.x * r.z + r.y * r.z;
    Ok(0.5 * (3.0 - r.norm_sq() + cross))
}

/// The pairwise-sum N-observable bound on the Pauli triple:
/// `6 − 2(xy+xz+yz) − 2(x²+y²+z²) − ¼β²`.
pub fn lb_chen_qubit(r: BlochVector) -> Result<f64> {
    let b = beta(r)?;
    let cross = r.x * r.y + r.x * r.z + r.y * r.z;
    Ok(6.0 - 2.0 * cross - 2.0 * r.norm_sq() - b * b / 4.0)
}

/// Gap between the new bound and the pairwise minus bound; equals
/// `(1/9)α² + (1/6)‖r‖² − (7/6)(xy+xz+yz) − ½` and attains its minimum ½ at
/// `r = ±(1,1,1)/√3`.
pub fn diff_new_pb2(r: BlochVector) -> Result<f64> {
    Ok(lb_new_qubit(r)? - lb_pb2_qubit(r)?)
}

/// Gap between the new bound and the pairwise-sum N-observable bound; equals
/// `(1/9)α² + ¼β² + (2/3)(x+y+z)² + ‖r‖² − 5` and attains its minimum
/// `√3 − 4/3` on the orbit of `(1/√2, −1/√2, 0)`.
pub fn diff_new_chen(r: BlochVector) -> Result<f64> {
    Ok(lb_new_qubit(r)? - lb_chen_qubit(r)?)
}

/// All closed-form values at one Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitBoundSet {
    pub sv: f64,
    pub lb_new: f64,
    pub lb_pb2: f64,
    pub lb_chen: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl QubitBoundSet {
    pub fn evaluate(r: BlochVector) -> Result<Self> {
        Ok(Self {
            sv: sv_qubit(r)?,
            lb_new: lb_new_qubit(r)?,
            lb_pb2: lb_pb2_qubit(r)?,
            lb_chen: lb_chen_qubit(r)?,
            alpha: alpha(r)?,
            beta: beta(r)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

    const R3: f64 = 0.5773502691896258; // 1/√3

    fn bv(x: f64, y: f64, z: f64) -> BlochVector {
        BlochVector::new(x, y, z)
    }

    #[test]
    fn alpha_values() {
        assert!((alpha(bv(0.0, 0.0, 0.0)).unwrap() - 3.0 * SQRT_2).abs() < 1e-14);
        assert!((alpha(bv(1.0, 0.0, 0.0)).unwrap() - (2.0 + SQRT_2)).abs() < 1e-14);
        assert!((alpha(bv(R3, R3, R3)).unwrap() - 3.0 * SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn beta_values() {
        assert!((beta(bv(0.0, 0.0, 0.0)).unwrap() - 3.0 * SQRT_2).abs() < 1e-14);
        let got = beta(bv(FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0)).unwrap();
        assert!((got - (SQRT_2 + 6.0f64.sqrt())).abs() < 1e-12);
        assert!((beta(bv(1.0, 0.0, 0.0)).unwrap() - (2.0 + SQRT_2)).abs() < 1e-14);
    }

    #[test]
    fn lb_new_values() {
        assert!((lb_new_qubit(bv(0.0, 0.0, 0.0)).unwrap() - 3.0).abs() < 1e-14);
        assert!((lb_new_qubit(bv(R3, R3, R3)).unwrap() - 2.0).abs() < 1e-12);
        let got = lb_new_qubit(bv(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0)).unwrap();
        assert!((got - 1.9920225811417232).abs() < 1e-12);
    }

    #[test]
    fn lb_pb2_values() {
        assert!((lb_pb2_qubit(bv(0.0, 0.0, 0.0)).unwrap() - 1.5).abs() < 1e-14);
        assert!((lb_pb2_qubit(bv(R3, R3, R3)).unwrap() - 1.5).abs() < 1e-12);
        assert!((lb_pb2_qubit(bv(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0)).unwrap() - 1.25).abs() < 1e-12);
    }

    #[test]
    fn lb_chen_values() {
        assert!((lb_chen_qubit(bv(0.0, 0.0, 0.0)).unwrap() - 1.5).abs() < 1e-14);
        assert!((lb_chen_qubit(bv(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0)).unwrap() - 1.5).abs() < 1e-7);
        assert!((lb_chen_qubit(bv(1.0, 0.0, 0.0)).unwrap() - 1.0857864376269049).abs() < 1e-12);
    }

    #[test]
    fn diff_new_pb2_values() {
        assert!((diff_new_pb2(bv(R3, R3, R3)).unwrap() - 0.5).abs() < 1e-12);
        assert!((diff_new_pb2(bv(-R3, -R3, -R3)).unwrap() - 0.5).abs() < 1e-12);
        assert!((diff_new_pb2(bv(0.0, 0.0, 0.0)).unwrap() - 1.5).abs() < 1e-14);
        assert!((diff_new_pb2(bv(1.0, 0.0, 0.0)).unwrap() - 0.9618726943880422).abs() < 1e-12);
    }

    #[test]
    fn diff_new_chen_values() {
        let min = 3.0f64.sqrt() - 4.0 / 3.0;
        let got = diff_new_chen(bv(FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0)).unwrap();
        assert!((got - min).abs() < 1e-12, "got {got}, want {min}");
        assert!((diff_new_chen(bv(0.0, 0.0, 0.0)).unwrap() - 1.5).abs() < 1e-13);
        assert!((diff_new_chen(bv(1.0, 0.0, 0.0)).unwrap() - 0.8760862567611372).abs() < 1e-12);
    }

    #[test]
    fn norm_gate_is_enforced() {
        for f in [alpha, beta, lb_new_qubit, lb_pb2_qubit, lb_chen_qubit, diff_new_pb2, diff_new_chen] {
            assert!(matches!(
                f(bv(1.2, 0.0, 0.0)),
                Err(Error::BlochNormExceeded { .. })
            ));
        }
    }

    #[test]
    fn symmetry_under_permutation_and_negation() {
        for seed in 0..200u64 {
            let r = crate::factory::random_bloch(crate::factory::RngSeed(seed));
            for f in [diff_new_pb2, diff_new_chen] {
                let base = f(r).unwrap();
                let perms = [
                    bv(r.y, r.x, r.z),
                    bv(r.z, r.y, r.x),
                    bv(r.x, r.z, r.y),
                    bv(r.y, r.z, r.x),
                    bv(r.z, r.x, r.y),
                    bv(-r.x, -r.y, -r.z),
                ];
                for p in perms {
                    assert!((f(p).unwrap() - base).abs() < 1e-12, "r {r:?} p {p:?}");
                }
            }
        }
    }
}
