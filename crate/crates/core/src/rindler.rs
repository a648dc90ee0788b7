//! Accelerated observers: the single-mode fermionic Unruh transformation,
//! the shared game state seen from Rindler region I, and the resulting win
//! probability `p(r)`.
//!
//! In the accelerated frame a Minkowski mode splits into a region I and a
//! region II mode:
//!
//! ```text
//! |0⟩ ↦ cos r |0⟩_I|0⟩_II + sin r |1⟩_I|1⟩_II
//! |1⟩ ↦ |1⟩_I|0⟩_II
//! ```
//!
//! Region II is causally disconnected, so it is traced out. The game state
//! is two singlet pairs `(A, B)`; after tracing, a partial swap reorders the
//! modes from `(A₁, B₁, A₂, B₂)` to the `(A₁, A₂, B₁, B₂)` order used by
//! [`crate::strategy`].

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    conjugate, partial_trace, tensor_product, DensityOperator, Kron, StateVector, Unitary,
};
use crate::strategy::mean_win_probability;

/// Best classical win probability.
pub const CLASSICAL_THRESHOLD: f64 = 8.0 / 9.0;

/// Inputs slightly above `π/4` by at most this much are snapped to `π/4`,
/// so that decimal renderings such as `0.7853981634` are accepted.
const UPPER_SLACK: f64 = 1e-9;

/// Bisection bracket for the threshold search.
const THRESHOLD_BRACKET: (f64, f64) = (1e-6, FRAC_PI_4 - 1e-6);

/// Dimensionless acceleration `r ∈ [0, π/4]`: `0` is inertial, `π/4` is the
/// infinite-acceleration limit.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct AccelerationParameter(f64);

impl AccelerationParameter {
    pub const INERTIAL: Self = Self(0.0);
    pub const INFINITE: Self = Self(FRAC_PI_4);

    pub fn new(r: f64) -> Result<Self> {
        if (0.0..=FRAC_PI_4).contains(&r) {
            Ok(Self(r))
        } else if r > FRAC_PI_4 && r <= FRAC_PI_4 + UPPER_SLACK {
            Ok(Self::INFINITE)
        } else {
            Err(Error::AccelerationOutOfRange(r))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for AccelerationParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Proper acceleration `a` of a detector tuned to angular frequency `omega`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysicalAcceleration {
    a: f64,
    omega: f64,
    c: f64,
}

impl PhysicalAcceleration {
    pub fn new(a: f64, omega: f64, c: f64) -> Result<Self> {
        let valid = |x: f64| x.is_finite() && x > 0.0;
        if valid(a) && valid(omega) && valid(c) {
            Ok(Self { a, omega, c })
        } else {
            Err(Error::InvalidPhysicalAcceleration { a, omega, c })
        }
    }

    /// Natural units, `c = 1`.
    pub fn natural(a: f64, omega: f64) -> Result<Self> {
        Self::new(a, omega, 1.0)
    }
}

/// Maps a physical acceleration to `r` via
/// `cos r = (exp(−2πωc/a) + 1)^(−1/2)`.
pub fn acceleration_to_r(phys: PhysicalAcceleration) -> AccelerationParameter {
    let boltzmann = (-2.0 * PI * phys.omega * phys.c / phys.a).exp();
    let cos_r = (boltzmann + 1.0).powf(-0.5);
    AccelerationParameter::new(cos_r.acos()).expect("cos r lies in [1/sqrt 2, 1]")
}

/// Which modes of the shared state undergo the Unruh transformation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum UnruhModes {
    /// Every mode is transformed with the same `r`. This is the model whose
    /// win probability is `(6 + 2cos 2r + cos 4r)/9`.
    #[default]
    All,
    /// Alice stays inertial (`r = 0` on her modes); only Bob's modes are
    /// transformed.
    BobOnly,
}

/// Region I ⊗ region II image of a Minkowski mode, `(I, II)` big-endian.
fn unruh_mode(excited: bool, r: AccelerationParameter) -> StateVector {
    if excited {
        unruh_excited()
    } else {
        unruh_vacuum(r)
    }
}

/// `cos r |00⟩ + sin r |11⟩`.
pub fn unruh_vacuum(r: AccelerationParameter) -> StateVector {
    let (sin, cos) = r.value().sin_cos();
    StateVector::from_real(&[cos, 0.0, 0.0, sin]).expect("finite")
}

/// `|1⟩_I |0⟩_II`.
pub fn unruh_excited() -> StateVector {
    StateVector::basis(4, 0b10).expect("in range")
}

/// One singlet pair `(|0_A 1_B⟩ − |1_A 0_B⟩)/√2` in mode order
/// `(I_A, II_A, I_B, II_B)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RindlerPairState(StateVector);

impl RindlerPairState {
    pub fn state(&self) -> &StateVector {
        &self.0
    }
}

pub fn rindler_pair_state(r: AccelerationParameter, modes: UnruhModes) -> RindlerPairState {
    let alice_r = match modes {
        UnruhModes::All => r,
        UnruhModes::BobOnly => AccelerationParameter::INERTIAL,
    };
    let singlet = [(false, true, FRAC_1_SQRT_2), (true, false, -FRAC_1_SQRT_2)];
    let state = singlet
        .iter()
        .map(|&(alice, bob, weight)| {
            tensor_product(&unruh_mode(alice, alice_r), &unruh_mode(bob, r))
                .expect("16-dim")
                .scale(Complex64::new(weight, 0.0))
        })
        .reduce(|acc, term| {
            acc.add_scaled(Complex64::new(1.0, 0.0), &term)
                .expect("same dim")
        })
        .expect("two terms");
    RindlerPairState(state)
}

/// `I₂ ⊗ SWAP ⊗ I₂`, exchanging the middle two of four qubits.
pub fn partial_swap() -> Unitary {
    Unitary::identity(2)
        .kron(&Unitary::swap())
        .and_then(|u| u.kron(&Unitary::identity(2)))
        .expect("16-dim")
}

/// Region-I game state with every mode transformed.
pub fn shared_state_accelerated(r: AccelerationParameter) -> DensityOperator {
    shared_state_accelerated_with(r, UnruhModes::All)
}

/// Region-I game state in qubit order `(A₁, A₂, B₁, B₂)`.
///
/// The two pairs are uncorrelated, so tracing region II out of each pair
/// and taking the product equals tracing it out of `|ψ₁⟩⟨ψ₁| ⊗ |ψ₂⟩⟨ψ₂|`.
pub fn shared_state_accelerated_with(
    r: AccelerationParameter,
    modes: UnruhModes,
) -> DensityOperator {
    let pair = region_one_pair(r, modes);
    let region_one = pair.kron(&pair).expect("16-dim");
    // Modes: I_A1 I_B1 I_A2 I_B2.
    conjugate(&partial_swap(), &region_one).expect("16-dim")
}

/// One pair with region II traced out, modes `(I_A, I_B)`.
pub fn region_one_pair(r: AccelerationParameter, modes: UnruhModes) -> DensityOperator {
    let pair = rindler_pair_state(r, modes);
    let rho = DensityOperator::from_pure(pair.state()).expect("normalized pair state");
    // Modes: I_A II_A I_B II_B.
    partial_trace(&rho, &[2; 4], &[0, 2]).expect("valid factors")
}

/// `(6 + 2cos 2r + cos 4r) / 9`.
pub fn closed_form_p(r: AccelerationParameter) -> f64 {
    let r = r.value();
    (6.0 + 2.0 * (2.0 * r).cos() + (4.0 * r).cos()) / 9.0
}

/// Mean win probability from the full density-matrix pipeline.
pub fn simulated_p(r: AccelerationParameter) -> f64 {
    simulated_p_with(r, UnruhModes::All)
}

pub fn simulated_p_with(r: AccelerationParameter, modes: UnruhModes) -> f64 {
    mean_win_probability(&shared_state_accelerated_with(r, modes)).expect("16-dim state")
}

/// Root of a continuous `f` on `[lo, hi]` with `f(lo)` and `f(hi)` of
/// opposite sign. The returned point is within `tolerance / 2` of a root.
pub fn bisect(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, tolerance: f64) -> Result<f64> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::InvalidTolerance(tolerance));
    }
    let (mut lo, mut hi) = (lo, hi);
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let lo_positive = f_lo > 0.0;
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let value = f(mid);
        if value == 0.0 {
            return Ok(mid);
        }
        if (value > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Acceleration at which the closed-form win probability falls to the
/// classical bound, located by bisection.
pub fn classical_threshold_r(tolerance: f64) -> Result<AccelerationParameter> {
    let (lo, hi) = THRESHOLD_BRACKET;
    let root = bisect(
        |r| closed_form_p(AccelerationParameter(r)) - CLASSICAL_THRESHOLD,
        lo,
        hi,
        tolerance,
    )?;
    AccelerationParameter::new(root)
}

/// `arctan √((2√7 − 5)/3)`.
pub fn analytic_threshold_r() -> f64 {
    ((2.0 * 7f64.sqrt() - 5.0) / 3.0).sqrt().atan()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> AccelerationParameter {
        AccelerationParameter::new(x).unwrap()
    }

    #[test]
    #[allow(clippy::approx_constant)] // decimal input of pi/4
    fn parameter_range() {
        assert!(AccelerationParameter::new(-0.1).is_err());
        assert!(AccelerationParameter::new(1.0).is_err());
        assert!(AccelerationParameter::new(f64::NAN).is_err());
        assert_eq!(r(0.7853981634), AccelerationParameter::INFINITE);
    }

    #[test]
    fn vacuum_endpoints() {
        assert_eq!(unruh_vacuum(r(0.0)), StateVector::basis(4, 0).unwrap());
        let v = unruh_vacuum(AccelerationParameter::INFINITE);
        assert!((v.amplitude(0).re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((v.amplitude(3).re - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn excited_is_orthogonal_to_vacuum() {
        let e = unruh_excited();
        assert_eq!(e.amplitudes()[2], Complex64::new(1.0, 0.0));
        for k in 0..=20 {
            let x = r(FRAC_PI_4 * k as f64 / 20.0);
            assert_eq!(e.inner(&unruh_vacuum(x)).unwrap().norm(), 0.0);
        }
    }

    #[test]
    fn bob_only_pair_state_terms() {
        let x = 0.37;
        let psi = rindler_pair_state(r(x), UnruhModes::BobOnly);
        let amp = |k: usize| psi.state().amplitude(k).re;
        assert!((amp(0b0010) - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((amp(0b1000) + x.cos() * FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((amp(0b1011) + x.sin() * FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(psi.state().is_normalized());
    }

    #[test]
    fn inertial_pair_is_singlet() {
        for modes in [UnruhModes::All, UnruhModes::BobOnly] {
            let psi = rindler_pair_state(AccelerationParameter::INERTIAL, modes);
            let mut expected = [0.0; 16];
            expected[0b0010] = FRAC_1_SQRT_2;
            expected[0b1000] = -FRAC_1_SQRT_2;
            assert_eq!(psi.state(), &StateVector::from_real(&expected).unwrap());
        }
    }

    #[test]
    fn closed_form_endpoints() {
        assert!((closed_form_p(r(0.0)) - 1.0).abs() < 1e-15);
        assert!((closed_form_p(AccelerationParameter::INFINITE) - 5.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn bisect_finds_sqrt_two() {
        let root = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((root - 2f64.sqrt()).abs() < 1e-12);
        assert!(matches!(
            bisect(|x| x * x + 1.0, 0.0, 2.0, 1e-12),
            Err(Error::NoSignChange { .. })
        ));
        assert!(matches!(
            bisect(|x| x, -1.0, 1.0, 0.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn threshold_rejects_bad_tolerance() {
        assert!(classical_threshold_r(-1.0).is_err());
        assert!(classical_threshold_r(f64::NAN).is_err());
    }

    #[test]
    fn physical_acceleration_validation() {
        assert!(PhysicalAcceleration::natural(0.0, 1.0).is_err());
        assert!(PhysicalAcceleration::natural(1.0, -1.0).is_err());
        assert!(PhysicalAcceleration::new(1.0, 1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn acceleration_limits() {
        let huge = acceleration_to_r(PhysicalAcceleration::natural(1e300, 1.0).unwrap());
        assert!((huge.value() - FRAC_PI_4).abs() < 1e-12);
        let tiny = acceleration_to_r(PhysicalAcceleration::natural(1e-3, 1.0).unwrap());
        assert!(tiny.value() < 1e-12);
    }
}
