//! Upper half-plane kernel: points, ideal points, geodesics, isometries and the
//! scalar predicates (collar width, clamped logarithm, sandwich gap) built on them.

mod geodesic;
mod moebius;
mod quadrant;

pub use geodesic::Geodesic;
pub use moebius::{Classification, IsometryKind, MoebiusMap};
pub use quadrant::quadrant_separation;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A point `x + iy` of the upper half-plane (`y > 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HPoint<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> HPoint<T> {
    pub fn new(x: T, y: T) -> Result<Self> {
        if !(y > T::zero()) || !x.is_finite() || !y.is_finite() {
            return Err(Error::NotInUpperHalfPlane(y.to_f64_lossy()));
        }
        Ok(Self { x, y })
    }

    /// The base point `i`.
    pub fn i() -> Self {
        Self { x: T::zero(), y: T::one() }
    }
}

/// A point of `∂ℍ = ℝ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Ideal<T> {
    Finite(T),
    Infinity,
}

impl<T: Real> Ideal<T> {
    /// Chordal distance on `ℝ ∪ {∞}` viewed as a circle (at most 1).
    pub fn chordal_distance(&self, other: &Self) -> T {
        let one = T::one();
        match (self, other) {
            (Ideal::Infinity, Ideal::Infinity) => T::zero(),
            (Ideal::Finite(a), Ideal::Finite(b)) => {
                (*a - *b).abs() / one.hypot(*a) / one.hypot(*b)
            }
            (Ideal::Finite(a), Ideal::Infinity) | (Ideal::Infinity, Ideal::Finite(a)) => {
                one / one.hypot(*a)
            }
        }
    }

    /// Equality up to chordal distance `tol`.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.chordal_distance(other) <= tol
    }

    pub fn finite(&self) -> Option<T> {
        match self {
            Ideal::Finite(x) => Some(*x),
            Ideal::Infinity => None,
        }
    }

    /// `(x, 1)` or `(1, 0)` as a pair, convenient for serialization.
    pub fn to_f64_option(&self) -> Option<f64> {
        self.finite().map(|x| x.to_f64_lossy())
    }
}

/// Hyperbolic distance `2 asinh(|p − q| / (2 sqrt(y_p y_q)))`.
pub fn dist<T: Real>(p: &HPoint<T>, q: &HPoint<T>) -> T {
    let euclid = (p.x - q.x).hypot(p.y - q.y);
    T::lit(2.0) * (euclid / (T::lit(2.0) * (p.y * q.y).sqrt())).asinh()
}

/// Half-width `asinh(1/sinh(len/2))` of the standard collar about a geodesic of length `len`.
pub fn collar_width<T: Real>(len: T) -> Result<T> {
    if !(len > T::zero()) {
        return Err(Error::NonPositiveLength(len.to_f64_lossy()));
    }
    Ok((len / T::lit(2.0)).sinh().recip().asinh())
}

/// The clamped logarithm: `ln x` for `x > 1` and the constant `1` for `x ≤ 1`.
///
/// The constant branch is taken literally, so the function jumps from 1 to 0 at `x = 1`.
pub fn log_clamped<T: Real>(x: T) -> Result<T> {
    if x < T::zero() || x.is_nan() {
        return Err(Error::NegativeArgument(x.to_f64_lossy()));
    }
    Ok(if x <= T::one() { T::one() } else { x.ln() })
}

/// `e^{2 eps + 3}/2 − (1 + cos A cos B)/(sin A sin B)` for crossing angles `A, B ∈ (0, π)`.
///
/// A nonnegative gap is the angular half of the disjointness criterion for the
/// translates of two geodesics crossing the axis of an isometry.
pub fn sandwich_gap<T: Real>(a: T, b: T, eps: T) -> Result<T> {
    let pi = T::PI();
    for ang in [a, b] {
        if !(ang > T::zero() && ang < pi) {
            return Err(Error::DegenerateAngle(ang.to_f64_lossy()));
        }
    }
    let two = T::lit(2.0);
    Ok((two * eps + T::lit(3.0)).exp() / two - (T::one() + a.cos() * b.cos()) / (a.sin() * b.sin()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dist_examples() {
        let p = HPoint::new(0.0_f64, 1.0).unwrap();
        assert_eq!(dist(&p, &p), 0.0);
        let q = HPoint::new(0.0, std::f64::consts::E).unwrap();
        assert!((dist(&p, &q) - 1.0).abs() < 1e-14);
        let r = HPoint::new(1.0, 1.0).unwrap();
        // cosh d = 1 + |p-q|^2/(2 y y') = 3/2
        assert!((dist(&p, &r) - 1.5_f64.acosh()).abs() < 1e-14);
        assert!((dist(&p, &r) - 0.962_423_650_119_206_9).abs() < 1e-13);
    }

    #[test]
    fn rejects_lower_half_plane() {
        assert!(HPoint::new(0.0_f64, 0.0).is_err());
        assert!(HPoint::new(0.0_f64, -1.0).is_err());
    }

    #[test]
    fn collar_examples() {
        let fixed = 2.0 * 1.0_f64.asinh();
        assert!((collar_width(fixed).unwrap() - 1.0_f64.asinh()).abs() < 1e-14);
        // 30-digit reference evaluation of asinh(1/sinh 1)
        assert!((collar_width(2.0_f64).unwrap() - 0.771_936_832_905_304_7).abs() < 1e-14);
        let w = collar_width(0.01_f64).unwrap();
        assert!((w - 100.0_f64.ln()).abs() < 2.0);
        assert!(collar_width(0.0_f64).is_err());
        assert!(collar_width(-1.0_f64).is_err());
    }

    #[test]
    fn log_clamped_examples() {
        assert!((log_clamped(std::f64::consts::E).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(log_clamped(0.5_f64).unwrap(), 1.0);
        assert_eq!(log_clamped(1.0_f64).unwrap(), 1.0);
        assert!((log_clamped(std::f64::consts::E.powi(2)).unwrap() - 2.0).abs() < 1e-14);
        assert!(log_clamped(-0.1_f64).is_err());
    }

    #[test]
    fn sandwich_gap_examples() {
        use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
        let e3 = 3.0_f64.exp() / 2.0;
        assert!((sandwich_gap(FRAC_PI_2, FRAC_PI_2, 0.0).unwrap() - (e3 - 1.0)).abs() < 1e-12);
        assert!((sandwich_gap(FRAC_PI_4, FRAC_PI_4, 0.0).unwrap() - (e3 - 3.0)).abs() < 1e-12);
        assert!(sandwich_gap(1e-8, FRAC_PI_2, 0.0).unwrap() < -1e7);
        assert!(sandwich_gap(0.0, FRAC_PI_2, 0.0).is_err());
        assert!(sandwich_gap(FRAC_PI_2, std::f64::consts::PI, 0.0).is_err());
    }
}
