//! Scalar abstraction shared by every geometric routine.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point types the geometry kernels are written against: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Band around `|trace| = 2` treated as parabolic.
    fn parabolic_tol() -> Self;

    /// Tolerance used when comparing boundary points and matrix entries.
    fn geom_tol() -> Self;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    #[inline]
    fn parabolic_tol() -> f64 {
        1e-9
    }
    #[inline]
    fn geom_tol() -> f64 {
        1e-9
    }
}

impl Real for f32 {
    #[inline]
    fn parabolic_tol() -> f32 {
        1e-3
    }
    #[inline]
    fn geom_tol() -> f32 {
        1e-4
    }
}

/// `ln(e^a + e^b)` without overflow; `-inf` acts as the additive zero.
#[inline]
pub fn log_add_exp<T: Real>(a: T, b: T) -> T {
    if a == T::neg_infinity() {
        return b;
    }
    if b == T::neg_infinity() {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// `acosh(y)` where only `ln y` is available (y ≥ 1 may exceed the float range).
#[inline]
pub fn acosh_from_ln<T: Real>(ln_y: T) -> T {
    if ln_y < T::lit(20.0) {
        ln_y.exp().max(T::one()).acosh()
    } else {
        // acosh(y) = ln y + ln(1 + sqrt(1 - y^-2)), and y^-2 is below f64 resolution here
        ln_y + T::LN_2()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_add_exp_matches_direct_sum() {
        let v: f64 = log_add_exp(1.0_f64.ln(), 2.0_f64.ln());
        assert!((v - 3.0_f64.ln()).abs() < 1e-15);
        assert_eq!(log_add_exp(f64::NEG_INFINITY, 0.5), 0.5);
        let big: f64 = log_add_exp(1000.0, 1000.0);
        assert!((big - (1000.0 + 2.0_f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn acosh_from_ln_is_continuous_across_switch() {
        let below: f64 = acosh_from_ln(19.999_999);
        let above: f64 = acosh_from_ln(20.0);
        assert!((above - below).abs() < 1e-5);
        assert!((acosh_from_ln(1.5_f64.ln()) - 1.5_f64.acosh()).abs() < 1e-15);
    }
}
