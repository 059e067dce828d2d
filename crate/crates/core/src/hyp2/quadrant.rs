//! Sampled separation of opposite quadrants along the boundary of a geodesic neighborhood.
//!
//! Work in the frame where the geodesic is the imaginary axis, oriented from 0 to ∞. The
//! boundary of its `delta`-neighborhood (right component) is the Euclidean ray of argument
//! `θ₀` with `cot θ₀ = sinh delta`. For `p` on that ray and `q` on it further towards 0 with
//! `d(p, q) = M`, the *upper quadrant* at `p` is bounded by the rays from `p` to ∞ and from
//! `p` along the geodesic through 0 away from 0; the *lower quadrant* at `q` is bounded by
//! the rays from `q` to 0 and from `q` straight down. Both regions are convex, so their
//! distance is the minimum over pairs of boundary rays.

use super::{dist, Geodesic, HPoint, Ideal};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// A geodesic ray from `origin` towards the ideal point `towards`.
struct Ray<T> {
    origin: HPoint<T>,
    geo: Geodesic<T>,
    origin_param: T,
}

impl<T: Real> Ray<T> {
    fn new(origin: HPoint<T>, back: Ideal<T>, towards: Ideal<T>) -> Self {
        let geo = Geodesic { start: back, end: towards, oriented: true };
        let origin_param = geo.foot_param(&origin);
        Self { origin, geo, origin_param }
    }

    fn point(&self, u: T) -> HPoint<T> {
        self.geo.point_at(self.origin_param + u)
    }

    fn distance_to_point(&self, z: &HPoint<T>) -> T {
        if self.geo.foot_param(z) >= self.origin_param {
            self.geo.distance_to_point(z)
        } else {
            dist(&self.origin, z)
        }
    }
}

/// Minimum of a unimodal function on `[0, hi]`: coarse scan, then golden-section refinement.
fn minimize<T: Real>(f: impl Fn(T) -> T, hi: T, samples: usize) -> T {
    let n = samples.max(3);
    let step = hi / T::from_usize(n - 1).unwrap();
    let (mut best_i, mut best) = (0usize, f(T::zero()));
    for i in 1..n {
        let v = f(step * T::from_usize(i).unwrap());
        if v < best {
            best = v;
            best_i = i;
        }
    }
    let mut lo = step * T::from_usize(best_i.saturating_sub(1)).unwrap();
    let mut up = (step * T::from_usize(best_i + 1).unwrap()).min(hi);
    let g = T::lit(0.618_033_988_749_894_9);
    for _ in 0..80 {
        let a = up - g * (up - lo);
        let b = lo + g * (up - lo);
        if f(a) <= f(b) {
            up = b;
        } else {
            lo = a;
        }
    }
    best.min(f((lo + up) / T::lit(2.0)))
}

/// Sampled distance between the upper quadrant at `p` and the lower quadrant at `q` for the
/// configuration described in the module docs. `samples` controls the coarse scan per ray pair.
pub fn quadrant_separation<T: Real>(delta: T, m: T, samples: usize) -> Result<T> {
    if !(delta > T::zero()) {
        return Err(Error::InvalidParameter(format!("delta must be positive, got {}", delta)));
    }
    if m < T::zero() || m.is_nan() {
        return Err(Error::InvalidParameter(format!("M must be nonnegative, got {}", m)));
    }
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be positive".into()));
    }
    if m == T::zero() {
        return Ok(T::zero());
    }
    let one = T::one();
    let two = T::lit(2.0);
    let theta = (one / delta.sinh()).atan();
    let (c, s) = (theta.cos(), theta.sin());
    let p = HPoint { x: c, y: s };
    // d(p, r p) = M  ⇔  (1 − r)² = k r  with k = 2 sin²θ (cosh M − 1)
    let k = two * s * s * (m.cosh() - one);
    let r = ((two + k) - ((two + k) * (two + k) - T::lit(4.0)).sqrt()) / two;
    let q = HPoint { x: c * r, y: s * r };

    let zero = Ideal::Finite(T::zero());
    // geodesic through 0 and p meets ℝ again at |p|²/Re p
    let far_p = Ideal::Finite((p.x * p.x + p.y * p.y) / p.x);
    let upper = [
        Ray::new(p, Ideal::Finite(p.x), Ideal::Infinity),
        Ray::new(p, zero, far_p),
    ];
    let far_q = Ideal::Finite((q.x * q.x + q.y * q.y) / q.x);
    let lower = [Ray::new(q, far_q, zero), Ray::new(q, Ideal::Infinity, Ideal::Finite(q.x))];

    let horizon = T::lit(40.0) + m;
    let mut best = T::infinity();
    for a in &upper {
        for b in &lower {
            let d = minimize(|u| b.distance_to_point(&a.point(u)), horizon, samples);
            best = best.min(d);
        }
    }
    Ok(best.max(T::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_separation_at_zero() {
        assert_eq!(quadrant_separation(1.0_f64, 0.0, 64).unwrap(), 0.0);
    }

    #[test]
    fn positive_and_monotone() {
        let mut prev = 0.0;
        for i in 1..=20 {
            let m = 0.25 * i as f64;
            let d = quadrant_separation(1.0_f64, m, 64).unwrap();
            assert!(d > 0.0, "M={m} gave {d}");
            assert!(d + 1e-9 >= prev, "not monotone at M={m}: {d} < {prev}");
            prev = d;
        }
    }

    #[test]
    fn bounded_by_point_distance() {
        // p and q lie in their respective quadrants
        for m in [0.5, 1.0, 3.0] {
            assert!(quadrant_separation(1.0_f64, m, 64).unwrap() <= m + 1e-9);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(quadrant_separation(0.0_f64, 1.0, 8).is_err());
        assert!(quadrant_separation(1.0_f64, -1.0, 8).is_err());
    }
}
