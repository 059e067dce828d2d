//! Complete geodesics of the upper half-plane, described by their ideal endpoints.

use serde::{Deserialize, Serialize};

use super::{HPoint, Ideal, MoebiusMap};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Geodesic with endpoints `start ≠ end`; orientation is only meaningful when `oriented`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geodesic<T> {
    pub start: Ideal<T>,
    pub end: Ideal<T>,
    pub oriented: bool,
}

impl<T: Real> Geodesic<T> {
    pub fn new(a: Ideal<T>, b: Ideal<T>) -> Result<Self> {
        Self::build(a, b, false)
    }

    pub fn oriented(start: Ideal<T>, end: Ideal<T>) -> Result<Self> {
        Self::build(start, end, true)
    }

    fn build(start: Ideal<T>, end: Ideal<T>, oriented: bool) -> Result<Self> {
        // relative test: far-out geodesics are tiny in the chordal metric yet well defined
        let degenerate = match (start, end) {
            (Ideal::Infinity, Ideal::Infinity) => true,
            (Ideal::Finite(a), Ideal::Finite(b)) => (a - b).abs() <= T::epsilon() * a.abs().max(b.abs()),
            _ => false,
        };
        if degenerate {
            return Err(Error::DegenerateGeodesic);
        }
        if let Ideal::Finite(x) = start {
            if !x.is_finite() {
                return Err(Error::DegenerateGeodesic);
            }
        }
        if let Ideal::Finite(x) = end {
            if !x.is_finite() {
                return Err(Error::DegenerateGeodesic);
            }
        }
        Ok(Self { start, end, oriented })
    }

    /// The imaginary axis, oriented from 0 to ∞.
    pub fn imaginary_axis() -> Self {
        Self { start: Ideal::Finite(T::zero()), end: Ideal::Infinity, oriented: true }
    }

    pub fn reversed(&self) -> Self {
        Self { start: self.end, end: self.start, oriented: self.oriented }
    }

    pub fn image(&self, m: &MoebiusMap<T>) -> Self {
        Self { start: m.apply_ideal(self.start), end: m.apply_ideal(self.end), oriented: self.oriented }
    }

    /// Same point set (and, if both are oriented, same direction), endpoints within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        let same = self.start.approx_eq(&other.start, tol) && self.end.approx_eq(&other.end, tol);
        let flipped = self.start.approx_eq(&other.end, tol) && self.end.approx_eq(&other.start, tol);
        if self.oriented && other.oriented {
            same
        } else {
            same || flipped
        }
    }

    /// An isometry carrying `start` to 0 and `end` to ∞.
    pub fn standardizer(&self) -> MoebiusMap<T> {
        let one = T::one();
        let zero = T::zero();
        match (self.start, self.end) {
            (Ideal::Finite(u), Ideal::Infinity) => MoebiusMap::raw(one, -u, zero, one),
            (Ideal::Infinity, Ideal::Finite(v)) => MoebiusMap::raw(zero, -one, one, -v),
            (Ideal::Finite(u), Ideal::Finite(v)) => {
                // z ↦ s (z − u)/(z − v) with det s (u − v) > 0
                let s = if u > v { one } else { -one };
                MoebiusMap::new(s, -s * u, one, -v).expect("distinct endpoints")
            }
            (Ideal::Infinity, Ideal::Infinity) => unreachable!("endpoints are distinct"),
        }
    }

    /// The point at signed arclength `s` from the base point `standardizer⁻¹(i)`, towards `end`.
    pub fn point_at(&self, s: T) -> HPoint<T> {
        let inv = self.standardizer().inverse();
        inv.apply(&HPoint { x: T::zero(), y: s.exp() })
    }

    /// Signed arclength parameter of the orthogonal projection of `p` onto the geodesic.
    pub fn foot_param(&self, p: &HPoint<T>) -> T {
        let w = self.standardizer().apply(p);
        w.x.hypot(w.y).ln()
    }

    pub fn distance_to_point(&self, p: &HPoint<T>) -> T {
        let w = self.standardizer().apply(p);
        (w.x.abs() / w.y).asinh()
    }

    pub fn contains(&self, p: &HPoint<T>, tol: T) -> bool {
        self.distance_to_point(p) <= tol
    }

    /// Endpoints of `other` in the frame where `self` runs from 0 to ∞.
    fn other_in_frame(&self, other: &Self) -> (Ideal<T>, Ideal<T>) {
        let m = self.standardizer();
        (m.apply_ideal(other.start), m.apply_ideal(other.end))
    }

    /// True when the endpoints interleave on the circle (transverse crossing).
    pub fn crosses(&self, other: &Self) -> bool {
        match self.other_in_frame(other) {
            (Ideal::Finite(a), Ideal::Finite(b)) => a * b < T::zero() && a.is_finite() && b.is_finite(),
            _ => false,
        }
    }

    pub fn intersection(&self, other: &Self) -> Option<HPoint<T>> {
        match self.other_in_frame(other) {
            (Ideal::Finite(a), Ideal::Finite(b)) if a * b < T::zero() => {
                let y = (-a * b).sqrt();
                Some(self.standardizer().inverse().apply(&HPoint { x: T::zero(), y }))
            }
            _ => None,
        }
    }

    /// Arclength parameter along `self` at which `other` crosses it.
    pub fn crossing_param(&self, other: &Self) -> Option<T> {
        match self.other_in_frame(other) {
            (Ideal::Finite(a), Ideal::Finite(b)) if a * b < T::zero() => Some((-a * b).ln() / T::lit(2.0)),
            _ => None,
        }
    }

    /// Unoriented crossing angle in `(0, π/2]`.
    pub fn angle_with(&self, other: &Self) -> Option<T> {
        match self.other_in_frame(other) {
            (Ideal::Finite(a), Ideal::Finite(b)) if a * b < T::zero() => {
                let r = (b - a).abs() / T::lit(2.0);
                let y = (-a * b).sqrt();
                Some((y / r).min(T::one()).asin())
            }
            _ => None,
        }
    }

    /// Length of the orthogonal projection of `other` onto `self` (infinite if they share an endpoint).
    pub fn projection_length(&self, other: &Self) -> T {
        match self.other_in_frame(other) {
            (Ideal::Finite(a), Ideal::Finite(b)) if a != T::zero() && b != T::zero() => (b.abs() / a.abs()).ln().abs(),
            _ => T::infinity(),
        }
    }

    /// Distance between disjoint geodesics (zero when they meet or are asymptotic).
    pub fn distance_to(&self, other: &Self) -> T {
        match self.other_in_frame(other) {
            (Ideal::Finite(a), Ideal::Finite(b)) if a * b > T::zero() => {
                // both endpoints on one side: the common perpendicular has
                // cosh d = (|a|+|b|)/| |a|−|b| |
                let (a, b) = (a.abs(), b.abs());
                ((a + b) / (a - b).abs()).acosh()
            }
            _ => T::zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(x: f64) -> Ideal<f64> {
        Ideal::Finite(x)
    }

    #[test]
    fn standardizer_sends_endpoints() {
        for (a, b) in [(fin(-1.0), fin(2.0)), (fin(3.0), fin(-5.0)), (Ideal::Infinity, fin(1.0)), (fin(0.5), Ideal::Infinity)] {
            let g = Geodesic::oriented(a, b).unwrap();
            let m = g.standardizer();
            assert!((m.det() - 1.0).abs() < 1e-12);
            assert!(m.apply_ideal(a).approx_eq(&fin(0.0), 1e-12));
            assert!(m.apply_ideal(b).approx_eq(&Ideal::Infinity, 1e-12));
        }
    }

    #[test]
    fn intersection_of_unit_circle_and_axis() {
        let axis = Geodesic::<f64>::imaginary_axis();
        let circ = Geodesic::new(fin(-1.0), fin(1.0)).unwrap();
        let p = axis.intersection(&circ).unwrap();
        assert!(p.x.abs() < 1e-14 && (p.y - 1.0).abs() < 1e-14);
        assert!((axis.angle_with(&circ).unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!(axis.projection_length(&circ).abs() < 1e-14);
        assert!(circ.contains(&p, 1e-12));
    }

    #[test]
    fn projection_and_distance() {
        let axis = Geodesic::<f64>::imaginary_axis();
        let g = Geodesic::new(fin(-1.0), fin(4.0)).unwrap();
        assert!((axis.projection_length(&g) - 4.0_f64.ln()).abs() < 1e-14);
        let h = Geodesic::new(fin(1.0), fin(3.0)).unwrap();
        assert!(!axis.crosses(&h));
        // perpendicular from the axis to the circle centered 2 radius 1 meets at
        // |z| = sqrt(3); distance = acosh(2)
        assert!((axis.distance_to(&h) - 2.0_f64.acosh()).abs() < 1e-12);
    }

    #[test]
    fn point_at_and_foot_param() {
        let g = Geodesic::oriented(fin(-2.0), fin(1.0)).unwrap();
        let p0 = g.point_at(0.0);
        let p1 = g.point_at(1.3);
        assert!((super::super::dist(&p0, &p1) - 1.3).abs() < 1e-12);
        assert!((g.foot_param(&p1) - 1.3).abs() < 1e-12);
        assert!(g.contains(&p1, 1e-10));
    }
}
