//! Orientation-preserving isometries of the upper half-plane, as `PSL(2, R)` matrices.

use serde::{Deserialize, Serialize};

use super::{HPoint, Ideal};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `z ↦ (az + b)/(cz + d)` with `ad − bc = 1`, taken modulo a global sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoebiusMap<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsometryKind {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Classification<T> {
    pub kind: IsometryKind,
    pub translation_length: T,
}

impl<T: Real> MoebiusMap<T> {
    /// Rescales to determinant one and fixes the sign so the first nonzero entry is positive.
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let det = a * d - b * c;
        if !(det > T::zero()) || !det.is_finite() {
            return Err(Error::SingularMatrix(det.to_f64_lossy()));
        }
        let s = det.sqrt().recip();
        Ok(Self::raw(a * s, b * s, c * s, d * s).sign_normalized())
    }

    #[inline]
    pub(crate) fn raw(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::raw(T::one(), T::zero(), T::zero(), T::one())
    }

    /// Hyperbolic translation along the imaginary axis by `len`, towards ∞.
    pub fn translation(len: T) -> Self {
        let h = (len / T::lit(2.0)).exp();
        Self::raw(h, T::zero(), T::zero(), h.recip())
    }

    fn sign_normalized(self) -> Self {
        let first = [self.a, self.b, self.c, self.d]
            .into_iter()
            .find(|x| *x != T::zero())
            .unwrap_or(T::one());
        if first < T::zero() {
            self.negated()
        } else {
            self
        }
    }

    fn negated(self) -> Self {
        Self::raw(-self.a, -self.b, -self.c, -self.d)
    }

    pub fn det(&self) -> T {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> T {
        self.a + self.d
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self::raw(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )
        .sign_normalized()
    }

    pub fn inverse(&self) -> Self {
        Self::raw(self.d, -self.b, -self.c, self.a).sign_normalized()
    }

    /// `self^k` by repeated squaring; negative `k` uses the inverse.
    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inverse() } else { *self };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Conjugate `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inverse())
    }

    /// Equality modulo the global sign, entrywise within `tol` (relative to the largest entry).
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        let scale = [self.a, self.b, self.c, self.d, other.a, other.b, other.c, other.d]
            .into_iter()
            .fold(T::one(), |m, x| m.max(x.abs()));
        let close = |s: &Self, o: &Self| {
            (s.a - o.a).abs() <= tol * scale
                && (s.b - o.b).abs() <= tol * scale
                && (s.c - o.c).abs() <= tol * scale
                && (s.d - o.d).abs() <= tol * scale
        };
        close(self, other) || close(self, &other.negated())
    }

    pub fn apply(&self, p: &HPoint<T>) -> HPoint<T> {
        let (x, y) = (p.x, p.y);
        // Re((az + b)·conj(cz + d)) keeps its relative accuracy near the preimage of 0, where the
        // expanded form ac|z|² + (ad + bc)x + bd cancels catastrophically
        let (num_re, num_im) = (self.a * x + self.b, self.a * y);
        let (den_re, den_im) = (self.c * x + self.d, self.c * y);
        let den = den_re * den_re + den_im * den_im;
        let re = (num_re * den_re + num_im * den_im) / den;
        let im = self.det() * y / den;
        HPoint { x: re, y: im }
    }

    pub fn apply_ideal(&self, z: Ideal<T>) -> Ideal<T> {
        match z {
            Ideal::Infinity => {
                if self.c == T::zero() {
                    Ideal::Infinity
                } else {
                    Ideal::Finite(self.a / self.c)
                }
            }
            Ideal::Finite(x) => {
                let den = self.c * x + self.d;
                if den == T::zero() {
                    Ideal::Infinity
                } else {
                    Ideal::Finite((self.a * x + self.b) / den)
                }
            }
        }
    }

    pub fn classify(&self) -> Classification<T> {
        let tr = self.trace().abs();
        let two = T::lit(2.0);
        if (tr - two).abs() <= T::parabolic_tol() {
            Classification { kind: IsometryKind::Parabolic, translation_length: T::zero() }
        } else if tr > two {
            Classification {
                kind: IsometryKind::Hyperbolic,
                translation_length: two * (tr / two).acosh(),
            }
        } else {
            Classification { kind: IsometryKind::Elliptic, translation_length: T::zero() }
        }
    }

    /// Fixed points on the boundary as `(repelling, attracting)` for hyperbolic maps.
    pub fn fixed_points(&self) -> Option<(Ideal<T>, Ideal<T>)> {
        if self.classify().kind != IsometryKind::Hyperbolic {
            return None;
        }
        // Sign so that the trace is positive; the attracting eigenvalue is then > 1.
        let m = if self.trace() < T::zero() { self.negated() } else { *self };
        let tr = m.trace();
        let disc = (tr * tr - T::lit(4.0)).sqrt();
        let lam_big = (tr + disc) / T::lit(2.0);
        let lam_small = lam_big.recip();
        // eigenvector (b, lam - a) or (lam - d, c); take the one whose difference does not
        // cancel (for the dominant eigenvalue lam ≈ a + d)
        let eig = |lam: T| -> Ideal<T> {
            let (u1, v1) = (m.b, lam - m.a);
            let (u2, v2) = (lam - m.d, m.c);
            let (u, v) = if v1.abs() >= u2.abs() { (u1, v1) } else { (u2, v2) };
            if v == T::zero() {
                Ideal::Infinity
            } else {
                Ideal::Finite(u / v)
            }
        };
        Some((eig(lam_small), eig(lam_big)))
    }

    /// Oriented axis of a hyperbolic element, from the repelling to the attracting fixed point.
    pub fn axis(&self) -> Option<super::Geodesic<T>> {
        let (r, a) = self.fixed_points()?;
        super::Geodesic::oriented(r, a).ok()
    }

    /// The unique map sending the positively ordered ideal triple `from` onto `to`.
    pub fn from_triples(from: [Ideal<T>; 3], to: [Ideal<T>; 3]) -> Result<Self> {
        let f = Self::to_standard(from)?;
        let g = Self::to_standard(to)?;
        Ok(g.inverse().compose(&f))
    }

    /// Map sending `(z1, z2, z3)` to `(0, ∞, -1)`.
    fn to_standard(z: [Ideal<T>; 3]) -> Result<Self> {
        // cross ratio w = (z - z1)(z3 - z2) / ((z - z2)(z1 - z3)) sends z1→0, z2→∞, z3→-1
        let one = T::one();
        let zero = T::zero();
        let (a, b, c, d) = match (z[0], z[1], z[2]) {
            (Ideal::Infinity, Ideal::Finite(z2), Ideal::Finite(z3)) => (zero, z3 - z2, one, -z2),
            (Ideal::Finite(z1), Ideal::Infinity, Ideal::Finite(z3)) => (one, -z1, zero, z1 - z3),
            (Ideal::Finite(z1), Ideal::Finite(z2), Ideal::Infinity) => (-one, z1, one, -z2),
            (Ideal::Finite(z1), Ideal::Finite(z2), Ideal::Finite(z3)) => {
                let k = z3 - z2;
                let m = z1 - z3;
                (k, -z1 * k, m, -z2 * m)
            }
            _ => return Err(Error::DegenerateGeodesic),
        };
        let det = a * d - b * c;
        if det <= T::zero() {
            return Err(Error::SingularMatrix(det.to_f64_lossy()));
        }
        Self::new(a, b, c, d)
    }
}

impl<T: Real> std::ops::Mul for MoebiusMap<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
}
