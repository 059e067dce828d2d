//! Witness data for `(n, L)`-horizontality, re-checkable without the search that found it.

use serde::{Deserialize, Serialize};

use super::walk::Leaf;
use crate::error::{Error, Result};
use crate::hyp2::{dist, Geodesic, HPoint, Ideal, MoebiusMap};
use crate::slopes::Slope;
use crate::Real;

/// One witness triple: `p` on the leaf lift, `q` on the lift of `α`, both on `gamma_lift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessPoint<T> {
    pub p: HPoint<T>,
    pub q: HPoint<T>,
    pub gamma_lift: Geodesic<T>,
}

/// A curve `α` certified `(n, L)`-horizontal along a leaf, with anchor `γ`.
///
/// Conditions, recomputed by [`HorizontalityCertificate::check`]:
/// * (H1) consecutive `p_i` are at distance at least `l`;
/// * (H2) each `q_i` is within `eps_b` of `p_i`;
/// * the `p_i` appear in order along `leaf_lift`.
///
/// Coordinates are in the leaf frame (see [`super::leaf_strip`]); `leaf_frame` maps the
/// standard frame of the leaf's base triangle into it.
#[derive(Debug, Clone, PartialEq)]
pub struct HorizontalityCertificate<T> {
    pub anchor: Slope,
    pub leaf: Leaf,
    pub alpha: Slope,
    pub n: usize,
    pub l: T,
    pub eps_b: T,
    pub leaf_frame: MoebiusMap<T>,
    pub leaf_lift: Geodesic<T>,
    pub alpha_lift: Geodesic<T>,
    /// Edges crossed from the base triangle to the copy the lift of `α` was read from.
    pub alpha_path: Vec<usize>,
    pub points: Vec<WitnessPoint<T>>,
}

/// Outcome of re-evaluating a certificate's conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub h1: bool,
    pub h2: bool,
    pub ordered: bool,
    pub count: bool,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.h1 && self.h2 && self.ordered && self.count
    }
}

impl<T: Real> HorizontalityCertificate<T> {
    /// Smallest distance between consecutive `p_i` (infinite for fewer than two points).
    pub fn min_spacing(&self) -> T {
        self.points.windows(2).map(|w| dist(&w[0].p, &w[1].p)).fold(T::infinity(), T::min)
    }

    /// Largest `d(p_i, q_i)`.
    pub fn max_offset(&self) -> T {
        self.points.iter().map(|w| dist(&w.p, &w.q)).fold(T::zero(), T::max)
    }

    /// Re-evaluates (H1), (H2), ordering and the point count, allowing each inequality to miss
    /// by `slack` (use zero for an exact re-check).
    pub fn check_with_slack(&self, slack: T) -> CertificateCheck {
        let h1 = self.points.windows(2).all(|w| dist(&w[0].p, &w[1].p) >= self.l - slack);
        let h2 = self.points.iter().all(|w| dist(&w.p, &w.q) <= self.eps_b + slack);
        let params: Vec<T> = self.points.iter().map(|w| self.leaf_lift.foot_param(&w.p)).collect();
        let ordered = params.windows(2).all(|w| w[0] < w[1]);
        let count = self.n >= 1 && self.n == self.points.len();
        CertificateCheck { h1, h2, ordered, count }
    }

    pub fn check(&self) -> CertificateCheck {
        self.check_with_slack(T::zero())
    }

    /// Largest distance of a witness point from a geodesic it should lie on.
    pub fn incidence_error(&self) -> T {
        self.points
            .iter()
            .flat_map(|w| {
                [
                    self.leaf_lift.distance_to_point(&w.p),
                    w.gamma_lift.distance_to_point(&w.p),
                    self.alpha_lift.distance_to_point(&w.q),
                    w.gamma_lift.distance_to_point(&w.q),
                ]
            })
            .fold(T::zero(), T::max)
    }

    /// The exact conditions plus incidence of every point on its geodesics.
    pub fn validate(&self) -> bool {
        self.check().passed() && self.incidence_error() <= T::lit(1e-6)
    }

    /// Image of every piece of the certificate under an isometry (a deck transformation maps a
    /// certificate to another certificate for the same curves).
    ///
    /// Fails with [`Error::Overflow`] when an image is not representable: points far along the
    /// leaf land exponentially close to the boundary under maps that do not preserve it.
    pub fn transform(&self, g: &MoebiusMap<T>) -> Result<Self> {
        let geo = |x: &Geodesic<T>| {
            let y = x.image(g);
            let built = if y.oriented { Geodesic::oriented(y.start, y.end) } else { Geodesic::new(y.start, y.end) };
            built.map_err(|_| Error::Overflow)
        };
        let pt = |p: &HPoint<T>| {
            let q = g.apply(p);
            HPoint::new(q.x, q.y).map_err(|_| Error::Overflow)
        };
        Ok(Self {
            leaf_frame: g.compose(&self.leaf_frame),
            leaf_lift: geo(&self.leaf_lift)?,
            alpha_lift: geo(&self.alpha_lift)?,
            points: self
                .points
                .iter()
                .map(|w| Ok(WitnessPoint { p: pt(&w.p)?, q: pt(&w.q)?, gamma_lift: geo(&w.gamma_lift)? }))
                .collect::<Result<_>>()?,
            ..self.clone()
        })
    }

    /// Rounding amplification of `g` on this certificate's points: the largest
    /// `(|a||z| + |b|)(|c||z| + |d|) / Im z` over witness points `z`. Images computed in floating
    /// point are accurate to about this factor times the unit roundoff, in hyperbolic distance.
    pub fn condition(&self, g: &MoebiusMap<T>) -> T {
        self.points
            .iter()
            .flat_map(|w| [w.p, w.q])
            .map(|z| {
                let r = (z.x * z.x + z.y * z.y).sqrt();
                (g.a.abs() * r + g.b.abs()) * (g.c.abs() * r + g.d.abs()) / z.y
            })
            .fold(T::zero(), T::max)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CertificateJson::from_cert(self)).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: CertificateJson = serde_json::from_str(s).map_err(|e| Error::Serde(e.to_string()))?;
        j.into_cert()
    }
}

/// Wire format: points as `[x, y]`, geodesics as endpoint pairs with `null` for `∞`.
#[derive(Serialize, Deserialize)]
struct CertificateJson {
    anchor: Slope,
    leaf: Leaf,
    alpha: Slope,
    n: usize,
    l: f64,
    eps_b: f64,
    leaf_frame: [f64; 4],
    leaf_lift: [Option<f64>; 2],
    alpha_lift: [Option<f64>; 2],
    alpha_path: Vec<usize>,
    points: Vec<PointJson>,
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    p: [f64; 2],
    q: [f64; 2],
    gamma_lift: [Option<f64>; 2],
}

fn geo_out<T: Real>(g: &Geodesic<T>) -> [Option<f64>; 2] {
    [g.start.to_f64_option(), g.end.to_f64_option()]
}

fn geo_in<T: Real>(g: [Option<f64>; 2]) -> Result<Geodesic<T>> {
    let f = |x: Option<f64>| x.map_or(Ideal::Infinity, |v| Ideal::Finite(T::lit(v)));
    Geodesic::oriented(f(g[0]), f(g[1]))
}

fn pt_out<T: Real>(p: &HPoint<T>) -> [f64; 2] {
    [p.x.to_f64_lossy(), p.y.to_f64_lossy()]
}

fn pt_in<T: Real>(p: [f64; 2]) -> Result<HPoint<T>> {
    HPoint::new(T::lit(p[0]), T::lit(p[1]))
}

impl CertificateJson {
    fn from_cert<T: Real>(c: &HorizontalityCertificate<T>) -> Self {
        Self {
            anchor: c.anchor,
            leaf: c.leaf.clone(),
            alpha: c.alpha,
            n: c.n,
            l: c.l.to_f64_lossy(),
            eps_b: c.eps_b.to_f64_lossy(),
            leaf_frame: [c.leaf_frame.a, c.leaf_frame.b, c.leaf_frame.c, c.leaf_frame.d].map(|x| x.to_f64_lossy()),
            leaf_lift: geo_out(&c.leaf_lift),
            alpha_lift: geo_out(&c.alpha_lift),
            alpha_path: c.alpha_path.clone(),
            points: c
                .points
                .iter()
                .map(|w| PointJson { p: pt_out(&w.p), q: pt_out(&w.q), gamma_lift: geo_out(&w.gamma_lift) })
                .collect(),
        }
    }

    fn into_cert<T: Real>(self) -> Result<HorizontalityCertificate<T>> {
        let points = self
            .points
            .into_iter()
            .map(|w| Ok(WitnessPoint { p: pt_in(w.p)?, q: pt_in(w.q)?, gamma_lift: geo_in(w.gamma_lift)? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(HorizontalityCertificate {
            anchor: self.anchor,
            leaf: self.leaf,
            alpha: self.alpha,
            n: self.n,
            l: T::lit(self.l),
            eps_b: T::lit(self.eps_b),
            leaf_frame: {
                let [a, b, c, d] = self.leaf_frame.map(T::lit);
                MoebiusMap::raw(a, b, c, d)
            },
            leaf_lift: geo_in(self.leaf_lift)?,
            alpha_lift: geo_in(self.alpha_lift)?,
            alpha_path: self.alpha_path,
            points,
        })
    }
}
