//! Shear coordinates on a triangulation, the two model surfaces, and stretch paths.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::triangulation::{slot, Triangulation};
use super::word::CrossingWord;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Edge ids of the two-triangle torus.
pub mod s11 {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
}

/// Edge ids of the four-triangle sphere. `U` and `V` are the annulus edges, `WT`/`WB` the
/// annulus boundary edges and `YT`/`YB` the self-glued edges of the caps.
pub mod s04 {
    pub const U: usize = 0;
    pub const V: usize = 1;
    pub const WT: usize = 2;
    pub const WB: usize = 3;
    pub const YT: usize = 4;
    pub const YB: usize = 5;
}

/// A triangulation with one real shear per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct ShearSurface<T> {
    tri: Arc<Triangulation>,
    shears: Vec<T>,
}

/// Relative completeness tolerance: `|Σ| ≤ tol · max(1, Σ|terms|)`.
fn completeness_tol<T: Real>() -> T {
    T::lit(1e-12).max(T::epsilon() * T::lit(16.0))
}

impl<T: Real> ShearSurface<T> {
    /// Builds a surface, checking that every puncture is a cusp.
    pub fn new(tri: Arc<Triangulation>, shears: Vec<T>) -> Result<Self> {
        let s = Self::new_unchecked(tri, shears)?;
        s.check_complete()?;
        Ok(s)
    }

    /// Builds a possibly incomplete structure (only the shear count is checked).
    pub fn new_unchecked(tri: Arc<Triangulation>, shears: Vec<T>) -> Result<Self> {
        if shears.len() != tri.n_edges() {
            return Err(Error::ShearCount { expected: tri.n_edges(), got: shears.len() });
        }
        if shears.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("shears must be finite".into()));
        }
        Ok(Self { tri, shears })
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.tri
    }

    pub fn triangulation_arc(&self) -> &Arc<Triangulation> {
        &self.tri
    }

    pub fn shears(&self) -> &[T] {
        &self.shears
    }

    pub fn shear(&self, edge: usize) -> T {
        self.shears[edge]
    }

    /// Signed shear sums around each puncture.
    pub fn puncture_sums(&self) -> Vec<(T, T)> {
        self.tri
            .punctures()
            .iter()
            .map(|orbit| {
                orbit.iter().fold((T::zero(), T::zero()), |(s, a), &(t, c)| {
                    let x = self.shears[self.tri.edge(slot(t, c))];
                    (s + x, a + x.abs())
                })
            })
            .collect()
    }

    pub fn check_complete(&self) -> Result<()> {
        for (i, (sum, mass)) in self.puncture_sums().into_iter().enumerate() {
            if sum.abs() > completeness_tol::<T>() * mass.max(T::one()) {
                return Err(Error::Incomplete { puncture: i, sum: sum.to_f64_lossy() });
            }
        }
        Ok(())
    }

    pub fn is_complete(&self) -> bool {
        self.check_complete().is_ok()
    }

    /// Same triangulation with every shear multiplied by `factor`.
    pub fn scaled(&self, factor: T) -> Self {
        Self { tri: Arc::clone(&self.tri), shears: self.shears.iter().map(|&x| x * factor).collect() }
    }

    pub fn max_abs_shear(&self) -> T {
        self.shears.iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    pub fn same_triangulation(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.tri, &other.tri) || *self.tri == *other.tri
    }

    /// Serializes as `{"triangles": [[e0,e1,e2],…], "gluings": [[s,s′],…], "shears": […]}`
    /// with slot `s = 3·triangle + side`.
    pub fn to_json(&self) -> String {
        let doc = SurfaceDoc {
            triangles: self.tri.triangles(),
            gluings: self.tri.gluings().into_iter().map(|(a, b)| [a, b]).collect(),
            shears: self.shears.iter().map(|x| x.to_f64_lossy()).collect(),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: SurfaceDoc = serde_json::from_str(s).map_err(|e| Error::Serde(e.to_string()))?;
        let gl: Vec<(usize, usize)> = doc.gluings.iter().map(|g| (g[0], g[1])).collect();
        let tri = Arc::new(Triangulation::new(&doc.triangles, &gl)?);
        let shears = doc
            .shears
            .iter()
            .map(|&x| T::from_f64(x).ok_or_else(|| Error::Serde(format!("shear {x} not representable"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(tri, shears)
    }
}

#[derive(Serialize, Deserialize)]
struct SurfaceDoc {
    triangles: Vec<[usize; 3]>,
    gluings: Vec<[usize; 2]>,
    shears: Vec<f64>,
}

/// The two-triangle torus: triangle 0 has sides `(a, b, c)`, triangle 1 has `(c, a, b)`.
pub fn s11_triangulation() -> Arc<Triangulation> {
    use s11::*;
    Arc::new(
        Triangulation::new(
            &[[A, B, C], [C, A, B]],
            &[(slot(0, 0), slot(1, 1)), (slot(0, 1), slot(1, 2)), (slot(0, 2), slot(1, 0))],
        )
        .expect("torus triangulation is valid"),
    )
}

/// Once-punctured torus with shears `(xa, xb, xc)`; complete iff `xa + xb + xc = 0`.
///
/// With these labels the edge arcs `a, b, c` are the slopes `0/1, 1/0, 1/1`.
pub fn build_s11<T: Real>(xa: T, xb: T, xc: T) -> Result<ShearSurface<T>> {
    ShearSurface::new(s11_triangulation(), vec![xa, xb, xc])
}

/// The four-triangle sphere: an annulus of two triangles (edges `u`, `v` inside, `wt`, `wb`
/// on its boundary) capped on each side by a triangle with two sides glued together.
pub fn s04_triangulation() -> Arc<Triangulation> {
    use s04::*;
    Arc::new(
        Triangulation::new(
            &[[WB, V, U], [V, U, WT], [WT, YT, YT], [WB, YB, YB]],
            &[
                (slot(0, 1), slot(1, 0)),
                (slot(0, 2), slot(1, 1)),
                (slot(1, 2), slot(2, 0)),
                (slot(0, 0), slot(3, 0)),
                (slot(2, 1), slot(2, 2)),
                (slot(3, 1), slot(3, 2)),
            ],
        )
        .expect("sphere triangulation is valid"),
    )
}

/// The core curve of the annulus in [`s04_triangulation`]: crosses `u` then `v`.
pub fn s04_core_curve() -> CrossingWord {
    CrossingWord::parse(slot(0, 2), "LR").expect("static word")
}

/// The annulus example: shears `u = −2`, `v = 2 + 2ε`, `wt = wb = −ε`, `yt = yb = 0`.
///
/// Completeness at the four punctures forces the cap shears to vanish and the annulus
/// boundary shears to equal `−(u + v)/2`, so with the two shifts `2` and `2 + 2ε` those
/// boundary shears are `−ε`. The signs of the shifts are chosen so the core curve is short:
/// its trace is `2 cosh(ε) + e^{−2−ε}`.
pub fn build_s04_example<T: Real>(eps: T) -> Result<ShearSurface<T>> {
    if !(eps > T::zero()) || !eps.is_finite() {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    let two = T::lit(2.0);
    let mut shears = vec![T::zero(); 6];
    shears[s04::U] = -two;
    shears[s04::V] = two + two * eps;
    shears[s04::WT] = -eps;
    shears[s04::WB] = -eps;
    ShearSurface::new(s04_triangulation(), shears)
}

/// `t ↦` the base surface with every shear multiplied by `e^t`.
#[derive(Debug, Clone, PartialEq)]
pub struct StretchPath<T> {
    pub base: ShearSurface<T>,
}

impl<T: Real> StretchPath<T> {
    pub fn new(base: ShearSurface<T>) -> Result<Self> {
        base.check_complete()?;
        Ok(Self { base })
    }

    pub fn at(&self, t: T) -> ShearSurface<T> {
        self.base.scaled(t.exp())
    }
}

/// Free-function form of [`StretchPath::at`].
pub fn stretch<T: Real>(path: &StretchPath<T>, t: T) -> ShearSurface<T> {
    path.at(t)
}
