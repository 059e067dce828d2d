//! Holonomy of closed crossing words and hyperbolic lengths.
//!
//! # Matrix convention
//!
//! Each triangle carries a standard frame in which its vertices are `(0, ∞, −1)`. With
//! `ρ = [[−1, −1], [1, 0]]` (the rotation `0 → ∞ → −1 → 0`) and the edge matrix
//! `S(x) = [[0, −e^{x/2}], [e^{−x/2}, 0]]`, crossing from slot `(t, k)` into the glued slot
//! `(t′, k′)` updates the frame by `F′ = F · ρ^k · S(x) · ρ^{−k′}`. The holonomy of a closed
//! word is the frame reached after one period; it maps the base triangle to its translate.
//!
//! Traces are also available from the conjugate positive factorisation
//! `∏ E(xᵢ) · Tᵢ` with `E(x) = diag(e^{x/2}, e^{−x/2})`, `T = [[1, 1], [0, 1]]` after a left
//! turn and `T = [[1, 0], [1, 1]]` after a right turn. All its entries are nonnegative, so
//! it can be evaluated with logarithmic entries and stays exact to relative precision for
//! shears far beyond the range of `exp`.

use super::surface::ShearSurface;
use super::triangulation::split;
use super::word::{CrossingWord, Turn};
use crate::error::{Error, Result};
use crate::hyp2::{Geodesic, Ideal, MoebiusMap};
use crate::scalar::{acosh_from_ln, log_add_exp, Real};

pub(crate) fn rho_pow<T: Real>(k: usize) -> MoebiusMap<T> {
    let one = T::one();
    let zero = T::zero();
    match k % 3 {
        0 => MoebiusMap::identity(),
        1 => MoebiusMap::raw(-one, -one, one, zero),
        _ => MoebiusMap::raw(zero, one, -one, -one),
    }
}

pub(crate) fn edge_matrix<T: Real>(x: T) -> MoebiusMap<T> {
    let h = (x / T::lit(2.0)).exp();
    MoebiusMap::raw(T::zero(), -h, h.recip(), T::zero())
}

/// Frame change when leaving through `slot` (into its glued partner).
pub fn crossing_matrix<T: Real>(surface: &ShearSurface<T>, slot: usize) -> MoebiusMap<T> {
    let tri = surface.triangulation();
    let (_, k) = split(slot);
    let (_, k2) = split(tri.partner(slot));
    let x = surface.shear(tri.edge(slot));
    rho_pow::<T>(k).compose(&edge_matrix(x)).compose(&rho_pow::<T>(3 - k2))
}

/// Holonomy of a closed word in the frame of the triangle of its start slot.
pub fn holonomy<T: Real>(surface: &ShearSurface<T>, w: &CrossingWord) -> Result<MoebiusMap<T>> {
    let slots = w.slots(surface.triangulation())?;
    let mut acc = MoebiusMap::identity();
    for s in slots {
        acc = acc.compose(&crossing_matrix(surface, s));
    }
    if !acc.is_finite() {
        return Err(Error::Overflow);
    }
    Ok(acc)
}

/// Entries `[p11, p12, p21, p22]` of a nonnegative matrix, stored as natural logs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogMatrix<T>(pub [T; 4]);

impl<T: Real> LogMatrix<T> {
    pub fn identity() -> Self {
        Self([T::zero(), T::neg_infinity(), T::neg_infinity(), T::zero()])
    }

    fn step(x: T, turn: Turn) -> Self {
        let h = x / T::lit(2.0);
        let z = T::neg_infinity();
        match turn {
            Turn::Left => Self([h, h, z, -h]),
            Turn::Right => Self([h, z, -h, -h]),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Self([
            log_add_exp(a + e, b + g),
            log_add_exp(a + f, b + h),
            log_add_exp(c + e, d + g),
            log_add_exp(c + f, d + h),
        ])
    }

    pub fn ln_trace(&self) -> T {
        log_add_exp(self.0[0], self.0[3])
    }
}

/// The positive factorisation of the holonomy, in the frame where the first crossed edge
/// runs from 0 to ∞.
pub fn positive_product<T: Real>(surface: &ShearSurface<T>, w: &CrossingWord) -> Result<LogMatrix<T>> {
    let edges = w.edges(surface.triangulation())?;
    Ok(positive_product_edges(surface.shears(), &edges))
}

pub(crate) fn positive_product_edges<T: Real>(shears: &[T], edges: &[(usize, Turn)]) -> LogMatrix<T> {
    edges
        .iter()
        .fold(LogMatrix::identity(), |acc, &(e, turn)| acc.mul(&LogMatrix::step(shears[e], turn)))
}

/// Oriented axis of the holonomy of `w` (repelling to attracting fixed point), in the frame
/// of its start triangle.
///
/// The holonomy is `ρᵏ P ρ⁻ᵏ` with `P` the positive factorisation and `k` the side of the
/// start slot. The fixed points of `P` are the roots of `p₂₁ z² + (p₂₂ − p₁₁) z − p₁₂`, one
/// positive (attracting) and one negative; they are evaluated from the logarithmic entries
/// without cancellation, so long curves keep accurate axes where the matrix entries of the
/// holonomy itself would swamp its fixed points in rounding error.
pub fn holonomy_axis<T: Real>(surface: &ShearSurface<T>, w: &CrossingWord) -> Result<Geodesic<T>> {
    if w.is_empty() {
        return Err(Error::NotHyperbolic(2.0));
    }
    let p = positive_product(surface, w)?;
    length_from_ln_trace(p.ln_trace())?;
    let [la, lb, lc, ld] = p.0;
    let two = T::lit(2.0);
    let m = la.max(ld).max((lb + lc) / two);
    let (a, d) = ((la - m).exp(), (ld - m).exp());
    let bc = (lb + lc - two * m).exp();
    let delta = (a - d).abs();
    // ln(|p11 − p22| + sqrt((p11 − p22)² + 4 p12 p21))
    let ln_r = m + (delta + (delta * delta + T::lit(4.0) * bc).sqrt()).ln();
    let (ln_pos, ln_neg) = if la >= ld {
        (ln_r - T::LN_2() - lc, T::LN_2() + lb - ln_r)
    } else {
        (T::LN_2() + lb - ln_r, ln_r - T::LN_2() - lc)
    };
    let (pos, neg) = (ln_pos.exp(), -ln_neg.exp());
    let representable = |x: T| x.is_finite() && x != T::zero();
    if !representable(pos) || !representable(neg) {
        return Err(Error::Overflow);
    }
    let rho = rho_pow::<T>(split(w.start).1);
    let ends = [neg, pos].map(|z| rho.apply_ideal(Ideal::Finite(z)));
    // an axis through the triangle never ends at one of its vertices; equality means the
    // endpoint is closer to a cusp than the float spacing there
    let collapsed = ends.iter().any(|e| match e {
        Ideal::Finite(x) => *x == T::zero() || *x == -T::one(),
        Ideal::Infinity => true,
    });
    if collapsed {
        return Err(Error::Overflow);
    }
    Geodesic::oriented(ends[0], ends[1])
}

/// `ln |trace|` of the holonomy, via a plain product when no entry can leave the float range
/// and via logarithmic entries otherwise.
pub(crate) fn ln_trace_edges<T: Real>(shears: &[T], edges: &[(usize, Turn)]) -> T {
    let half_mass = edges.iter().fold(T::zero(), |m, &(e, _)| m + shears[e].abs()) / T::lit(2.0);
    let growth = half_mass + T::from_usize(edges.len()).unwrap() * T::LN_2();
    let budget = T::max_value().ln() * T::lit(0.9);
    if growth < budget {
        let (mut a, mut b, mut c, mut d) = (T::one(), T::zero(), T::zero(), T::one());
        for &(e, turn) in edges {
            let h = (shears[e] / T::lit(2.0)).exp();
            let hi = h.recip();
            // (M · E(x)) · T
            let (a1, b1, c1, d1) = (a * h, b * hi, c * h, d * hi);
            match turn {
                Turn::Left => {
                    a = a1;
                    b = a1 + b1;
                    c = c1;
                    d = c1 + d1;
                }
                Turn::Right => {
                    a = a1 + b1;
                    b = b1;
                    c = c1 + d1;
                    d = d1;
                }
            }
        }
        (a + d).ln()
    } else {
        positive_product_edges(shears, edges).ln_trace()
    }
}

/// `ln |trace|` of the holonomy of `w`.
pub fn ln_trace<T: Real>(surface: &ShearSurface<T>, w: &CrossingWord) -> Result<T> {
    let edges = w.edges(surface.triangulation())?;
    Ok(ln_trace_edges(surface.shears(), &edges))
}

/// Translation length from `ln |trace|`; non-hyperbolic traces are rejected.
pub fn length_from_ln_trace<T: Real>(ln_tr: T) -> Result<T> {
    let two = T::lit(2.0);
    let half = ln_tr - T::LN_2();
    if half.exp() * two - two <= T::parabolic_tol() {
        return Err(Error::NotHyperbolic((ln_tr.exp()).to_f64_lossy()));
    }
    Ok(two * acosh_from_ln(half))
}

/// Hyperbolic length of the closed geodesic in the free homotopy class of `w`.
pub fn curve_length<T: Real>(surface: &ShearSurface<T>, w: &CrossingWord) -> Result<T> {
    if w.is_empty() {
        return Err(Error::NotHyperbolic(2.0));
    }
    length_from_ln_trace(ln_trace(surface, w)?)
}

/// Length from a precomputed edge sequence (hot loop of enumerations).
pub(crate) fn length_edges<T: Real>(shears: &[T], edges: &[(usize, Turn)]) -> Result<T> {
    if edges.is_empty() {
        return Err(Error::NotHyperbolic(2.0));
    }
    length_from_ln_trace(ln_trace_edges(shears, edges))
}
