//! Relative twisting of a transverse geodesic about a closed curve.
//!
//! Let `γ̃` be the axis of the holonomy `H` of `γ` and `ω̃` a lift crossing it. The
//! *projection* method divides the length of the orthogonal projection of `ω̃` to `γ̃` by
//! `ℓ(γ)`. The *count* method counts the translates `Hᵏ τ̃` of a fixed perpendicular `τ̃` to
//! `γ̃` that `ω̃` crosses, i.e. the fundamental domains of `⟨H⟩` spanned by the projection.
//!
//! For an edge leaf the projection has a closed form in the positive factorisation `P` of the
//! holonomy, written in the frame where the crossed edge is `(0, ∞)`:
//! `proj = 2 |asinh((p₁₁ − p₂₂) / (2 sqrt(p₁₂ p₂₁)))|`, which is evaluated with logarithmic
//! entries and so survives shears far beyond the range of `exp`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyp2::{Geodesic, MoebiusMap};
use crate::shear::{holonomy, length_from_ln_trace, positive_product, split, CrossingWord, ShearSurface};
use crate::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TwistMethod {
    ProjectionFormula,
    FundamentalDomainCount,
}

/// What twists about `γ`: a triangulation edge (a leaf of the lamination) or a closed curve.
#[derive(Debug, Clone, Copy)]
pub enum TwistTarget<'a> {
    Edge(usize),
    Word(&'a CrossingWord),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwistReport<T> {
    pub gamma: CrossingWord,
    pub value: T,
    pub method: TwistMethod,
    pub projection_length: T,
    pub gamma_length: T,
}

/// Twisting of a lift `omega` about the axis of `h`, by both methods (count needs finite data).
pub fn twist_from_lift<T: Real>(h: &MoebiusMap<T>, omega: &Geodesic<T>, method: TwistMethod) -> Result<T> {
    let cls = h.classify();
    let axis = h.axis().ok_or(Error::NotHyperbolic(h.trace().abs().to_f64_lossy()))?;
    if !axis.crosses(omega) {
        return Err(Error::Disjoint);
    }
    let len = cls.translation_length;
    match method {
        TwistMethod::ProjectionFormula => Ok(axis.projection_length(omega) / len),
        TwistMethod::FundamentalDomainCount => {
            // perpendicular τ̃ through the base point of the axis frame, translated by multiples of ℓ
            let m = axis.standardizer();
            let feet: Vec<T> = [omega.start, omega.end]
                .iter()
                .map(|e| match m.apply_ideal(*e).finite() {
                    Some(x) => Ok(x.abs().ln()),
                    None => Err(Error::Overflow),
                })
                .collect::<Result<_>>()?;
            let (a, b) = (feet[0].min(feet[1]), feet[0].max(feet[1]));
            // k with a < s0 + kℓ < b, with s0 the crossing parameter shifted by half a period
            let s0 = axis.crossing_param(omega).unwrap_or(T::zero()) + len / T::lit(2.0);
            let first = ((a - s0) / len).floor() + T::one();
            let last = ((b - s0) / len).ceil() - T::one();
            Ok((last - first + T::one()).max(T::zero()))
        }
    }
}

/// Closed-form projection twist of edge `e` about `gamma` (log-space, any shear size).
fn projection_edge<T: Real>(surface: &ShearSurface<T>, gamma: &CrossingWord, e: usize) -> Result<(T, T)> {
    let tri = surface.triangulation();
    let slots = gamma.slots(tri)?;
    let pos = slots
        .iter()
        .position(|&s| tri.edge(s) == e)
        .ok_or(Error::Disjoint)?;
    let rotated = gamma.rotate(tri, pos)?;
    let p = positive_product(surface, &rotated)?;
    let [l11, l12, l21, l22] = p.0;
    let gamma_len = length_from_ln_trace(p.ln_trace())?;
    let (hi, lo) = if l11 >= l22 { (l11, l22) } else { (l22, l11) };
    if hi == lo {
        return Ok((T::zero(), gamma_len));
    }
    // ln |e^{hi} − e^{lo}|
    let ln_d = hi + (-(lo - hi).exp_m1()).ln();
    let ln_arg = ln_d - (l12 + l21) / T::lit(2.0) - T::LN_2();
    let half = if ln_arg < T::lit(20.0) { ln_arg.exp().asinh() } else { ln_arg + T::LN_2() };
    Ok((T::lit(2.0) * half, gamma_len))
}

/// Twisting of `omega` about `gamma` on `surface`.
///
/// For an edge, the lift is the one through `γ`'s first crossing of that edge. For a closed
/// curve, the first pair of lifts (in word order) whose axes cross is used. The count method
/// develops matrices in floating point and reports [`Error::Overflow`] once shears leave the
/// representable range; the projection formula for edges has no such limit.
pub fn twist<T: Real>(
    surface: &ShearSurface<T>,
    gamma: &CrossingWord,
    omega: TwistTarget<'_>,
    method: TwistMethod,
) -> Result<TwistReport<T>> {
    let (proj, gamma_len, value) = match (omega, method) {
        (TwistTarget::Edge(e), TwistMethod::ProjectionFormula) => {
            let (proj, len) = projection_edge(surface, gamma, e)?;
            (proj, len, proj / len)
        }
        (TwistTarget::Edge(e), TwistMethod::FundamentalDomainCount) => {
            let tri = surface.triangulation();
            let slots = gamma.slots(tri)?;
            let pos = slots.iter().position(|&s| tri.edge(s) == e).ok_or(Error::Disjoint)?;
            let rotated = gamma.rotate(tri, pos)?;
            let h = holonomy(surface, &rotated)?;
            // the crossed edge is side k of the start triangle, in that triangle's frame
            let (_, k) = split(rotated.start);
            let v = crate::shear::standard_vertices::<T>();
            let lift = Geodesic::new(v[k], v[(k + 1) % 3])?;
            let axis = h.axis().ok_or(Error::NotHyperbolic(h.trace().abs().to_f64_lossy()))?;
            let len = h.classify().translation_length;
            (axis.projection_length(&lift), len, twist_from_lift(&h, &lift, method)?)
        }
        (TwistTarget::Word(w), _) => {
            let (h, lift) = crossing_lifts(surface, gamma, w)?;
            let axis = h.axis().ok_or(Error::NotHyperbolic(h.trace().abs().to_f64_lossy()))?;
            let len = h.classify().translation_length;
            (axis.projection_length(&lift), len, twist_from_lift(&h, &lift, method)?)
        }
    };
    if !value.is_finite() {
        return Err(Error::Overflow);
    }
    Ok(TwistReport { gamma: gamma.clone(), value, method, projection_length: proj, gamma_length: gamma_len })
}

/// Holonomy of `gamma` and an axis of a conjugate of `omega` crossing it, in a common frame.
fn crossing_lifts<T: Real>(
    surface: &ShearSurface<T>,
    gamma: &CrossingWord,
    omega: &CrossingWord,
) -> Result<(MoebiusMap<T>, Geodesic<T>)> {
    let tri = surface.triangulation();
    let gs = gamma.slots(tri)?;
    let os = omega.slots(tri)?;
    for i in 0..gs.len() {
        let g = gamma.rotate(tri, i)?;
        let hg = holonomy(surface, &g)?;
        let Some(axis_g) = hg.axis() else { continue };
        for j in 0..os.len() {
            if split(os[j]).0 != split(gs[i]).0 {
                continue;
            }
            let o = omega.rotate(tri, j)?;
            let Some(axis_o) = holonomy(surface, &o)?.axis() else { continue };
            if axis_g.crosses(&axis_o) {
                return Ok((hg, axis_o));
            }
        }
    }
    Err(Error::Disjoint)
}
