//! Certified systoles.
//!
//! The shortest enumerated curve `σ` gives an upper bound `m` for the systole. A curve
//! meeting `σ` in `I` points crosses the standard collar of `σ` `I` times, so its length is
//! at least `2 I w(ℓ_σ)` with `w` the collar half-width; only curves with
//! `I ≤ (m + tol)/(2 w(ℓ_σ))` can compete. After a unimodular change of basis sending `σ` to
//! `∞`, those curves are `(y, x)` with `|x|` bounded, and each residue class of `y` is one
//! orbit of the Dehn twist about `σ` (`y ↦ y + x` on the torus, `y ↦ y + 2x` on the sphere).
//! Length is a convex function of the twist parameter, so a convex integer search in each
//! class finds its minimum. Every curve is either `σ` or in one of these classes, which
//! makes the reported set global.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use super::catalog::{catalog, ensure_standard, slope_length};
use crate::error::{Error, Result};
use crate::hyp2::collar_width;
use crate::shear::ShearSurface;
use crate::slopes::Slope;
use crate::Real;

/// Systoles of one surface (the shadow of a point of Teichmüller space).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShadowSample<T> {
    pub t: T,
    pub systoles: Vec<Slope>,
    pub systole_length: T,
    /// Largest intersection number with the short curve that had to be searched.
    pub search_bound: u64,
}

/// Cap on twist-family searches; exceeding it reports an uncertified result as an error.
const MAX_CLASSES: u64 = 20_000;

/// Minimal-length slopes on `surface` within `tol` of the minimum.
///
/// `tol = ∞` returns every enumerated slope without the certification search.
pub fn systoles<T: Real>(surface: &ShearSurface<T>, max_q: u32, tol: T) -> Result<ShadowSample<T>> {
    let kind = surface.triangulation().kind();
    ensure_standard(surface, kind)?;
    surface.check_complete()?;
    let cat = catalog(kind, max_q);
    let lengths = cat.lengths(surface)?;
    let mut found: BTreeMap<Slope, T> = cat.slopes.iter().copied().zip(lengths.iter().copied()).collect();
    let min_of = |m: &BTreeMap<Slope, T>| -> (Slope, T) {
        m.iter()
            .fold(None, |acc: Option<(Slope, T)>, (s, l)| match acc {
                Some((_, b)) if b <= *l => acc,
                _ => Some((*s, *l)),
            })
            .expect("catalog is nonempty")
    };
    if tol.is_infinite() {
        let (_, len) = min_of(&found);
        return Ok(ShadowSample { t: T::zero(), systoles: cat.slopes.clone(), systole_length: len, search_bound: 0 });
    }
    if tol < T::zero() || tol.is_nan() {
        return Err(Error::InvalidParameter(format!("tolerance must be nonnegative, got {tol}")));
    }

    let mut bound_used = 0;
    let mut certified_for: Option<Slope> = None;
    loop {
        let (sigma, m) = min_of(&found);
        if certified_for == Some(sigma) {
            break;
        }
        let w = collar_width(m)?;
        let ratio = ((m + tol) / (T::lit(2.0) * w)).floor();
        let i_max = ratio.to_u64().ok_or_else(|| Error::GuardFailed(format!("collar bound {ratio} overflows")))?;
        let per = kind.adjacency_intersection();
        let x_max = i_max / per;
        let classes: u64 = (1..=x_max).map(|x| x * per).sum();
        if classes > MAX_CLASSES {
            return Err(Error::GuardFailed(format!(
                "{classes} twist classes needed around {sigma} (length {m})"
            )));
        }
        bound_used = bound_used.max(i_max);
        let basis = to_infinity(&sigma);
        for x in 1..=x_max as i64 {
            let period = x * per as i64;
            for y in 0..period {
                if y.gcd(&x) != 1 {
                    continue;
                }
                for (s, l) in twist_family_minima(surface, &basis, x, y, period, tol)? {
                    found.insert(s, l);
                }
            }
        }
        certified_for = Some(sigma);
    }
    let (_, len) = min_of(&found);
    let systoles: Vec<Slope> = found.iter().filter(|(_, l)| **l <= len + tol).map(|(s, _)| *s).collect();
    Ok(ShadowSample { t: T::zero(), systoles, systole_length: len, search_bound: bound_used })
}

/// `g⁻¹` for a unimodular `g` with `g(σ) = ∞`, as a map on `(p, q)`.
fn to_infinity(sigma: &Slope) -> [[i64; 2]; 2] {
    let (p, q) = (sigma.p(), sigma.q());
    let e = p.extended_gcd(&q);
    let (a, b) = (e.x * e.gcd.signum(), e.y * e.gcd.signum());
    // g = [[a, b], [−q, p]] has det ap + bq = 1; its inverse is [[p, −b], [q, a]]
    [[p, -b], [q, a]]
}

/// Minima (with ties) of the convex sequence `k ↦ ℓ((y + k·period, x))` in original coordinates.
fn twist_family_minima<T: Real>(
    surface: &ShearSurface<T>,
    basis: &[[i64; 2]; 2],
    x: i64,
    y: i64,
    period: i64,
    tol: T,
) -> Result<Vec<(Slope, T)>> {
    let slope_at = |k: i64| -> Result<Slope> {
        Slope::new(y + k * period, x)?.transform(*basis)
    };
    let f = |k: i64| -> Result<T> { slope_length(surface, &slope_at(k)?) };
    let (f0, fp, fm) = (f(0)?, f(1)?, f(-1)?);
    let dir: i64 = if fp < f0 { 1 } else if fm < f0 { -1 } else { 0 };
    let (mut lo, mut hi) = (0i64, 0i64);
    if dir != 0 {
        // gallop: f(a) > f(b) until some c = b + dir·step has f(c) ≥ f(b); the minimum is in [a, c]
        let (mut a, mut b, mut fb) = (0i64, dir, if dir > 0 { fp } else { fm });
        let mut step = 1i64;
        loop {
            step *= 2;
            if step > 1 << 40 {
                return Err(Error::GuardFailed("twist search diverged".into()));
            }
            let c = b + dir * step;
            let fc = f(c)?;
            if fc >= fb {
                lo = a.min(c);
                hi = a.max(c);
                break;
            }
            a = b;
            b = c;
            fb = fc;
        }
        while hi - lo > 2 {
            let m1 = lo + (hi - lo) / 3;
            let m2 = hi - (hi - lo) / 3;
            if f(m1)? <= f(m2)? {
                hi = m2;
            } else {
                lo = m1;
            }
        }
    }
    let mut best: Vec<(i64, T)> = Vec::new();
    for k in (lo - 1)..=(hi + 1) {
        best.push((k, f(k)?));
    }
    let min = best.iter().fold(T::infinity(), |m, (_, v)| m.min(*v));
    best.into_iter()
        .filter(|(_, v)| *v <= min + tol)
        .map(|(k, v)| Ok((slope_at(k)?, v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shear::{build_s04_example, build_s11};

    #[test]
    fn modular_torus_has_three_systoles() {
        let x = build_s11(0.0_f64, 0.0, 0.0).unwrap();
        let s = systoles(&x, 10, 1e-9).unwrap();
        let names: Vec<String> = s.systoles.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["0/1", "1/1", "inf"]);
        assert!((s.systole_length - 2.0 * 1.5_f64.acosh()).abs() < 1e-12);
    }

    #[test]
    fn infinite_tolerance_returns_everything() {
        let x = build_s11(0.0_f64, 0.0, 0.0).unwrap();
        let s = systoles(&x, 3, f64::INFINITY).unwrap();
        assert_eq!(s.systoles.len(), crate::slopes::enumerate_slopes(3).len());
    }

    #[test]
    fn sphere_core_is_unique_systole() {
        let x = build_s04_example(1e-3_f64).unwrap();
        let s = systoles(&x, 10, 1e-9).unwrap();
        assert_eq!(s.systoles, vec![Slope::new(0, 1).unwrap()]);
    }

    #[test]
    fn finds_systole_outside_the_enumeration() {
        // a strongly twisted torus: the systole has a large numerator
        let x = build_s11(6.0_f64, -3.0, -3.0).unwrap();
        let small = systoles(&x, 2, 1e-9).unwrap();
        let big = systoles(&x, 40, 1e-9).unwrap();
        assert_eq!(small.systoles, big.systoles);
        assert!((small.systole_length - big.systole_length).abs() < 1e-12);
    }

    #[test]
    fn basis_sends_sigma_to_infinity() {
        for s in ["2/5", "-3/7", "inf", "0/1", "4/1"] {
            let sigma: Slope = s.parse().unwrap();
            let g_inv = to_infinity(&sigma);
            assert_eq!(Slope::INFINITY.transform(g_inv).unwrap(), sigma);
            let det = g_inv[0][0] * g_inv[1][1] - g_inv[0][1] * g_inv[1][0];
            assert_eq!(det, 1);
        }
    }
}
