//! Shadows of stretch paths in the curve graph and their coarse-geometry audits.

use rayon::prelude::*;
use serde::Serialize;

use super::systole::{systoles, ShadowSample};
use crate::error::{Error, Result};
use crate::hyp2::collar_width;
use crate::shear::StretchPath;
use crate::slopes::{CurveGraphMetric, Slope};
use crate::Real;

/// Scale constants for coarse inequalities. `eps_b` defaults to `2 asinh 1` — a conventional
/// choice, not the Bers constant of either surface — and `delta_b` to `2 w(eps_b)`, the
/// length a curve needs to cross the collar of an `eps_b`-short curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoarseConstants {
    pub eps_b: f64,
    pub delta_b: f64,
}

impl Default for CoarseConstants {
    fn default() -> Self {
        Self::from_eps_b(2.0 * 1.0_f64.asinh())
    }
}

impl CoarseConstants {
    pub fn from_eps_b(eps_b: f64) -> Self {
        let delta_b = 2.0 * collar_width(eps_b).unwrap_or(f64::NAN);
        Self { eps_b, delta_b }
    }

    /// Additive constant `log₂(eps_b/delta_b) + 1` of the shadow Lipschitz bound.
    pub fn lipschitz_c0(&self) -> f64 {
        (self.eps_b / self.delta_b).log2() + 1.0
    }
}

/// Systoles along `path` at each grid time; evaluated in parallel, returned in grid order.
pub fn shadow_path<T: Real>(path: &StretchPath<T>, t_grid: &[T], max_q: u32, tol: T) -> Result<Vec<ShadowSample<T>>> {
    if t_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidParameter("time grid must be sorted".into()));
    }
    t_grid
        .par_iter()
        .map(|&t| {
            let mut s = systoles(&path.at(t), max_q, tol)?;
            s.t = t;
            Ok(s)
        })
        .collect()
}

/// Fitted quasi-geodesic constant with the sample pairs that force it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuasiGeodesicReport {
    pub k: f64,
    /// Pair forcing `d ≤ K|Δt| + K` (indices), if any pair forces `K > 1`.
    pub upper_pair: Option<(usize, usize)>,
    /// Pair forcing `|Δt|/K − K ≤ d`.
    pub lower_pair: Option<(usize, usize)>,
    pub k_upper: f64,
    pub k_lower: f64,
}

/// Smallest `K ≥ 1` with `|Δt|/K − K ≤ d_S ≤ K|Δt| + K` for every pair of samples.
pub fn quasigeodesic_audit<T: Real>(samples: &[ShadowSample<T>], metric: CurveGraphMetric) -> Result<QuasiGeodesicReport> {
    if samples.len() < 2 {
        return Err(Error::Empty);
    }
    let (mut k_upper, mut k_lower) = (1.0_f64, 1.0_f64);
    let (mut upper_pair, mut lower_pair) = (None, None);
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let dt = (samples[j].t - samples[i].t).abs().to_f64_lossy();
            let d = metric.set_distance(&samples[i].systoles, &samples[j].systoles) as f64;
            let up = d / (dt + 1.0);
            if up > k_upper {
                k_upper = up;
                upper_pair = Some((i, j));
            }
            // K² + dK − Δt ≥ 0
            let low = (-d + (d * d + 4.0 * dt).sqrt()) / 2.0;
            if low > k_lower {
                k_lower = low;
                lower_pair = Some((i, j));
            }
        }
    }
    Ok(QuasiGeodesicReport { k: k_upper.max(k_lower), upper_pair, lower_pair, k_upper, k_lower })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LipschitzViolation {
    pub i: usize,
    pub j: usize,
    pub t_i: f64,
    pub t_j: f64,
    pub systoles_i: Vec<Slope>,
    pub systoles_j: Vec<Slope>,
    pub distance: u32,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LipschitzReport {
    pub c0: f64,
    pub pairs_checked: usize,
    pub max_distance: u32,
    pub violations: Vec<LipschitzViolation>,
}

/// Checks `d_S(πᵢ, πⱼ) ≤ |tⱼ − tᵢ|/ln 2 + C₀` for every pair of samples.
pub fn shadow_lipschitz_audit<T: Real>(
    samples: &[ShadowSample<T>],
    metric: CurveGraphMetric,
    consts: &CoarseConstants,
) -> LipschitzReport {
    let c0 = consts.lipschitz_c0();
    let mut violations = Vec::new();
    let mut pairs = 0;
    let mut max_distance = 0;
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            pairs += 1;
            let dt = (samples[j].t - samples[i].t).abs().to_f64_lossy();
            let d = metric.set_distance(&samples[i].systoles, &samples[j].systoles);
            max_distance = max_distance.max(d);
            let bound = dt / std::f64::consts::LN_2 + c0;
            if d as f64 > bound {
                violations.push(LipschitzViolation {
                    i,
                    j,
                    t_i: samples[i].t.to_f64_lossy(),
                    t_j: samples[j].t.to_f64_lossy(),
                    systoles_i: samples[i].systoles.clone(),
                    systoles_j: samples[j].systoles.clone(),
                    distance: d,
                    bound,
                });
            }
        }
    }
    LipschitzReport { c0, pairs_checked: pairs, max_distance, violations }
}

pub const SHADOW_CSV_HEADER: &str = "t,systole_slopes,systole_length,log10_systole_length";

/// One CSV line per sample under [`SHADOW_CSV_HEADER`]; slopes are `;`-joined.
pub fn shadow_csv<T: Real>(samples: &[ShadowSample<T>]) -> String {
    let mut out = String::from(SHADOW_CSV_HEADER);
    out.push('\n');
    for s in samples {
        let names: Vec<String> = s.systoles.iter().map(|x| x.to_string()).collect();
        let len = s.systole_length.to_f64_lossy();
        out.push_str(&format!("{},{},{},{}\n", s.t.to_f64_lossy(), names.join(";"), len, len.log10()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shear::SurfaceKind;

    fn sample(t: f64, s: &[&str]) -> ShadowSample<f64> {
        ShadowSample {
            t,
            systoles: s.iter().map(|x| x.parse().unwrap()).collect(),
            systole_length: 1.0,
            search_bound: 0,
        }
    }

    #[test]
    fn default_constants() {
        let c = CoarseConstants::default();
        assert!((c.eps_b - c.delta_b).abs() < 1e-12);
        assert!((c.lipschitz_c0() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn equal_samples_use_lower_bound() {
        let m = CurveGraphMetric::new(SurfaceKind::S11);
        let r = quasigeodesic_audit(&[sample(0.0, &["0/1"]), sample(9.0, &["0/1"])], m).unwrap();
        // d = 0 forces K² ≥ Δt
        assert_eq!(r.k, 3.0);
        assert_eq!(r.lower_pair, Some((0, 1)));
    }

    #[test]
    fn farey_geodesic_has_k_one() {
        // convergents of [0; 2, 2, 2, …]: each step one edge further from ∞
        let path = ["inf", "0/1", "1/2", "2/5", "5/12", "12/29"];
        let m = CurveGraphMetric::new(SurfaceKind::S11);
        let s: Vec<_> = path.iter().enumerate().map(|(i, x)| sample(i as f64, &[x])).collect();
        for i in 0..s.len() {
            assert_eq!(crate::slopes::farey_distance(&s[0].systoles[0], &s[i].systoles[0]) as usize, i);
        }
        assert_eq!(quasigeodesic_audit(&s, m).unwrap().k, 1.0);
    }

    #[test]
    fn csv_shape() {
        let csv = shadow_csv(&[sample(0.5, &["0/1", "inf"])]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], SHADOW_CSV_HEADER);
        assert_eq!(lines[1], "0.5,0/1;inf,1,0");
    }
}
