//! Distance lower bounds along stretch paths and the shadow of the annulus example.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;
use stretch_core::shear::{build_s04_example, build_s11, ShearSurface, StretchPath, SurfaceKind};
use stretch_core::slopes::{CurveGraphMetric, Slope};
use stretch_core::thurston::{
    quasigeodesic_audit, shadow_csv, shadow_lipschitz_audit, shadow_path, sup_length_ratio, CoarseConstants,
};

use super::{to_csv, Failure, Report};
use crate::config::RunConfig;

/// Slack allowed on `log_ratio ≤ Δt` for rounding in the length computations.
const RATIO_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurfaceChoice {
    /// The annulus example on the four-punctured sphere, parameter `--eps`.
    S04,
    /// A random once-punctured torus drawn from `--seed`.
    S11,
}

/// Complete torus with shears `(a, b, −a−b)`, `a, b ∈ [−3, 3)` and `|a + b| ≤ 3`.
fn random_torus(rng: &mut ChaCha8Rng) -> Result<ShearSurface<f64>, Failure> {
    loop {
        let (a, b): (f64, f64) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        if (a + b).abs() <= 3.0 {
            return Ok(build_s11(a, b, -(a + b))?);
        }
    }
}

/// CSV row: `sample,t,max_q,log_ratio,gap,best_slope`.
#[derive(Serialize)]
struct AuditRow {
    sample: usize,
    t: f64,
    max_q: u32,
    log_ratio: f64,
    gap: f64,
    best_slope: Slope,
}

/// For `samples` random tori, `sup log(ℓ_{X_t}/ℓ_{X_{tmin}})` over the catalog never exceeds
/// `t − tmin`, and the gap shrinks as the catalog grows (`maxq/3`, then `maxq`).
pub fn stretch_audit(cfg: &RunConfig, samples: usize) -> Result<Report, Failure> {
    if samples == 0 {
        return Err(Failure::Config("--samples must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let sizes: Vec<u32> = if cfg.max_q >= 3 { vec![cfg.max_q / 3, cfg.max_q] } else { vec![cfg.max_q] };
    let mut rows = Vec::new();
    let (mut violations, mut gap_increases) = (0usize, 0usize);
    let mut worst_excess = f64::NEG_INFINITY;
    for sample in 0..samples {
        let path = StretchPath::new(random_torus(&mut rng)?)?;
        let x = path.at(cfg.t_min);
        for t in cfg.grid() {
            let y = path.at(t);
            let mut prev_gap = f64::INFINITY;
            for &q in &sizes {
                let r = sup_length_ratio(&x, &y, q)?;
                let bound = t - cfg.t_min;
                let gap = bound - r.log_ratio;
                worst_excess = worst_excess.max(r.log_ratio - bound);
                violations += usize::from(r.log_ratio > bound + RATIO_SLACK);
                gap_increases += usize::from(gap > prev_gap + 1e-12);
                prev_gap = gap;
                rows.push(AuditRow { sample, t, max_q: q, log_ratio: r.log_ratio, gap, best_slope: r.best_slope });
            }
        }
    }
    let pass = violations == 0 && gap_increases == 0;
    let results = json!({
        "samples": samples,
        "evaluations": rows.len(),
        "max_excess": worst_excess,
        "bound_violations": violations,
        "gap_increases": gap_increases,
    });
    Ok(Report::new(cfg, to_csv(&rows), results, pass))
}

/// CSV row: `slope,log_ratio`.
#[derive(Serialize)]
struct RatioRow {
    slope: Slope,
    log_ratio: f64,
}

/// Length-ratio lower bound for the Thurston distance from `X_{tmin}` to `X_{tmax}` on one
/// stretch path, which must not exceed `tmax − tmin`.
pub fn dist(cfg: &RunConfig, surface: SurfaceChoice) -> Result<Report, Failure> {
    let base = match surface {
        SurfaceChoice::S04 => build_s04_example(cfg.eps)?,
        SurfaceChoice::S11 => random_torus(&mut ChaCha8Rng::seed_from_u64(cfg.seed))?,
    };
    let path = StretchPath::new(base)?;
    let r = sup_length_ratio(&path.at(cfg.t_min), &path.at(cfg.t_max), cfg.max_q)?;
    let bound = cfg.t_max - cfg.t_min;
    let pass = r.log_ratio <= bound + RATIO_SLACK;
    let rows: Vec<RatioRow> = r.table.iter().map(|&(slope, log_ratio)| RatioRow { slope, log_ratio }).collect();
    let results = json!({
        "surface": format!("{surface:?}").to_lowercase(),
        "slopes": rows.len(),
        "best_slope": r.best_slope,
        "log_ratio": r.log_ratio,
        "bound": bound,
    });
    Ok(Report::new(cfg, to_csv(&rows), results, pass))
}

/// Systoles along the annulus example: the fitted quasi-geodesic constant must be finite and
/// the Lipschitz bound `d ≤ |Δt|/ln 2 + C₀` must hold for every pair of samples.
pub fn shadow_audit(cfg: &RunConfig) -> Result<Report, Failure> {
    let path = StretchPath::new(build_s04_example(cfg.eps)?)?;
    let grid = cfg.grid();
    if grid.len() < 2 {
        return Err(Failure::Config("shadow-audit needs at least two grid times".into()));
    }
    let samples = shadow_path(&path, &grid, cfg.max_q, 1e-9)?;
    let metric = CurveGraphMetric::new(SurfaceKind::S04);
    let consts = CoarseConstants::from_eps_b(cfg.eps_b);
    let qg = quasigeodesic_audit(&samples, metric)?;
    let lip = shadow_lipschitz_audit(&samples, metric, &consts);
    let pass = qg.k.is_finite() && lip.violations.is_empty();
    let results = json!({
        "samples": samples.len(),
        "k": qg.k,
        "k_upper": qg.k_upper,
        "k_lower": qg.k_lower,
        "c0": lip.c0,
        "pairs_checked": lip.pairs_checked,
        "max_distance": lip.max_distance,
        "lipschitz_violations": lip.violations.len(),
        "violations": lip.violations,
    });
    Ok(Report::new(cfg, shadow_csv(&samples), results, pass))
}
