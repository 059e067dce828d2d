//! Core-curve length on the annulus example against `εe^t + e^{-e^t}`.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use stretch_core::shear::{build_s04_example, curve_length, s04, s04_core_curve, StretchPath};
use stretch_core::thurston::{twist, TwistMethod, TwistTarget};

use super::{to_csv, Failure, Report};
use crate::config::RunConfig;

/// CSV row: `t,log10_length,log10_model,ratio`.
#[derive(Serialize)]
struct Row {
    t: f64,
    log10_length: f64,
    log10_model: f64,
    ratio: f64,
}

/// `ln(εe^t + e^{-e^t})` without forming `e^{-e^t}`.
fn ln_model(eps: f64, t: f64) -> f64 {
    let (a, b) = (eps.ln() + t, -t.exp());
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

pub fn example28(cfg: &RunConfig, window: f64, factor: f64) -> Result<Report, Failure> {
    if !(window >= 0.0) || !(factor >= 1.0) {
        return Err(Failure::Config("need --window >= 0 and --factor >= 1".into()));
    }
    let eps = cfg.eps;
    let path = StretchPath::new(build_s04_example(eps)?)?;
    let core = s04_core_curve();
    let rows: Vec<Row> = cfg
        .grid()
        .into_par_iter()
        .map(|t| {
            let ln_len = curve_length(&path.at(t), &core)?.ln();
            let ln_mod = ln_model(eps, t);
            Ok(Row {
                t,
                log10_length: ln_len / std::f64::consts::LN_10,
                log10_model: ln_mod / std::f64::consts::LN_10,
                ratio: (ln_len - ln_mod).exp(),
            })
        })
        .collect::<stretch_core::Result<_>>()?;

    let horizon = (1.0 / eps).ln();
    let argmin = rows.iter().min_by(|a, b| a.log10_length.total_cmp(&b.log10_length)).expect("grid is nonempty");
    let t_star = argmin.t;
    let min_length = 10f64.powf(argmin.log10_length);
    let t_target = horizon.ln();
    let min_target = eps * horizon;
    let within = |r: f64| (1.0 / factor..=factor).contains(&r);

    let modelled: Vec<&Row> = rows.iter().filter(|r| r.t <= horizon + 1e-12).collect();
    let ratio_min = modelled.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
    let ratio_max = modelled.iter().map(|r| r.ratio).fold(f64::NEG_INFINITY, f64::max);
    let twist_value = twist(&path.at(horizon), &core, TwistTarget::Edge(s04::U), TwistMethod::ProjectionFormula)?.value;

    let t_star_ok = (t_star - t_target).abs() <= window;
    let min_ok = within(min_length / min_target);
    let ratio_ok = modelled.iter().all(|r| within(r.ratio));
    let twist_ok = within(eps * twist_value);
    let pass = t_star_ok && min_ok && ratio_ok && twist_ok;

    let results = json!({
        "t_star": t_star,
        "t_star_target": t_target,
        "t_star_ok": t_star_ok,
        "min_length": min_length,
        "min_length_target": min_target,
        "min_length_ratio": min_length / min_target,
        "min_length_ok": min_ok,
        "ratio_min": ratio_min,
        "ratio_max": ratio_max,
        "ratio_ok": ratio_ok,
        "twist_time": horizon,
        "twist": twist_value,
        "eps_times_twist": eps * twist_value,
        "twist_ok": twist_ok,
        "window": window,
        "factor": factor,
    });
    Ok(Report::new(cfg, to_csv(&rows), results, pass))
}
