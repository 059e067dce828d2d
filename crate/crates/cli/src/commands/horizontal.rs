//! Horizontality certificates on the annulus example and their persistence along the path.

use serde::Serialize;
use serde_json::{json, Value};
use stretch_core::horizon::{
    check_horizontal, persistence_experiment, HorizontalQuery, Horizontality, HorizontalityCertificate, Leaf, Window,
};
use stretch_core::hyp2::dist;
use stretch_core::shear::{build_s04_example, StretchPath};
use stretch_core::slopes::{slope_to_word, Slope};

use super::{to_csv, Failure, Report};
use crate::config::RunConfig;

#[derive(Debug, Clone)]
pub struct HorizontalOpts {
    pub leaf: Slope,
    pub alpha: Slope,
    pub gamma: Slope,
    pub n: usize,
    pub l: f64,
    pub periods: u32,
}

/// CSV row: `t,index,p_x,p_y,q_x,q_y,offset,spacing`, one per witness point in leaf-frame
/// coordinates; `spacing` is the distance to the previous `p` (empty for the first).
const HEADER: &str = "t,index,p_x,p_y,q_x,q_y,offset,spacing\n";

#[derive(Serialize)]
struct Row {
    t: f64,
    index: usize,
    p_x: f64,
    p_y: f64,
    q_x: f64,
    q_y: f64,
    offset: f64,
    spacing: Option<f64>,
}

fn rows(t: f64, c: &HorizontalityCertificate<f64>) -> impl Iterator<Item = Row> + '_ {
    c.points.iter().enumerate().map(move |(index, w)| Row {
        t,
        index,
        p_x: w.p.x,
        p_y: w.p.y,
        q_x: w.q.x,
        q_y: w.q.y,
        offset: dist(&w.p, &w.q),
        spacing: index.checked_sub(1).map(|k| dist(&c.points[k].p, &w.p)),
    })
}

fn describe(h: &Horizontality<f64>) -> Value {
    match h {
        Horizontality::Certified(c) => json!({
            "certified": true,
            "n": c.n,
            "min_spacing": c.min_spacing(),
            "max_offset": c.max_offset(),
            "valid": c.validate(),
            "certificate": serde_json::from_str::<Value>(&c.to_json()).expect("certificate JSON parses"),
        }),
        Horizontality::NotFound { best_n, best_l, .. } => json!({
            "certified": false,
            "best_n": best_n,
            "best_spacing": best_l,
        }),
    }
}

/// Certifies `alpha` as `(n, L)`-horizontal along the closed leaf `leaf` at `tmin`, anchored
/// at `gamma`; when `tmax > tmin`, repeats at `tmax` with the spacing achieved at `tmin` and
/// half the count (re-choosing the anchor among curves of denominator ≤ `maxq` if `gamma`
/// is no longer `epsB`-short).
pub fn horizontal(cfg: &RunConfig, opts: &HorizontalOpts) -> Result<Report, Failure> {
    if opts.n == 0 || !(opts.l >= 0.0) || opts.periods == 0 {
        return Err(Failure::Config("need --n >= 1, --L >= 0 and --periods >= 1".into()));
    }
    let path = StretchPath::new(build_s04_example(cfg.eps)?)?;
    let x = path.at(cfg.t_min);
    let leaf = Leaf::Word(slope_to_word(&opts.leaf, &x)?);
    let query = HorizontalQuery::new(opts.alpha, opts.gamma, leaf, opts.n, opts.l, cfg.eps_b)
        .with_window(Window::Periods(opts.periods));

    let mut out = Vec::new();
    let mut results = serde_json::Map::new();
    results.insert("leaf".into(), json!(opts.leaf));
    results.insert("alpha".into(), json!(opts.alpha));
    results.insert("gamma".into(), json!(opts.gamma));
    let pass = if cfg.t_max > cfg.t_min {
        let report = persistence_experiment(&path, &query, cfg.t_min, cfg.t_max, cfg.max_q)?;
        if let Some(c) = report.at_s.certificate() {
            out.extend(rows(cfg.t_min, c));
        }
        if let Some(c) = report.at_t.as_ref().and_then(Horizontality::certificate) {
            out.extend(rows(cfg.t_max, c));
        }
        results.insert("at_tmin".into(), describe(&report.at_s));
        results.insert("at_tmax".into(), report.at_t.as_ref().map_or(Value::Null, describe));
        results.insert("anchor_at_tmax".into(), json!(report.anchor_t));
        results.insert("persistence".into(), json!(report.summary()));
        report.passed()
    } else {
        let h = check_horizontal(&x, &query)?;
        if let Some(c) = h.certificate() {
            out.extend(rows(cfg.t_min, c));
        }
        results.insert("at_tmin".into(), describe(&h));
        h.certificate().is_some_and(|c| c.validate())
    };
    let csv = if out.is_empty() { HEADER.to_string() } else { to_csv(&out) };
    Ok(Report::new(cfg, csv, Value::Object(results), pass))
}
