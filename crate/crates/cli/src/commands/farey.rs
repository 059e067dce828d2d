//! Farey distance against `log₂ i + 1` on the once-punctured torus.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use stretch_core::shear::SurfaceKind;
use stretch_core::slopes::{enumerate_slopes, farey_distance, intersection_number, Slope};

use super::{to_csv, Failure, Report};
use crate::config::RunConfig;

/// CSV row: `intersection,pairs,max_distance,bound,violations`, one per intersection number.
#[derive(Serialize)]
struct Row {
    intersection: u64,
    pairs: u64,
    max_distance: u32,
    bound: f64,
    violations: u64,
}

/// Pair statistics keyed by intersection number: `(pairs, max distance, violations)`.
type Buckets = BTreeMap<u64, (u64, u32, u64)>;

fn bucket_pairs(a: &Slope, rest: &[Slope]) -> Buckets {
    let mut out = Buckets::new();
    for b in rest {
        let i = intersection_number(a, b, SurfaceKind::S11);
        let d = farey_distance(a, b);
        let e = out.entry(i).or_default();
        e.0 += 1;
        e.1 = e.1.max(d);
        e.2 += u64::from(f64::from(d) > (i as f64).log2() + 1.0);
    }
    out
}

fn merge(mut a: Buckets, b: Buckets) -> Buckets {
    for (i, (n, d, v)) in b {
        let e = a.entry(i).or_default();
        e.0 += n;
        e.1 = e.1.max(d);
        e.2 += v;
    }
    a
}

/// Checks `d_F(α, β) ≤ log₂ i(α, β) + 1` for every pair of distinct slopes with denominator at
/// most `maxq`.
pub fn farey(cfg: &RunConfig) -> Result<Report, Failure> {
    let slopes = enumerate_slopes(cfg.max_q);
    let buckets = (0..slopes.len())
        .into_par_iter()
        .map(|k| bucket_pairs(&slopes[k], &slopes[k + 1..]))
        .reduce(Buckets::new, merge);
    let rows: Vec<Row> = buckets
        .iter()
        .map(|(&i, &(pairs, max_distance, violations))| Row {
            intersection: i,
            pairs,
            max_distance,
            bound: (i as f64).log2() + 1.0,
            violations,
        })
        .collect();
    let violations: u64 = rows.iter().map(|r| r.violations).sum();
    let results = json!({
        "slopes": slopes.len(),
        "pairs": rows.iter().map(|r| r.pairs).sum::<u64>(),
        "max_distance": rows.iter().map(|r| r.max_distance).max().unwrap_or(0),
        "bound_violations": violations,
    });
    Ok(Report::new(cfg, to_csv(&rows), results, violations == 0))
}
