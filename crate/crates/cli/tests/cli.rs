//! End-to-end runs of the `stretch` binary: exit codes, summaries and deterministic CSV.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn stretch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stretch")).args(args).output().expect("binary runs")
}

/// Runs with `--json --out <dir>/<name>.csv`; returns exit code, summary and CSV text.
fn run_json(dir: &Path, name: &str, args: &[&str]) -> (i32, Value, String) {
    let out = dir.join(format!("{name}.csv"));
    let mut full: Vec<&str> = args.to_vec();
    let out_str = out.to_str().unwrap().to_string();
    full.extend(["--json", "--out", &out_str]);
    let o = stretch(&full);
    let summary: Value = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("summary is JSON ({e}): {}", String::from_utf8_lossy(&o.stderr)));
    (o.status.code().unwrap(), summary, fs::read_to_string(out).unwrap())
}

#[test]
fn example28_passes_its_windows_at_the_default_eps() {
    let dir = tempfile::tempdir().unwrap();
    let (code, s, csv) = run_json(dir.path(), "ex", &["example28", "--eps", "0.001"]);
    assert_eq!(code, 0, "{s}");
    assert_eq!(s["schema"], 1);
    assert_eq!(s["pass"], true);
    let r = &s["results"];
    let t_star = r["t_star"].as_f64().unwrap();
    assert!((t_star - 1000f64.ln().ln()).abs() <= 2.0);
    let ratio = r["min_length_ratio"].as_f64().unwrap();
    assert!((1.0 / 16.0..=16.0).contains(&ratio));
    assert!(csv.starts_with("t,log10_length,log10_model,ratio\n"));
    // Header plus the grid 0, 0.05, …, ln 1000 + 1.
    let points = ((1000f64.ln() + 1.0) / 0.05).floor() as usize + 1;
    assert_eq!(csv.lines().count(), 1 + points);
}

#[test]
fn example28_rows_stay_finite_where_the_model_underflows() {
    let dir = tempfile::tempdir().unwrap();
    let (code, s, csv) = run_json(dir.path(), "ex", &["example28", "--eps", "1e-4", "--tstep", "0.5"]);
    assert_eq!(code, 0, "{s}");
    for line in csv.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(cols.iter().all(|x| x.is_finite()), "{line}");
    }
}

#[test]
fn identical_configurations_give_identical_csv() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["stretch-audit", "--samples", "2", "--tmax", "0.5", "--tstep", "0.25", "--maxq", "9", "--seed", "17"];
    let (c1, _, a) = run_json(dir.path(), "a", &args);
    let (c2, _, b) = run_json(dir.path(), "b", &args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let mut other = args.to_vec();
    *other.last_mut().unwrap() = "18";
    let (_, _, c) = run_json(dir.path(), "c", &other);
    assert_ne!(a, c, "the seed selects the surfaces");
}

#[test]
fn farey_bound_holds_up_to_denominator_30() {
    let o = stretch(&["farey", "--maxq", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let summary = String::from_utf8(o.stderr).unwrap();
    assert!(summary.lines().any(|l| l == "bound_violations: 0"), "{summary}");
    let csv = String::from_utf8(o.stdout).unwrap();
    assert!(csv.starts_with("intersection,pairs,max_distance,bound,violations\n"));
}

#[test]
fn unit_stretch_moves_at_most_one() {
    let dir = tempfile::tempdir().unwrap();
    for surface in ["s04", "s11"] {
        let (code, s, _) = run_json(dir.path(), surface, &["dist", "--surface", surface, "--maxq", "50"]);
        assert_eq!(code, 0, "{s}");
        assert!(s["results"]["log_ratio"].as_f64().unwrap() <= 1.0 + 1e-9);
    }
}

#[test]
fn shadow_audit_fits_a_finite_constant() {
    let dir = tempfile::tempdir().unwrap();
    let (code, s, csv) = run_json(dir.path(), "sh", &["shadow-audit", "--tstep", "0.25"]);
    assert_eq!(code, 0, "{s}");
    assert!(s["results"]["k"].as_f64().unwrap().is_finite());
    assert_eq!(s["results"]["lipschitz_violations"], 0);
    assert!(csv.starts_with("t,systole_slopes,systole_length,log10_systole_length\n"));
}

#[test]
fn horizontal_certificate_persists_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (code, s, csv) = run_json(dir.path(), "h", &["horizontal", "--alpha", "6/1", "--tmax", "1"]);
    assert_eq!(code, 0, "{s}");
    let r = &s["results"];
    assert_eq!(r["at_tmin"]["certified"], true);
    assert_eq!(r["persistence"]["spacing_kept"], true);
    let cert = serde_json::to_string(&r["at_tmin"]["certificate"]).unwrap();
    let parsed = stretch_core::HorizontalityCertificate64::from_json(&cert).unwrap();
    assert!(parsed.validate());
    let n_s = r["at_tmin"]["n"].as_u64().unwrap() as usize;
    let n_t = r["at_tmax"]["n"].as_u64().unwrap() as usize;
    assert_eq!(csv.lines().count(), 1 + n_s + n_t);
}

#[test]
fn failed_search_exits_one_with_a_header_only_table() {
    let dir = tempfile::tempdir().unwrap();
    let (code, s, csv) = run_json(dir.path(), "h", &["horizontal", "--leaf", "1/1", "--alpha", "5/1", "--n", "50"]);
    assert_eq!(code, 1);
    assert_eq!(s["pass"], false);
    assert_eq!(csv, "t,index,p_x,p_y,q_x,q_y,offset,spacing\n");
}

#[test]
fn out_of_range_times_exit_one() {
    let o = stretch(&["horizontal", "--tmin", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invalid_configurations_exit_two() {
    for args in [
        &["example28", "--eps", "0.7"][..],
        &["example28", "--eps", "0"],
        &["dist", "--tmin", "2", "--tmax", "1"],
        &["farey", "--tstep", "0"],
        &["farey", "--maxq", "0"],
        &["shadow-audit", "--epsB", "-1"],
        &["horizontal", "--leaf", "0/0"],
        &["frobnicate"],
    ] {
        assert_eq!(stretch(args).status.code(), Some(2), "{args:?}");
    }
}
