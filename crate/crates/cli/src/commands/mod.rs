//! One function per subcommand. Each returns the CSV text, a summary document and a verdict.

mod audits;
mod example28;
mod farey;
mod horizontal;

use serde::Serialize;
use serde_json::{json, Value};

pub use audits::{dist, shadow_audit, stretch_audit, SurfaceChoice};
pub use example28::example28;
pub use farey::farey;
pub use horizontal::{horizontal, HorizontalOpts};

use crate::config::RunConfig;

/// Version of the summary document layout.
pub const SCHEMA: u32 = 1;

#[derive(Debug)]
pub enum Failure {
    /// Invalid flags; exit status 2.
    Config(String),
    /// The computation itself failed (typically shears beyond floating-point range); exit 1.
    Compute(stretch_core::Error),
}

impl From<stretch_core::Error> for Failure {
    fn from(e: stretch_core::Error) -> Self {
        Failure::Compute(e)
    }
}

#[derive(Debug)]
pub struct Report {
    pub csv: String,
    pub summary: Value,
    pub pass: bool,
}

impl Report {
    fn new(cfg: &RunConfig, csv: String, results: Value, pass: bool) -> Self {
        let summary = json!({
            "schema": SCHEMA,
            "command": cfg.command,
            "config": cfg,
            "results": results,
            "pass": pass,
        });
        Report { csv, summary, pass }
    }
}

/// Serializes rows under the header derived from the row type's field names.
fn to_csv<R: Serialize>(rows: &[R]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

/// `key: value` lines for the top-level results, then the verdict.
pub fn summary_text(summary: &Value) -> String {
    let mut out = String::new();
    if let Some(Value::Object(results)) = summary.get("results") {
        for (k, v) in results {
            match v {
                Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                other => out.push_str(&format!("{k}: {other}\n")),
            }
        }
    }
    let pass = summary.get("pass").and_then(Value::as_bool).unwrap_or(false);
    out.push_str(if pass { "result: PASS\n" } else { "result: FAIL\n" });
    out
}
