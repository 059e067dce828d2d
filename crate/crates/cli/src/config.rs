//! Validated run configuration with per-command defaults filled in.

use std::path::PathBuf;

use serde::Serialize;
use stretch_core::thurston::CoarseConstants;

use crate::commands::Failure;
use crate::CommonArgs;

/// Largest number of grid points a command will evaluate.
const MAX_GRID: usize = 100_000;

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub eps: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub t_step: f64,
    pub max_q: u32,
    pub eps_b: f64,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl RunConfig {
    pub fn resolve(command: &'static str, args: &CommonArgs) -> Result<Self, Failure> {
        let eps = args.eps;
        if !(eps > 0.0 && eps < 0.5) {
            return Err(Failure::Config(format!("--eps must lie in (0, 0.5), got {eps}")));
        }
        let horizon = (1.0 / eps).ln();
        let t_min = args.tmin.unwrap_or(0.0);
        let t_max = args.tmax.unwrap_or(match command {
            "example28" | "shadow-audit" => horizon + 1.0,
            "stretch-audit" => 2.0,
            "dist" => t_min + 1.0,
            _ => t_min,
        });
        let max_q = args.maxq.unwrap_or(match command {
            "dist" => 50,
            "horizontal" => 10,
            _ => 30,
        });
        let eps_b = args.eps_b.unwrap_or(CoarseConstants::default().eps_b);
        let cfg = Self { command, eps, t_min, t_max, t_step: args.tstep, max_q, eps_b, out: args.out.clone(), seed: args.seed };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), Failure> {
        let bad = |m: String| Err(Failure::Config(m));
        if !self.t_min.is_finite() || !self.t_max.is_finite() {
            return bad("times must be finite".into());
        }
        if self.t_min > self.t_max {
            return bad(format!("--tmin {} exceeds --tmax {}", self.t_min, self.t_max));
        }
        if !(self.t_step > 0.0) || !self.t_step.is_finite() {
            return bad(format!("--tstep must be positive, got {}", self.t_step));
        }
        if (self.t_max - self.t_min) / self.t_step >= MAX_GRID as f64 {
            return bad(format!("grid would exceed {MAX_GRID} points; increase --tstep"));
        }
        if self.max_q == 0 {
            return bad("--maxq must be at least 1".into());
        }
        if !(self.eps_b > 0.0) || !self.eps_b.is_finite() {
            return bad(format!("--epsB must be positive, got {}", self.eps_b));
        }
        Ok(())
    }

    /// `t_min, t_min + step, …` up to `t_max` (inclusive up to rounding).
    pub fn grid(&self) -> Vec<f64> {
        let n = ((self.t_max - self.t_min) / self.t_step + 1e-9).floor() as usize;
        (0..=n).map(|i| self.t_min + self.t_step * i as f64).collect()
    }
}
