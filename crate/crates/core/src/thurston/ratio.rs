//! Lower bounds on the Thurston distance from length ratios of enumerated curves.

use serde::Serialize;

use super::catalog::catalog;
use crate::error::{Error, Result};
use crate::shear::ShearSurface;
use crate::slopes::Slope;
use crate::Real;

/// `max log(ℓ_Y(α)/ℓ_X(α))` over the enumerated slopes, with the full table.
#[derive(Debug, Clone, Serialize)]
pub struct RatioReport<T> {
    pub best_slope: Slope,
    pub log_ratio: T,
    pub max_q: u32,
    pub table: Vec<(Slope, T)>,
}

/// Supremum of log length ratios over `enumerate_slopes(max_q)`: a lower bound for `d_L(X, Y)`.
///
/// Ties are broken by enumeration order.
pub fn sup_length_ratio<T: Real>(x: &ShearSurface<T>, y: &ShearSurface<T>, max_q: u32) -> Result<RatioReport<T>> {
    let kind = x.triangulation().kind();
    if !x.same_triangulation(y) {
        return Err(Error::Incompatible("surfaces use different triangulations".into()));
    }
    x.check_complete()?;
    y.check_complete()?;
    let cat = catalog(kind, max_q);
    let lx = cat.lengths(x)?;
    let ly = cat.lengths(y)?;
    let table: Vec<(Slope, T)> = cat
        .slopes
        .iter()
        .zip(lx.iter().zip(ly.iter()))
        .map(|(s, (a, b))| (*s, b.ln() - a.ln()))
        .collect();
    let (best_slope, log_ratio) = table
        .iter()
        .fold(None, |acc: Option<(Slope, T)>, &(s, r)| match acc {
            Some((_, best)) if best >= r => acc,
            _ => Some((s, r)),
        })
        .ok_or(Error::Empty)?;
    Ok(RatioReport { best_slope, log_ratio, max_q, table })
}
