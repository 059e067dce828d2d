//! Cached crossing words of enumerated slopes; words depend only on the triangulation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::shear::{length_edges, ShearSurface, SurfaceKind, Turn};
use crate::slopes::{enumerate_slopes, slope_edges, standard_triangulation, Slope};
use crate::Real;

/// Enumerated slopes of one surface type with their edge sequences.
#[derive(Debug)]
pub struct SlopeCatalog {
    pub kind: SurfaceKind,
    pub max_q: u32,
    pub slopes: Vec<Slope>,
    pub edges: Vec<Vec<(usize, Turn)>>,
}

impl SlopeCatalog {
    fn build(kind: SurfaceKind, max_q: u32) -> Self {
        let slopes = enumerate_slopes(max_q);
        let edges = slopes
            .par_iter()
            .map(|s| slope_edges(s, kind).expect("enumerated slopes are essential"))
            .collect();
        Self { kind, max_q, slopes, edges }
    }

    /// Lengths of every catalogued slope on `surface`.
    pub fn lengths<T: Real>(&self, surface: &ShearSurface<T>) -> Result<Vec<T>> {
        ensure_standard(surface, self.kind)?;
        let shears = surface.shears();
        self.edges.par_iter().map(|e| length_edges(shears, e)).collect()
    }
}

/// The shared catalog for `(kind, max_q)`.
pub fn catalog(kind: SurfaceKind, max_q: u32) -> Arc<SlopeCatalog> {
    static CACHE: OnceLock<Mutex<HashMap<(SurfaceKind, u32), Arc<SlopeCatalog>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("catalog cache").get(&(kind, max_q)) {
        return Arc::clone(c);
    }
    let built = Arc::new(SlopeCatalog::build(kind, max_q));
    let mut guard = cache.lock().expect("catalog cache");
    Arc::clone(guard.entry((kind, max_q)).or_insert(built))
}

pub(crate) fn ensure_standard<T: Real>(surface: &ShearSurface<T>, kind: SurfaceKind) -> Result<()> {
    if surface.triangulation().kind() != kind || *surface.triangulation() != *standard_triangulation(kind) {
        return Err(Error::Incompatible(format!(
            "surface is not on the standard {kind:?} triangulation"
        )));
    }
    Ok(())
}

/// Length of an arbitrary slope on a standard surface.
pub fn slope_length<T: Real>(surface: &ShearSurface<T>, s: &Slope) -> Result<T> {
    let kind = surface.triangulation().kind();
    ensure_standard(surface, kind)?;
    length_edges(surface.shears(), &slope_edges(s, kind)?)
}
