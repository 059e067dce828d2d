//! Developing triangles of a surface into the upper half-plane.

use serde::{Deserialize, Serialize};

use super::holonomy::crossing_matrix;
use super::surface::ShearSurface;
use super::triangulation::split;
use super::word::CrossingWord;
use crate::error::{Error, Result};
use crate::hyp2::{Geodesic, Ideal, MoebiusMap};
use crate::scalar::Real;

/// Default cap on the number of developed triangles.
pub const DEFAULT_MAX_DEPTH: usize = 10_000;

/// Vertices of the standard triangle, indexed by corner.
pub fn standard_vertices<T: Real>() -> [Ideal<T>; 3] {
    [Ideal::Finite(T::zero()), Ideal::Infinity, Ideal::Finite(-T::one())]
}

/// One developed copy of a triangle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DevelopedTriangle<T> {
    pub triangle: usize,
    /// Maps the standard triangle onto this copy.
    pub frame: MoebiusMap<T>,
    pub vertices: [Ideal<T>; 3],
    /// Side through which the strip continues (none for the last copy of a leaf strip).
    pub exit_side: Option<usize>,
    /// Side through which this copy was entered (none for the first copy).
    pub entry_side: Option<usize>,
}

impl<T: Real> DevelopedTriangle<T> {
    fn new(triangle: usize, frame: MoebiusMap<T>, entry_side: Option<usize>, exit_side: Option<usize>) -> Self {
        let v = standard_vertices::<T>();
        let vertices = [frame.apply_ideal(v[0]), frame.apply_ideal(v[1]), frame.apply_ideal(v[2])];
        Self { triangle, frame, vertices, exit_side, entry_side }
    }

    /// Developed image of side `k` (from corner `k` to corner `k + 1`).
    pub fn side(&self, k: usize) -> Result<Geodesic<T>> {
        Geodesic::new(self.vertices[k % 3], self.vertices[(k + 1) % 3])
    }
}

/// What to develop: the strip of a closed word, or the two triangles along one edge.
#[derive(Debug, Clone, Copy)]
pub enum DevelopTarget<'a> {
    Word(&'a CrossingWord),
    Leaf(usize),
}

/// Develops `depth` triangles, starting with the base copy of the first triangle in its
/// standard frame. A word strip repeats the word periodically.
pub fn develop<T: Real>(
    surface: &ShearSurface<T>,
    target: DevelopTarget<'_>,
    depth: usize,
) -> Result<Vec<DevelopedTriangle<T>>> {
    develop_with_limit(surface, target, depth, DEFAULT_MAX_DEPTH)
}

pub fn develop_with_limit<T: Real>(
    surface: &ShearSurface<T>,
    target: DevelopTarget<'_>,
    depth: usize,
    max_depth: usize,
) -> Result<Vec<DevelopedTriangle<T>>> {
    if depth > max_depth {
        return Err(Error::DepthExceeded(max_depth));
    }
    if depth == 0 {
        return Err(Error::InvalidParameter("depth must be positive".into()));
    }
    let tri = surface.triangulation();
    let slots = match target {
        DevelopTarget::Word(w) => {
            let s = w.slots(tri)?;
            if s.is_empty() {
                return Err(Error::InvalidWord("empty word has no strip".into()));
            }
            s
        }
        DevelopTarget::Leaf(e) => {
            let s = tri
                .slot_of_edge(e)
                .ok_or_else(|| Error::InvalidWord(format!("edge {e} does not exist")))?;
            vec![s]
        }
    };
    let mut out = Vec::new();
    let mut frame = MoebiusMap::identity();
    if let DevelopTarget::Leaf(_) = target {
        let s = slots[0];
        let (t, k) = split(s);
        out.push(DevelopedTriangle::new(t, frame, None, Some(k)));
        if depth >= 2 {
            let (t2, k2) = split(tri.partner(s));
            frame = frame.compose(&crossing_matrix(surface, s));
            out.push(DevelopedTriangle::new(t2, frame, Some(k2), None));
        }
        return Ok(out);
    }
    let mut entry: Option<usize> = None;
    for i in 0..depth {
        let s = slots[i % slots.len()];
        let (t, k) = split(s);
        if !frame.is_finite() {
            return Err(Error::Overflow);
        }
        out.push(DevelopedTriangle::new(t, frame, entry, Some(k)));
        frame = frame.compose(&crossing_matrix(surface, s));
        entry = Some(split(tri.partner(s)).1);
    }
    Ok(out)
}

/// The geodesic of edge `e` in the base copy of the first triangle carrying it.
pub fn edge_geodesic<T: Real>(surface: &ShearSurface<T>, e: usize) -> Result<Geodesic<T>> {
    let s = surface
        .triangulation()
        .slot_of_edge(e)
        .ok_or_else(|| Error::InvalidWord(format!("edge {e} does not exist")))?;
    let (_, k) = split(s);
    let v = standard_vertices::<T>();
    Geodesic::new(v[k], v[(k + 1) % 3])
}
