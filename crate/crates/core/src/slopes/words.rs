//! Crossing words of slopes on the standard triangulations, traced from normal coordinates.
//!
//! A simple closed curve meets each edge `e` in `n_e` points (its normal coordinates). Inside
//! a triangle with side counts `n_k`, the arcs cutting off corner `k` number
//! `(n_k + n_{k+2} − n_{k+1})/2`. Points on side `k` are numbered from corner `k`, so the
//! first arcs from side `k` turn left into side `k + 2`, the rest turn right into side `k + 1`.
//!
//! Slope conventions: on the torus the edges `a, b, c` are the curves `0/1, 1/0, 1/1`, so
//! `n = (|p|, q, |p − q|)`. On the sphere (pillowcase picture) the edges `u`, `v` and the cap
//! edges `y` are arcs of slopes `1/0`, `1/2` and `0/1` between punctures, and the `w` edges
//! are loops around the caps; a curve meets an arc of slope `r/s` in `|ps − qr|` points, so
//! `n_u = q`, `n_v = |2p − q|`, `n_y = |p|` and `n_w = 2|p|`. The annulus core curve, which
//! crosses `u` and `v` once each, is the slope `0/1`.

use super::slope::Slope;
use crate::error::{Error, Result};
use crate::shear::{
    s04, s04_triangulation, s11, s11_triangulation, slot, split, CrossingWord, SurfaceKind, Triangulation, Turn,
};

/// Number of intersections of `s` with each edge of the standard triangulation of `kind`.
pub fn normal_coordinates(s: &Slope, kind: SurfaceKind) -> Vec<u64> {
    let (p, q) = (s.p(), s.q());
    match kind {
        SurfaceKind::S11 => {
            let mut n = vec![0; 3];
            n[s11::A] = p.unsigned_abs();
            n[s11::B] = q.unsigned_abs();
            n[s11::C] = (p - q).unsigned_abs();
            n
        }
        SurfaceKind::S04 => {
            let mut n = vec![0; 6];
            n[s04::U] = q.unsigned_abs();
            n[s04::V] = (2 * p - q).unsigned_abs();
            n[s04::YT] = p.unsigned_abs();
            n[s04::YB] = p.unsigned_abs();
            n[s04::WT] = 2 * p.unsigned_abs();
            n[s04::WB] = 2 * p.unsigned_abs();
            n
        }
    }
}

/// The standard triangulation of `kind`, against which slope words are defined.
pub fn standard_triangulation(kind: SurfaceKind) -> std::sync::Arc<Triangulation> {
    match kind {
        SurfaceKind::S11 => s11_triangulation(),
        SurfaceKind::S04 => s04_triangulation(),
    }
}

/// Traces the curve with the given normal coordinates; errors unless it is one component.
pub fn trace_normal_curve(tri: &Triangulation, n: &[u64]) -> Result<CrossingWord> {
    let total: u64 = n.iter().sum();
    let start_edge = n
        .iter()
        .position(|&x| x > 0)
        .ok_or_else(|| Error::NonEssentialSlope("curve misses every edge".into()))?;
    for t in 0..tri.n_triangles() {
        let c: Vec<u64> = (0..3).map(|k| n[tri.edge(slot(t, k))]).collect();
        for k in 0..3 {
            let twice = c[k] + c[(k + 2) % 3];
            if twice < c[(k + 1) % 3] || (twice - c[(k + 1) % 3]) % 2 == 1 {
                return Err(Error::NonEssentialSlope(format!("triangle inequality fails in triangle {t}")));
            }
        }
    }
    let start = tri.slot_of_edge(start_edge).expect("edge exists");
    let mut slots = Vec::new();
    let (mut s, mut pos) = (start, 0u64);
    loop {
        slots.push(s);
        if slots.len() as u64 > total {
            return Err(Error::NonEssentialSlope("tracing did not close".into()));
        }
        let entry = tri.partner(s);
        let cnt = n[tri.edge(entry)];
        let in_pos = cnt - 1 - pos;
        let (t, k) = split(entry);
        let nk = |j: usize| n[tri.edge(slot(t, j % 3))];
        let corner = (nk(k) + nk(k + 2) - nk(k + 1)) / 2;
        let (exit, out_pos) = if in_pos < corner {
            ((k + 2) % 3, nk(k + 2) - 1 - in_pos)
        } else {
            ((k + 1) % 3, nk(k) - 1 - in_pos)
        };
        s = slot(t, exit);
        pos = out_pos;
        if s == start && pos == 0 {
            break;
        }
    }
    if slots.len() as u64 != total {
        return Err(Error::NonEssentialSlope(format!(
            "normal curve has several components ({} of {} crossings traced)",
            slots.len(),
            total
        )));
    }
    CrossingWord::from_slots(tri, &slots)
}

/// Crossing word of `s` on the standard triangulation of `kind`.
pub fn slope_word(s: &Slope, kind: SurfaceKind) -> Result<CrossingWord> {
    let tri = standard_triangulation(kind);
    trace_normal_curve(&tri, &normal_coordinates(s, kind))
}

/// Crossing word of `s` on the surface's triangulation, which must be a standard one.
pub fn slope_to_word<T>(s: &Slope, surface: &crate::shear::ShearSurface<T>) -> Result<CrossingWord>
where
    T: crate::Real,
{
    let kind = surface.triangulation().kind();
    if *surface.triangulation() != *standard_triangulation(kind) {
        return Err(Error::Incompatible("slopes are only defined on the standard triangulations".into()));
    }
    slope_word(s, kind)
}

/// Edge sequence of a slope word, ready for repeated trace evaluation.
pub fn slope_edges(s: &Slope, kind: SurfaceKind) -> Result<Vec<(usize, Turn)>> {
    let tri = standard_triangulation(kind);
    slope_word(s, kind)?.edges(&tri)
}
