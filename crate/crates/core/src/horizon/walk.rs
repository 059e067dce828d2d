//! Lifts of leaves and the triangle strip a lift passes through.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyp2::{Geodesic, HPoint, Ideal, MoebiusMap};
use crate::shear::{
    crossing_matrix, edge_geodesic, holonomy_axis, slot, split, standard_vertices, CrossingWord, ShearSurface,
};
use crate::Real;

/// A leaf of the lamination: a triangulation edge, or a closed curve given by its word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Leaf {
    Edge(usize),
    Word(CrossingWord),
}

impl Leaf {
    /// Triangle in whose standard frame [`leaf_lift`] is expressed.
    pub fn base_triangle<T: Real>(&self, surface: &ShearSurface<T>) -> Result<usize> {
        match self {
            Leaf::Edge(e) => surface
                .triangulation()
                .slot_of_edge(*e)
                .map(|s| split(s).0)
                .ok_or_else(|| Error::InvalidWord(format!("edge {e} does not exist"))),
            Leaf::Word(w) => {
                w.slots(surface.triangulation())?;
                Ok(split(w.start).0)
            }
        }
    }
}

/// The base lift of `leaf`: the developed edge in its first triangle, or the oriented axis of
/// the holonomy of the word (in the frame of the word's start triangle).
pub fn leaf_lift<T: Real>(surface: &ShearSurface<T>, leaf: &Leaf) -> Result<Geodesic<T>> {
    match leaf {
        Leaf::Edge(e) => {
            let g = edge_geodesic(surface, *e)?;
            Geodesic::oriented(g.start, g.end)
        }
        Leaf::Word(w) => {
            if w.is_empty() {
                return Err(Error::InvalidWord("empty word has no axis".into()));
            }
            holonomy_axis(surface, w)
        }
    }
}

/// One developed triangle met by a lift, with the parameter interval the lift spends in it.
///
/// The copy's frame is stored factored as `D(offset) ∘ local`, where `D(s)` translates the
/// imaginary axis by `s` (`z ↦ eˢ z`) and `local` stays bounded; composing unfactored frames
/// along a long strip loses all relative precision in their small entries.
#[derive(Debug, Clone, PartialEq)]
pub struct StripCopy<T> {
    pub triangle: usize,
    pub offset: T,
    pub local: MoebiusMap<T>,
    /// Parameters along the lift where it enters and leaves this copy (infinite towards a cusp
    /// or for a lift lying on a side).
    pub enter: T,
    pub leave: T,
    /// Edges crossed on the way from the base copy to this one.
    pub path: Vec<usize>,
}

fn scale<T: Real>(z: Ideal<T>, k: T) -> Ideal<T> {
    match z {
        Ideal::Finite(x) => Ideal::Finite(x * k),
        Ideal::Infinity => Ideal::Infinity,
    }
}

impl<T: Real> StripCopy<T> {
    /// Maps the standard triangle onto this copy (entries grow like `e^{|offset|/2}`).
    pub fn frame(&self) -> MoebiusMap<T> {
        MoebiusMap::translation(self.offset).compose(&self.local)
    }

    /// Image of a geodesic given in the standard frame of this copy's triangle.
    pub fn image(&self, g: &Geodesic<T>) -> Geodesic<T> {
        let k = self.offset.exp();
        let g = g.image(&self.local);
        Geodesic { start: scale(g.start, k), end: scale(g.end, k), oriented: g.oriented }
    }

    /// Vertices in the leaf frame.
    pub fn vertices(&self) -> [Ideal<T>; 3] {
        let k = self.offset.exp();
        standard_vertices::<T>().map(|z| scale(self.local.apply_ideal(z), k))
    }

    fn local_sides(&self) -> Result<[Geodesic<T>; 3]> {
        let v = standard_vertices::<T>().map(|z| self.local.apply_ideal(z));
        // vertices merging in floating point: the strip has left the representable range
        let side = |a: Ideal<T>, b: Ideal<T>| Geodesic::new(a, b).map_err(|_| Error::Overflow);
        Ok([side(v[0], v[1])?, side(v[1], v[2])?, side(v[2], v[0])?])
    }

    /// Parameters at which the imaginary axis crosses each side of this copy.
    fn side_params(&self) -> Result<[Option<T>; 3]> {
        let axis = Geodesic::imaginary_axis();
        let sides = self.local_sides()?;
        Ok([0, 1, 2].map(|k| axis.crossing_param(&sides[k]).map(|p| p + self.offset)))
    }

    /// The copy across side `k`, re-centred at parameter `at`.
    fn neighbour(&self, surface: &ShearSurface<T>, k: usize, at: T) -> (Self, usize) {
        let tri = surface.triangulation();
        let sl = slot(self.triangle, k);
        let local = MoebiusMap::translation(self.offset - at)
            .compose(&self.local)
            .compose(&crossing_matrix(surface, sl));
        let (t2, k2) = split(tri.partner(sl));
        let mut path = self.path.clone();
        path.push(tri.edge(sl));
        (Self { triangle: t2, offset: at, local, enter: at, leave: at, path }, k2)
    }
}

/// The copies of triangles met by `lift` while its parameter runs over `[a, b]`, ordered along
/// the lift. `lift` is given in the standard frame of `base_triangle` and must meet it.
///
/// Copies are expressed in the *leaf frame*, the image of the base frame under
/// `lift.standardizer()`, where the lift is the imaginary axis and its parameter `s` is the
/// point `i eˢ`. Far-apart copies then live at different scales instead of piling up near the
/// endpoints of the lift.
///
/// A lift lying on a side of the base copy (an edge leaf) meets exactly the two copies sharing
/// that side.
pub fn leaf_strip<T: Real>(
    surface: &ShearSurface<T>,
    base_triangle: usize,
    lift: &Geodesic<T>,
    arc: (T, T),
    depth: usize,
) -> Result<Vec<StripCopy<T>>> {
    let (a, b) = arc;
    if a.is_nan() || b.is_nan() || a > b {
        return Err(Error::InvalidParameter("arc must satisfy a <= b".into()));
    }
    let tri = surface.triangulation();
    if base_triangle >= tri.n_triangles() {
        return Err(Error::InvalidParameter(format!("triangle {base_triangle} does not exist")));
    }
    let inf = T::infinity();
    let tol = T::geom_tol();
    let mut base = StripCopy {
        triangle: base_triangle,
        offset: T::zero(),
        local: lift.standardizer(),
        enter: -inf,
        leave: inf,
        path: vec![],
    };

    let axis = Geodesic::imaginary_axis();
    if let Some(k) = base.local_sides()?.iter().position(|s| s.approx_eq(&axis, tol)) {
        let (mut other, _) = base.neighbour(surface, k, T::zero());
        other.enter = -inf;
        other.leave = inf;
        return Ok(vec![base, other]);
    }

    let params: Vec<(usize, T)> =
        base.side_params()?.iter().enumerate().filter_map(|(k, p)| p.map(|p| (k, p))).collect();
    let by_param = |x: &(usize, T), y: &(usize, T)| x.1.partial_cmp(&y.1).expect("finite parameters");
    let lo = *params.iter().min_by(|x, y| by_param(x, y)).ok_or_else(|| {
        Error::InvalidParameter("lift does not meet the base triangle".into())
    })?;
    let hi = *params.iter().max_by(|x, y| by_param(x, y)).expect("nonempty");
    let (exit_fwd, exit_bwd) = if params.len() == 1 {
        // the lift ends at the vertex opposite the crossed side
        let opposite = base.vertices()[(lo.0 + 2) % 3];
        if opposite.approx_eq(&Ideal::Infinity, tol) {
            (None, Some(lo))
        } else {
            (Some(lo), None)
        }
    } else {
        (Some(hi), Some(lo))
    };
    base.enter = exit_bwd.map_or(-inf, |x| x.1);
    base.leave = exit_fwd.map_or(inf, |x| x.1);

    let mut budget = depth.saturating_sub(1);
    let mut forward = Vec::new();
    if let Some(exit) = exit_fwd {
        walk(surface, &base, exit, b, true, &mut budget, &mut forward, depth)?;
    }
    let mut backward = Vec::new();
    if let Some(exit) = exit_bwd {
        walk(surface, &base, exit, a, false, &mut budget, &mut backward, depth)?;
    }
    let mut out: Vec<StripCopy<T>> = backward.into_iter().rev().collect();
    out.push(base);
    out.extend(forward);
    Ok(out)
}

/// The strip of a leaf over the parameter arc `[a, b]`, in the leaf frame of [`leaf_lift`].
///
/// For a closed leaf only the copies of one period, centred on the base copy, are developed;
/// the rest are their images under the holonomy, which in the leaf frame is exactly `z ↦ eˡ z`.
/// Walking the whole arc instead would follow the computed axis, which separates from the true
/// leaf like `eˢ` times its rounding error.
pub fn leaf_copies<T: Real>(surface: &ShearSurface<T>, leaf: &Leaf, arc: (T, T), depth: usize) -> Result<Vec<StripCopy<T>>> {
    let base = leaf.base_triangle(surface)?;
    let lift = leaf_lift(surface, leaf)?;
    let w = match leaf {
        Leaf::Edge(_) => return leaf_strip(surface, base, &lift, arc, depth),
        Leaf::Word(w) => w,
    };
    let (a, b) = arc;
    if a.is_nan() || b.is_nan() || a > b {
        return Err(Error::InvalidParameter("arc must satisfy a <= b".into()));
    }
    let period = crate::shear::curve_length(surface, w)?;
    let n = w.len();
    let reach = period * T::lit(0.6);
    let one = leaf_strip(surface, base, &lift, (-reach, reach), depth)?;
    let b0 = one.iter().position(|c| c.path.is_empty()).expect("strip contains its base copy");
    if one.len() <= n {
        return Err(Error::Overflow);
    }
    // one period on, the walk must meet the same triangles, with the interior boundaries
    // shifted by exactly the period; otherwise it has followed the computed axis off the leaf
    // (the outermost boundaries, deep in cusps, are ill-conditioned and not compared)
    let tol = T::lit(1e-6) * (T::one() + period);
    let periodic = (0..one.len() - n).all(|i| one[i].triangle == one[i + n].triangle)
        && (0..one.len() - n - 1).all(|i| (one[i + n].leave - one[i].leave - period).abs() <= tol);
    if !periodic {
        return Err(Error::Overflow);
    }
    // the period of copies centred on the base copy, whose frames are the most accurate
    let j0 = b0.saturating_sub(n / 2).min(one.len() - n - 1);
    let last_edge = |c: &StripCopy<T>| c.path[c.path.len() - 1];
    // edge crossed between copies g and g + 1 (indices into `one`, extended periodically)
    let edges: Vec<usize> =
        (j0..j0 + n).map(|g| if g < b0 { last_edge(&one[g]) } else { last_edge(&one[g + 1]) }).collect();
    let edge = |g: i64| edges[(g - j0 as i64).rem_euclid(n as i64) as usize];
    let anchor = one[j0].leave;
    let to_i64 = |x: T| x.to_f64_lossy().floor() as i64;
    let lo = to_i64((a - anchor) / period) - 1;
    let hi = to_i64((b - anchor) / period) + 1;
    let mut out = Vec::new();
    for k in lo..=hi {
        let shift = T::lit(k as f64) * period;
        for (j, c) in one[j0..j0 + n].iter().enumerate() {
            let (enter, leave) = (c.enter + shift, c.leave + shift);
            let g = (j0 + j) as i64 + k * n as i64;
            let r = g - b0 as i64;
            if !(leave > a && enter < b) && r != 0 {
                continue;
            }
            if out.len() >= depth {
                return Err(Error::DepthExceeded(depth));
            }
            let path: Vec<usize> = if r >= 0 {
                (0..r).map(|i| edge(b0 as i64 + i)).collect()
            } else {
                (0..-r).map(|i| edge(b0 as i64 - 1 - i)).collect()
            };
            out.push(StripCopy { triangle: c.triangle, offset: c.offset + shift, local: c.local, enter, leave, path });
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk<T: Real>(
    surface: &ShearSurface<T>,
    start: &StripCopy<T>,
    exit: (usize, T),
    target: T,
    forward: bool,
    budget: &mut usize,
    out: &mut Vec<StripCopy<T>>,
    depth: usize,
) -> Result<()> {
    let (mut k, mut s) = exit;
    let mut current = start.clone();
    let past = |x: T| if forward { x >= target } else { x <= target };
    while !past(s) {
        if *budget == 0 {
            return Err(Error::DepthExceeded(depth));
        }
        *budget -= 1;
        let (mut next, entry) = current.neighbour(surface, k, s);
        if !next.local.is_finite() {
            return Err(Error::Overflow);
        }
        let params = next.side_params()?;
        let further = (0..3)
            .filter(|&j| j != entry)
            .filter_map(|j| params[j].map(|p| (j, p)))
            .filter(|x| if forward { x.1 >= s } else { x.1 <= s })
            .max_by(|x, y| {
                let o = x.1.partial_cmp(&y.1).expect("finite parameters");
                if forward {
                    o
                } else {
                    o.reverse()
                }
            });
        let far = match further {
            Some((_, p)) => p,
            None if forward => T::infinity(),
            None => T::neg_infinity(),
        };
        (next.enter, next.leave) = if forward { (s, far) } else { (far, s) };
        out.push(next.clone());
        match further {
            Some((j, p)) => {
                k = j;
                s = p;
                current = next;
            }
            None => break,
        }
    }
    Ok(())
}

/// A point where a lift of the anchor crosses the leaf lift.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaCrossing<T> {
    pub p: HPoint<T>,
    /// Arclength parameter of `p` along the leaf lift.
    pub param: T,
    pub gamma_lift: Geodesic<T>,
}

/// Axes of `w` read from each of its passages, keyed by the triangle of the passage; each axis
/// is in that triangle's standard frame and passes through its base copy.
pub(crate) fn passage_axes<T: Real>(surface: &ShearSurface<T>, w: &CrossingWord) -> Result<Vec<(usize, Geodesic<T>)>> {
    let tri = surface.triangulation();
    let slots = w.slots(tri)?;
    (0..slots.len())
        .map(|j| {
            Ok((split(slots[j]).0, holonomy_axis(surface, &w.rotate(tri, j)?)?))
        })
        .collect()
}

/// Lifts of `gamma` crossing `lambda_lift` at parameters in `[a, b]`, ordered along the lift.
///
/// Walks the strip of `lambda_lift` (given in the frame of `base_triangle`) and collects, in
/// each copy, the lifts of `gamma` through it. Points and lifts are returned in the leaf frame
/// of [`leaf_strip`].
pub fn gamma_crossings<T: Real>(
    surface: &ShearSurface<T>,
    base_triangle: usize,
    lambda_lift: &Geodesic<T>,
    gamma: &CrossingWord,
    arc: (T, T),
    depth: usize,
) -> Result<Vec<GammaCrossing<T>>> {
    let strip = leaf_strip(surface, base_triangle, lambda_lift, arc, depth)?;
    let axes = passage_axes(surface, gamma)?;
    Ok(crossings_on_strip(&strip, &axes, &Geodesic::imaginary_axis(), arc))
}

/// Lifts of `gamma` crossing the lift of `leaf` at parameters in `[a, b]`, in the leaf frame.
pub fn leaf_crossings<T: Real>(
    surface: &ShearSurface<T>,
    leaf: &Leaf,
    gamma: &CrossingWord,
    arc: (T, T),
    depth: usize,
) -> Result<Vec<GammaCrossing<T>>> {
    let strip = leaf_copies(surface, leaf, arc, depth)?;
    let axes = passage_axes(surface, gamma)?;
    Ok(crossings_on_strip(&strip, &axes, &Geodesic::imaginary_axis(), arc))
}

pub(crate) fn crossings_on_strip<T: Real>(
    strip: &[StripCopy<T>],
    axes: &[(usize, Geodesic<T>)],
    lambda_lift: &Geodesic<T>,
    arc: (T, T),
) -> Vec<GammaCrossing<T>> {
    let mut found: Vec<GammaCrossing<T>> = Vec::new();
    for c in strip {
        for (t, axis) in axes {
            if *t != c.triangle {
                continue;
            }
            let g = c.image(axis);
            let Some(param) = lambda_lift.crossing_param(&g) else { continue };
            if param < arc.0 || param > arc.1 {
                continue;
            }
            let Some(p) = lambda_lift.intersection(&g) else { continue };
            found.push(GammaCrossing { p, param, gamma_lift: g });
        }
    }
    found.sort_by(|x, y| x.param.partial_cmp(&y.param).expect("finite parameters"));
    // the same lift is met from each copy it passes through; distinct lifts of a simple curve
    // cross the leaf at distinct points
    let merge = T::lit(1e-7);
    let mut out: Vec<GammaCrossing<T>> = Vec::with_capacity(found.len());
    for f in found {
        match out.last() {
            Some(last) if (f.param - last.param).abs() <= merge * (T::one() + f.param.abs()) => {}
            _ => out.push(f),
        }
    }
    out
}
