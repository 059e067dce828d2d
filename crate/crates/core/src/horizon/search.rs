//! Searching for horizontal lifts, and comparing certificates along a stretch path.

use serde::Serialize;

use super::certificate::{HorizontalityCertificate, WitnessPoint};
use super::walk::{crossings_on_strip, leaf_copies, leaf_lift, passage_axes, GammaCrossing, Leaf, StripCopy};
use crate::error::{Error, Result};
use crate::hyp2::{dist, Geodesic};
use crate::shear::{curve_length, ShearSurface, StretchPath, DEFAULT_MAX_DEPTH};
use crate::slopes::{enumerate_slopes, intersection_number, slope_to_word, Slope};
use crate::thurston::catalog;
use crate::Real;

/// Which part of the leaf lift is searched.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Window<T> {
    /// Parameters `[a, b]` along the lift.
    Arc(T, T),
    /// `m` periods of a closed leaf, centred on the base point of its axis. For an edge leaf
    /// the whole edge is used.
    Periods(u32),
}

/// Everything `check_horizontal` needs besides the surface.
#[derive(Debug, Clone, PartialEq)]
pub struct HorizontalQuery<T> {
    pub alpha: Slope,
    pub gamma: Slope,
    pub leaf: Leaf,
    pub n: usize,
    pub l: T,
    pub eps_b: T,
    pub window: Window<T>,
    pub depth: usize,
}

impl<T: Real> HorizontalQuery<T> {
    pub fn new(alpha: Slope, gamma: Slope, leaf: Leaf, n: usize, l: T, eps_b: T) -> Self {
        Self { alpha, gamma, leaf, n, l, eps_b, window: Window::Periods(4), depth: DEFAULT_MAX_DEPTH }
    }

    pub fn with_window(mut self, window: Window<T>) -> Self {
        self.window = window;
        self
    }
}

/// Result of a search: a certificate meeting the requested `(n, L)`, or the best found.
#[derive(Debug, Clone, PartialEq)]
pub enum Horizontality<T> {
    Certified(HorizontalityCertificate<T>),
    /// No lift within the search reached `n` points; `best_n` points were found with spacing
    /// `best_l` (the search is depth-relative, so this is not a proof of non-horizontality).
    NotFound { best_n: usize, best_l: T, best: Option<HorizontalityCertificate<T>> },
}

impl<T: Real> Horizontality<T> {
    pub fn certificate(&self) -> Option<&HorizontalityCertificate<T>> {
        match self {
            Horizontality::Certified(c) => Some(c),
            Horizontality::NotFound { .. } => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Horizontality::Certified(_))
    }
}

fn resolve_arc<T: Real>(surface: &ShearSurface<T>, leaf: &Leaf, window: Window<T>) -> Result<(T, T)> {
    match (window, leaf) {
        (Window::Arc(a, b), _) => Ok((a, b)),
        (Window::Periods(_), Leaf::Edge(_)) => Ok((T::neg_infinity(), T::infinity())),
        (Window::Periods(m), Leaf::Word(w)) => {
            let half = curve_length(surface, w)? * T::lit(f64::from(m)) / T::lit(2.0);
            Ok((-half, half))
        }
    }
}

/// Greedy choice of eligible crossings with spacing at least `l`; optimal for the count.
fn spaced<T: Real>(eligible: &[(usize, crate::hyp2::HPoint<T>)], crossings: &[GammaCrossing<T>], l: T) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for (k, (i, _)) in eligible.iter().enumerate() {
        match chosen.last() {
            Some(&last) if dist(&crossings[eligible[last].0].p, &crossings[*i].p) < l => {}
            _ => chosen.push(k),
        }
    }
    chosen
}

/// Searches for an `(n, L)`-horizontal lift of `alpha` along `leaf` with anchor `gamma`.
///
/// Candidate lifts of `α` are the axes of its conjugates read off the copies of the leaf
/// strip; a candidate's witnesses are the anchor lifts it crosses within `eps_b` of the
/// leaf. Returns the certificate with the most points (ties: larger spacing, then first found).
pub fn check_horizontal<T: Real>(surface: &ShearSurface<T>, query: &HorizontalQuery<T>) -> Result<Horizontality<T>> {
    if !(query.l >= T::zero()) || !(query.eps_b > T::zero()) {
        return Err(Error::InvalidParameter("need L >= 0 and eps_B > 0".into()));
    }
    let gamma_word = slope_to_word(&query.gamma, surface)?;
    let gamma_len = curve_length(surface, &gamma_word)?;
    if gamma_len > query.eps_b {
        return Err(Error::AnchorNotShort { length: gamma_len.to_f64_lossy(), eps_b: query.eps_b.to_f64_lossy() });
    }
    let alpha_word = slope_to_word(&query.alpha, surface)?;
    let arc = resolve_arc(surface, &query.leaf, query.window)?;
    let strip = leaf_copies(surface, &query.leaf, arc, query.depth)?;
    let leaf_frame = leaf_lift(surface, &query.leaf)?.standardizer();
    let lift = Geodesic::imaginary_axis();
    let crossings = crossings_on_strip(&strip, &passage_axes(surface, &gamma_word)?, &lift, arc);
    let alpha_axes = passage_axes(surface, &alpha_word)?;

    let mut best: Option<(usize, T, Geodesic<T>, &StripCopy<T>, Vec<WitnessPoint<T>>)> = None;
    for copy in &strip {
        for (t, axis) in &alpha_axes {
            if *t != copy.triangle {
                continue;
            }
            let a = copy.image(axis);
            let eligible: Vec<(usize, crate::hyp2::HPoint<T>)> = crossings
                .iter()
                .enumerate()
                .filter_map(|(i, c)| {
                    let q = c.gamma_lift.intersection(&a)?;
                    (dist(&c.p, &q) <= query.eps_b).then_some((i, q))
                })
                .collect();
            let chosen = spaced(&eligible, &crossings, query.l);
            let points: Vec<WitnessPoint<T>> = chosen
                .iter()
                .map(|&k| {
                    let (i, q) = eligible[k];
                    WitnessPoint { p: crossings[i].p, q, gamma_lift: crossings[i].gamma_lift }
                })
                .collect();
            let spacing = points.windows(2).map(|w| dist(&w[0].p, &w[1].p)).fold(T::infinity(), T::min);
            let better = match &best {
                None => !points.is_empty(),
                Some((n, s, ..)) => points.len() > *n || (points.len() == *n && spacing > *s),
            };
            if better {
                best = Some((points.len(), spacing, a, copy, points));
            }
        }
    }

    let Some((n, spacing, alpha_lift, copy, points)) = best else {
        return Ok(Horizontality::NotFound { best_n: 0, best_l: T::zero(), best: None });
    };
    let cert = HorizontalityCertificate {
        anchor: query.gamma,
        leaf: query.leaf.clone(),
        alpha: query.alpha,
        n,
        l: query.l,
        eps_b: query.eps_b,
        leaf_frame,
        leaf_lift: lift,
        alpha_lift,
        alpha_path: copy.path.clone(),
        points,
    };
    if n >= query.n.max(1) {
        Ok(Horizontality::Certified(cert))
    } else {
        Ok(Horizontality::NotFound { best_n: n, best_l: spacing, best: Some(cert) })
    }
}

/// Certificates for the same curve at two times of a stretch path.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistenceReport<T> {
    pub s: T,
    pub t: T,
    pub at_s: Horizontality<T>,
    /// Absent when the curve was not certified at `s`.
    pub at_t: Option<Horizontality<T>>,
    pub anchor_t: Option<Slope>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PersistenceSummary {
    pub n_s: usize,
    pub l_s: f64,
    pub n_t: usize,
    pub l_t: f64,
    pub spacing_kept: bool,
    pub count_kept: bool,
}

impl<T: Real> PersistenceReport<T> {
    /// `(n_s, L_s, n_t, L_t)` with `L` the realised spacing, and whether `L_t ≥ L_s` and
    /// `n_t ≥ n_s / 2`; `None` unless both times are certified.
    pub fn summary(&self) -> Option<PersistenceSummary> {
        let cs = self.at_s.certificate()?;
        let ct = self.at_t.as_ref()?.certificate()?;
        let (ls, lt) = (realised_spacing(cs), realised_spacing(ct));
        Some(PersistenceSummary {
            n_s: cs.n,
            l_s: ls.to_f64_lossy(),
            n_t: ct.n,
            l_t: lt.to_f64_lossy(),
            spacing_kept: lt >= ls,
            count_kept: 2 * ct.n >= cs.n,
        })
    }

    pub fn passed(&self) -> bool {
        self.summary().is_some_and(|s| s.spacing_kept && s.count_kept)
    }
}

/// The spacing a certificate actually achieves: its requested `L` when it has a single point.
fn realised_spacing<T: Real>(c: &HorizontalityCertificate<T>) -> T {
    if c.n >= 2 {
        c.min_spacing()
    } else {
        c.l
    }
}

/// Runs `check_horizontal` at time `s`, then at time `t ≥ s` with the spacing achieved at `s`.
///
/// The anchor is kept while it stays `eps_b`-short; otherwise it is re-chosen among the
/// `eps_b`-short slopes of denominator at most `anchor_max_q`, taking the best certificate.
pub fn persistence_experiment<T: Real>(
    path: &StretchPath<T>,
    query: &HorizontalQuery<T>,
    s: T,
    t: T,
    anchor_max_q: u32,
) -> Result<PersistenceReport<T>> {
    if !(t >= s) {
        return Err(Error::InvalidParameter("persistence needs t >= s".into()));
    }
    let xs = path.at(s);
    let at_s = check_horizontal(&xs, query)?;
    let Some(cs) = at_s.certificate() else {
        return Ok(PersistenceReport { s, t, at_s, at_t: None, anchor_t: None });
    };
    let later = HorizontalQuery { l: realised_spacing(cs), n: cs.n.div_ceil(2), ..query.clone() };
    let xt = path.at(t);
    let kind = xt.triangulation().kind();

    let keep = slope_to_word(&query.gamma, &xt).and_then(|w| curve_length(&xt, &w))? <= query.eps_b;
    let anchors: Vec<Slope> = if keep {
        vec![query.gamma]
    } else {
        let cat = catalog(kind, anchor_max_q);
        let lens = cat.lengths(&xt)?;
        cat.slopes.iter().zip(lens).filter(|(_, l)| *l <= query.eps_b).map(|(s, _)| *s).collect()
    };
    let mut best: Option<(Slope, Horizontality<T>)> = None;
    for g in anchors {
        let h = check_horizontal(&xt, &HorizontalQuery { gamma: g, ..later.clone() })?;
        let score = |h: &Horizontality<T>| match h {
            Horizontality::Certified(c) => (1, c.n),
            Horizontality::NotFound { best_n, .. } => (0, *best_n),
        };
        if best.as_ref().is_none_or(|(_, b)| score(&h) > score(b)) {
            best = Some((g, h));
        }
    }
    let (anchor_t, at_t) = match best {
        Some((g, h)) => (Some(g), Some(h)),
        None => (None, Some(Horizontality::NotFound { best_n: 0, best_l: T::zero(), best: None })),
    };
    Ok(PersistenceReport { s, t, at_s, at_t, anchor_t })
}

/// Length of the part of `a` within distance `r` of `b`.
///
/// Closed forms: crossing at angle `θ`, `sinh d = sinh s · sin θ`; disjoint at distance `δ`,
/// `sinh d = sinh δ · cosh s` (with `s` measured from the crossing or the common perpendicular).
/// Asymptotic geodesics fellow-travel forever.
pub fn fellow_travel_length<T: Real>(a: &Geodesic<T>, b: &Geodesic<T>, r: T) -> T {
    let two = T::lit(2.0);
    if let Some(theta) = a.angle_with(b) {
        return two * (r.sinh() / theta.sin()).asinh();
    }
    let delta = a.distance_to(b);
    if delta == T::zero() {
        return T::infinity();
    }
    if delta > r {
        return T::zero();
    }
    two * (r.sinh() / delta.sinh()).acosh()
}

/// A lift of some curve `α` crossing the anchor near the leaf and fellow-travelling the leaf.
#[derive(Debug, Clone, PartialEq)]
pub struct FellowTraveller<T> {
    pub alpha: Slope,
    pub alpha_lift: Geodesic<T>,
    pub crossing: GammaCrossing<T>,
    /// `d(p, q)` between the leaf's and `α̃`'s crossings with the anchor lift.
    pub offset: T,
    /// Length of the leaf lift within `eps_b` of `α̃`.
    pub length: T,
    /// Slopes whose axes left the floating-point range and were not evaluated.
    pub skipped: usize,
}

/// Among slopes of denominator at most `max_q` crossing `gamma`, the lift through the leaf
/// strip that fellow-travels the leaf lift longest at distance `eps_b`, subject to crossing the
/// first anchor lift within `eps_b` of the leaf.
pub fn fellow_travel_search<T: Real>(
    surface: &ShearSurface<T>,
    gamma: &Slope,
    leaf: &Leaf,
    window: Window<T>,
    max_q: u32,
    eps_b: T,
) -> Result<FellowTraveller<T>> {
    let kind = surface.triangulation().kind();
    let gamma_word = slope_to_word(gamma, surface)?;
    let arc = resolve_arc(surface, leaf, window)?;
    let strip = leaf_copies(surface, leaf, arc, DEFAULT_MAX_DEPTH)?;
    let lift = Geodesic::imaginary_axis();
    let crossings = crossings_on_strip(&strip, &passage_axes(surface, &gamma_word)?, &lift, arc);
    let crossing = crossings.first().cloned().ok_or(Error::Disjoint)?;
    let mut best: Option<FellowTraveller<T>> = None;
    let mut skipped = 0;
    for alpha in enumerate_slopes(max_q) {
        if alpha == *gamma || intersection_number(&alpha, gamma, kind) == 0 {
            continue;
        }
        let axes = match passage_axes(surface, &slope_to_word(&alpha, surface)?) {
            Ok(a) => a,
            Err(Error::Overflow) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        for copy in &strip {
            for (t, axis) in &axes {
                if *t != copy.triangle {
                    continue;
                }
                let a = copy.image(axis);
                let Some(q) = crossing.gamma_lift.intersection(&a) else { continue };
                let offset = dist(&crossing.p, &q);
                if offset > eps_b {
                    continue;
                }
                let length = fellow_travel_length(&lift, &a, eps_b);
                if best.as_ref().is_none_or(|b| length > b.length) {
                    best = Some(FellowTraveller { alpha, alpha_lift: a, crossing: crossing.clone(), offset, length, skipped: 0 });
                }
            }
        }
    }
    best.map(|b| FellowTraveller { skipped, ..b }).ok_or(Error::Empty)
}
