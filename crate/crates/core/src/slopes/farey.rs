//! Distances in the Farey graph (the curve graph of both model surfaces).

use std::collections::VecDeque;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::slope::Slope;
use crate::shear::SurfaceKind;

/// Path metric on curves of one surface type; adjacency is minimal intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveGraphMetric {
    pub kind: SurfaceKind,
}

impl CurveGraphMetric {
    pub fn new(kind: SurfaceKind) -> Self {
        Self { kind }
    }

    pub fn adjacent(&self, a: &Slope, b: &Slope) -> bool {
        a != b && super::intersection_number(a, b, self.kind) == self.kind.adjacency_intersection()
    }

    pub fn distance(&self, a: &Slope, b: &Slope) -> u32 {
        farey_distance(a, b)
    }

    /// Diameter of the union of two vertex sets (zero for a single vertex).
    pub fn set_distance(&self, a: &[Slope], b: &[Slope]) -> u32 {
        let all: Vec<&Slope> = a.iter().chain(b.iter()).collect();
        let mut best = 0;
        for (i, x) in all.iter().enumerate() {
            for y in &all[i + 1..] {
                best = best.max(farey_distance(x, y));
            }
        }
        best
    }
}

/// A Farey vertex as a primitive integer vector, `q ≥ 0`.
type V = (i128, i128);

fn normalize((p, q): V) -> V {
    let g = p.gcd(&q);
    let (p, q) = (p / g, q / g);
    if q < 0 || (q == 0 && p < 0) {
        (-p, -q)
    } else {
        (p, q)
    }
}

fn adjacent(a: V, b: V) -> bool {
    (a.0 * b.1 - a.1 * b.0).abs() == 1
}

/// Graph distance between `a` and `b` in the Farey graph.
///
/// A unimodular change of basis sends `a` to `∞`. Every edge of a Farey triangle crossed by
/// the hyperbolic geodesic from `∞` down to the image of `b` separates the two, so shortest
/// paths stay on the vertices of those triangles (the Stern–Brocot ancestors of `b` together
/// with `∞`); a breadth-first search on that finite ladder is exact.
pub fn farey_distance(a: &Slope, b: &Slope) -> u32 {
    if a == b {
        return 0;
    }
    let (p, q) = (a.p() as i128, a.q() as i128);
    // x p + y q = 1
    let e = p.extended_gcd(&q);
    let (x, y) = (e.x * e.gcd.signum(), e.y * e.gcd.signum());
    let (r, s) = (b.p() as i128, b.q() as i128);
    let target = normalize((x * r + y * s, -q * r + p * s));
    distance_from_infinity(target)
}

fn distance_from_infinity(target: V) -> u32 {
    let (r, s) = target;
    if s == 0 {
        return 0;
    }
    if s == 1 {
        return 1;
    }
    let inf: V = (1, 0);
    let floor = Integer::div_floor(&r, &s);
    let mut lo: V = (floor, 1);
    let mut hi: V = (floor + 1, 1);
    let mut ladder = vec![inf, lo, hi];
    loop {
        let m = (lo.0 + hi.0, lo.1 + hi.1);
        ladder.push(m);
        if m == target {
            break;
        }
        // compare target with m: r/s < m.0/m.1 ?
        if r * m.1 < m.0 * s {
            hi = m;
        } else {
            lo = m;
        }
    }
    let n = ladder.len();
    let goal = n - 1;
    let mut dist = vec![u32::MAX; n];
    dist[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        if i == goal {
            return dist[i];
        }
        for j in 0..n {
            if dist[j] == u32::MAX && adjacent(ladder[i], ladder[j]) {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    unreachable!("the ladder is connected")
}
