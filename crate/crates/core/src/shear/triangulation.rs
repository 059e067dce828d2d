//! Combinatorial ideal triangulations.
//!
//! Triangle `t` has sides `0, 1, 2`; side `k` is addressed by the *slot* `3t + k`. In the
//! standard frame a triangle has ideal vertices `(0, ∞, −1)` (corners `0, 1, 2`) and side `k`
//! joins corner `k` to corner `k + 1`. When slot `(t, k)` is glued to `(t′, k′)`, corner `k`
//! of `t` is identified with corner `k′ + 1` of `t′` and corner `k + 1` with corner `k′`,
//! which keeps the glued surface oriented.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two surface types the toolkit understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceKind {
    /// Once-punctured torus.
    S11,
    /// Four-punctured sphere.
    S04,
}

impl SurfaceKind {
    /// Minimal intersection number between distinct curves.
    pub fn adjacency_intersection(self) -> u64 {
        match self {
            SurfaceKind::S11 => 1,
            SurfaceKind::S04 => 2,
        }
    }
}

#[inline]
pub fn slot(t: usize, k: usize) -> usize {
    3 * t + k
}

#[inline]
pub fn split(s: usize) -> (usize, usize) {
    (s / 3, s % 3)
}

/// A validated ideal triangulation of `S₁,₁` or `S₀,₄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    /// Edge id carried by each slot.
    slot_edge: Vec<usize>,
    /// Involution on slots.
    partner: Vec<usize>,
    n_edges: usize,
    /// Cyclic corner sequences `(t, corner)` around each puncture.
    punctures: Vec<Vec<(usize, usize)>>,
    kind: SurfaceKind,
}

impl Triangulation {
    /// `triangles[t][k]` is the edge id on side `k`; `gluings` pairs slots.
    pub fn new(triangles: &[[usize; 3]], gluings: &[(usize, usize)]) -> Result<Self> {
        let n_slots = 3 * triangles.len();
        if triangles.is_empty() {
            return Err(Error::InvalidTriangulation("no triangles".into()));
        }
        let slot_edge: Vec<usize> = triangles.iter().flat_map(|t| t.iter().copied()).collect();
        let n_edges = slot_edge.iter().max().map_or(0, |m| m + 1);
        let mut partner = vec![usize::MAX; n_slots];
        for &(a, b) in gluings {
            if a >= n_slots || b >= n_slots || a == b {
                return Err(Error::InvalidTriangulation(format!("bad gluing ({a}, {b})")));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidTriangulation(format!("slot glued twice in ({a}, {b})")));
            }
            if slot_edge[a] != slot_edge[b] {
                return Err(Error::InvalidTriangulation(format!(
                    "slots {a} and {b} carry different edges"
                )));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(s) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidTriangulation(format!("slot {s} is unglued")));
        }
        let mut uses = vec![0usize; n_edges];
        for &e in &slot_edge {
            uses[e] += 1;
        }
        if let Some(e) = uses.iter().position(|&u| u != 2) {
            return Err(Error::InvalidTriangulation(format!("edge {e} appears {} times", uses[e])));
        }
        let punctures = corner_orbits(&partner, triangles.len());
        let (f, e, v) = (triangles.len() as i64, n_edges as i64, punctures.len() as i64);
        if !connected(&partner, triangles.len()) {
            return Err(Error::InvalidTriangulation("not connected".into()));
        }
        let kind = match (v - e + f, v) {
            (0, 1) => SurfaceKind::S11,
            (2, 4) => SurfaceKind::S04,
            (chi, v) => {
                return Err(Error::InvalidTriangulation(format!(
                    "unsupported surface: Euler characteristic {chi} with {v} punctures"
                )))
            }
        };
        Ok(Self { slot_edge, partner, n_edges, punctures, kind })
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn n_triangles(&self) -> usize {
        self.slot_edge.len() / 3
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn n_slots(&self) -> usize {
        self.slot_edge.len()
    }

    pub fn edge(&self, slot: usize) -> usize {
        self.slot_edge[slot]
    }

    pub fn partner(&self, slot: usize) -> usize {
        self.partner[slot]
    }

    pub fn punctures(&self) -> &[Vec<(usize, usize)>] {
        &self.punctures
    }

    /// The triangles as edge triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        self.slot_edge.chunks(3).map(|c| [c[0], c[1], c[2]]).collect()
    }

    /// Each gluing once, as `(smaller slot, larger slot)`.
    pub fn gluings(&self) -> Vec<(usize, usize)> {
        (0..self.n_slots())
            .filter(|&s| s < self.partner[s])
            .map(|s| (s, self.partner[s]))
            .collect()
    }

    /// The first slot carrying edge `e`.
    pub fn slot_of_edge(&self, e: usize) -> Option<usize> {
        self.slot_edge.iter().position(|&x| x == e)
    }

    /// Number of times the loop around each puncture crosses each edge.
    pub fn puncture_incidence(&self) -> Vec<Vec<usize>> {
        self.punctures
            .iter()
            .map(|orbit| {
                let mut row = vec![0usize; self.n_edges];
                for &(t, c) in orbit {
                    row[self.edge(slot(t, c))] += 1;
                }
                row
            })
            .collect()
    }
}

/// Corner `(t, j)` exits through side `j`; the next corner around the same ideal vertex is
/// `(t′, k′ + 1)` where `(t′, k′)` is the glued slot.
fn corner_orbits(partner: &[usize], n_tri: usize) -> Vec<Vec<(usize, usize)>> {
    let mut seen = vec![false; 3 * n_tri];
    let mut orbits = Vec::new();
    for start in 0..3 * n_tri {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            orbit.push(split(c));
            let (t2, k2) = split(partner[c]);
            c = slot(t2, (k2 + 1) % 3);
        }
        orbits.push(orbit);
    }
    orbits
}

fn connected(partner: &[usize], n_tri: usize) -> bool {
    let mut seen = vec![false; n_tri];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        for k in 0..3 {
            let (t2, _) = split(partner[slot(t, k)]);
            if !seen[t2] {
                seen[t2] = true;
                stack.push(t2);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
