//! Closed edge-paths in the dual graph of a triangulation.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::triangulation::{slot, split, Triangulation};
use crate::error::{Error, Result};

/// Direction of travel inside a triangle: having entered through side `k′`, a left turn
/// exits through side `k′ + 2` and a right turn through side `k′ + 1` (indices mod 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    Left,
    Right,
}

impl Turn {
    pub fn flip(self) -> Self {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }

    fn exit_side(self, entry_side: usize) -> usize {
        match self {
            Turn::Left => (entry_side + 2) % 3,
            Turn::Right => (entry_side + 1) % 3,
        }
    }
}

/// A closed combinatorial curve: leave the triangle of slot `start` through that slot, then
/// follow `turns[i]` in the `(i + 1)`-th triangle entered. After the last turn the path must
/// exit through `start` again.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingWord {
    pub start: usize,
    pub turns: Vec<Turn>,
}

impl CrossingWord {
    pub fn new(start: usize, turns: Vec<Turn>) -> Self {
        Self { start, turns }
    }

    pub fn empty() -> Self {
        Self { start: 0, turns: Vec::new() }
    }

    /// Parses a string of `L`/`R`.
    pub fn parse(start: usize, turns: &str) -> Result<Self> {
        let turns = turns
            .chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Turn::Left),
                'R' | 'r' => Ok(Turn::Right),
                other => Err(Error::InvalidWord(format!("unknown turn {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { start, turns })
    }

    pub fn len(&self) -> usize {
        self.turns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.turns.is_empty()
    }

    /// Exit slots `s_0 = start, s_1, …, s_{n−1}`; errors if the path does not close up.
    pub fn slots(&self, tri: &Triangulation) -> Result<Vec<usize>> {
        if self.turns.is_empty() {
            return Ok(Vec::new());
        }
        if self.start >= tri.n_slots() {
            return Err(Error::InvalidWord(format!("start slot {} out of range", self.start)));
        }
        let mut out = Vec::with_capacity(self.turns.len());
        let mut s = self.start;
        for turn in &self.turns {
            out.push(s);
            let (t2, k2) = split(tri.partner(s));
            s = slot(t2, turn.exit_side(k2));
        }
        if s != self.start {
            return Err(Error::InvalidWord(format!(
                "path does not close: ends at slot {s}, started at {}",
                self.start
            )));
        }
        Ok(out)
    }

    /// Rebuilds a word from its cyclic sequence of exit slots.
    pub fn from_slots(tri: &Triangulation, slots: &[usize]) -> Result<Self> {
        let n = slots.len();
        let mut turns = Vec::with_capacity(n);
        for i in 0..n {
            let (t2, k2) = split(tri.partner(slots[i]));
            let (t3, k3) = split(slots[(i + 1) % n]);
            if t2 != t3 || k2 == k3 {
                return Err(Error::InvalidWord(format!(
                    "slot {} is not reachable from slot {}",
                    slots[(i + 1) % n],
                    slots[i]
                )));
            }
            turns.push(if Turn::Left.exit_side(k2) == k3 { Turn::Left } else { Turn::Right });
        }
        Ok(Self { start: slots.first().copied().unwrap_or(0), turns })
    }

    /// Edge ids crossed, paired with the turn taken after each crossing.
    pub fn edges(&self, tri: &Triangulation) -> Result<Vec<(usize, Turn)>> {
        Ok(self.slots(tri)?.into_iter().map(|s| tri.edge(s)).zip(self.turns.iter().copied()).collect())
    }

    /// The same closed curve started `k` crossings later.
    pub fn rotate(&self, tri: &Triangulation, k: usize) -> Result<Self> {
        let slots = self.slots(tri)?;
        if slots.is_empty() {
            return Ok(self.clone());
        }
        let k = k % slots.len();
        let mut turns = self.turns.clone();
        turns.rotate_left(k);
        Ok(Self { start: slots[k], turns })
    }

    /// The curve traversed backwards.
    pub fn reverse(&self, tri: &Triangulation) -> Result<Self> {
        let slots = self.slots(tri)?;
        let rev: Vec<usize> = slots.iter().rev().map(|&s| tri.partner(s)).collect();
        Self::from_slots(tri, &rev)
    }

    /// The `m`-fold iterate.
    pub fn repeat(&self, m: usize) -> Self {
        Self { start: self.start, turns: self.turns.repeat(m) }
    }

    /// The loop around a puncture: enter each corner's triangle and keep turning right.
    pub fn puncture_loop(tri: &Triangulation, puncture: usize) -> Self {
        let orbit = &tri.punctures()[puncture];
        let (t, c) = orbit[0];
        Self { start: slot(t, c), turns: vec![Turn::Right; orbit.len()] }
    }
}

impl fmt::Display for CrossingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.start)?;
        for t in &self.turns {
            f.write_str(match t {
                Turn::Left => "L",
                Turn::Right => "R",
            })?;
        }
        Ok(())
    }
}
