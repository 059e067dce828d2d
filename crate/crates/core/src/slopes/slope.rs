//! Reduced rational slopes `p/q` (with `1/0 = ∞`) naming simple closed curves.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shear::SurfaceKind;

/// A simple closed curve, `p/q` in lowest terms with `q ≥ 0`; `∞` is stored as `1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    /// Reduces `p/q`; `0/0` does not name an essential curve.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::NonEssentialSlope("0/0".into()));
        }
        if q == 0 {
            return Ok(Self::INFINITY);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(Self { p, q })
    }

    pub fn integer(n: i64) -> Self {
        Self { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q == 0
    }

    /// `p_a q_b − q_a p_b`.
    pub fn det(&self, other: &Slope) -> i64 {
        self.p * other.q - self.q * other.p
    }

    /// Image under the unimodular map `[[a, b], [c, d]]` acting on `(p, q)`.
    pub fn transform(&self, m: [[i64; 2]; 2]) -> Result<Self> {
        Slope::new(m[0][0] * self.p + m[0][1] * self.q, m[1][0] * self.p + m[1][1] * self.q)
    }

    pub fn to_f64(&self) -> f64 {
        if self.q == 0 {
            f64::INFINITY
        } else {
            self.p as f64 / self.q as f64
        }
    }

    /// The Farey mediant `(p + r)/(q + s)`.
    pub fn mediant(&self, other: &Slope) -> Result<Slope> {
        Slope::new(self.p + other.p, self.q + other.q)
    }
}

impl Ord for Slope {
    /// Order by value with `∞` last.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.q == 0, other.q == 0) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (self.p as i128 * other.q as i128).cmp(&(other.p as i128 * self.q as i128)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "1/0" || t == "∞" {
            return Ok(Self::INFINITY);
        }
        let bad = || Error::SlopeParse(s.to_string());
        match t.split_once('/') {
            Some((a, b)) => {
                let p: i64 = a.trim().parse().map_err(|_| bad())?;
                let q: i64 = b.trim().parse().map_err(|_| bad())?;
                Slope::new(p, q)
            }
            None => Ok(Slope::integer(t.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Geometric intersection number: `|det|` on the torus, `2|det|` on the sphere.
pub fn intersection_number(a: &Slope, b: &Slope, kind: SurfaceKind) -> u64 {
    a.det(b).unsigned_abs() * kind.adjacency_intersection()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("inf".parse::<Slope>().unwrap(), Slope::INFINITY);
        assert_eq!("4/-6".parse::<Slope>().unwrap(), Slope::new(-2, 3).unwrap());
        assert_eq!(Slope::new(-2, 3).unwrap().to_string(), "-2/3");
        assert_eq!(Slope::new(-5, 0).unwrap(), Slope::INFINITY);
        assert_eq!("3".parse::<Slope>().unwrap().to_string(), "3/1");
        assert!("x/2".parse::<Slope>().is_err());
        assert!(Slope::new(0, 0).is_err());
    }

    #[test]
    fn intersection_examples() {
        let s = |x: &str| x.parse::<Slope>().unwrap();
        assert_eq!(intersection_number(&s("0/1"), &s("inf"), SurfaceKind::S11), 1);
        assert_eq!(intersection_number(&s("2/5"), &s("inf"), SurfaceKind::S11), 5);
        assert_eq!(intersection_number(&s("0/1"), &s("1/1"), SurfaceKind::S04), 2);
    }

    #[test]
    fn json_string_form() {
        let v = serde_json::to_string(&vec![Slope::INFINITY, Slope::new(1, 2).unwrap()]).unwrap();
        assert_eq!(v, r#"["inf","1/2"]"#);
        let back: Vec<Slope> = serde_json::from_str(&v).unwrap();
        assert_eq!(back[1], Slope::new(1, 2).unwrap());
    }
}
