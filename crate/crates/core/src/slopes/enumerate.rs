//! Deterministic enumeration of slopes.

use num_integer::Integer;

use super::slope::Slope;

/// All reduced `p/q` with `0 < q ≤ max_q` and `|p| ≤ max_q`, plus `∞`, in increasing order
/// (the in-order traversal of the Stern–Brocot tree restricted to this box).
pub fn enumerate_slopes(max_q: u32) -> Vec<Slope> {
    let n = max_q as i64;
    let mut out = Vec::new();
    for q in 1..=n {
        for p in -n..=n {
            if p.gcd(&q) == 1 {
                out.push(Slope::new(p, q).expect("q > 0"));
            }
        }
    }
    out.push(Slope::INFINITY);
    out.sort();
    out
}
