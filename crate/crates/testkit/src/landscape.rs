//! Pointwise landscape sampling.

/// Tent function of the bar `(b, d)` evaluated at `x`.
pub fn tent(b: f64, d: f64, x: f64) -> f64 {
    let mid = 0.5 * (b + d);
    if b < x && x <= mid {
        x - b
    } else if mid < x && x <= d {
        d - x
    } else {
        0.0
    }
}

/// `k`-th largest tent value at `x` (1-based), zero past the multiset size.
pub fn kth_largest_tent(pairs: &[(f64, f64)], k: usize, x: f64) -> f64 {
    let mut vals: Vec<f64> = pairs.iter().map(|&(b, d)| tent(b, d, x)).collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    vals.get(k - 1).copied().unwrap_or(0.0)
}
