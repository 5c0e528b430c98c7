//! Exact persistence landscapes.
//!
//! `λ^k(x)` is the `k`-th largest tent value at `x` over the finite bars of
//! a diagram. Between two consecutive critical abscissae (bar endpoints and
//! the crossings `(b_i + d_j) / 2` of a rising edge with a falling edge) no
//! two tents cross and none changes piece, so every level is linear there.
//! Evaluating the sorted tent values at the critical points therefore gives
//! every level exactly as a breakpoint list.

use alloc::vec::Vec;

use crate::persistence::PersistenceDiagram;

/// Tent of the bar `(b, d)` at `x`: rises on `(b, mid]`, falls on `(mid, d]`.
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

/// Continuous piecewise-linear function, zero outside its first and last
/// breakpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    points: Vec<(f64, f64)>,
}

impl PiecewiseLinear {
    /// Breakpoints `(x, y)` with strictly increasing `x`.
    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Linear interpolation between breakpoints.
    pub fn eval(&self, x: f64) -> f64 {
        let pts = &self.points;
        let (Some(first), Some(last)) = (pts.first(), pts.last()) else {
            return 0.0;
        };
        if !(x >= first.0 && x <= last.0) {
            return 0.0;
        }
        let i = pts.partition_point(|p| p.0 <= x);
        if i == pts.len() {
            return last.1;
        }
        let (x0, y0) = pts[i - 1];
        let (x1, y1) = pts[i];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// `(∫ f^p dx)^(1/p)`, exact segment by segment.
    pub fn lp_norm(&self, p: f64) -> f64 {
        assert!(p >= 1.0, "Lp norm needs p >= 1");
        let integral: f64 = self
            .points
            .windows(2)
            .map(|w| segment_power_integral(w[0], w[1], p))
            .sum();
        if p == 1.0 {
            integral
        } else {
            libm::pow(integral, 1.0 / p)
        }
    }
}

/// `∫ y(x)^p` over one linear segment with nonnegative ends.
fn segment_power_integral((x0, y0): (f64, f64), (x1, y1): (f64, f64), p: f64) -> f64 {
    let w = x1 - x0;
    let (y0, y1) = (y0.max(0.0), y1.max(0.0));
    if p == 1.0 {
        return 0.5 * w * (y0 + y1);
    }
    let dy = y1 - y0;
    if dy.abs() <= 1e-12 * y0.max(y1) {
        return w * libm::pow(0.5 * (y0 + y1), p);
    }
    w * (libm::pow(y1, p + 1.0) - libm::pow(y0, p + 1.0)) / ((p + 1.0) * dy)
}

/// The levels `λ^1 ≥ λ^2 ≥ ...` of a diagram; only nonzero levels are kept.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Landscape {
    levels: Vec<PiecewiseLinear>,
}

impl Landscape {
    /// Landscape of `(birth, death)` bars. Bars that are not finite or have
    /// `death <= birth` contribute the zero function and are skipped.
    pub fn from_bars(bars: &[(f64, f64)]) -> Self {
        let bars: Vec<(f64, f64)> = bars
            .iter()
            .copied()
            .filter(|&(b, d)| b.is_finite() && d.is_finite() && d > b)
            .collect();
        if bars.is_empty() {
            return Self::default();
        }

        let mut xs: Vec<f64> = Vec::with_capacity(bars.len() * (bars.len() + 2));
        for &(b, d) in &bars {
            xs.push(b);
            xs.push(d);
        }
        for &(bi, _) in &bars {
            for &(_, dj) in &bars {
                if bi < dj {
                    xs.push(0.5 * (bi + dj));
                }
            }
        }
        xs.sort_unstable_by(f64::total_cmp);
        xs.dedup();

        // column-major: values[i * P + k] is λ^{k+1}(xs[i])
        let count = bars.len();
        let mut values = Vec::with_capacity(xs.len() * count);
        let mut column = Vec::with_capacity(count);
        for &x in &xs {
            column.clear();
            column.extend(bars.iter().map(|&(b, d)| tent(b, d, x)));
            column.sort_unstable_by(|a, b| b.total_cmp(a));
            values.extend_from_slice(&column);
        }

        let mut levels = Vec::new();
        for k in 0..count {
            let raw = xs
                .iter()
                .enumerate()
                .map(|(i, &x)| (x, values[i * count + k]));
            match simplify(raw) {
                Some(level) => levels.push(level),
                None => break,
            }
        }
        Self { levels }
    }

    /// Number of nonzero levels.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Level `k` (1-based), `None` when it is identically zero.
    pub fn level(&self, k: usize) -> Option<&PiecewiseLinear> {
        k.checked_sub(1).and_then(|i| self.levels.get(i))
    }

    /// Nonzero levels in order.
    pub fn levels(&self) -> &[PiecewiseLinear] {
        &self.levels
    }

    /// `λ^k(x)`.
    pub fn eval(&self, k: usize, x: f64) -> f64 {
        assert!(k >= 1, "landscape levels are numbered from 1");
        self.level(k).map_or(0.0, |l| l.eval(x))
    }

    /// `||λ^k||_p` under Lebesgue measure.
    pub fn lp_norm_level(&self, k: usize, p: f64) -> f64 {
        assert!(k >= 1, "landscape levels are numbered from 1");
        assert!(p >= 1.0, "Lp norm needs p >= 1");
        self.level(k).map_or(0.0, |l| l.lp_norm(p))
    }

    /// `Σ_k ||λ^k||_p`.
    pub fn full_lp_norm(&self, p: f64) -> f64 {
        assert!(p >= 1.0, "Lp norm needs p >= 1");
        self.levels.iter().map(|l| l.lp_norm(p)).sum()
    }
}

/// Drops collinear interior breakpoints and the zero runs before and after
/// the support. `None` for the zero function.
fn simplify(raw: impl Iterator<Item = (f64, f64)>) -> Option<PiecewiseLinear> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for p in raw {
        while pts.len() >= 2 {
            let (a, b) = (pts[pts.len() - 2], pts[pts.len() - 1]);
            let s1 = (b.1 - a.1) / (b.0 - a.0);
            let s2 = (p.1 - b.1) / (p.0 - b.0);
            if (s1 - s2).abs() <= 1e-9 {
                pts.pop();
            } else {
                break;
            }
        }
        pts.push(p);
    }
    let first = pts.iter().position(|p| p.1 > 0.0)?;
    let last = pts.iter().rposition(|p| p.1 > 0.0)?;
    let lo = first.saturating_sub(1);
    let hi = (last + 1).min(pts.len() - 1);
    Some(PiecewiseLinear {
        points: pts[lo..=hi].to_vec(),
    })
}

/// Landscape of the finite bars of `diagram`; essential bars are ignored.
pub fn build_landscape(diagram: &PersistenceDiagram) -> Landscape {
    Landscape::from_bars(&diagram.finite_bars())
}
