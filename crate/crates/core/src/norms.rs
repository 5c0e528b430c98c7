//! The `L1`, `L0` and `C1` market indicators and their per-window series.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::filtration::{build_rips, FiltrationError};
use crate::geometry::{distance_matrix, GeometryError, WindowCloud};
use crate::landscape::Landscape;
use crate::persistence::{compute_h0, compute_h1, PersistenceDiagram, PersistenceError};

/// Largest scale included in each window's Rips filtration.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum MaxScale {
    /// The window's own diameter, so the full 2-skeleton is built.
    #[default]
    Auto,
    /// A fixed cutoff shared by all windows.
    Fixed(f64),
}

/// A failure while computing one window, tagged with its start index.
#[derive(Debug, Clone, PartialEq)]
pub enum NormError {
    /// The window sequence was empty.
    NoWindows,
    /// Distance computation failed.
    Geometry {
        /// Window start index.
        window: usize,
        /// Underlying error.
        source: GeometryError,
    },
    /// Filtration construction failed.
    Filtration {
        /// Window start index.
        window: usize,
        /// Underlying error.
        source: FiltrationError,
    },
    /// Persistence computation failed.
    Persistence {
        /// Window start index.
        window: usize,
        /// Underlying error.
        source: PersistenceError,
    },
}

impl fmt::Display for NormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoWindows => f.write_str("no windows to process"),
            Self::Geometry { window, source } => write!(f, "window {window}: {source}"),
            Self::Filtration { window, source } => write!(f, "window {window}: {source}"),
            Self::Persistence { window, source } => write!(f, "window {window}: {source}"),
        }
    }
}

impl core::error::Error for NormError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Self::NoWindows => None,
            Self::Geometry { source, .. } => Some(source),
            Self::Filtration { source, .. } => Some(source),
            Self::Persistence { source, .. } => Some(source),
        }
    }
}

/// `||λ^1||_1` of the finite dimension 1 bars.
pub fn l1_indicator(d1: &PersistenceDiagram) -> f64 {
    Landscape::from_bars(&d1.finite_bars()).lp_norm_level(1, 1.0)
}

/// `||λ^2||_1` of the finite dimension 0 bars.
pub fn l0_indicator(d0: &PersistenceDiagram) -> f64 {
    Landscape::from_bars(&d0.finite_bars()).lp_norm_level(2, 1.0)
}

/// `2 * l1_now - l1_prev`.
pub fn c1_indicator(l1_now: f64, l1_prev: f64) -> f64 {
    l1_now + l1_now - l1_prev
}

/// Dimension 0 and 1 diagrams of one window.
pub fn window_diagrams(
    cloud: &WindowCloud,
    max_scale: MaxScale,
) -> Result<(PersistenceDiagram, PersistenceDiagram), NormError> {
    let window = cloud.window_start();
    let dist = distance_matrix(cloud).map_err(|source| NormError::Geometry { window, source })?;
    let scale = match max_scale {
        MaxScale::Auto => dist.diameter(),
        MaxScale::Fixed(s) => s,
    };
    let filtration =
        build_rips(&dist, 2, scale).map_err(|source| NormError::Filtration { window, source })?;
    let h1 = compute_h1(&filtration).map_err(|source| NormError::Persistence { window, source })?;
    Ok((compute_h0(&filtration), h1))
}

/// `L0` and `L1` of a single window, before the `C1` lag join.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowIndicators {
    /// Window start index.
    pub t: usize,
    /// `L0` indicator.
    pub l0: f64,
    /// `L1` indicator.
    pub l1: f64,
}

/// Distance matrix, Rips filtration, diagrams and indicators of one window.
pub fn window_indicators(
    cloud: &WindowCloud,
    max_scale: MaxScale,
) -> Result<WindowIndicators, NormError> {
    let (h0, h1) = window_diagrams(cloud, max_scale)?;
    Ok(WindowIndicators {
        t: cloud.window_start(),
        l0: l0_indicator(&h0),
        l1: l1_indicator(&h1),
    })
}

/// Indicators of one window; `c1` is `None` for the first window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowNorms {
    /// Window start index.
    pub t: usize,
    /// `L0` indicator.
    pub l0: f64,
    /// `L1` indicator.
    pub l1: f64,
    /// `C1` indicator.
    pub c1: Option<f64>,
}

/// Indicators for consecutive windows of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct NormSeries {
    /// Rows ordered by `t`.
    pub rows: Vec<WindowNorms>,
    /// Asset identifiers, possibly empty.
    pub labels: Vec<String>,
    /// Window length `T`.
    pub window_len: usize,
}

impl NormSeries {
    /// Joins per-window indicators (in window order) and fills in `C1`.
    pub fn from_indicators(
        indicators: &[WindowIndicators],
        window_len: usize,
        labels: Vec<String>,
    ) -> Self {
        let rows = indicators
            .iter()
            .enumerate()
            .map(|(i, w)| WindowNorms {
                t: w.t,
                l0: w.l0,
                l1: w.l1,
                c1: i
                    .checked_sub(1)
                    .map(|p| c1_indicator(w.l1, indicators[p].l1)),
            })
            .collect();
        Self {
            rows,
            labels,
            window_len,
        }
    }

    /// Number of windows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// True when there are no windows.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Runs every window through [`window_indicators`] in order and joins the
/// results.
pub fn compute_norm_series(
    windows: &[WindowCloud],
    max_scale: MaxScale,
) -> Result<NormSeries, NormError> {
    let first = windows.first().ok_or(NormError::NoWindows)?;
    let indicators = windows
        .iter()
        .map(|w| window_indicators(w, max_scale))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NormSeries::from_indicators(
        &indicators,
        first.len(),
        Vec::new(),
    ))
}
