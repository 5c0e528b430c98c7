//! Prices, log returns, sliding windows and Euclidean distance matrices.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised while shaping price data into point clouds.
#[derive(Debug, Clone, PartialEq)]
pub enum GeometryError {
    /// A price at `(row, col)` is zero, negative or not finite.
    NonPositivePrice {
        /// Row in the price table.
        row: usize,
        /// Asset column.
        col: usize,
    },
    /// Fewer than two price rows, so no return can be formed.
    TooFewRows,
    /// Window longer than the number of available return rows.
    WindowTooLong {
        /// Requested window length.
        window: usize,
        /// Available rows.
        rows: usize,
    },
    /// Window shorter than two points.
    WindowTooShort {
        /// Requested window length.
        window: usize,
    },
    /// A point cloud without points.
    EmptyCloud,
    /// Table has no asset columns.
    NoAssets,
    /// Value count, label count or timestamp count disagree with the shape.
    ShapeMismatch,
    /// Timestamp at `index` is not strictly greater than its predecessor.
    TimestampsNotIncreasing {
        /// Offending timestamp position.
        index: usize,
    },
    /// A distance matrix that is not square, symmetric, with zero diagonal
    /// and finite nonnegative entries.
    InvalidDistanceMatrix,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonPositivePrice { row, col } => {
                write!(f, "non-positive price at row {row}, column {col}")
            }
            Self::TooFewRows => f.write_str("at least two price rows are required"),
            Self::WindowTooLong { window, rows } => {
                write!(
                    f,
                    "window of {window} exceeds the {rows} available return rows"
                )
            }
            Self::WindowTooShort { window } => write!(f, "window of {window} is shorter than 2"),
            Self::EmptyCloud => f.write_str("point cloud is empty"),
            Self::NoAssets => f.write_str("price table has no asset columns"),
            Self::ShapeMismatch => f.write_str("table dimensions are inconsistent"),
            Self::TimestampsNotIncreasing { index } => {
                write!(f, "timestamp {index} is not strictly increasing")
            }
            Self::InvalidDistanceMatrix => f.write_str("invalid distance matrix"),
        }
    }
}

impl core::error::Error for GeometryError {}

/// Closing prices of `n` assets over consecutive time steps, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PriceTable {
    values: Vec<f64>,
    rows: usize,
    labels: Vec<String>,
    timestamps: Vec<String>,
}

impl PriceTable {
    /// Builds a table from row-major `values` (`timestamps.len()` rows,
    /// `labels.len()` columns).
    ///
    /// Positivity is not checked here; [`log_returns`] reports the first
    /// offending cell.
    pub fn new(
        values: Vec<f64>,
        labels: Vec<String>,
        timestamps: Vec<String>,
    ) -> Result<Self, GeometryError> {
        if labels.is_empty() {
            return Err(GeometryError::NoAssets);
        }
        if values.len() != labels.len() * timestamps.len() {
            return Err(GeometryError::ShapeMismatch);
        }
        if let Some(i) = timestamps.windows(2).position(|w| w[0] >= w[1]) {
            return Err(GeometryError::TimestampsNotIncreasing { index: i + 1 });
        }
        let rows = timestamps.len();
        Ok(Self {
            values,
            rows,
            labels,
            timestamps,
        })
    }

    /// Builds a table from price rows with generated labels `a0, a1, ...`
    /// and zero-padded step timestamps.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, GeometryError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut values = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.as_ref().len() != cols {
                return Err(GeometryError::ShapeMismatch);
            }
            values.extend_from_slice(r.as_ref());
        }
        let labels = (0..cols).map(|j| alloc::format!("a{j}")).collect();
        let timestamps = (0..rows.len()).map(|i| alloc::format!("{i:010}")).collect();
        Self::new(values, labels, timestamps)
    }

    /// Number of time steps.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of assets.
    pub fn cols(&self) -> usize {
        self.labels.len()
    }

    /// Price of asset `col` at step `row`.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.cols() + col]
    }

    /// One time step across all assets.
    pub fn row(&self, row: usize) -> &[f64] {
        let n = self.cols();
        &self.values[row * n..(row + 1) * n]
    }

    /// Asset identifiers.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Time labels, strictly increasing.
    pub fn timestamps(&self) -> &[String] {
        &self.timestamps
    }
}

/// Log returns, one row per pair of consecutive price rows.
///
/// Return row `i` spans price rows `i -> i + 1` and carries the timestamp of
/// price row `i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReturnMatrix {
    values: Vec<f64>,
    rows: usize,
    labels: Vec<String>,
    timestamps: Vec<String>,
}

impl ReturnMatrix {
    /// Wraps precomputed return rows; labels and timestamps are generated.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, GeometryError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if cols == 0 {
            return Err(GeometryError::NoAssets);
        }
        let mut values = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.as_ref().len() != cols {
                return Err(GeometryError::ShapeMismatch);
            }
            values.extend_from_slice(r.as_ref());
        }
        Ok(Self {
            values,
            rows: rows.len(),
            labels: (0..cols).map(|j| alloc::format!("a{j}")).collect(),
            timestamps: (0..rows.len())
                .map(|i| alloc::format!("{:010}", i + 1))
                .collect(),
        })
    }

    /// Number of return rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of assets.
    pub fn cols(&self) -> usize {
        self.labels.len()
    }

    /// Return vector at row `i`.
    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.cols();
        &self.values[i * n..(i + 1) * n]
    }

    /// Asset identifiers.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Timestamps of the closing price each return ends on.
    pub fn timestamps(&self) -> &[String] {
        &self.timestamps
    }
}

/// `returns[i][j] = ln(prices[i + 1][j] / prices[i][j])`.
pub fn log_returns(prices: &PriceTable) -> Result<ReturnMatrix, GeometryError> {
    if prices.rows() < 2 {
        return Err(GeometryError::TooFewRows);
    }
    let n = prices.cols();
    if let Some(k) = prices
        .values
        .iter()
        .position(|&v| !(v > 0.0 && v.is_finite()))
    {
        return Err(GeometryError::NonPositivePrice {
            row: k / n,
            col: k % n,
        });
    }
    let rows = prices.rows() - 1;
    let mut values = Vec::with_capacity(rows * n);
    for i in 0..rows {
        for (now, next) in prices.row(i).iter().zip(prices.row(i + 1)) {
            values.push(libm::log(next / now));
        }
    }
    Ok(ReturnMatrix {
        values,
        rows,
        labels: prices.labels.clone(),
        timestamps: prices.timestamps[1..].to_vec(),
    })
}

/// `T` consecutive return vectors, the point cloud of one window.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowCloud {
    points: Vec<f64>,
    dim: usize,
    window_start: usize,
}

impl WindowCloud {
    /// Builds a cloud from explicit points.
    pub fn from_points<P: AsRef<[f64]>>(
        points: &[P],
        window_start: usize,
    ) -> Result<Self, GeometryError> {
        let dim = points.first().map_or(0, |p| p.as_ref().len());
        let mut flat = Vec::with_capacity(points.len() * dim);
        for p in points {
            if p.as_ref().len() != dim {
                return Err(GeometryError::ShapeMismatch);
            }
            flat.extend_from_slice(p.as_ref());
        }
        Ok(Self {
            points: flat,
            dim,
            window_start,
        })
    }

    /// Number of points `T`.
    pub fn len(&self) -> usize {
        self.points.len().checked_div(self.dim).unwrap_or(0)
    }

    /// True when the cloud holds no points.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Index `t` of the first return row in the window.
    pub fn window_start(&self) -> usize {
        self.window_start
    }

    /// Point `i`.
    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i * self.dim..(i + 1) * self.dim]
    }

    /// Iterates the points in time order.
    pub fn points(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.points.chunks_exact(self.dim.max(1))
    }

    /// Same cloud with every coordinate multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            points: self.points.iter().map(|v| v * c).collect(),
            ..self.clone()
        }
    }
}

/// Windows `[t, t + T)` for `t = 0 ..= rows - T`.
pub fn sliding_windows(
    returns: &ReturnMatrix,
    window: usize,
) -> Result<Vec<WindowCloud>, GeometryError> {
    if window < 2 {
        return Err(GeometryError::WindowTooShort { window });
    }
    if window > returns.rows() {
        return Err(GeometryError::WindowTooLong {
            window,
            rows: returns.rows(),
        });
    }
    let n = returns.cols();
    Ok((0..=returns.rows() - window)
        .map(|t| WindowCloud {
            points: returns.values[t * n..(t + window) * n].to_vec(),
            dim: n,
            window_start: t,
        })
        .collect())
}

/// Symmetric matrix of pairwise Euclidean distances.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<f64>,
}

impl DistanceMatrix {
    /// Validates and wraps a row-major `n × n` matrix.
    pub fn from_flat(n: usize, dist: Vec<f64>) -> Result<Self, GeometryError> {
        if dist.len() != n * n {
            return Err(GeometryError::InvalidDistanceMatrix);
        }
        for i in 0..n {
            if dist[i * n + i] != 0.0 {
                return Err(GeometryError::InvalidDistanceMatrix);
            }
            for j in i + 1..n {
                let d = dist[i * n + j];
                if !(d >= 0.0 && d.is_finite()) || d != dist[j * n + i] {
                    return Err(GeometryError::InvalidDistanceMatrix);
                }
            }
        }
        Ok(Self { n, dist })
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.n
    }

    /// True for the matrix of an empty cloud.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Distance between points `i` and `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    /// Largest pairwise distance, 0 for fewer than two points.
    pub fn diameter(&self) -> f64 {
        self.dist.iter().copied().fold(0.0, f64::max)
    }
}

/// Pairwise Euclidean distances of a cloud.
pub fn distance_matrix(cloud: &WindowCloud) -> Result<DistanceMatrix, GeometryError> {
    let n = cloud.len();
    if n == 0 {
        return Err(GeometryError::EmptyCloud);
    }
    let mut dist = alloc::vec![0.0; n * n];
    for i in 0..n {
        let p = cloud.point(i);
        for j in i + 1..n {
            let sq: f64 = p
                .iter()
                .zip(cloud.point(j))
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            let d = libm::sqrt(sq);
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    Ok(DistanceMatrix { n, dist })
}
