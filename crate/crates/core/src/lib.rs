//! Topological market-stability indicators.
//!
//! The pipeline turns aligned closing prices into log-return vectors, slides
//! a window of `T` returns over them to get point clouds in `R^n`, builds the
//! Vietoris-Rips filtration of each cloud up to triangles, computes the
//! dimension 0 and 1 persistence diagrams, converts them into exact
//! persistence landscapes and integrates those:
//!
//! * `L1`: area under the first landscape of the dimension 1 diagram,
//! * `L0`: area under the second landscape of the finite dimension 0 bars,
//! * `C1`: `2 * L1_t - L1_{t-1}`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, ingestion and
//! the command line live in the `tdamarket` crate.
//!
//! ```
//! use tdamarket_core::geometry::WindowCloud;
//! use tdamarket_core::norms::{window_indicators, MaxScale};
//!
//! let square = WindowCloud::from_points(
//!     &[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
//!     0,
//! )
//! .unwrap();
//! let ind = window_indicators(&square, MaxScale::Auto).unwrap();
//! assert!((ind.l1 - (3.0 - 2.0 * 2f64.sqrt()) / 4.0).abs() < 1e-12);
//! ```
#![no_std]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod filtration;
pub mod geometry;
pub mod landscape;
pub mod norms;
pub mod persistence;

pub use filtration::{build_rips, Filtration, Simplex};
pub use geometry::{
    distance_matrix, log_returns, sliding_windows, DistanceMatrix, PriceTable, ReturnMatrix,
    WindowCloud,
};
pub use landscape::{build_landscape, Landscape};
pub use norms::{compute_norm_series, MaxScale, NormSeries, WindowNorms};
pub use persistence::{compute_h0, compute_h1, PersistenceDiagram, PersistencePair};
