//! Test-only support for the tdamarket crates.
//!
//! Everything here is deliberately naive and shares no code with the engine:
//! the homology oracle works from persistent Betti numbers computed by dense
//! GF(2) elimination, and the landscape oracle samples tents pointwise.

pub mod homology;
pub mod landscape;
pub mod quadrature;
pub mod synth;

pub use homology::{brute_force_diagrams, OracleDiagrams};
pub use landscape::{kth_largest_tent, tent};
pub use quadrature::adaptive_simpson;
