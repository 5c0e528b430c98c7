//! File formats, ingestion and the parallel pipeline around
//! [`tdamarket_core`].
//!
//! ```no_run
//! use tdamarket::{run, OutputFormat, RunConfig};
//!
//! let config = RunConfig {
//!     inputs: vec!["indices.csv".into()],
//!     out: "norms.csv".into(),
//!     format: OutputFormat::Csv,
//!     ..RunConfig::default()
//! };
//! let output = run(&config).unwrap();
//! println!("{} windows", output.series.len());
//! ```

pub mod config;
pub mod emit;
pub mod error;
pub mod ingest;
pub mod pipeline;

pub use config::{OutputFormat, RunConfig};
pub use emit::OutputRecord;
pub use error::PipelineError;
pub use ingest::{ingest, Ingested};
pub use pipeline::{run, RunOutput};
