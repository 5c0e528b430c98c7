use std::path::PathBuf;

use tdamarket_core::norms::MaxScale;

use crate::error::PipelineError;

/// Window length used when none is given.
pub const DEFAULT_WINDOW: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Everything a pipeline run needs. `out` of `-` writes to stdout.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// One CSV per asset group; first column is the timestamp.
    pub inputs: Vec<PathBuf>,
    pub window: usize,
    /// Asset columns to use, in output order. `None` selects every column.
    pub assets: Option<Vec<String>>,
    pub format: OutputFormat,
    pub out: PathBuf,
    /// Where to write per-asset min-max normalized prices, if anywhere.
    pub normalized_out: Option<PathBuf>,
    pub max_scale: MaxScale,
    /// Worker threads for the window fan-out; `None` uses rayon's default.
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            inputs: Vec::new(),
            window: DEFAULT_WINDOW,
            assets: None,
            format: OutputFormat::Csv,
            out: PathBuf::from("-"),
            normalized_out: None,
            max_scale: MaxScale::Auto,
            threads: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), PipelineError> {
        if self.inputs.is_empty() {
            return Err(PipelineError::Config(
                "at least one input file is required".into(),
            ));
        }
        if self.window < 2 {
            return Err(PipelineError::Config(format!(
                "window must be at least 2, got {}",
                self.window
            )));
        }
        if let Some(assets) = &self.assets {
            if assets.len() < 2 {
                return Err(PipelineError::Config("select at least two assets".into()));
            }
        }
        if let MaxScale::Fixed(s) = self.max_scale {
            if !(s.is_finite() && s >= 0.0) {
                return Err(PipelineError::Config(format!(
                    "max scale must be a nonnegative number, got {s}"
                )));
            }
        }
        if self.threads == Some(0) {
            return Err(PipelineError::Config(
                "thread count must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Parses `auto` or a nonnegative real.
pub fn parse_max_scale(s: &str) -> Result<MaxScale, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(MaxScale::Auto);
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Ok(MaxScale::Fixed(v)),
        _ => Err(format!(
            "expected `auto` or a nonnegative number, got {s:?}"
        )),
    }
}
