use std::path::PathBuf;

use tdamarket_core::geometry::GeometryError;
use tdamarket_core::norms::NormError;

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}: file not found")]
    FileNotFound(PathBuf),
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },
    #[error("asset {0:?} appears in more than one input")]
    DuplicateAsset(String),
    #[error("asset {0:?} not found in the inputs")]
    UnknownAsset(String),
    #[error("non-positive price for asset {asset:?} at {timestamp:?}")]
    NonPositivePrice { timestamp: String, asset: String },
    #[error("only {rows} common rows after alignment, window {window} needs at least {needed}", needed = window + 1)]
    TooFewCommonRows { rows: usize, window: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl PipelineError {
    /// Process exit status: 1 usage, 2 data, 3 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) | Self::UnknownAsset(_) | Self::DuplicateAsset(_) => 1,
            Self::Parse { .. }
            | Self::NonPositivePrice { .. }
            | Self::TooFewCommonRows { .. }
            | Self::Geometry(_)
            | Self::Norm(_) => 2,
            Self::FileNotFound(_) | Self::Io { .. } => 3,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }
}
