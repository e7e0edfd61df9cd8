use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by graph construction, coloring checks, solving and reporting.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("coloring is not total: {0}")]
    PartialColoring(String),

    #[error("r must be at least 1, got {0}")]
    InvalidR(usize),

    #[error("graph order {order} exceeds the cap of {cap} for this method")]
    CapExceeded { order: usize, cap: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
