use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex index {index} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { index: usize, vertex_count: usize },

    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),

    /// A documented precondition of an operation does not hold.
    #[error("{0}")]
    Precondition(String),

    /// A decomposition disagreed with the brute-force oracle.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for this error: 2 for malformed input, 3 for a
    /// violated precondition, 4 for a failed verification, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::VertexOutOfRange { .. } | Error::MissingEdge(..) | Error::Precondition(_) => 3,
            Error::Verification(_) => 4,
            Error::Io { .. } | Error::Csv(_) | Error::Json(_) => 1,
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
