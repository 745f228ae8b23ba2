use thiserror::Error;

/// Coarse classification used for exit codes and machine-readable reasons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Well-formed input that the requested operation cannot accept.
    Domain,
    /// Input that does not satisfy a schema or structural invariant.
    Malformed,
    /// An internal consistency check failed.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed form: {0}")]
    MalformedForm(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid blowup step: {0}")]
    InvalidStep(String),
    #[error("invalid cone data: {0}")]
    InvalidCone(String),
    #[error("singular system")]
    Singular,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no effective boundary: {0}")]
    NoBoundary(String),
    #[error("oracle size {size} exceeds bound {bound}")]
    OracleSize { size: usize, bound: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::MalformedForm(_)
            | Error::MalformedInput(_)
            | Error::InvalidGraph(_)
            | Error::InvalidStep(_)
            | Error::InvalidCone(_) => ErrorKind::Malformed,
            Error::Singular | Error::Domain(_) | Error::NoBoundary(_) | Error::OracleSize { .. } => {
                ErrorKind::Domain
            }
            Error::Internal(_) => ErrorKind::Internal,
        }
    }

    /// Stable snake_case tag for reports.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::MalformedForm(_) => "malformed_form",
            Error::MalformedInput(_) => "malformed_input",
            Error::InvalidGraph(_) => "invalid_graph",
            Error::InvalidStep(_) => "invalid_step",
            Error::InvalidCone(_) => "invalid_cone",
            Error::Singular => "singular_system",
            Error::Domain(_) => "domain",
            Error::NoBoundary(_) => "no_boundary",
            Error::OracleSize { .. } => "oracle_size",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
