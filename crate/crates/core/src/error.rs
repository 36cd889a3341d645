use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid plane graph: {0}")]
    InvalidGraph(String),
    #[error("not a triangulation: {0}")]
    NotTriangulation(String),
    #[error("not a near triangulation: {0}")]
    NotNearTriangulation(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("vertex {0} is not an interior vertex")]
    NotInterior(usize),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("{what}: {size} edges exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("zero polynomial has no alpha")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
