use crate::patch::Violation;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid chamber system: {0}")]
    ChamberSystem(String),

    #[error("invalid plane graph: {0}")]
    PlaneGraph(String),

    #[error("invalid patch:{}", .0.iter().map(|v| format!("\n  {v}")).collect::<String>())]
    Patch(Vec<Violation>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown operation `{0}`")]
    UnknownOperation(String),

    #[error("unknown seed `{0}`")]
    UnknownSeed(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
