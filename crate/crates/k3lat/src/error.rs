use thiserror::Error;

use crate::polytext::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] k3lat_core::Error),
    #[error("polynomial: {0}")]
    Poly(#[from] ParseError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("lattice expression: {0}")]
    Lattice(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0}")]
    Input(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
