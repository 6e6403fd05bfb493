//! Command-line front end for `k3lat_core`: the polynomial and lattice
//! text formats, JSON encodings and the registry of verification checks.

pub mod checks;
pub mod commands;
pub mod error;
pub mod jsonio;
pub mod latexpr;
pub mod polytext;

pub use error::{CliError, Result};
