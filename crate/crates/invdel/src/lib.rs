//! File formats, the D-class graph cache and the parallel drivers behind
//! the `invdel` command.

pub mod cache;
pub mod config;
pub mod engine;
pub mod error;
pub mod format;
pub mod genomes;

pub use config::{Config, Engine};
pub use error::{Error, Result};
