//! File formats, threaded drivers and the `cotilt` command line on top of
//! `cotilt-core`.

pub mod app;
pub mod dot;
pub mod drivers;
pub mod error;
pub mod format;

pub use app::{run, Cli};
pub use error::CliError;
