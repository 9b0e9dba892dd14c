//! File formats, plotting and the command line for `tamarkin-core`.

pub mod app;
pub mod complex_io;
pub mod error;
pub mod json;
pub mod plot;

pub use app::{run, Cli, Format, Output};
pub use error::Failure;
