//! File formats, knot tables and the end-to-end pipeline on top of
//! `knotsurgery-core`.

pub mod error;
pub mod format;
pub mod pipeline;
pub mod table;

pub use error::Error;
pub use pipeline::{geography_sweep, run_pipeline, KnotSource, Run, RunConfig};
