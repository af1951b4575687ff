//! Command layer of the `ca-forge` binary: per-q verification, sweeps,
//! inspection tables and the result cache.

pub mod cache;
pub mod record;
pub mod run;
pub mod selftest;

pub use cache::{Cache, CacheKey};
pub use record::{ClassRow, ReportRecord};
pub use run::{CliError, Config, MethodChoice};
