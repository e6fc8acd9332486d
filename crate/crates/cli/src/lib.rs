//! Config-driven front end for `hv-core`: one JSON run configuration in, a
//! TSV or JSON report out, exit status 0 exactly when the check passed.

pub mod config;
pub mod report;
pub mod run;

pub use config::{parse_config, ConfigError, OutputFormat, RunConfig};
pub use report::Report;
pub use run::run;
