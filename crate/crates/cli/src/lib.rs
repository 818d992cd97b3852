//! Command-line front end: `.mat` input, JSON reports, and the benchmark harness.

pub mod args;
pub mod human;
pub mod mat;
pub mod report;
pub mod run;

pub use args::Cli;
pub use report::Report;
pub use run::{run, CliError};
