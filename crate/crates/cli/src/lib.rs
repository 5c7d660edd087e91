//! Expression language, verification suites and reports for the `qsusy` tool.

pub mod config;
pub mod dsl;
pub mod report;
pub mod suites;

pub use config::SuiteConfig;
pub use report::{Check, Report, Status};
pub use suites::{run_suite, Suite};
