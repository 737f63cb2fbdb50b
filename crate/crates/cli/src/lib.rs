//! Benchmark harness for the `ssfd` solver: turns problem or suite selections
//! into result rows, renders them as tables and checks them against
//! reference values.

pub mod app;
pub mod config;
pub mod regression;
pub mod run;
pub mod table;

pub use config::{ConfigError, Format, RunConfig, Selector};
pub use regression::{regression_check, RegressionSummary, RowVerdict};
pub use run::{run, ResultRow};
pub use table::{emit_table, TableError};
