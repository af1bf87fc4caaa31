//! Command-line front end for `cind`: graph6 and edge-list I/O, decomposition
//! JSON, and batch experiments with CSV reports.

mod app;
pub mod experiment;
pub mod format;

pub use app::run;
