//! Parallel censuses, report formats and the command-line front end built on
//! [`chardiv_core`].

pub mod cli;
pub mod output;
pub mod parallel;

pub use chardiv_core as core;
