//! Library half of the `superfield` command: configuration, reports and the
//! `eval` expression language.

pub mod config;
pub mod expr;
pub mod report;
pub mod run;
