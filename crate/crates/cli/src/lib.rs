//! Expression language, command dispatch and the verification harness for
//! `ladder-core`.

pub mod commands;
pub mod eval;
pub mod expr;
pub mod report;
pub mod sample;
pub mod suites;
