//! Library half of the `starcw` command: file codecs, report records, the
//! Steiner-system checker, and the worker pool driving the staged survey.
//! The binary in `main.rs` is a thin argument-parsing layer over these.

pub mod formats;
pub mod report;
pub mod runner;
pub mod sts;
