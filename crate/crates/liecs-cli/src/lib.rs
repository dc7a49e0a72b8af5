//! Library half of the command-line tool: file formats, classification and
//! the command implementations, kept binary-free so integration tests can
//! drive them directly.

pub mod classify;
pub mod commands;
pub mod files;
pub mod report;

pub use report::Report;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MATH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
