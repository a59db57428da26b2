//! File-level front end for `rplink-core`: reports, their text and JSON
//! encodings, and the `rplink` command line.

mod cli;
pub mod report;
pub mod text;

pub use cli::{run, Format, EXIT_INVALID, EXIT_OK, EXIT_VERIFY};
