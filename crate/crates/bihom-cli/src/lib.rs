//! JSON structure files and the `bihom` command-line front end.

pub mod cli;
pub mod fixtures;
pub mod format;

pub use cli::{run, Outcome};
pub use format::{parse_structure, serialize_structure, FormatError, Structure};
