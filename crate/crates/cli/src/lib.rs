//! Library half of the `chtri` command-line tool, split out so the commands
//! can be unit tested without spawning the binary.

pub mod commands;
pub mod error;
pub mod format;
pub mod svg;
pub mod verify;
