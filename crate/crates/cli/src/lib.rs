//! File formats and command implementations behind the `netbound` binary.

pub mod commands;
pub mod formats;
