//! Command-line front end for `borderline-core`.
//!
//! Commands produce a [`Report`] (serialized as `{input, procedure, verdict,
//! certificates, result, timings}`) together with a human-readable rendering.

pub mod args;
pub mod commands;
pub mod corpus;
pub mod error;
pub mod input;
pub mod parallel;
pub mod report;

pub use args::{Cli, Command, Global};
pub use commands::{run, Context, Outcome, Status};
pub use error::{CliError, Result};
pub use report::Report;
