//! Command-line front end: an expression parser for the supported algebras
//! and the `verify`, `tideal`, `expand` and `lemma-cl` subcommands.

pub mod commands;
pub mod parse;
pub mod target;

pub use commands::{run, Outcome};
