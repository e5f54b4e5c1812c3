//! Batch front-end for the `cycloribbon` library: enumeration of labels,
//! computation of tables (induction, restriction, `q`-Cartan and
//! decomposition matrices, Ext-quivers) and verification against the
//! embedded reference tables and the registered property suites.
//!
//! The binary in `main.rs` is a thin argument parser over this crate.

pub mod checks;
pub mod commands;
pub mod config;
mod error;

pub use error::CliError;
