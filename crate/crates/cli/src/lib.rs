//! Library half of the `ks-coset` command-line tool.

pub mod cache;
pub mod commands;
pub mod document;
pub mod render;

pub use document::{OutputDocument, Payload, SCHEMA_VERSION};
pub use render::{render, Format};
