//! Command-line front end for the `minorrel-core` library: argument
//! handling, the text and JSON formats, and an on-disk plethysm cache.

pub mod cache;
pub mod cli;
pub mod json;
pub mod text;

pub use cli::run;
