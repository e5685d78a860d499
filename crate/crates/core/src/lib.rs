//! Exact computations with relations between the t-minors of a generic
//! matrix: shape combinatorics, symmetric functions, a multilinear model of
//! the symmetric algebra on minors, explicit relations and their checks.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod partitions;
pub mod symfunc;
pub mod multilinear;
pub mod relations;
pub mod verify;
pub mod linalg;
pub mod regbounds;

pub use error::{Error, Result};
