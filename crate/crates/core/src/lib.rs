//! Wreath-product embeddings of group and Lie algebra extensions, with exhaustive verification.
#![allow(clippy::needless_range_loop)]

pub mod beck;
pub mod cli;
pub mod crude;
pub mod error;
pub mod extensions;
pub mod fixtures;
pub mod free_product;
pub mod group;
pub mod io;
pub mod kk_embed;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod suite;
pub mod wreath;

pub use error::{Error, Result};
