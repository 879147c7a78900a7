//! Finitely presented groups through combinatorial 2-complexes.

pub mod cli;
pub mod complexes;
pub mod cosets;
pub mod covers;
pub mod error;
pub mod homology;
pub mod parse;
#[cfg(test)]
pub(crate) mod testutil;
pub mod words;

pub use error::{Error, Result};
