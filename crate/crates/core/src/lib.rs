//! Ribbon graphs as arrow presentations, their delta-matroids, partial
//! duality and mutation, with an exhaustive verification harness.

pub mod chords;
pub mod cli;
pub mod dm;
pub mod error;
pub mod harness;
pub mod ops;
pub mod poly;
pub mod ribbon;
pub mod subset;

pub use error::{Error, Result};
pub use subset::Subset;
