//! Kronecker coefficients of the symmetric group and the counting bounds around them.

pub mod barvinok;
pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod limits;
pub mod partitions;
pub mod symfun;
pub mod tables;

pub use error::{Error, Result};
pub use partitions::{Count, Partition, SignedCount};
