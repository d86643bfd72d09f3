//! Exact enumerative invariants of branched coverings of the projective line.

pub mod arith;
pub mod characters;
pub mod class_algebra;
pub mod covers;
pub mod cyclotomic;
pub mod error;
pub mod finite_field;
pub mod floor_diagrams;
pub mod hurwitz;
pub mod invariants;
pub mod partitions;
pub mod perm;

pub use error::{Error, Result};
pub use partitions::Partition;
