//! Exact symmetric-function arithmetic and iterated plethysm of Schur
//! functions, with hook+column extraction and the flip involution.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line front end, statistics and parallel drivers live in the `plethyrs`
//! crate.

#![no_std]

extern crate alloc;

pub mod alphabet;
pub mod closed_forms;
pub mod error;
pub mod flip;
pub mod partition;
pub mod plethysm;
pub mod symfunc;

pub use alphabet::BivariatePoly;
pub use error::Error;
pub use flip::{FlipResult, HCSequence};
pub use partition::{HookColumnShape, Partition};
pub use plethysm::PlethysmExpression;
pub use symfunc::{CharacterTable, PSeries, SchurExpansion};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
