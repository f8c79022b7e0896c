//! Exact verification of exterior-power multiplicities in Springer
//! representations of the classical Weyl groups.

pub mod characters;
pub mod error;
pub mod exact;
pub mod invariants;
pub mod nilpotent;
pub mod root_data;
pub mod springer;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{BiPoly, MultiPoly, QPoly, RatMatrix, Rational, Subspace};
pub use root_data::{CartanType, Family, RootSystem, WeylElement, WeylGroup, DEFAULT_GUARD};
pub use springer::Partition;
