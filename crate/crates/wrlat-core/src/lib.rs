//! Well-rounded ideal lattices of cyclic cubic and cyclic quartic number fields.
//!
//! Fields are built with exact arithmetic, ideals are integer lattices in Hermite
//! normal form over an integral basis, and well-roundedness is decided by exact
//! shortest-vector enumeration.

mod error;
mod fp;

pub mod certify;
pub mod cubic;
pub mod decompose;
pub mod field;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod numtheory;
pub mod order;
pub mod polymod;
pub mod quartic;
pub mod quartic_bases;
pub mod survey;

pub use error::{Error, Result};
pub use field::Field;
pub use ideal::IdealLattice;
