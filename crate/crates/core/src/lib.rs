//! Permutation tableaux of type A and B: enumeration, the zigzag bijection
//! with permutations, sign statistics, and exact checks of the identities
//! relating them.

pub mod codec;
pub mod error;
pub mod imbalance;
pub mod involutions;
pub mod perm;
pub mod permstat;
pub mod series;
pub mod shape;
pub mod tableau;
pub mod typeb;
pub mod verify;
pub mod zigzag;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use perm::{PartialPerm, Perm};
pub use shape::{Shape, Step};
pub use tableau::Tableau;
pub use typeb::{phi_b, phi_b_inverse};
pub use typeb::{BTableau, ShiftedShape, SymTableau};
pub use zigzag::{phi, phi_inverse};
