//! Character theory over C, R and Q.

mod chartable;
pub(crate) mod modp;

pub use chartable::CharacterTable;
mod basis;

pub use basis::{galois_orbits, IrreducibleF, RealType, RepBasis};
