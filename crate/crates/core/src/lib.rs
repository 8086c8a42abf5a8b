//! Exact computations of equivariant Euler characteristics for finite groups
//! acting on finite simplicial complexes: character theory over Q, R and C,
//! Burnside rings, component categories and Bredon H₀ with Smith normal form.

pub mod bredon;
pub mod burnside;
pub mod category;
pub mod context;
pub mod cyclotomic;
pub mod error;
pub mod gcomplex;
pub mod group;
pub mod io;
pub mod linalg;
pub mod rational;
pub mod rep;

pub use error::{Error, Result};
pub use group::{Field, FiniteGroup, Perm, Subgroup};
