//! Finite simplicial G-complexes, fixed sets and Euler characteristics.

mod builtin;
mod complex;
mod euler;
mod fixed;

pub use builtin::{builtin_rep_sphere, s3_sphere3, s3_sphere5, DihedralGen, Piece};
pub use complex::{euler_of, map_simplex, GSimplicialComplex};
pub use euler::{orbifold_euler_char, orbifold_vector, pushforward_to_point, universal_euler_char};
pub use fixed::{fixed_components, fixed_vertices, ClassFixed, ComponentOrbit, FixedData, ObjectRef};
