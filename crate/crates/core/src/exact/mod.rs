//! Exact rational scalars, 3-vectors, 3×3 matrices, and rank-3 lattices.
//!
//! All geometry in this crate is expressed in lattice-fractional coordinates
//! of a declared ambient lattice, never in floating point. In particular the
//! hexagonal family is exactly representable: in the basis `(t_x, t_omega,
//! t_z)` every isometry we need has an integer linear part.

pub mod hnf;
pub mod lattice;
pub mod mat;
pub mod rat;
pub mod vec;

pub use lattice::{Lattice, LatticeError};
pub use mat::Mat3;
pub use rat::{frac, rat, Rat};
pub use vec::Vec3;
