//! Exact-arithmetic engine for triply periodic graphs, crystallographic group
//! actions, and their quotients on the 3-torus.
//!
//! Everything here is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate. The crate is `no_std` (with `alloc`)
//! so the computational core stays free of IO concerns; file formats and the
//! command line live in the companion `torsym-cli` crate.
//!
//! The layers, bottom up:
//!
//! * [`exact`] — rationals, 3-vectors, 3×3 matrices, and rank-3 lattices with
//!   membership, index, and coset enumeration.
//! * [`isometry`] — affine isometries in lattice-fractional coordinates,
//!   finitely generated space groups, and their finite quotient groups.
//! * [`pgraph`] — periodic graphs as translation-labeled motifs, quotient
//!   graphs on the torus, genus, group actions, and the lift-component
//!   knottedness certificate.
//! * [`catalog`] — the nine built-in example families with their expected
//!   invariants and a one-call verification pipeline.
//! * [`bounds`] — orbifold Euler characteristics, extremal signature
//!   enumeration, and the derived bound tables.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod catalog;
pub mod exact;
pub mod isometry;
pub mod pgraph;
