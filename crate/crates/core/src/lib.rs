//! Exact counting workbench for domino tilings of Aztec diamonds, their
//! quartered pieces, and holey Aztec rectangles.
//!
//! Regions are finite sets of unit lattice cells ([`regions`]); tilings are
//! counted as perfect matchings of embedded grid graphs ([`graph`]) by three
//! independent exact engines ([`engines`]). Closed-form product formulas live
//! in [`formulas`], the reflective factorization of symmetric graphs in
//! [`factorize`], and [`verify`] ties everything together into reproducible
//! identity-checking suites.

pub mod engines;
pub mod factorize;
pub mod formulas;
pub mod graph;
pub mod regions;
pub mod render;
pub mod verify;

mod error;

pub use error::{Error, Result};
pub use graph::{EmbeddedGraph, Point};
pub use regions::{Cell, IndexSet, QuarterKind, Region};

/// Arbitrary-precision natural number used for every count.
pub type BigNat = num_bigint::BigUint;
/// Exact rational used for intermediate products.
pub type BigRat = num_rational::BigRational;
