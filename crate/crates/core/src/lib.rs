//! Exact enumeration around the equivalence on permutations generated by
//! swapping neighbouring letters that differ by one.
//!
//! * [`perm`]: words, descent sets, salience and the move relations.
//! * [`equivalence`]: orbits, canonical salient representatives, Fibonacci
//!   class sizes and the class-counting formulas with brute-force checks.
//! * [`series`]: truncated power series with exact coefficients, the
//!   Cartier-Foata generating functions and the umbral class count pipeline.
//! * [`poset`]: graded posets, flag f- and h-vectors, distributive lattices
//!   of order ideals and the multiplicity-free classification.
//! * [`verify`]: the named verification suites shared by the CLI and tests.

pub mod combinat;
pub mod equivalence;
mod error;
pub mod limits;
pub mod perm;
pub mod poset;
pub mod serde_big;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
