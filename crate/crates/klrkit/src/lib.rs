//! Exact computational toolkit for the combinatorics and algebra living on
//! a Dynkin quiver: positive roots and Weyl-group words, the repetition
//! quiver and its root bijection with spectral assignment, Kostant
//! partitions, quiver Hecke algebras through their faithful polynomial
//! representation, normalized R-matrices of type-A fundamental modules with
//! exact denominators, and the completed tensor bimodule tying the two
//! sides together.
//!
//! All arithmetic is exact (arbitrary-precision rationals and rational
//! function fields); every enumeration and report is deterministic for a
//! fixed seed.

pub mod algebra;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod klr;
pub mod qloop;
pub mod quiver;
pub mod root_system;

pub use error::{Error, Result};
