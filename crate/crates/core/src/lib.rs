//! Means on finite-dimensional vector lattices and the orthogonally additive
//! polynomials they characterize.
//!
//! The carrier lattice is `R^n` with the coordinatewise order, where the
//! functional calculus for continuous positively homogeneous functions is
//! plain coordinatewise evaluation. On top of it the crate provides:
//!
//! - [`lattice`]: lattice vectors, the positive cone, disjointness, and an
//!   exact rational scalar mode;
//! - [`partitions`]: complete partitions of an integer and their weights;
//! - [`means`]: root mean power, geometric, harmonic and weighted geometric
//!   means, each harmonic/weighted mean also evaluated through its
//!   infimum-of-tangents representation;
//! - [`polynomial`]: `s`-homogeneous polynomials with their symmetric
//!   `s`-linear maps, polarization and orthogonal additivity testing;
//! - [`theorems`]: randomized and exhaustive checkers for the identities
//!   that characterize orthogonally additive polynomials, plus a
//!   falsification search for the converse directions;
//! - [`sampling`]: seeded input generators shared by the checkers;
//! - [`cli`]: the command-line front end used by the `orthomeans` binary.

// `!(x <= t)` is used deliberately so that NaN counts as a failure.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod lattice;
pub mod means;
pub mod partitions;
pub mod polynomial;
pub mod report;
pub mod sampling;
pub mod theorems;

pub use error::{Error, Result};
pub use lattice::{LatticeVector, PositiveVector, RationalVector, Scalar, Vector};
pub use means::{InfimumSpec, MeanKind, MeanResult, Method};
pub use partitions::{CompletePartition, WeightVector};
pub use polynomial::{HomogeneousPolynomial, SymmetricMultilinearView};
pub use report::{ClaimId, Counterexample, Tolerances, Verdict, VerificationReport};
