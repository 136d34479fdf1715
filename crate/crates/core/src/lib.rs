//! Exact solvers and exponential-time approximation schemes for hard
//! combinatorial problems: graph bandwidth, (weighted) set cover and
//! dominating set, maximum independent set, vertex coloring and semi-metric
//! TSP.
//!
//! The crate is organized around a reducer/merger view of approximation:
//! a *reduction* shrinks an instance into sub-instances small enough for an
//! exact solver, and a *merger* assembles the sub-solutions back into a
//! solution of the original instance with a provable guarantee. The exact
//! solvers in [`oracles`] double as the inner solvers of every scheme and as
//! ground truth for guarantee verification.
//!
//! All weights are exact rationals, so every guarantee can be checked as an
//! exact inequality instead of a floating-point comparison.
//!
//! This crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `xapx-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bandwidth;
mod error;
pub mod instances;
pub mod oracles;
pub mod reductions;
pub mod setcover;
pub mod subset;
pub mod weight;

pub use error::{Error, Result};
pub use weight::Weight;
