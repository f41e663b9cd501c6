//! Subgroup permutation codes under the Chebyshev metric.
//!
//! This crate turns not-all-equal satisfiability instances into generator
//! sets of permutation subgroups whose minimum nonzero Chebyshev weight is 6
//! exactly when the instance is satisfiable and 7 otherwise, and provides the
//! group machinery needed to check that claim exactly: closure enumeration,
//! a deterministic stabilizer chain, and subset-product enumeration for
//! commuting involutions.
//!
//! The crate is `no_std` (with `alloc`); file formats and the command line
//! front end live in the companion `chebcode` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod camwu;
pub mod gadgets;
pub mod group;
pub mod metric;
pub mod minweight;
pub mod naesat;
pub mod perm;
pub mod reduction;

pub use metric::{chebyshev, weight, Weight};
pub use perm::{CycleList, OneLine, Permutation, Symbol};
