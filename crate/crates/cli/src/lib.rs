//! File formats and batch drivers for the `chebcode` command line tool.
//!
//! The algorithmic core lives in `chebcode-core`; this crate adds the
//! generator-set text format and the seeded random sweep used to spot-check
//! the satisfiability/weight dichotomy on many formulas at once.

pub mod genfile;
pub mod sweep;
