//! Reference semantics for testing `aicrepair`.
//!
//! Everything here is recomputed from the definitions over bitmasks, with no
//! calls into the library's semantics modules. Only the data model is
//! shared. Search is exhaustive over every consistent set of actions (3^n),
//! not just the essential ones, so the oracle does not inherit the
//! library's search-space reductions.

pub mod aic;
pub mod bits;
pub mod gen;
pub mod lp;
pub mod rev;
pub mod suites;

pub use bits::{Mask, Pair};
