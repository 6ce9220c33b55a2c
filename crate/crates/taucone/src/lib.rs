//! Exact intersection arithmetic on the divisor plane of a curve's second
//! symmetric product, with certified upper and lower bounds for the
//! nef-cone boundary invariant `τ`, an exclusion-certificate prover for
//! Seshadri lower bounds, and the finiteness enumerator for possible `τ`
//! values above a threshold.
//!
//! Everything is exact: integers and rationals are arbitrary precision, and
//! irrational bounds of the shape `√q` compare against rationals by
//! cross-multiplication and squaring. No floating point enters any
//! computation; decimals appear only as display annotations.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so the whole API is safe to use from concurrent contexts
//! without synchronization.

// error variants carry the exact rationals that violated a precondition;
// they are cold paths, so their size is not worth boxing away
#![allow(clippy::result_large_err)]

pub mod bound;
pub mod cli;
pub mod cone;
pub mod finiteness;
pub mod lattice;
pub mod prover;
pub mod tau_bounds;

pub use bound::{Bound, BoundValue};
pub use lattice::{DivClass, Genus, LatticeError, QClass};
