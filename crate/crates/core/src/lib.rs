//! Exact enumeration of m-ary partitions.
//!
//! An *m-ary partition* of `n` writes `n` as a sum of powers of a fixed base
//! `m >= 2`. This crate counts them (`b_m(n)`) and their gap-free subfamily
//! (`c_m(n)`, where every power below the largest part also occurs), builds the
//! bijection between partitions and bounded digit sequences derived from the
//! base-`m` representation of `n`, and checks the known congruences modulo `m`.
//!
//! Every count is an arbitrary-precision integer and every method has at least
//! one independent oracle:
//!
//! - [`counting::count_b_poly`] / [`counting::count_c_poly`] evaluate the
//!   nested digit sums through integer-valued polynomials ([`polysum`]), so
//!   they run in time polynomial in the number of digits.
//! - [`counting::count_b_nested`] / [`counting::count_c_nested`] run the same
//!   sums as literal loops.
//! - [`counting::count_b_recurrence`] and [`counting::count_b_gf`] come from
//!   the generating function, and [`partition`] enumerates by brute force.

pub mod bijection;
pub mod budget;
pub mod congruence;
pub mod counting;
mod error;
pub mod partition;
pub mod polysum;
pub mod radix;
pub mod verify;

pub use bijection::{phi, phi_inv, BetaSeq};
pub use budget::Budgets;
pub use counting::Count;
pub use error::{Error, Result};
pub use partition::MaryPartition;
pub use polysum::IntPolynomial;
pub use radix::BaseRepr;
