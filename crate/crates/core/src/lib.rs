//! Exact enumerative combinatorics around the generalized Catalan numbers
//! `C_{β,γ}(n) = γ/(βn+γ) · binom(βn+γ, n)`.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`exact`]: the [`Rat`] scalar, generalized binomial and multinomial coefficients
//! - [`counting`]: closed forms for `C_{β,γ}(n)` and the vector generalization `Q(n⃗; p⃗; γ)`
//! - [`forest`]: ordered trees and forests, exhaustive generators, the parenthesis encoding
//! - [`involution`]: colored planted forests and the sign-reversing involution on them
//! - [`riordan`]: truncated power series and Riordan-array identity checks
//! - [`identities`]: the verification harness over rational parameter grids
//!
//! Everything is deterministic and exact; there is no floating point anywhere.

#![no_std]
#![warn(clippy::cast_lossless, clippy::redundant_closure_for_method_calls)]

extern crate alloc;

pub mod counting;
mod error;
pub mod exact;
pub mod forest;
pub mod identities;
pub mod involution;
pub mod riordan;

#[doc(inline)]
pub use self::{
    counting::{catalan_gen, catalan_sequence, catalan_vector, VecProfile},
    error::{Error, Result},
    exact::{binom, kronecker, multinomial, Rat},
    forest::{Forest, Tree, VertexAddr},
    involution::{Classification, Color, ColoredForest},
    riordan::{RiordanArray, Series},
};

/// Default cap on the number of structures an enumeration may materialize.
pub const DEFAULT_MAX_STRUCTS: u64 = 5_000_000;
