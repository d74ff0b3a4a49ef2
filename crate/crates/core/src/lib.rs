//! Exact computation in two-parameter Hecke algebras and quantum `sl_n`.
//!
//! The crate is `no_std` with `alloc`. Every scalar is a [`RatFunc`], an
//! exact reduced quotient of integer polynomials in `v`, `t` and the
//! auxiliary spectral variables `u1..u6`.
//!
//! Module overview:
//!
//! * [`ratfield`]: polynomials, gcd and the rational function field.
//! * [`combinatorics`]: permutations, partitions and standard tableaux.
//! * [`hecke`]: the Hecke algebra, Jucys-Murphy elements and idempotents.
//! * [`uvt_rep`]: the natural representation and its tensor powers.
//! * [`rmatrix_sw`]: R-matrices, the Hecke action and projector ranks.
//! * [`pairing`]: the Hopf pairing, dual bases and the quasi-R-matrix.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod check;
pub mod combinatorics;
mod error;
pub mod hecke;
pub mod linalg;
pub mod pairing;
pub mod ratfield;
pub mod rmatrix_sw;
pub mod uvt_rep;

pub use check::Check;
pub use error::{Error, Result};
pub use ratfield::{RatFunc, VarSet};
