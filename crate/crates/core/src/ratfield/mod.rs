//! The coefficient field `Q(v, t, u1, .., u6)`.

mod gcd;
mod monomial;
mod parse;
mod poly;
mod ratfunc;
mod varset;

pub use gcd::{content_in, gcd, lcm, prem};
pub use monomial::{Monomial, MAX_VARS};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use varset::{var_index, var_name, VarSet, T, V};
