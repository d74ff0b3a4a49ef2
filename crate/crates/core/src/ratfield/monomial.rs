//! Packed exponent vectors.
//!
//! Up to [`MAX_VARS`] exponents of 16 bits each live in one `u128`, with
//! variable 0 in the most significant field. Comparing the packed integers
//! is then exactly lexicographic order on exponent vectors.

use core::fmt;

/// Number of variable slots in a monomial.
pub const MAX_VARS: usize = 8;

const FIELD_BITS: u32 = 16;
const FIELD_MASK: u128 = 0xFFFF;
// top bit of every field; exponents must stay below 2^15 so sums never carry
const HIGH_BITS: u128 = 0x8000_8000_8000_8000_8000_8000_8000_8000;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u128);

#[inline]
fn shift(var: usize) -> u32 {
    (MAX_VARS - 1 - var) as u32 * FIELD_BITS
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(var: usize, exp: u32) -> Self {
        assert!(var < MAX_VARS, "variable slot {var} out of range");
        assert!(exp < 0x8000, "exponent {exp} too large");
        Monomial((exp as u128) << shift(var))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        exps.iter().enumerate().fold(Monomial::ONE, |m, (i, &e)| m.mul(Monomial::var(i, e)))
    }

    #[inline]
    pub fn exp(self, var: usize) -> u32 {
        ((self.0 >> shift(var)) & FIELD_MASK) as u32
    }

    pub fn exponents(self) -> [u32; MAX_VARS] {
        let mut out = [0; MAX_VARS];
        for (i, e) in out.iter_mut().enumerate() {
            *e = self.exp(i);
        }
        out
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        let s = self.0 + other.0;
        if s & HIGH_BITS != 0 {
            panic!("monomial exponent overflow");
        }
        Monomial(s)
    }

    pub fn pow(self, e: u32) -> Monomial {
        let mut out = Monomial::ONE;
        for v in 0..MAX_VARS {
            let x = self.exp(v) as u64 * e as u64;
            assert!(x < 0x8000, "monomial exponent overflow");
            out.0 |= (x as u128) << shift(v);
        }
        out
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        (0..MAX_VARS).all(|v| self.exp(v) <= other.exp(v))
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn div(other: Monomial, by: Monomial) -> Option<Monomial> {
        if by.divides(other) {
            Some(Monomial(other.0 - by.0))
        } else {
            None
        }
    }

    /// Componentwise minimum.
    pub fn gcd(self, other: Monomial) -> Monomial {
        let mut out = Monomial::ONE;
        for v in 0..MAX_VARS {
            out.0 |= (self.exp(v).min(other.exp(v)) as u128) << shift(v);
        }
        out
    }

    /// Splits off the exponent of `var`.
    pub fn split(self, var: usize) -> (Monomial, u32) {
        let e = self.exp(var);
        (Monomial(self.0 & !(FIELD_MASK << shift(var))), e)
    }

    pub fn with_exp(self, var: usize, e: u32) -> Monomial {
        let (rest, _) = self.split(var);
        rest.mul(Monomial::var(var, e))
    }

    pub fn total_degree(self) -> u32 {
        (0..MAX_VARS).map(|v| self.exp(v)).sum()
    }

    /// Bitmask of variables with nonzero exponent.
    pub fn support(self) -> u8 {
        (0..MAX_VARS).fold(0u8, |m, v| if self.exp(v) > 0 { m | (1 << v) } else { m })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}
