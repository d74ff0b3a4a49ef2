//! Reduced quotients of integer polynomials.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::monomial::{Monomial, MAX_VARS};
use super::poly::Poly;
use super::varset::{var_name, VarSet, T, V};
use crate::{Error, Result};

/// An element of `Q(v, t, u1, .., u6)`.
///
/// The representation is canonical: numerator and denominator are coprime
/// integer polynomials (integer content included), the denominator has a
/// positive leading coefficient, and zero is `0/1`. Structural equality is
/// therefore equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc { num: Poly::from_i64(c), den: Poly::one() }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let (n, d) = (q.numer().clone(), q.denom().clone());
        let s = if d.is_negative() { -BigInt::one() } else { BigInt::one() };
        RatFunc { num: Poly::constant(n * &s), den: Poly::constant(d * s) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// The variable in the given slot.
    pub fn var(slot: usize) -> Self {
        RatFunc::from_poly(Poly::var(slot))
    }

    pub fn v() -> Self {
        RatFunc::var(V)
    }

    pub fn t() -> Self {
        RatFunc::var(T)
    }

    /// The spectral variable `u_i`, `i` 1-based.
    pub fn u(i: usize) -> Self {
        RatFunc::var(VarSet::spectral_slot(i))
    }

    /// `c * v^a * t^b` with signed exponents.
    pub fn vt_monomial(c: i64, a: i32, b: i32) -> Self {
        let mut num = [0u32; MAX_VARS];
        let mut den = [0u32; MAX_VARS];
        for (slot, e) in [(V, a), (T, b)] {
            if e >= 0 {
                num[slot] = e as u32;
            } else {
                den[slot] = e.unsigned_abs();
            }
        }
        let sign = if c < 0 { -BigInt::one() } else { BigInt::one() };
        if c == 0 {
            return RatFunc::zero();
        }
        RatFunc {
            num: Poly::monomial(Monomial::from_exponents(&num), BigInt::from(c.unsigned_abs()) * sign),
            den: Poly::monomial(Monomial::from_exponents(&den), BigInt::one()),
        }
    }

    /// Builds `num / den` in reduced form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::with_sign(num, den)
    }

    fn with_sign(num: Poly, den: Poly) -> Self {
        if den.lead_coeff().is_negative() {
            RatFunc { num: num.neg(), den: den.neg() }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Whether the value is a rational constant.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        let n = self.num.as_constant().unwrap_or_default();
        let d = self.den.as_constant().expect("nonzero denominator");
        Some(BigRational::new(n, d))
    }

    /// Bitmask of variable slots that occur.
    pub fn support(&self) -> u8 {
        self.num.support() | self.den.support()
    }

    /// `c * prod x_i^{e_i}` with signed exponents, if the value has that shape.
    pub fn as_laurent_monomial(&self) -> Option<(BigRational, [i32; MAX_VARS])> {
        if self.is_zero() || !self.num.is_monomial() || !self.den.is_monomial() {
            return None;
        }
        let (mn, cn) = self.num.lead()?;
        let (md, cd) = self.den.lead()?;
        let mut exps = [0i32; MAX_VARS];
        for (slot, e) in exps.iter_mut().enumerate() {
            *e = mn.exp(slot) as i32 - md.exp(slot) as i32;
        }
        Some((BigRational::new(cn.clone(), cd.clone()), exps))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return RatFunc { num, den: self.den.clone() };
            }
            return Self::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: self.num.mul(&other.den).add(&other.num), den: other.den.clone() };
        }
        if other.den.is_one() {
            return RatFunc { num: other.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        // Henrici: with g = gcd(b, d), any common factor of the new
        // numerator and denominator already divides g.
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::with_sign(num, self.den.mul(&other.den));
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        if num.is_zero() {
            return RatFunc::zero();
        }
        let den = self.den.mul(&d1);
        let h = gcd(&num, &g);
        if h.is_one() {
            Self::with_sign(num, den)
        } else {
            Self::with_sign(num.div_exact(&h).expect("gcd divides"), den.div_exact(&h).expect("gcd divides"))
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::with_sign(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::with_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn scale_int(&self, c: i64) -> RatFunc {
        self.mul(&RatFunc::from_int(c))
    }

    /// Replaces the variable in `slot` by `value`.
    ///
    /// Fails with a pole error when the reduced denominator vanishes.
    pub fn substitute(&self, slot: usize, value: &RatFunc) -> Result<RatFunc> {
        if self.support() & (1 << slot) == 0 {
            return Ok(self.clone());
        }
        let (p, q) = (&value.num, &value.den);
        let dn = self.num.degree(slot);
        let dd = self.den.degree(slot);
        let top = dn.max(dd) as usize;
        let mut p_pows = Vec::with_capacity(top + 1);
        let mut q_pows = Vec::with_capacity(top + 1);
        p_pows.push(Poly::one());
        q_pows.push(Poly::one());
        for i in 1..=top {
            p_pows.push(p_pows[i - 1].mul(p));
            q_pows.push(q_pows[i - 1].mul(q));
        }
        let homogenize = |f: &Poly, d: u32| -> Poly {
            let mut acc = Poly::zero();
            for (e, c) in f.coeffs_in(slot).iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&c.mul(&p_pows[e]).mul(&q_pows[d as usize - e]));
                }
            }
            acc
        };
        let mut num = homogenize(&self.num, dn);
        let mut den = homogenize(&self.den, dd);
        if den.is_zero() {
            return Err(Error::Pole(alloc::format!("{} = {}", var_name(slot), value)));
        }
        if dd > dn {
            num = num.mul(&q_pows[(dd - dn) as usize]);
        } else if dn > dd {
            den = den.mul(&q_pows[(dn - dd) as usize]);
        }
        RatFunc::new(num, den)
    }

    /// Exact value at a point; `assignment` pairs slots with rationals.
    pub fn eval(&self, assignment: &[(usize, BigRational)]) -> Result<BigRational> {
        let mut point: [BigRational; MAX_VARS] = Default::default();
        let mut given = 0u8;
        for (slot, val) in assignment {
            point[*slot] = val.clone();
            given |= 1 << slot;
        }
        let missing = self.support() & !given;
        if missing != 0 {
            return Err(Error::Unassigned(var_name(missing.trailing_zeros() as usize).to_string()));
        }
        let d = self.den.eval(&point);
        if d.is_zero() {
            return Err(Error::Pole(alloc::format!("{assignment:?}")));
        }
        Ok(self.num.eval(&point) / d)
    }

    /// Value at `v`, `t` given as rationals.
    pub fn eval_vt(&self, v: &BigRational, t: &BigRational) -> Result<BigRational> {
        self.eval(&[(V, v.clone()), (T, t.clone())])
    }
}

fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
    if a.is_one() || b.is_one() {
        return (a.clone(), b.clone());
    }
    let g = gcd(a, b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(&g).expect("gcd divides"), b.div_exact(&g).expect("gcd divides"))
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$f(self, rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$f(&self, &rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$f(&self, rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<RatFunc> for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        &self / &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = RatFunc::add(self, rhs);
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = RatFunc::sub(self, rhs);
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = RatFunc::mul(self, rhs);
    }
}

impl AddAssign for RatFunc {
    fn add_assign(&mut self, rhs: RatFunc) {
        *self = RatFunc::add(self, &rhs);
    }
}

impl SubAssign for RatFunc {
    fn sub_assign(&mut self, rhs: RatFunc) {
        *self = RatFunc::sub(self, &rhs);
    }
}

impl MulAssign for RatFunc {
    fn mul_assign(&mut self, rhs: RatFunc) {
        *self = RatFunc::mul(self, &rhs);
    }
}

// -- text form --------------------------------------------------------------

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (slot, e) in m.exponents().iter().enumerate() {
        if *e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(var_name(slot))?;
        if *e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

fn is_atom(p: &Poly) -> bool {
    match p.terms() {
        [(m, c)] => m.is_one() || (c.is_one() && m.support().count_ones() == 1),
        _ => false,
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if is_atom(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
