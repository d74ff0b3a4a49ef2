//! Multivariate gcd over the integers.
//!
//! Recursive content / primitive-part gcd with a primitive polynomial
//! remainder sequence in a chosen main variable. Two shortcuts keep the
//! common cases cheap: a modular image test that certifies coprimality,
//! and trial division when the images say one operand is the gcd.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::monomial::{Monomial, MAX_VARS};
use super::poly::Poly;

/// Gcd with positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    if a == b {
        return a.clone().normalize_sign();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(mb);
    let ca = a.int_content();
    let cb = b.int_content();
    let cg = ca.gcd(&cb);
    let a1 = strip(a, ma, &ca);
    let b1 = strip(b, mb, &cb);
    let g = gcd_primitive(&a1, &b1);
    g.mul_term(mg, &cg).normalize_sign()
}

fn strip(p: &Poly, m: Monomial, c: &BigInt) -> Poly {
    let q = if m.is_one() { p.clone() } else { p.div_monomial(m) };
    q.div_int_exact(c)
}

/// Gcd of polynomials with unit integer content and no monomial factor.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b || *a == b.neg() {
        return a.clone().normalize_sign();
    }
    let (sa, sb) = (a.support(), b.support());
    if sa & !sb != 0 {
        let x = (sa & !sb).trailing_zeros() as usize;
        return gcd(&content_in(a, x), b);
    }
    if sb & !sa != 0 {
        let x = (sb & !sa).trailing_zeros() as usize;
        return gcd(a, &content_in(b, x));
    }

    // sa == sb from here on
    let vars: Vec<usize> = (0..MAX_VARS).filter(|v| sa & (1 << v) != 0).collect();
    let images: Vec<Option<u32>> = vars.iter().map(|&x| modular_gcd_degree(a, b, x)).collect();
    if images.iter().all(|d| *d == Some(0)) {
        return Poly::one();
    }

    // when the image degrees match one operand in every variable, that operand is the gcd
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let matches_small = vars.iter().zip(&images).all(|(&x, d)| d.is_none_or(|d| d == small.degree(x)));
    if matches_small && big.div_exact(small).is_some() {
        return small.clone().normalize_sign();
    }

    // main variable: nontrivial image gcd, smallest degree
    let x = vars
        .iter()
        .zip(&images)
        .filter(|(_, d)| d.is_none_or(|d| d > 0))
        .map(|(&x, _)| x)
        .min_by_key(|&x| a.degree(x).max(b.degree(x)))
        .expect("some variable has a nontrivial image gcd");

    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let cont = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let h = prs_gcd(pa, pb, x);
    cont.mul(&h).normalize_sign()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `x`.
pub fn content_in(p: &Poly, x: usize) -> Poly {
    let mut coeffs: Vec<Poly> = p.coeffs_in(x).into_iter().filter(|c| !c.is_zero()).collect();
    // short coefficients first: the running gcd collapses sooner
    coeffs.sort_by_key(|c| c.len());
    let mut g = Poly::zero();
    for c in &coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_in(p: &Poly, x: usize) -> Poly {
    let c = content_in(p, x);
    if c.is_one() {
        p.clone()
    } else {
        p.div_exact(&c).expect("content divides")
    }
}

fn prs_gcd(mut a: Poly, mut b: Poly, x: usize) -> Poly {
    if a.degree(x) < b.degree(x) {
        core::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.degree(x) == 0 {
            // b is primitive in x and free of x, so it is a unit here
            return Poly::one();
        }
        let r = prem(&a, &b, x);
        if r.is_zero() {
            return b.normalize_sign();
        }
        if r.degree(x) == 0 {
            return Poly::one();
        }
        a = b;
        b = primitive_in(&r, x);
    }
}

/// Pseudo-remainder of `a` by `b` in the variable `x`.
pub fn prem(a: &Poly, b: &Poly, x: usize) -> Poly {
    let mut ra = a.coeffs_in(x);
    let bc = b.coeffs_in(x);
    let db = bc.len() - 1;
    let lb = &bc[db];
    while ra.len() > db && !ra.is_empty() {
        let da = ra.len() - 1;
        let la = ra[da].clone();
        let shift = da - db;
        for (i, c) in ra.iter_mut().enumerate() {
            let scaled = c.mul(lb);
            *c = if i >= shift && i - shift < db { scaled.sub(&la.mul(&bc[i - shift])) } else { scaled };
        }
        ra.pop();
        while ra.last().is_some_and(|c| c.is_zero()) {
            ra.pop();
        }
    }
    Poly::from_coeffs_in(x, &ra)
}

// -- modular images ---------------------------------------------------------

const P: u64 = (1u64 << 61) - 1;

#[inline]
fn mulmod(a: u64, b: u64) -> u64 {
    let p = (a as u128) * (b as u128);
    let lo = (p as u64) & P;
    let hi = (p >> 61) as u64;
    let s = lo + hi;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn reduce(c: &BigInt) -> u64 {
    if let Some(x) = c.to_i64() {
        let m = (x.unsigned_abs()) % P;
        if x < 0 {
            submod(0, m)
        } else {
            m
        }
    } else {
        let pb = BigInt::from(P);
        c.mod_floor(&pb).to_u64().expect("reduced residue fits")
    }
}

// Fixed evaluation points; distinct per variable slot.
const POINTS: [u64; MAX_VARS] = [
    0x1c3a_9d2e_4f71_0b35 % P,
    0x0a6e_27f4_b1c9_d803 % P,
    0x1357_9bdf_0246_8ace % P,
    0x0f1e_2d3c_4b5a_6978 % P,
    0x1d4c_7b82_e93f_a615 % P,
    0x0b7e_1516_28ae_d2a6 % P,
    0x19e3_779b_97f4_a7c1 % P,
    0x0c2b_ae13_7f4a_7c15 % P,
];

/// Image of `p` in `F_P[x]` with every other variable fixed.
fn image(p: &Poly, x: usize) -> Vec<u64> {
    let deg = p.degree(x) as usize;
    let mut out = alloc::vec![0u64; deg + 1];
    for (m, c) in p.terms() {
        let mut val = reduce(c);
        for (v, &e) in m.exponents().iter().enumerate() {
            if v != x && e > 0 {
                val = mulmod(val, powmod(POINTS[v], e as u64));
            }
        }
        let e = m.exp(x) as usize;
        out[e] = addmod(out[e], val);
    }
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn uni_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> u32 {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let inv = invmod(*b.last().unwrap());
        while a.len() >= b.len() {
            let q = mulmod(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[shift + i] = submod(a[shift + i], mulmod(q, bc));
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    (a.len() as u32).saturating_sub(1)
}

/// Degree in `x` of the gcd of the images, or `None` if a leading
/// coefficient vanishes at the evaluation point (the image says nothing).
///
/// When `Some(d)` is returned, `d` bounds the true gcd degree in `x` from above.
fn modular_gcd_degree(a: &Poly, b: &Poly, x: usize) -> Option<u32> {
    let ia = image(a, x);
    let ib = image(b, x);
    if ia.last() == Some(&0) || ib.last() == Some(&0) {
        return None;
    }
    Some(uni_gcd_degree(ia, ib))
}

/// Exact multivariate lcm up to sign, with positive leading coefficient.
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(a, b);
    a.div_exact(&g).expect("gcd divides").mul(b).normalize_sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|(e, c)| (Monomial::from_exponents(e), BigInt::from(*c))).collect())
    }

    #[test]
    fn univariate_common_factor() {
        // (v^2-1) and (v^2+2v+1): gcd v+1
        let a = p(&[(&[2], 1), (&[], -1)]);
        let b = p(&[(&[2], 1), (&[1], 2), (&[], 1)]);
        assert_eq!(gcd(&a, &b), p(&[(&[1], 1), (&[], 1)]));
    }

    #[test]
    fn multivariate_common_factor() {
        // g = (u - v^2 t + 3), a = g*(u+v), b = g*(t-1)^2
        let g = p(&[(&[0, 0, 1], 1), (&[2, 1], -1), (&[], 3)]);
        let a = g.mul(&p(&[(&[0, 0, 1], 1), (&[1], 1)]));
        let b = g.mul(&p(&[(&[0, 1], 1), (&[], -1)]).pow(2));
        assert_eq!(gcd(&a, &b), g.clone().normalize_sign());
        assert_eq!(
            gcd(&a.scale(&BigInt::from(6)), &b.scale(&BigInt::from(-4))),
            g.scale(&BigInt::from(2)).normalize_sign()
        );
    }

    #[test]
    fn coprime_and_monomial_parts() {
        let a = p(&[(&[3, 1], 2)]);
        let b = p(&[(&[1, 2], 4), (&[2, 1], 6)]);
        assert_eq!(gcd(&a, &b), p(&[(&[1, 1], 2)]));
        let c = p(&[(&[1], 1), (&[0, 1], 1)]);
        let d = p(&[(&[1], 1), (&[0, 1], -1)]);
        assert!(gcd(&c, &d).is_one());
    }

    #[test]
    fn variable_in_one_operand_only() {
        // a = (v+1)(t+2), b = (v+1)(v-3)
        let a = p(&[(&[1], 1), (&[], 1)]).mul(&p(&[(&[0, 1], 1), (&[], 2)]));
        let b = p(&[(&[1], 1), (&[], 1)]).mul(&p(&[(&[1], 1), (&[], -3)]));
        assert_eq!(gcd(&a, &b), p(&[(&[1], 1), (&[], 1)]));
    }

    #[test]
    fn prem_identity() {
        let a = p(&[(&[3], 1), (&[1, 1], 2), (&[], 1)]);
        let b = p(&[(&[1, 0], 2), (&[0, 1], 1)]);
        let r = prem(&a, &b, 0);
        assert_eq!(r.degree(0), 0);
        // lc(b)^(3-1+1) * a = q*b + r for some q
        let lhs = a.scale(&BigInt::from(8)).sub(&r);
        assert!(lhs.div_exact(&b).is_some());
    }

    #[test]
    fn lcm_of_linear_factors() {
        let a = p(&[(&[1], 1), (&[], -1)]).mul(&p(&[(&[0, 1], 1)]));
        let b = p(&[(&[1], 1), (&[], -1)]).mul(&p(&[(&[1], 1), (&[], 1)]));
        let l = lcm(&a, &b);
        assert!(l.div_exact(&a).is_some() && l.div_exact(&b).is_some());
        assert_eq!(l.total_degree(), 3);
    }
}
