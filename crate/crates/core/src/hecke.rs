//! The Hecke algebra `H_k(v, t)` in the basis `{T_w}`.
//!
//! Relations: the braid relations and `(T_i - v^-1 t)(T_i + v t) = 0`, so
//! `T_i^2 = (v^-1 - v) t T_i + t^2`. Products are expanded by right
//! multiplication with generators along reduced words.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{f_lambda, Permutation, StandardTableau};
use crate::ratfield::VarSet;
use crate::{Error, RatFunc, Result};

/// A finite linear combination of basis elements `T_w`, `w ∈ S_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    rank: usize,
    coeffs: BTreeMap<Permutation, RatFunc>,
}

/// `(v^-1 - v) t`, the linear coefficient of the quadratic relation.
fn linear_coeff() -> RatFunc {
    "(1-v^2)*t/v".parse().expect("constant expression")
}

fn t_squared() -> RatFunc {
    RatFunc::vt_monomial(1, 0, 2)
}

fn check_generator(i: usize, k: usize) -> Result<()> {
    if i == 0 || i >= k {
        return Err(Error::IndexOutOfRange { index: i, rank: k });
    }
    Ok(())
}

impl HeckeElement {
    pub fn zero(k: usize) -> Self {
        HeckeElement { rank: k, coeffs: BTreeMap::new() }
    }

    pub fn one(k: usize) -> Self {
        Self::scalar(k, RatFunc::one())
    }

    pub fn scalar(k: usize, c: RatFunc) -> Self {
        Self::term(Permutation::identity(k), c)
    }

    /// `c T_w`.
    pub fn term(w: Permutation, c: RatFunc) -> Self {
        let mut e = HeckeElement::zero(w.rank());
        e.add_term(w, c);
        e
    }

    pub fn basis(w: Permutation) -> Self {
        Self::term(w, RatFunc::one())
    }

    /// The generator `T_i` of `H_k`.
    pub fn generator(i: usize, k: usize) -> Result<Self> {
        check_generator(i, k)?;
        Ok(Self::basis(Permutation::simple(i, k)))
    }

    /// `T_i^-1 = t^-2 T_i + (v - v^-1) t^-1`.
    pub fn generator_inverse(i: usize, k: usize) -> Result<Self> {
        check_generator(i, k)?;
        let mut e = HeckeElement::zero(k);
        e.add_term(Permutation::simple(i, k), RatFunc::vt_monomial(1, 0, -2));
        e.add_term(Permutation::identity(k), "(v^2-1)/(v*t)".parse().expect("constant expression"));
        Ok(e)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeff(&self, w: &Permutation) -> RatFunc {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing one-line order.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(&Permutation::identity(self.rank)).is_one()
    }

    fn add_term(&mut self, w: Permutation, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_rank(&self, other: &HeckeElement) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> HeckeElement {
        if c.is_zero() {
            return HeckeElement::zero(self.rank);
        }
        HeckeElement { rank: self.rank, coeffs: self.coeffs.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect() }
    }

    /// `self * T_i`.
    pub fn mul_generator(&self, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.rank);
        let lin = linear_coeff();
        let sq = t_squared();
        for (w, c) in &self.coeffs {
            let ws = w.times_simple(i);
            if w.ascends_at(i) {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(w.clone(), c.mul(&lin));
                out.add_term(ws, c.mul(&sq));
            }
        }
        out
    }

    /// Product in `H_k`.
    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_rank(other)?;
        let mut out = HeckeElement::zero(self.rank);
        for (w, c) in &other.coeffs {
            let mut part = self.scale(c);
            for i in w.reduced_word() {
                part = part.mul_generator(i);
            }
            for (x, d) in part.coeffs {
                out.add_term(x, d);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient.
    pub fn try_map_coeffs(&self, mut f: impl FnMut(&RatFunc) -> Result<RatFunc>) -> Result<HeckeElement> {
        let mut out = HeckeElement::zero(self.rank);
        for (w, c) in &self.coeffs {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Substitutes `values[j]` for `u_{j+1}` one variable at a time, reducing in between.
    pub fn evaluate_consecutive(&self, values: &[RatFunc]) -> Result<HeckeElement> {
        let mut cur = self.clone();
        for (j, val) in values.iter().enumerate() {
            let slot = VarSet::spectral_slot(j + 1);
            cur = cur.try_map_coeffs(|c| c.substitute(slot, val))?;
        }
        Ok(cur)
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (j, (w, c)) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]*T{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement(k={}, {self})", self.rank)
    }
}

/// Product of a sequence of elements of rank `k`, left to right.
pub fn product(k: usize, factors: &[HeckeElement]) -> Result<HeckeElement> {
    factors.iter().try_fold(HeckeElement::one(k), |acc, f| acc.mul(f))
}

// -- Jucys-Murphy elements --------------------------------------------------

/// `y_i` from `y_1 = 1`, `y_{j+1} = t^-2 T_j y_j T_j`.
pub fn jm_element(i: usize, k: usize) -> Result<HeckeElement> {
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange { index: i, rank: k });
    }
    let t_inv2 = RatFunc::vt_monomial(1, 0, -2);
    let mut y = HeckeElement::one(k);
    for j in 1..i {
        let tj = HeckeElement::generator(j, k)?;
        y = tj.mul(&y)?.mul_generator(j).scale(&t_inv2);
    }
    Ok(y)
}

/// `y_i = 1 + (v^-1 - v) Σ_{m<i} t^{-(2(i-m)-1)} T_{(m i)}`.
pub fn jm_expanded(i: usize, k: usize) -> Result<HeckeElement> {
    jm_closed_form(i, k, |m| -(2 * (i - m) as i32 - 1))
}

/// The closed form with a uniform factor `t^-1` in front of every transposition.
///
/// Agrees with [`jm_element`] only for `i <= 2`.
pub fn jm_expanded_uniform(i: usize, k: usize) -> Result<HeckeElement> {
    jm_closed_form(i, k, |_| -1)
}

fn jm_closed_form(i: usize, k: usize, t_exp: impl Fn(usize) -> i32) -> Result<HeckeElement> {
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange { index: i, rank: k });
    }
    let mut y = HeckeElement::one(k);
    let diff: RatFunc = "(1-v^2)/v".parse().expect("constant expression");
    for m in 1..i {
        let c = diff.mul(&RatFunc::vt_monomial(1, 0, t_exp(m)));
        y.add_term(Permutation::transposition(m, i, k), c);
    }
    Ok(y)
}

// -- longest elements and inverses ------------------------------------------

/// `T_{w_i} = T_1 (T_2 T_1) .. (T_{i-1} .. T_1)`, the longest element of `S_i ⊂ S_k`.
pub fn t_longest(i: usize, k: usize) -> Result<HeckeElement> {
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange { index: i, rank: k });
    }
    let mut e = HeckeElement::one(k);
    for j in 1..i {
        for l in (1..=j).rev() {
            e = e.mul_generator(l);
        }
    }
    Ok(e)
}

/// `T_{w_i}` by the second ordering `(T_1 .. T_{i-1})(T_1 .. T_{i-2}) .. (T_1 T_2) T_1`.
pub fn t_longest_alt(i: usize, k: usize) -> Result<HeckeElement> {
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange { index: i, rank: k });
    }
    let mut e = HeckeElement::one(k);
    for top in (1..i).rev() {
        for l in 1..=top {
            e = e.mul_generator(l);
        }
    }
    Ok(e)
}

/// `T_w^-1 = T_{i_l}^-1 .. T_{i_1}^-1` along a reduced word of `w`.
pub fn invert_basis_element(w: &Permutation) -> Result<HeckeElement> {
    let k = w.rank();
    let mut e = HeckeElement::one(k);
    for &i in w.reduced_word().iter().rev() {
        e = e.mul(&HeckeElement::generator_inverse(i, k)?)?;
    }
    Ok(e)
}

/// The power `e` with `T_{w_i}^2 = t^e y_1 .. y_i`, if the two sides are proportional that way.
pub fn longest_square_t_exponent(i: usize, k: usize) -> Result<Option<i32>> {
    let tw = t_longest(i, k)?;
    let lhs = tw.mul(&tw)?;
    let mut rhs = HeckeElement::one(k);
    for j in 1..=i {
        rhs = rhs.mul(&jm_element(j, k)?)?;
    }
    let id = Permutation::identity(k);
    let (a, b) = (lhs.coeff(&id), rhs.coeff(&id));
    if b.is_zero() {
        return Ok(None);
    }
    let ratio = a.checked_div(&b)?;
    let Some((c, exps)) = ratio.as_laurent_monomial() else {
        return Ok(None);
    };
    let only_t = exps.iter().enumerate().all(|(slot, &e)| slot == crate::ratfield::T || e == 0);
    if !only_t || !num_traits::One::is_one(&c) || rhs.scale(&ratio) != lhs {
        return Ok(None);
    }
    Ok(Some(exps[crate::ratfield::T]))
}

// -- Baxterized elements and idempotents ------------------------------------

/// `T_i(x, y) = t^-1 T_i + (v^-1 - v) x / (y - x)`.
pub fn baxterized(i: usize, k: usize, x: &RatFunc, y: &RatFunc) -> Result<HeckeElement> {
    check_generator(i, k)?;
    let denom = y.sub(x);
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let diff: RatFunc = "(1-v^2)/v".parse().expect("constant expression");
    let mut e = HeckeElement::term(Permutation::simple(i, k), RatFunc::vt_monomial(1, 0, -1));
    e.add_term(Permutation::identity(k), diff.mul(x).checked_div(&denom)?);
    Ok(e)
}

/// The fusion element `Ψ(u_1, .., u_k)` with coefficients in `Q(v, t, u_1, .., u_k)`.
///
/// The `i`-th block is `T_i(u_1, u_{i+1}) T_{i-1}(u_2, u_{i+1}) .. T_1(u_i, u_{i+1})`; blocks
/// multiply for `i = 1, .., k-1` left to right and the result is multiplied by `T_{w_k}^-1`.
pub fn psi(k: usize) -> Result<HeckeElement> {
    let mut e = HeckeElement::one(k);
    for i in 1..k {
        let y = RatFunc::u(i + 1);
        for j in (1..=i).rev() {
            let x = RatFunc::u(i + 1 - j);
            e = e.mul(&baxterized(j, k, &x, &y)?)?;
        }
    }
    let wk = Permutation::longest_element(k, k);
    e.mul(&invert_basis_element(&wk)?)
}

/// `E_T` by the inductive formula through Jucys-Murphy elements.
pub fn idempotent_inductive(tableau: &StandardTableau) -> Result<HeckeElement> {
    let k = tableau.size();
    if k <= 1 {
        return Ok(HeckeElement::one(k.max(1)));
    }
    let smaller = tableau.remove_largest();
    let alpha = tableau.cell_of(k).expect("largest entry present");
    let mu = smaller.shape();
    let sigma = alpha.content();
    let yk = jm_element(k, k)?;
    let mut e = embed(&idempotent_inductive(&smaller)?, k);
    for cell in mu.addable_cells().into_iter().filter(|&c| c != alpha) {
        let rho = cell.content();
        let factor = yk.sub(&HeckeElement::scalar(k, rho.clone()))?;
        e = e.mul(&factor)?.scale(&sigma.sub(&rho).inv()?);
    }
    Ok(e)
}

/// Image of `e ∈ H_j` under the standard embedding into `H_k`, `j <= k`.
pub fn embed(e: &HeckeElement, k: usize) -> HeckeElement {
    let j = e.rank();
    let mut out = HeckeElement::zero(k);
    for (w, c) in &e.coeffs {
        let mut images = w.images();
        images.extend(j + 1..=k);
        let wk = Permutation::from_images(&images).expect("extension of a permutation");
        out.add_term(wk, c.clone());
    }
    out
}

/// The fusion element evaluated consecutively at the contents of `tableau`, times `f(λ)`.
pub fn idempotent_fusion(tableau: &StandardTableau) -> Result<HeckeElement> {
    let k = tableau.size();
    idempotent_fusion_with(&psi(k)?, tableau)
}

/// As [`idempotent_fusion`], reusing a precomputed `Ψ` of matching rank.
pub fn idempotent_fusion_with(psi_k: &HeckeElement, tableau: &StandardTableau) -> Result<HeckeElement> {
    let k = tableau.size();
    if psi_k.rank() != k {
        return Err(Error::RankMismatch(psi_k.rank(), k));
    }
    let evaluated = psi_k.evaluate_consecutive(&tableau.contents())?;
    Ok(evaluated.scale(&f_lambda(&tableau.shape(), k)?))
}

/// All idempotents of `H_k` by the inductive formula, keyed by tableau.
pub fn all_idempotents(k: usize) -> Result<Vec<(StandardTableau, HeckeElement)>> {
    let mut out = Vec::new();
    for shape in crate::combinatorics::partitions(k) {
        for t in crate::combinatorics::standard_tableaux(&shape) {
            let e = idempotent_inductive(&t)?;
            out.push((t, e));
        }
    }
    Ok(out)
}
