//! R-matrices on `V_n ⊗ V_n`, the Hecke action on `V_n^{⊗k}` and projector ranks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::combinatorics::{partitions, standard_tableaux, Partition, Permutation};
use crate::hecke::{idempotent_inductive, HeckeElement};
use crate::linalg::{symbolic_rank, RankCertificate, SparseMatrix};
use crate::uvt_rep::{basis_index, basis_weight, tensor_rep};
use crate::{Check, Error, RatFunc, Result};

/// `Σ_{i<j} (a E_ji⊗E_ij + b E_ij⊗E_ji + c E_jj⊗E_ii) + d Σ_i E_ii⊗E_ii`.
fn two_site(n: usize, a: &RatFunc, b: &RatFunc, c: &RatFunc, d: &RatFunc) -> SparseMatrix {
    let idx = |i: usize, j: usize| basis_index(n, &[i, j]);
    let mut m = SparseMatrix::zeros(n * n, n * n);
    for i in 1..=n {
        m.add_at(idx(i, i), idx(i, i), d);
        for j in i + 1..=n {
            // E_ji ⊗ E_ij sends v_i ⊗ v_j to v_j ⊗ v_i
            m.add_at(idx(j, i), idx(i, j), a);
            m.add_at(idx(i, j), idx(j, i), b);
            m.add_at(idx(j, i), idx(j, i), c);
        }
    }
    m
}

/// The braiding operator `R̃` with coefficients `v t`, `v t^-1`, `t^-1 (1 - v^2)` and `1`.
pub fn rtilde(n: usize) -> SparseMatrix {
    two_site(
        n,
        &RatFunc::vt_monomial(1, 1, 1),
        &RatFunc::vt_monomial(1, 1, -1),
        &"(1-v^2)/t".parse().expect("constant expression"),
        &RatFunc::one(),
    )
}

/// `R̃` with the diagonal-block coefficient `1 - v^2` in place of `t^-1 (1 - v^2)`.
///
/// This variant satisfies the braid relation and equals `v t^-1 R`.
pub fn rtilde_untwisted(n: usize) -> SparseMatrix {
    two_site(
        n,
        &RatFunc::vt_monomial(1, 1, 1),
        &RatFunc::vt_monomial(1, 1, -1),
        &"1-v^2".parse().expect("constant expression"),
        &RatFunc::one(),
    )
}

/// `R̃` with the coefficients `v t` and `v t^-1` exchanged.
pub fn rtilde_shuffled(n: usize) -> SparseMatrix {
    two_site(
        n,
        &RatFunc::vt_monomial(1, 1, -1),
        &RatFunc::vt_monomial(1, 1, 1),
        &"(1-v^2)/t".parse().expect("constant expression"),
        &RatFunc::one(),
    )
}

/// The Hecke-type operator `R` with coefficients `t^2`, `1`, `(v^-1 - v) t` and `v^-1 t`.
pub fn r_matrix(n: usize) -> SparseMatrix {
    two_site(
        n,
        &RatFunc::vt_monomial(1, 0, 2),
        &RatFunc::one(),
        &"(1-v^2)*t/v".parse().expect("constant expression"),
        &RatFunc::vt_monomial(1, -1, 1),
    )
}

/// The two-site operator acting on tensor positions `i, i + 1` of `V_n^{⊗k}`.
pub fn lift(i: usize, base: &SparseMatrix, n: usize, k: usize) -> Result<SparseMatrix> {
    if i == 0 || i >= k {
        return Err(Error::IndexOutOfRange { index: i, rank: k });
    }
    let left = SparseMatrix::identity(n.pow(i as u32 - 1));
    let right = SparseMatrix::identity(n.pow((k - i - 1) as u32));
    Ok(left.kron(base).kron(&right))
}

fn check_equal(name: String, lhs: &SparseMatrix, rhs: &SparseMatrix) -> Check {
    match lhs.first_difference(rhs) {
        None => Check::pass(name),
        Some((i, j, a, b)) => Check::fail(name, format!("entry ({i},{j}): lhs {a}, rhs {b}")),
    }
}

fn guard(n: usize, k: usize, cap: usize) -> Result<()> {
    let dim = n.checked_pow(k as u32).unwrap_or(usize::MAX);
    if dim > cap {
        return Err(Error::SizeCap { size: dim, cap });
    }
    Ok(())
}

/// Braid relations `X_i X_{i+1} X_i = X_{i+1} X_i X_{i+1}` and distant commutation for the lifts of `base`.
pub fn check_braid(base: &SparseMatrix, n: usize, k: usize, cap: usize) -> Result<Vec<Check>> {
    guard(n, k, cap)?;
    let lifts: Vec<SparseMatrix> = (1..k).map(|i| lift(i, base, n, k)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 1..k {
        for j in i + 1..k {
            let (a, b) = (&lifts[i - 1], &lifts[j - 1]);
            if j == i + 1 {
                out.push(check_equal(format!("X{i} X{j} X{i} = X{j} X{i} X{j}"), &a.mul(b).mul(a), &b.mul(a).mul(b)));
            } else {
                out.push(check_equal(format!("X{i} X{j} = X{j} X{i}"), &a.mul(b), &b.mul(a)));
            }
        }
    }
    Ok(out)
}

/// `(M - v^-1 t)(M + v t)` for a two-site operator `M` on `V_n ⊗ V_n`.
pub fn hecke_quadratic(base: &SparseMatrix) -> SparseMatrix {
    let id = SparseMatrix::identity(base.nrows());
    let a = base.sub(&id.scale(&RatFunc::vt_monomial(1, -1, 1)));
    let b = base.add(&id.scale(&RatFunc::vt_monomial(1, 1, 1)));
    a.mul(&b)
}

/// The representation `δ_n: H_k → End(V_n^{⊗k})`, `T_i ↦ R_i`, with cached basis images.
pub struct HeckeAction {
    n: usize,
    k: usize,
    generators: Vec<SparseMatrix>,
    basis_images: BTreeMap<Permutation, SparseMatrix>,
}

impl HeckeAction {
    pub fn new(n: usize, k: usize, cap: usize) -> Result<Self> {
        guard(n, k, cap)?;
        let r = r_matrix(n);
        let generators = (1..k).map(|i| lift(i, &r, n, k)).collect::<Result<_>>()?;
        let mut basis_images = BTreeMap::new();
        basis_images.insert(Permutation::identity(k), SparseMatrix::identity(n.pow(k as u32)));
        Ok(HeckeAction { n, k, generators, basis_images })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    /// `R_i`.
    pub fn generator(&self, i: usize) -> &SparseMatrix {
        &self.generators[i - 1]
    }

    /// `δ_n(T_w) = R_{i_1} .. R_{i_l}` along a reduced word, memoised.
    pub fn basis_image(&mut self, w: &Permutation) -> SparseMatrix {
        if let Some(m) = self.basis_images.get(w) {
            return m.clone();
        }
        let word = w.reduced_word();
        let last = *word.last().expect("non-identity has a descent");
        let shorter = w.times_simple(last);
        let m = self.basis_image(&shorter).mul(&self.generators[last - 1]);
        self.basis_images.insert(w.clone(), m.clone());
        m
    }

    /// `δ_n(h)`.
    pub fn image(&mut self, h: &HeckeElement) -> Result<SparseMatrix> {
        if h.rank() != self.k {
            return Err(Error::RankMismatch(h.rank(), self.k));
        }
        let mut out = SparseMatrix::zeros(self.dim(), self.dim());
        for (w, c) in h.terms() {
            out = out.add(&self.basis_image(w).scale(c));
        }
        Ok(out)
    }
}

/// Whether every `R_i` commutes with every generator image on `V_n^{⊗k}`.
pub fn commutant_check(n: usize, k: usize, cap: usize) -> Result<Vec<Check>> {
    guard(n, k, cap)?;
    let g = tensor_rep(n, k, cap)?;
    let action = HeckeAction::new(n, k, cap)?;
    let mut out = Vec::new();
    for i in 1..k {
        let r = action.generator(i);
        for (label, m) in g.labelled() {
            out.push(check_equal(format!("R{i} {label} = {label} R{i}"), &r.mul(m), &m.mul(r)));
        }
    }
    Ok(out)
}

/// The plain flip `v_i ⊗ v_j ↦ v_j ⊗ v_i` on `V_n ⊗ V_n`.
pub fn flip(n: usize) -> SparseMatrix {
    let one = RatFunc::one();
    let zero = RatFunc::zero();
    two_site(n, &one, &one, &zero, &one)
}

/// Image of an idempotent under `δ_n`, with a symbolic rank certificate.
#[derive(Clone, Debug)]
pub struct Projection {
    pub rank: usize,
    /// Columns of `δ_n(E)` at the pivot positions; they span the image.
    pub basis: Vec<Vec<RatFunc>>,
    pub certificate: RankCertificate,
    /// `tr δ_n(E)`, which equals the rank for an idempotent.
    pub trace: RatFunc,
}

/// Image of `δ_n(e)` for an idempotent `e`.
pub fn project(e: &HeckeElement, action: &mut HeckeAction, point: (&BigRational, &BigRational)) -> Result<Projection> {
    if e.mul(e)? != *e {
        return Err(Error::NotIdempotent);
    }
    let m = action.image(e)?;
    let certificate = symbolic_rank(&m, point.0, point.1)?;
    let basis = certificate.pivots.cols.iter().map(|&c| m.column(c)).collect();
    Ok(Projection { rank: certificate.rank, basis, trace: m.trace(), certificate })
}

/// Whether every image vector lies in a single weight space.
pub fn weight_compatible(p: &Projection, n: usize, k: usize) -> bool {
    p.basis.iter().all(|vec| {
        let mut weights = vec.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| basis_weight(n, k, i));
        match weights.next() {
            None => true,
            Some(w) => weights.all(|x| x == w),
        }
    })
}

/// One summand of `V_n^{⊗k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub shape: Partition,
    /// Number of standard tableaux of the shape.
    pub syt: usize,
    /// Rank of the projector of the first tableau.
    pub dim: usize,
}

/// Schur-Weyl decomposition data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub n: usize,
    pub k: usize,
    pub components: Vec<Component>,
    /// `Σ syt * dim`.
    pub total: usize,
    /// `n^k`.
    pub expected: usize,
    /// Whether every rank was confirmed symbolically and agrees with the trace.
    pub certified: bool,
}

/// Ranks of the projectors for one tableau per shape with at most `n` rows.
pub fn decompose(n: usize, k: usize, cap: usize, point: (&BigRational, &BigRational)) -> Result<DecompositionReport> {
    let mut action = HeckeAction::new(n, k, cap)?;
    let mut components = Vec::new();
    let mut certified = true;
    for shape in partitions(k).into_iter().filter(|s| s.len() <= n) {
        let tableaux = standard_tableaux(&shape);
        let e = idempotent_inductive(&tableaux[0])?;
        let p = project(&e, &mut action, point)?;
        certified &= p.certificate.confirmed && p.trace == RatFunc::from_int(p.rank as i64);
        components.push(Component { shape, syt: tableaux.len(), dim: p.rank });
    }
    let total = components.iter().map(|c| c.syt * c.dim).sum();
    Ok(DecompositionReport { n, k, components, total, expected: n.pow(k as u32), certified })
}

/// Dimension of the irreducible `gl_n` module of highest weight `shape`, by the hook content formula.
pub fn weyl_dimension(shape: &Partition, n: usize) -> usize {
    if shape.len() > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (cell, h) in shape.cells().into_iter().zip(shape.hook_lengths()) {
        num *= (n + cell.col - cell.row) as u128;
        den *= h as u128;
    }
    (num / den) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn rtilde_entries() {
        let rt = rtilde(2);
        // basis order 11, 12, 21, 22
        assert_eq!(rt.column(1), vec![rf("0"), rf("0"), rf("v*t"), rf("0")]);
        assert_eq!(rt.column(0), vec![rf("1"), rf("0"), rf("0"), rf("0")]);
        assert_eq!(rt.column(2), vec![rf("0"), rf("v/t"), rf("(1-v^2)/t"), rf("0")]);
        let r = r_matrix(2);
        assert_eq!(r.get(0, 0), rf("t/v"));
        assert_eq!(r.get(2, 1), rf("t^2"));
        assert_eq!(r.get(1, 2), rf("1"));
        assert_eq!(r.get(2, 2), rf("(1/v-v)*t"));
    }

    #[test]
    fn lifts_at_the_edges() {
        let r = r_matrix(2);
        assert_eq!(lift(1, &r, 2, 2).unwrap(), r);
        assert!(lift(2, &r, 2, 2).is_err());
    }

    #[test]
    fn quadratic_for_r() {
        for n in 2..=3 {
            assert!(hecke_quadratic(&r_matrix(n)).is_zero());
            assert!(!hecke_quadratic(&rtilde(n)).is_zero());
        }
    }

    #[test]
    fn weyl_dimensions() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(weyl_dimension(&p("(2)"), 2), 3);
        assert_eq!(weyl_dimension(&p("(1,1)"), 3), 3);
        assert_eq!(weyl_dimension(&p("(2,1)"), 2), 2);
        assert_eq!(weyl_dimension(&p("(1,1,1)"), 2), 0);
    }
}
