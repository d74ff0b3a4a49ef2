//! The natural representation of `U_{v,t}(sl_n)` and its tensor powers.
//!
//! Basis vectors `v_{i_1} ⊗ .. ⊗ v_{i_k}` are indexed lexicographically, the
//! last tensor factor varying fastest, which matches [`SparseMatrix::kron`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::SparseMatrix;
use crate::{Error, RatFunc, Result};

/// The pairing `⟨i, j⟩` of type `A_{n-1}`, extended to indices up to `n`.
///
/// `⟨i, i⟩ = 1`, `⟨i + 1, i⟩ = -1` and every other value is zero. On
/// `1..n-1` this is the lower bidiagonal matrix `Ω`; the row and column of `n`
/// are the extension used for weights of the natural module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    n: usize,
}

impl CartanDatum {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("rank parameter n = {n} must be at least 2")));
        }
        Ok(CartanDatum { n })
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// `⟨i, j⟩` for `1 <= i, j <= n`.
    pub fn bracket(self, i: usize, j: usize) -> i32 {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "index out of range");
        if i == j {
            1
        } else if i == j + 1 {
            -1
        } else {
            0
        }
    }

    /// `i · j = ⟨i, j⟩ + ⟨j, i⟩`.
    pub fn dot(self, i: usize, j: usize) -> i32 {
        self.bracket(i, j) + self.bracket(j, i)
    }

    /// `⟨i, j⟩ - ⟨j, i⟩`.
    pub fn skew(self, i: usize, j: usize) -> i32 {
        self.bracket(i, j) - self.bracket(j, i)
    }
}

/// An element `Σ λ_j ε_j` of the weight lattice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `ε_i`.
    pub fn epsilon(i: usize, n: usize) -> Self {
        let mut w = Weight::zero(n);
        w.0[i - 1] = 1;
        w
    }

    /// Weight of `v_j` in the natural module: `ε_j + .. + ε_n`.
    pub fn of_basis_vector(j: usize, n: usize) -> Self {
        Weight((1..=n).map(|k| i32::from(k >= j)).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| format!("{x}")).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which half of the torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Torus {
    K,
    KPrime,
}

/// `λ̂(K_i) = v^{Σ λ_j i·j} t^{Σ λ_j (⟨i,j⟩ - ⟨j,i⟩) - 1}`, and for `K_i'` the same with `v` inverted.
pub fn weight_eigenvalue(cartan: CartanDatum, weight: &Weight, i: usize, which: Torus) -> RatFunc {
    let n = cartan.n();
    let v_exp: i32 = (1..=n).map(|j| weight.0[j - 1] * cartan.dot(i, j)).sum();
    let t_exp: i32 = (1..=n).map(|j| weight.0[j - 1] * cartan.skew(i, j)).sum::<i32>() - 1;
    let sign = if which == Torus::K { 1 } else { -1 };
    RatFunc::vt_monomial(1, sign * v_exp, t_exp)
}

/// Matrices of the generators on `V_n^{⊗k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorImages {
    pub n: usize,
    pub k: usize,
    pub e: Vec<SparseMatrix>,
    pub f: Vec<SparseMatrix>,
    pub k_plus: Vec<SparseMatrix>,
    pub k_prime: Vec<SparseMatrix>,
    pub k_plus_inv: Vec<SparseMatrix>,
    pub k_prime_inv: Vec<SparseMatrix>,
}

impl GeneratorImages {
    pub fn dim(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    /// All `4(n-1)` generator images with labels such as `E1` or `K2'`.
    pub fn labelled(&self) -> Vec<(String, &SparseMatrix)> {
        let mut out = Vec::new();
        for i in 0..self.n - 1 {
            out.push((format!("E{}", i + 1), &self.e[i]));
            out.push((format!("F{}", i + 1), &self.f[i]));
            out.push((format!("K{}", i + 1), &self.k_plus[i]));
            out.push((format!("K{}'", i + 1), &self.k_prime[i]));
        }
        out
    }
}

fn diag_k(n: usize, i: usize, on_i: RatFunc, on_next: RatFunc) -> SparseMatrix {
    let mut d = vec![RatFunc::vt_monomial(1, 0, -1); n];
    d[i - 1] = on_i;
    d[i] = on_next;
    SparseMatrix::diagonal(d)
}

/// The natural representation `ρ'_n` on `V_n`.
pub fn natural_rep(n: usize) -> Result<GeneratorImages> {
    CartanDatum::new(n)?;
    let v = || RatFunc::vt_monomial(1, 1, 0);
    let v_inv = || RatFunc::vt_monomial(1, -1, 0);
    let t = || RatFunc::vt_monomial(1, 0, 1);
    let mut g = GeneratorImages {
        n,
        k: 1,
        e: Vec::new(),
        f: Vec::new(),
        k_plus: Vec::new(),
        k_prime: Vec::new(),
        k_plus_inv: Vec::new(),
        k_prime_inv: Vec::new(),
    };
    for i in 1..n {
        g.e.push(SparseMatrix::unit(n, i - 1, i));
        g.f.push(SparseMatrix::unit(n, i, i - 1));
        g.k_plus.push(diag_k(n, i, v(), v_inv()));
        g.k_prime.push(diag_k(n, i, v_inv(), v()));
        let mut inv = vec![t(); n];
        inv[i - 1] = v_inv();
        inv[i] = v();
        g.k_plus_inv.push(SparseMatrix::diagonal(inv.clone()));
        inv.swap(i - 1, i);
        g.k_prime_inv.push(SparseMatrix::diagonal(inv));
    }
    Ok(g)
}

fn kron_all(factors: &[&SparseMatrix]) -> SparseMatrix {
    let mut it = factors.iter();
    let first = (*it.next().expect("at least one factor")).clone();
    it.fold(first, |acc, m| acc.kron(m))
}

/// `V_n^{⊗k}` through the iterated coproduct
/// `Δ^{k-1}(E) = Σ_i K^{⊗(i-1)} ⊗ E ⊗ 1^{⊗(k-i)}`,
/// `Δ^{k-1}(F) = Σ_i 1^{⊗(k-i)} ⊗ F ⊗ K'^{⊗(i-1)}` and group-like tori.
pub fn tensor_rep(n: usize, k: usize, cap: usize) -> Result<GeneratorImages> {
    if k == 0 {
        return Err(Error::Invalid("tensor power k must be at least 1".into()));
    }
    let dim = n.checked_pow(k as u32).unwrap_or(usize::MAX);
    if dim > cap {
        return Err(Error::SizeCap { size: dim, cap });
    }
    let base = natural_rep(n)?;
    if k == 1 {
        return Ok(base);
    }
    let id = SparseMatrix::identity(n);
    let mut g = GeneratorImages { k, ..base.clone() };
    for j in 0..n - 1 {
        let mut e = SparseMatrix::zeros(dim, dim);
        let mut f = SparseMatrix::zeros(dim, dim);
        for i in 1..=k {
            let mut fe: Vec<&SparseMatrix> = vec![&base.k_plus[j]; i - 1];
            fe.push(&base.e[j]);
            fe.extend(core::iter::repeat_n(&id, k - i));
            e = e.add(&kron_all(&fe));
            let mut ff: Vec<&SparseMatrix> = vec![&id; k - i];
            ff.push(&base.f[j]);
            ff.extend(core::iter::repeat_n(&base.k_prime[j], i - 1));
            f = f.add(&kron_all(&ff));
        }
        g.e[j] = e;
        g.f[j] = f;
        g.k_plus[j] = kron_all(&vec![&base.k_plus[j]; k]);
        g.k_prime[j] = kron_all(&vec![&base.k_prime[j]; k]);
        g.k_plus_inv[j] = kron_all(&vec![&base.k_plus_inv[j]; k]);
        g.k_prime_inv[j] = kron_all(&vec![&base.k_prime_inv[j]; k]);
    }
    Ok(g)
}

/// The module `M ⊗ N` through `Δ(E) = E ⊗ 1 + K ⊗ E`, `Δ(F) = 1 ⊗ F + F ⊗ K'`.
pub fn tensor_product(a: &GeneratorImages, b: &GeneratorImages) -> Result<GeneratorImages> {
    if a.n != b.n {
        return Err(Error::RankMismatch(a.n, b.n));
    }
    let ia = SparseMatrix::identity(a.dim());
    let ib = SparseMatrix::identity(b.dim());
    let mut g = a.clone();
    g.k = a.k + b.k;
    for j in 0..a.n - 1 {
        g.e[j] = a.e[j].kron(&ib).add(&a.k_plus[j].kron(&b.e[j]));
        g.f[j] = ia.kron(&b.f[j]).add(&a.f[j].kron(&b.k_prime[j]));
        g.k_plus[j] = a.k_plus[j].kron(&b.k_plus[j]);
        g.k_prime[j] = a.k_prime[j].kron(&b.k_prime[j]);
        g.k_plus_inv[j] = a.k_plus_inv[j].kron(&b.k_plus_inv[j]);
        g.k_prime_inv[j] = a.k_prime_inv[j].kron(&b.k_prime_inv[j]);
    }
    Ok(g)
}

// -- relation checks --------------------------------------------------------

/// Outcome of one matrix identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    /// Relation family, `R1` to `R6`.
    pub family: &'static str,
    pub name: String,
    pub passed: bool,
    /// First mismatching entry when the check fails.
    pub detail: Option<String>,
}

fn compare(family: &'static str, name: String, lhs: &SparseMatrix, rhs: &SparseMatrix) -> RelationCheck {
    match lhs.first_difference(rhs) {
        None => RelationCheck { family, name, passed: true, detail: None },
        Some((i, j, a, b)) => {
            RelationCheck { family, name, passed: false, detail: Some(format!("entry ({i},{j}): lhs {a}, rhs {b}")) }
        }
    }
}

/// `a^2 b - c (v + v^-1) a b a + c^2 b a^2` for a scalar `c`.
fn serre(a: &SparseMatrix, b: &SparseMatrix, c: &RatFunc) -> SparseMatrix {
    let q: RatFunc = "v+1/v".parse().expect("constant expression");
    let aa = a.mul(a);
    aa.mul(b).sub(&a.mul(b).mul(a).scale(&c.mul(&q))).add(&b.mul(&aa).scale(&c.mul(c)))
}

/// Verifies the defining relations (R1) to (R6) on the given matrices.
pub fn check_relations(g: &GeneratorImages) -> Vec<RelationCheck> {
    let cartan = CartanDatum { n: g.n };
    let dim = g.dim();
    let id = SparseMatrix::identity(dim);
    let zero = SparseMatrix::zeros(dim, dim);
    let r = g.n - 1;
    let mut out = Vec::new();

    // (R1)
    let tori: Vec<(String, &SparseMatrix)> =
        (0..r).flat_map(|i| [(format!("K{}", i + 1), &g.k_plus[i]), (format!("K{}'", i + 1), &g.k_prime[i])]).collect();
    for (x, (na, a)) in tori.iter().enumerate() {
        for (nb, b) in tori.iter().skip(x + 1) {
            out.push(compare("R1", format!("{na} {nb} = {nb} {na}"), &a.mul(b), &b.mul(a)));
        }
    }
    for i in 0..r {
        out.push(compare("R1", format!("K{0} K{0}^-1 = 1", i + 1), &g.k_plus[i].mul(&g.k_plus_inv[i]), &id));
        out.push(compare("R1", format!("K{0}' K{0}'^-1 = 1", i + 1), &g.k_prime[i].mul(&g.k_prime_inv[i]), &id));
    }

    // (R2)
    for i in 1..=r {
        for j in 1..=r {
            let (dot, skew) = (cartan.dot(i, j), cartan.skew(i, j));
            let (ki, kii) = (&g.k_plus[i - 1], &g.k_plus_inv[i - 1]);
            let (kp, kpi) = (&g.k_prime[i - 1], &g.k_prime_inv[i - 1]);
            let (ej, fj) = (&g.e[j - 1], &g.f[j - 1]);
            let cases = [
                (format!("K{i} E{j} K{i}^-1"), ki, ej, kii, RatFunc::vt_monomial(1, dot, skew)),
                (format!("K{i}' E{j} K{i}'^-1"), kp, ej, kpi, RatFunc::vt_monomial(1, -dot, skew)),
                (format!("K{i} F{j} K{i}^-1"), ki, fj, kii, RatFunc::vt_monomial(1, -dot, -skew)),
                (format!("K{i}' F{j} K{i}'^-1"), kp, fj, kpi, RatFunc::vt_monomial(1, dot, -skew)),
            ];
            for (name, a, x, ainv, c) in cases {
                out.push(compare("R2", name, &a.mul(x).mul(ainv), &x.scale(&c)));
            }
        }
    }

    // (R3)
    let denom_inv: RatFunc = "v/(v^2-1)".parse().expect("constant expression");
    for i in 1..=r {
        for j in 1..=r {
            let lhs = g.e[i - 1].commutator(&g.f[j - 1]);
            let rhs = if i == j { g.k_plus[i - 1].sub(&g.k_prime[i - 1]).scale(&denom_inv) } else { zero.clone() };
            out.push(compare("R3", format!("[E{i}, F{j}]"), &lhs, &rhs));
        }
    }

    // (R4)
    for i in 1..=r {
        for j in i + 2..=r {
            out.push(compare("R4", format!("[E{i}, E{j}] = 0"), &g.e[i - 1].commutator(&g.e[j - 1]), &zero));
            out.push(compare("R4", format!("[F{i}, F{j}] = 0"), &g.f[i - 1].commutator(&g.f[j - 1]), &zero));
        }
    }

    // (R5), (R6)
    let t = RatFunc::t();
    let t_inv = RatFunc::vt_monomial(1, 0, -1);
    for i in 1..r {
        let (a, b) = (&g.e[i - 1], &g.e[i]);
        out.push(compare("R5", format!("E{i}^2 E{} Serre", i + 1), &serre(a, b, &t), &zero));
        // E_i E_{i+1}^2 - t(v+v^-1) E_{i+1} E_i E_{i+1} + t^2 E_{i+1}^2 E_i: the mirror form
        out.push(compare("R5", format!("E{i} E{}^2 Serre", i + 1), &serre_mirror(a, b, &t), &zero));
        let (a, b) = (&g.f[i - 1], &g.f[i]);
        out.push(compare("R6", format!("F{i}^2 F{} Serre", i + 1), &serre(a, b, &t_inv), &zero));
        out.push(compare("R6", format!("F{i} F{}^2 Serre", i + 1), &serre_mirror(a, b, &t_inv), &zero));
    }
    out
}

/// `a b^2 - c (v + v^-1) b a b + c^2 b^2 a`.
fn serre_mirror(a: &SparseMatrix, b: &SparseMatrix, c: &RatFunc) -> SparseMatrix {
    let q: RatFunc = "v+1/v".parse().expect("constant expression");
    let bb = b.mul(b);
    a.mul(&bb).sub(&b.mul(a).mul(b).scale(&c.mul(&q))).add(&bb.mul(a).scale(&c.mul(c)))
}

/// Groups tensor basis vectors by their simultaneous `K_i` eigenvalues.
///
/// Keys are the weights `Σ_m (ε_{i_m} + .. + ε_n)` of the basis vectors. Fails if
/// the `K` matrices are not diagonal or if two weights share eigenvalues.
pub fn weight_decomposition(n: usize, k: usize, cap: usize) -> Result<BTreeMap<Weight, Vec<usize>>> {
    let g = tensor_rep(n, k, cap)?;
    if g.k_plus.iter().any(|m| !m.is_diagonal()) {
        return Err(Error::Invalid("torus acts non-diagonally".into()));
    }
    let diags: Vec<Vec<RatFunc>> = g.k_plus.iter().map(SparseMatrix::diagonal_entries).collect();
    let mut by_eigen: BTreeMap<Vec<String>, Vec<usize>> = BTreeMap::new();
    let mut by_weight: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for idx in 0..g.dim() {
        let key: Vec<String> = diags.iter().map(|d| format!("{}", d[idx])).collect();
        by_eigen.entry(key).or_default().push(idx);
        by_weight.entry(basis_weight(n, k, idx)).or_default().push(idx);
    }
    let mut a: Vec<&Vec<usize>> = by_eigen.values().collect();
    let mut b: Vec<&Vec<usize>> = by_weight.values().collect();
    a.sort();
    b.sort();
    if a != b {
        return Err(Error::Invalid("eigenvalue classes differ from weight classes".into()));
    }
    Ok(by_weight)
}

/// Indices `(i_1, .., i_k)`, 1-based, of a tensor basis vector.
pub fn basis_indices(n: usize, k: usize, idx: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    let mut rest = idx;
    for slot in (0..k).rev() {
        out[slot] = rest % n + 1;
        rest /= n;
    }
    out
}

/// Position of `v_{i_1} ⊗ .. ⊗ v_{i_k}`.
pub fn basis_index(n: usize, indices: &[usize]) -> usize {
    indices.iter().fold(0, |acc, &i| acc * n + (i - 1))
}

pub fn basis_weight(n: usize, k: usize, idx: usize) -> Weight {
    basis_indices(n, k, idx).into_iter().fold(Weight::zero(n), |acc, i| acc.add(&Weight::of_basis_vector(i, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn cartan_type_a() {
        let c = CartanDatum::new(4).unwrap();
        for i in 1..4 {
            assert_eq!(c.dot(i, i), 2);
            if i + 1 < 4 {
                assert_eq!(c.dot(i, i + 1), -1);
            }
        }
        assert_eq!(c.dot(1, 3), 0);
        assert_eq!(c.bracket(4, 3), -1);
        assert_eq!(c.bracket(4, 4), 1);
        assert_eq!(c.bracket(4, 1), 0);
        assert_eq!(c.bracket(1, 4), 0);
        assert!(CartanDatum::new(1).is_err());
    }

    #[test]
    fn natural_torus() {
        let g = natural_rep(2).unwrap();
        assert_eq!(g.k_plus[0].diagonal_entries(), vec![rf("v"), rf("1/v")]);
        let g = natural_rep(3).unwrap();
        assert_eq!(g.k_plus[0].diagonal_entries(), vec![rf("v"), rf("1/v"), rf("1/t")]);
    }

    #[test]
    fn eigenvalues_of_natural_weights() {
        let c = CartanDatum::new(2).unwrap();
        let w1 = Weight::of_basis_vector(1, 2);
        assert_eq!(weight_eigenvalue(c, &w1, 1, Torus::K), rf("v"));
        assert_eq!(weight_eigenvalue(c, &Weight::of_basis_vector(2, 2), 1, Torus::K), rf("1/v"));
    }

    #[test]
    fn natural_relations() {
        for n in 2..=3 {
            let checks = check_relations(&natural_rep(n).unwrap());
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        }
    }

    #[test]
    fn corrupted_torus_fails_r2() {
        let mut g = natural_rep(2).unwrap();
        g.k_plus[0] = SparseMatrix::diagonal(vec![rf("1/v"), rf("v")]);
        let checks = check_relations(&g);
        assert!(checks.iter().any(|c| c.family == "R2" && !c.passed));
    }

    #[test]
    fn basis_indexing() {
        assert_eq!(basis_indices(3, 2, 5), vec![2, 3]);
        assert_eq!(basis_index(3, &[2, 3]), 5);
    }

    #[test]
    fn size_cap() {
        assert_eq!(tensor_rep(4, 5, 256), Err(Error::SizeCap { size: 1024, cap: 256 }));
    }
}
