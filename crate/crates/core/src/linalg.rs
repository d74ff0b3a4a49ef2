//! Sparse matrices over [`RatFunc`] and exact rank computation.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::ratfield::{gcd, Poly};
use crate::{Error, RatFunc, Result};

/// A sparse matrix stored as one ordered map per row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, RatFunc>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(vec![RatFunc::one(); n])
    }

    pub fn diagonal(entries: Vec<RatFunc>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, c) in entries.into_iter().enumerate() {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, RatFunc)>,
    ) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for (i, j, c) in triplets {
            m.add_at(i, j, &c);
        }
        m
    }

    /// The matrix unit with a one at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self::from_triplets(n, n, [(i, j, RatFunc::one())])
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> RatFunc {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, c: RatFunc) {
        if c.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, c);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = self.get(i, j).add(c);
        self.set(i, j, sum);
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, RatFunc> {
        &self.rows[i]
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &RatFunc)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(&j, c)| (i, j, c)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.triplets().all(|(i, j, _)| i == j)
    }

    pub fn diagonal_entries(&self) -> Vec<RatFunc> {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> RatFunc {
        self.diagonal_entries().iter().fold(RatFunc::zero(), |acc, c| acc.add(c))
    }

    pub fn column(&self, j: usize) -> Vec<RatFunc> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_triplets(self.ncols, self.nrows, self.triplets().map(|(i, j, c)| (j, i, c.clone())))
    }

    pub fn scale(&self, c: &RatFunc) -> SparseMatrix {
        if c.is_zero() {
            return SparseMatrix::zeros(self.nrows, self.ncols);
        }
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.iter().map(|(&j, x)| (j, x.mul(c))).collect()).collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "shape mismatch");
        let mut out = self.clone();
        for (i, j, c) in other.triplets() {
            out.add_at(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch");
        let mut out = SparseMatrix::zeros(self.nrows, other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, RatFunc> = BTreeMap::new();
            for (&l, a) in row {
                for (&j, b) in &other.rows[l] {
                    let p = a.mul(b);
                    match acc.get_mut(&j) {
                        Some(x) => *x = x.add(&p),
                        None => {
                            acc.insert(j, p);
                        }
                    }
                }
            }
            acc.retain(|_, c| !c.is_zero());
            out.rows[i] = acc;
        }
        out
    }

    /// Kronecker product: `(A ⊗ B)[(a, b), (c, d)] = A[a, c] B[b, d]`, with `b` varying fastest.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let (p, q) = (other.nrows, other.ncols);
        let mut out = SparseMatrix::zeros(self.nrows * p, self.ncols * q);
        for (a, c, x) in self.triplets() {
            for (b, d, y) in other.triplets() {
                out.set(a * p + b, c * q + d, x.mul(y));
            }
        }
        out
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// First entry, in row-major order, where the matrices disagree.
    pub fn first_difference(&self, other: &SparseMatrix) -> Option<(usize, usize, RatFunc, RatFunc)> {
        for i in 0..self.nrows.max(other.nrows) {
            let empty = BTreeMap::new();
            let a = self.rows.get(i).unwrap_or(&empty);
            let b = other.rows.get(i).unwrap_or(&empty);
            let mut cols: Vec<usize> = a.keys().chain(b.keys()).copied().collect();
            cols.sort_unstable();
            cols.dedup();
            for j in cols {
                let (x, y) = (a.get(&j).cloned().unwrap_or_default(), b.get(&j).cloned().unwrap_or_default());
                if x != y {
                    return Some((i, j, x, y));
                }
            }
        }
        None
    }

    /// `self * x` for a dense column vector.
    pub fn apply(&self, x: &[RatFunc]) -> Vec<RatFunc> {
        self.rows
            .iter()
            .map(|r| {
                r.iter().fold(RatFunc::zero(), |acc, (&j, c)| if x[j].is_zero() { acc } else { acc.add(&c.mul(&x[j])) })
            })
            .collect()
    }

    /// Entrywise value at `v`, `t`.
    pub fn eval_vt(&self, v: &BigRational, t: &BigRational) -> Result<Vec<Vec<BigRational>>> {
        let mut out = vec![vec![BigRational::zero(); self.ncols]; self.nrows];
        for (i, j, c) in self.triplets() {
            out[i][j] = c.eval_vt(v, t)?;
        }
        Ok(out)
    }
}

// -- rank -------------------------------------------------------------------

/// Row echelon data of a rational matrix: the pivot positions in elimination order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivots {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Pivots {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Gaussian elimination over `Q` with first-nonzero pivoting, column by column.
pub fn rational_pivots(m: &[Vec<BigRational>]) -> Pivots {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut free_rows: Vec<usize> = (0..nrows).collect();
    let mut piv = Pivots { rows: Vec::new(), cols: Vec::new() };
    for c in 0..ncols {
        let Some(pos) = free_rows.iter().position(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        let r = free_rows.remove(pos);
        let inv = a[r][c].recip();
        let pivot_row = a[r].clone();
        for &o in &free_rows {
            if a[o][c].is_zero() {
                continue;
            }
            let factor = &a[o][c] * &inv;
            for j in c..ncols {
                if !pivot_row[j].is_zero() {
                    let d = &factor * &pivot_row[j];
                    a[o][j] -= d;
                }
            }
        }
        piv.rows.push(r);
        piv.cols.push(c);
    }
    piv
}

/// Clears denominators row by row, giving an integer polynomial matrix with the same row space.
fn integral_rows(m: &SparseMatrix) -> Vec<Vec<Poly>> {
    (0..m.nrows())
        .map(|i| {
            let row = m.row(i);
            let mut l = Poly::one();
            for c in row.values() {
                let d = c.denom();
                if !d.is_one() {
                    let g = gcd(&l, d);
                    l = l.mul(&d.div_exact(&g).expect("gcd divides"));
                }
            }
            let mut out = vec![Poly::zero(); m.ncols()];
            for (&j, c) in row {
                out[j] = c.numer().mul(&l.div_exact(c.denom()).expect("lcm is a multiple"));
            }
            out
        })
        .collect()
}

/// Symbolic rank certificate by fraction-free elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    pub pivots: Pivots,
    /// Whether the trailing block vanished identically after `rank` Bareiss steps.
    pub confirmed: bool,
}

/// Rank over `Q(v, t)`.
///
/// A rational specialization picks the pivot sequence. Fraction-free Bareiss
/// elimination over `Z[v, t]` along that sequence then confirms every pivot is
/// nonzero and the remaining Schur complement is identically zero.
pub fn symbolic_rank(m: &SparseMatrix, v: &BigRational, t: &BigRational) -> Result<RankCertificate> {
    let special = m.eval_vt(v, t)?;
    let pivots = rational_pivots(&special);
    let mut a = integral_rows(m);
    let nrows = m.nrows();
    let ncols = m.ncols();

    // reorder: pivot rows first, in elimination order
    let mut row_order = pivots.rows.clone();
    row_order.extend((0..nrows).filter(|r| !pivots.rows.contains(r)));
    let mut col_order = pivots.cols.clone();
    col_order.extend((0..ncols).filter(|c| !pivots.cols.contains(c)));
    a = row_order.iter().map(|&r| col_order.iter().map(|&c| a[r][c].clone()).collect()).collect();

    let r = pivots.rank();
    let mut prev = Poly::one();
    for s in 0..r {
        let p = a[s][s].clone();
        if p.is_zero() {
            return Ok(RankCertificate { rank: r, pivots, confirmed: false });
        }
        for i in s + 1..nrows {
            let lead = a[i][s].clone();
            for j in s + 1..ncols {
                let num = p.mul(&a[i][j]).sub(&lead.mul(&a[s][j]));
                a[i][j] = num.div_exact(&prev).ok_or_else(|| Error::Invalid("inexact Bareiss division".into()))?;
            }
            a[i][s] = Poly::zero();
        }
        prev = p;
    }
    let confirmed = (r..nrows).all(|i| (r..ncols).all(|j| a[i][j].is_zero()));
    Ok(RankCertificate { rank: r, pivots, confirmed })
}

/// Reduced row echelon form over `Q(v, t)`, zero rows dropped.
pub fn rref(rows: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let mut a: Vec<Vec<RatFunc>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut lead = 0;
    for c in 0..ncols {
        let Some(p) = (lead..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(lead, p);
        let inv = a[lead][c].inv().expect("nonzero pivot");
        a[lead] = a[lead].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..a.len() {
            if i != lead && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[lead].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        lead += 1;
    }
    a.truncate(lead);
    a
}

/// Inverse of a square matrix over `Q(v, t)` by Gauss-Jordan elimination, `None` if singular.
pub fn invert(m: &[Vec<RatFunc>]) -> Option<Vec<Vec<RatFunc>>> {
    let n = m.len();
    let mut a: Vec<Vec<RatFunc>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }));
            r
        })
        .collect();
    let reduced = rref(&a);
    if reduced.len() < n || (0..n).any(|i| !reduced[i][i].is_one()) {
        return None;
    }
    a = reduced;
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_of_two_by_two() {
        let m = vec![vec![rf("v"), rf("1")], vec![rf("0"), rf("t")]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![rf("1/v"), rf("-1/(v*t)")], vec![rf("0"), rf("1/t")]]);
        assert!(invert(&[vec![rf("v"), rf("t")], vec![rf("v^2"), rf("v*t")]]).is_none());
    }

    #[test]
    fn kronecker_convention() {
        let a = SparseMatrix::unit(2, 0, 1);
        let b = SparseMatrix::unit(2, 1, 0);
        let k = a.kron(&b);
        // (E12 ⊗ E21)(v2 ⊗ v1) = v1 ⊗ v2: column 2 maps to row 1
        assert_eq!(k.triplets().map(|(i, j, _)| (i, j)).collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = SparseMatrix::from_triplets(
            3,
            3,
            [(0, 0, rf("v")), (0, 1, rf("t")), (1, 0, rf("v^2")), (1, 1, rf("v*t")), (2, 2, rf("1/(v+t)"))],
        );
        let cert = symbolic_rank(&m, &q(3, 2), &q(5, 7)).unwrap();
        assert_eq!(cert.rank, 2);
        assert!(cert.confirmed);
    }

    #[test]
    fn unlucky_specialization_is_not_confirmed() {
        // v - 3/2 vanishes at the specialization point, so the generic rank 2 is missed
        let m = SparseMatrix::diagonal(vec![rf("1"), rf("2*v-3")]);
        let cert = symbolic_rank(&m, &q(3, 2), &q(5, 7)).unwrap();
        assert_eq!(cert.rank, 1);
        assert!(!cert.confirmed);
    }

    #[test]
    fn row_reduction() {
        let rows = vec![vec![rf("v"), rf("v*t")], vec![rf("1"), rf("t")]];
        assert_eq!(rref(&rows), vec![vec![rf("1"), rf("t")]]);
    }
}
