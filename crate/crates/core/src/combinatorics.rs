//! Permutations, partitions, Young diagrams and standard tableaux.
//!
//! Cells are addressed 1-based as `(row, col)`. A permutation is stored in
//! one-line notation and composes as functions: `(a * b)(j) = a(b(j))`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, RatFunc, Result};

// -- permutations -----------------------------------------------------------

/// A bijection of `{1, .., k}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation { images: (1..=k as u8).collect() }
    }

    /// Validates a one-line image list.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k + 1];
        for &x in images {
            if x == 0 || x > k || seen[x] {
                return Err(Error::Invalid(alloc::format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| x as u8).collect() })
    }

    /// The simple transposition `s_i` in `S_k`.
    pub fn simple(i: usize, k: usize) -> Self {
        assert!(i >= 1 && i < k, "s_{i} does not exist in S_{k}");
        let mut p = Permutation::identity(k);
        p.images.swap(i - 1, i);
        p
    }

    /// The transposition `(a b)` in `S_k`.
    pub fn transposition(a: usize, b: usize, k: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= k && b <= k && a != b);
        let mut p = Permutation::identity(k);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// Reverses `1..=i` and fixes the rest.
    pub fn longest_element(i: usize, k: usize) -> Self {
        assert!(i >= 1 && i <= k);
        let mut p = Permutation::identity(k);
        p.images[..i].reverse();
        p
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of `j` (1-based).
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// Composition `self * other`, applying `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.rank(), other.rank());
        Permutation { images: other.images.iter().map(|&j| self.images[j as usize - 1]).collect() }
    }

    /// `self * s_i`: swaps the images at positions `i`, `i + 1`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// Whether `self * s_i` is longer than `self`.
    pub fn ascends_at(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Permutation { images: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// A reduced word `[i_1, .., i_l]` with `self = s_{i_1} .. s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.rank()).find(|&i| !w.ascends_at(i)) {
            rev.push(i);
            w = w.times_simple(i);
        }
        rev.reverse();
        rev
    }

    /// Rebuilds a permutation from a word in the simple transpositions.
    pub fn from_word(word: &[usize], k: usize) -> Permutation {
        word.iter().fold(Permutation::identity(k), |w, &i| w.times_simple(i))
    }
}

/// All permutations of `S_k` in lexicographic one-line order.
pub fn permutations(k: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = Permutation::identity(k);
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let w = &mut cur.images;
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
            return out;
        };
        let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("pivot has a successor");
        w.swap(i - 1, j);
        w[i..].reverse();
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() <= 9 {
            for x in &self.images {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(alloc::format!("bad permutation `{s}`"));
        let images: Vec<usize> = if s.contains(',') {
            s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        Permutation::from_images(&images)
    }
}

// -- partitions and cells ---------------------------------------------------

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Exponent of `v` in the content, `-2(col - row)`.
    pub fn content_exponent(self) -> i32 {
        -2 * (self.col as i32 - self.row as i32)
    }

    /// The `(v, v^-1)`-content `v^{-2(col - row)}`.
    pub fn content(self) -> RatFunc {
        RatFunc::vt_monomial(1, self.content_exponent(), 0)
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(alloc::format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts: parts.to_vec() })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-based); zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition { parts: (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect() }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts.iter().enumerate().flat_map(|(r, &p)| (1..=p).map(move |c| Cell::new(r + 1, c))).collect()
    }

    /// Hook length `λ_i + λ'_j - i - j + 1`.
    pub fn hook(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return Err(Error::CellOutside { row: cell.row, col: cell.col });
        }
        let conj = self.conjugate();
        Ok(self.part(cell.row) + conj.part(cell.col) + 1 - cell.row - cell.col)
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells().into_iter().map(|c| self.part(c.row) + conj.part(c.col) + 1 - c.row - c.col).collect()
    }

    /// Cells outside the diagram whose addition leaves a diagram, by row.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.part(r - 1) > self.part(r))
            .map(|r| Cell::new(r, self.part(r) + 1))
            .collect()
    }

    /// Cells whose removal leaves a diagram, by row.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.len()).filter(|&r| self.part(r) > self.part(r + 1)).map(|r| Cell::new(r, self.part(r))).collect()
    }

    pub fn with_cell(&self, cell: Cell) -> Partition {
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Partition { parts }
    }

    pub fn without_cell(&self, cell: Cell) -> Partition {
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    /// `b(λ) = Σ λ_i (λ_i - 1)`.
    pub fn b(&self) -> usize {
        self.parts.iter().map(|&p| p * (p - 1)).sum()
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn syt_count(&self) -> u64 {
        let n = self.size() as u64;
        let fact: u64 = (1..=n).product();
        fact / self.hook_lengths().iter().map(|&h| h as u64).product::<u64>()
    }
}

/// All partitions of `k`, in decreasing lexicographic order.
pub fn partitions(k: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// The normalization `f(λ) = v^{-b(λ)} t^{k(k-1)/2} (1-v^-2)^k Π_α (1-v^{-2h_α})^{-1}`.
pub fn f_lambda(shape: &Partition, k: usize) -> Result<RatFunc> {
    if shape.size() != k {
        return Err(Error::Invalid(alloc::format!("{shape} is not a partition of {k}")));
    }
    let one = RatFunc::one();
    let v = RatFunc::v();
    let mut f = RatFunc::vt_monomial(1, -(shape.b() as i32), (k * (k.saturating_sub(1)) / 2) as i32);
    f = f.mul(&(&one - &v.pow(-2)?).pow(k as i32)?);
    for h in shape.hook_lengths() {
        f = f.checked_div(&(&one - &v.pow(-2 * h as i32)?))?;
    }
    Ok(f)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Invalid(alloc::format!("bad partition `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = inner
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| Error::Invalid(alloc::format!("bad partition `{s}`"))))
            .collect::<Result<_>>()?;
        Partition::new(&parts)
    }
}

// -- tableaux ---------------------------------------------------------------

/// A standard filling of a Young diagram by `1..=k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates rows of entries.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(&lens)?;
        let k: usize = lens.iter().sum();
        let mut seen = vec![false; k + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                let fresh = x >= 1 && x <= k && !seen[x];
                let row_ok = c == 0 || row[c - 1] < x;
                let col_ok = r == 0 || rows[r - 1][c] < x;
                if !(fresh && row_ok && col_ok) {
                    return Err(Error::Invalid(alloc::format!("{rows:?} is not a standard tableau")));
                }
                seen[x] = true;
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Cell holding `entry`.
    pub fn cell_of(&self, entry: usize) -> Option<Cell> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == entry).map(|c| Cell::new(r + 1, c + 1)))
    }

    /// Contents `σ_1, .., σ_k` of the cells holding `1, .., k`.
    pub fn contents(&self) -> Vec<RatFunc> {
        (1..=self.size()).map(|j| self.cell_of(j).expect("entry present").content()).collect()
    }

    /// The tableau with the largest entry removed.
    pub fn remove_largest(&self) -> StandardTableau {
        let k = self.size();
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            if row.last() == Some(&k) {
                row.pop();
            }
        }
        rows.retain(|r| !r.is_empty());
        StandardTableau { rows }
    }

    fn with_entry(&self, cell: Cell, entry: usize) -> StandardTableau {
        let mut rows = self.rows.clone();
        if cell.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[cell.row - 1].push(entry);
        StandardTableau { rows }
    }
}

/// All standard tableaux of a shape.
///
/// Ordered lexicographically by the cells of `k`, `k - 1`, and so on.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let k = shape.size();
    if k == 0 {
        return vec![StandardTableau { rows: Vec::new() }];
    }
    let mut out = Vec::new();
    for cell in shape.removable_cells() {
        for smaller in standard_tableaux(&shape.without_cell(cell)) {
            out.push(smaller.with_entry(cell, k));
        }
    }
    out
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str(",")?;
            }
            let xs: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", xs.join(","))?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(alloc::format!("bad tableau `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let mut rows = Vec::new();
        if !inner.is_empty() {
            for chunk in inner.split("],") {
                let body = chunk.trim_start_matches('[').trim_end_matches(']');
                let row: Vec<usize> = body.split(',').map(|x| x.parse().map_err(|_| bad())).collect::<Result<_>>()?;
                rows.push(row);
            }
        }
        StandardTableau::from_rows(rows)
    }
}
