//! The Hopf pairing between the negative Borel part `B'^coop` and the positive Borel part `B`.
//!
//! Elements of either half are linear combinations of normal-ordered [`Word`]s
//! `K^c X_{i_1} .. X_{i_m}` with the torus on the left. Torus exponent vectors have
//! length `n`: the first `n - 1` entries are the exponents of `K_1 .. K_{n-1}`
//! (or `K'_1 .. K'_{n-1}`), and the last is the exponent of the extra group-like
//! symbol `A_n` (or `B_n`) that only enters through the pairing of group-likes.
//!
//! Pairings of words are evaluated by peeling letters off the negative word with the
//! rule `(x y, h) = Σ (x, h_(1)) (y, h_(2))`. Two peel orders are implemented so that
//! they can be compared against each other.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{invert, rref, SparseMatrix};
use crate::uvt_rep::{natural_rep, CartanDatum, Weight};
use crate::{Check, Error, RatFunc, Result};

/// Which Borel half a word lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    /// `B`, generated by `K_i`, `A_n` and `E_i`.
    Plus,
    /// `B'`, generated by `K'_i`, `B_n` and `F_i`.
    Minus,
}

/// A normal-ordered monomial `K^torus X_{letters[0]} X_{letters[1]} ..`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    pub torus: Vec<i32>,
    pub letters: Vec<usize>,
}

impl Word {
    pub fn one(n: usize) -> Self {
        Word { torus: vec![0; n], letters: Vec::new() }
    }

    pub fn letter(i: usize, n: usize) -> Self {
        Word { torus: vec![0; n], letters: vec![i] }
    }

    pub fn torus_unit(i: usize, n: usize, e: i32) -> Self {
        let mut torus = vec![0; n];
        torus[i - 1] = e;
        Word { torus, letters: Vec::new() }
    }

    pub fn from_letters(letters: &[usize], n: usize) -> Self {
        Word { torus: vec![0; n], letters: letters.to_vec() }
    }

    pub fn height(&self) -> usize {
        self.letters.len()
    }

    /// Number of occurrences of each letter `1..n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n - 1];
        for &i in &self.letters {
            c[i - 1] += 1;
        }
        c
    }

    /// Text form such as `K1' F2` or `K1^2 E1 E1`.
    pub fn render(&self, half: Half) -> String {
        struct Shown<'a>(&'a Word, Half);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.display(self.1, f)
            }
        }
        format!("{}", Shown(self, half))
    }

    fn display(&self, half: Half, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.torus.len();
        let mut parts: Vec<String> = Vec::new();
        for (idx, &e) in self.torus.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = match (half, idx + 1 == n) {
                (Half::Plus, false) => format!("K{}", idx + 1),
                (Half::Minus, false) => format!("K{}'", idx + 1),
                (Half::Plus, true) => format!("A{n}"),
                (Half::Minus, true) => format!("B{n}"),
            };
            parts.push(if e == 1 { base } else { format!("{base}^{e}") });
        }
        let letter = if half == Half::Plus { 'E' } else { 'F' };
        parts.extend(self.letters.iter().map(|i| format!("{letter}{i}")));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// A linear combination of words in one half.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfElement {
    pub half: Half,
    pub n: usize,
    pub terms: BTreeMap<Word, RatFunc>,
}

impl HalfElement {
    pub fn zero(half: Half, n: usize) -> Self {
        HalfElement { half, n, terms: BTreeMap::new() }
    }

    pub fn from_word(half: Half, word: Word) -> Self {
        let n = word.torus.len();
        let mut e = HalfElement::zero(half, n);
        e.add_term(word, &RatFunc::one());
        e
    }

    pub fn add_term(&mut self, word: Word, c: &RatFunc) {
        let entry = self.terms.entry(word).or_insert_with(RatFunc::zero);
        *entry += c;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for HalfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]*")?;
            w.display(self.half, f)?;
        }
        Ok(())
    }
}

/// A symbol in an unordered product: a letter or a torus generator power (1-based index).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sym {
    Letter(usize),
    Torus(usize, i32),
}

/// One choice of summands in an iterated coproduct: coefficient and tensor factors.
pub type CoproductTerm = (RatFunc, Vec<Word>);

/// The antipode applied on the negative half.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinusAntipode {
    /// `S(F_i) = -F_i K'_i^-1`, `S(K') = K'^-1`.
    Plain,
    /// The inverse map, `F_i ↦ -K'_i^-1 F_i`, which is the antipode of the co-opposite algebra.
    Inverse,
}

/// How the double multiplication expands the negative factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleConvention {
    /// Iterated plain coproduct `F ↦ 1⊗1⊗F + 1⊗F⊗K' + F⊗K'⊗K'` with the plain antipode.
    Plain,
    /// Iterated opposite coproduct with the co-opposite antipode.
    CoOpposite,
}

/// How `f(v_j ⊗ v_i)` pairs the weights of the two tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorConvention {
    /// `(K'_{wt v_i}, K_{wt v_j})^-1`.
    Swapped,
    /// `(K'_{wt v_j}, K_{wt v_i})^-1`.
    Literal,
}

fn monomial(v: i32, t: i32) -> RatFunc {
    RatFunc::vt_monomial(1, v, t)
}

/// `1 / (v^-1 - v)`, the value of `(F_i, E_i)`.
pub fn letter_pairing() -> RatFunc {
    "v/(1-v^2)".parse().expect("constant expression")
}

/// Evaluator for the pairing with a fixed rank parameter `n`.
#[derive(Clone, Copy, Debug)]
pub struct Pairing {
    cartan: CartanDatum,
}

impl Pairing {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Pairing { cartan: CartanDatum::new(n)? })
    }

    pub fn n(&self) -> usize {
        self.cartan.n()
    }

    /// `(v, t)` exponents of `c` in `K_i X_j = c X_j K_i` (both indices below `n`).
    fn exchange(&self, half: Half, i: usize, j: usize) -> (i32, i32) {
        let dot = self.cartan.dot(i, j);
        let skew = self.cartan.skew(i, j);
        match half {
            Half::Plus => (dot, skew),
            Half::Minus => (dot, -skew),
        }
    }

    /// The scalar `c` with `K_i X_j = c X_j K_i`.
    pub fn exchange_scalar(&self, half: Half, i: usize, j: usize) -> RatFunc {
        let (a, b) = self.exchange(half, i, j);
        monomial(a, b)
    }

    /// `(v, t)` exponents of the group-like pairing `(K'_i, K_j)`, index `n` standing for `B_n` or `A_n`.
    fn torus_generator_pairing(&self, i: usize, j: usize) -> (i32, i32) {
        let n = self.n();
        let c = self.cartan;
        match (i == n, j == n) {
            (false, false) => (c.dot(j, i), c.skew(j, i)),
            (true, true) => (0, 0),
            (true, false) => (c.bracket(n, j), -c.bracket(n, j)),
            (false, true) => (c.bracket(n, i), c.bracket(n, i)),
        }
    }

    /// `(K'^a, K^c)` by bimultiplicativity.
    pub fn torus_pairing(&self, a: &[i32], c: &[i32]) -> RatFunc {
        let (mut pv, mut pt) = (0, 0);
        for (i, &ai) in a.iter().enumerate() {
            for (j, &cj) in c.iter().enumerate() {
                if ai != 0 && cj != 0 {
                    let (x, y) = self.torus_generator_pairing(i + 1, j + 1);
                    pv += ai * cj * x;
                    pt += ai * cj * y;
                }
            }
        }
        monomial(pv, pt)
    }

    /// Normal-orders `K^torus s_1 s_2 ..` by moving every torus symbol to the left.
    fn normal_order(&self, half: Half, torus: &[i32], seq: &[Sym]) -> Result<(RatFunc, Word)> {
        let n = self.n();
        let mut word = Word { torus: torus.to_vec(), letters: Vec::new() };
        let (mut sv, mut st) = (0, 0);
        for &s in seq {
            match s {
                Sym::Letter(j) => word.letters.push(j),
                Sym::Torus(i, e) => {
                    if i == n && !word.letters.is_empty() {
                        return Err(Error::Invalid(format!("no exchange rule for the rank-{n} group-like")));
                    }
                    for &j in &word.letters {
                        let (a, b) = self.exchange(half, i, j);
                        sv -= e * a;
                        st -= e * b;
                    }
                    word.torus[i - 1] += e;
                }
            }
        }
        Ok((monomial(sv, st), word))
    }

    /// Product of two words in the same half.
    pub fn mul_words(&self, half: Half, x: &Word, y: &Word) -> Result<(RatFunc, Word)> {
        let mut seq: Vec<Sym> = x.letters.iter().map(|&j| Sym::Letter(j)).collect();
        seq.extend(y.torus.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, &e)| Sym::Torus(i + 1, e)));
        seq.extend(y.letters.iter().map(|&j| Sym::Letter(j)));
        self.normal_order(half, &x.torus, &seq)
    }

    /// Product of two elements in the same half.
    pub fn mul(&self, x: &HalfElement, y: &HalfElement) -> Result<HalfElement> {
        let mut out = HalfElement::zero(x.half, x.n);
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                let (s, w) = self.mul_words(x.half, a, b)?;
                out.add_term(w, &(ca * cb * s));
            }
        }
        Ok(out)
    }

    /// `Δ(word)` (or `Δ^op(word)` when `opposite`) as a list of `(coefficient, [left, right])`.
    ///
    /// On generators `Δ(E) = E⊗1 + K⊗E`, `Δ(F) = 1⊗F + F⊗K'` and tori are group-like.
    pub fn coproduct(&self, half: Half, word: &Word, opposite: bool) -> Result<Vec<CoproductTerm>> {
        let letter_first = (half == Half::Plus) != opposite;
        let m = word.letters.len();
        let mut out = Vec::with_capacity(1 << m);
        for mask in 0u32..(1 << m) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (p, &j) in word.letters.iter().enumerate() {
                let second = mask >> p & 1 == 1;
                match (letter_first, second) {
                    (true, false) => left.push(Sym::Letter(j)),
                    (true, true) => {
                        left.push(Sym::Torus(j, 1));
                        right.push(Sym::Letter(j));
                    }
                    (false, false) => right.push(Sym::Letter(j)),
                    (false, true) => {
                        left.push(Sym::Letter(j));
                        right.push(Sym::Torus(j, 1));
                    }
                }
            }
            let (sl, wl) = self.normal_order(half, &word.torus, &left)?;
            let (sr, wr) = self.normal_order(half, &word.torus, &right)?;
            out.push((sl * sr, vec![wl, wr]));
        }
        Ok(out)
    }

    /// The iterated coproduct `(Δ ⊗ id) Δ` with three tensor factors.
    pub fn coproduct2(&self, half: Half, word: &Word, opposite: bool) -> Result<Vec<CoproductTerm>> {
        let mut out = Vec::new();
        for (s, parts) in self.coproduct(half, word, opposite)? {
            for (s2, inner) in self.coproduct(half, &parts[0], opposite)? {
                out.push((&s * &s2, vec![inner[0].clone(), inner[1].clone(), parts[1].clone()]));
            }
        }
        Ok(out)
    }

    /// `(x, y)` for a negative word `x` and a positive word `y`, peeling the last letter of `x`.
    pub fn pair_words(&self, x: &Word, y: &Word) -> RatFunc {
        if x.letters.len() != y.letters.len() {
            return RatFunc::zero();
        }
        let Some((&i, rest)) = x.letters.split_last() else {
            return self.torus_pairing(&x.torus, &y.torus);
        };
        let shorter = Word { torus: x.torus.clone(), letters: rest.to_vec() };
        let head = self.torus_pairing(&Word::torus_unit(i, self.n(), 1).torus, &y.torus) * letter_pairing();
        let mut total = RatFunc::zero();
        for (p, &j) in y.letters.iter().enumerate() {
            if j != i {
                continue;
            }
            // K_j moves left past the letters in front of position p
            let (mut sv, mut st) = (0, 0);
            for &q in &y.letters[..p] {
                let (a, b) = self.exchange(Half::Plus, j, q);
                sv -= a;
                st -= b;
            }
            let mut torus = y.torus.clone();
            torus[j - 1] += 1;
            let mut letters = y.letters.clone();
            letters.remove(p);
            let inner = self.pair_words(&shorter, &Word { torus, letters });
            if !inner.is_zero() {
                total += &head * &monomial(sv, st) * inner;
            }
        }
        total
    }

    /// `(x, y)` peeling the first letter of `x` together with its torus part.
    pub fn pair_words_forward(&self, x: &Word, y: &Word) -> Result<RatFunc> {
        if x.letters.len() != y.letters.len() {
            return Ok(RatFunc::zero());
        }
        let Some((&i, rest)) = x.letters.split_first() else {
            return Ok(self.torus_pairing(&x.torus, &y.torus));
        };
        let n = self.n();
        let tail = Word::from_letters(rest, n);
        let mut total = RatFunc::zero();
        for (s, parts) in self.coproduct(Half::Plus, y, false)? {
            let (y1, y2) = (&parts[0], &parts[1]);
            if y1.letters != [i] {
                continue;
            }
            // (K'^a F_i, K^c E_i) = (K'^(a + e_i), K^c) (K'^a, K_i) / (v^-1 - v)
            let mut shifted = x.torus.clone();
            shifted[i - 1] += 1;
            let head = self.torus_pairing(&shifted, &y1.torus)
                * self.torus_pairing(&x.torus, &Word::torus_unit(i, n, 1).torus)
                * letter_pairing();
            let inner = self.pair_words_forward(&tail, y2)?;
            total += s * head * inner;
        }
        Ok(total)
    }

    /// Bilinear extension of [`Pairing::pair_words`].
    pub fn pair(&self, x: &HalfElement, y: &HalfElement) -> Result<RatFunc> {
        if x.half != Half::Minus || y.half != Half::Plus {
            return Err(Error::Invalid("pairing takes a negative element and a positive element".into()));
        }
        let mut total = RatFunc::zero();
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                let p = self.pair_words(a, b);
                if !p.is_zero() {
                    total += ca * cb * p;
                }
            }
        }
        Ok(total)
    }

    /// `(x, y1 y2)` computed as `Σ (x_(1), y1) (x_(2), y2)` with the opposite coproduct of `x`.
    pub fn pair_against_product(&self, x: &Word, y1: &Word, y2: &Word) -> Result<RatFunc> {
        let mut total = RatFunc::zero();
        for (s, parts) in self.coproduct(Half::Minus, x, true)? {
            total += s * self.pair_words(&parts[0], y1) * self.pair_words(&parts[1], y2);
        }
        Ok(total)
    }

    /// `(x1 x2, y)` computed as `Σ (x1, y_(1)) (x2, y_(2))`.
    pub fn pair_product_against(&self, x1: &Word, x2: &Word, y: &Word) -> Result<RatFunc> {
        let mut total = RatFunc::zero();
        for (s, parts) in self.coproduct(Half::Plus, y, false)? {
            total += s * self.pair_words(x1, &parts[0]) * self.pair_words(x2, &parts[1]);
        }
        Ok(total)
    }

    /// The antipode of `B` on a word: `S(E_i) = -K_i^-1 E_i`, anti-multiplicative.
    pub fn antipode_plus(&self, word: &Word) -> Result<HalfElement> {
        let mut seq = Vec::new();
        for &j in word.letters.iter().rev() {
            seq.push(Sym::Torus(j, -1));
            seq.push(Sym::Letter(j));
        }
        self.antipode_tail(Half::Plus, word, seq)
    }

    /// An antipode on the negative half applied to a word.
    pub fn antipode_minus(&self, word: &Word, which: MinusAntipode) -> Result<HalfElement> {
        let mut seq = Vec::new();
        for &j in word.letters.iter().rev() {
            match which {
                MinusAntipode::Plain => seq.extend([Sym::Letter(j), Sym::Torus(j, -1)]),
                MinusAntipode::Inverse => seq.extend([Sym::Torus(j, -1), Sym::Letter(j)]),
            }
        }
        self.antipode_tail(Half::Minus, word, seq)
    }

    fn antipode_tail(&self, half: Half, word: &Word, mut seq: Vec<Sym>) -> Result<HalfElement> {
        let n = self.n();
        seq.extend(word.torus.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, &e)| Sym::Torus(i + 1, -e)));
        let (s, w) = self.normal_order(half, &vec![0; n], &seq)?;
        let sign = if word.letters.len().is_multiple_of(2) { s } else { -s };
        let mut out = HalfElement::zero(half, n);
        out.add_term(w, &sign);
        Ok(out)
    }

    /// Evaluates a generator pair such as `(F1, E1)` or `(B3, K2)`.
    pub fn pair_generators(&self, minus: &str, plus: &str) -> Result<RatFunc> {
        let x = self.parse_generator(Half::Minus, minus)?;
        let y = self.parse_generator(Half::Plus, plus)?;
        Ok(self.pair_words(&x, &y))
    }

    fn parse_generator(&self, half: Half, s: &str) -> Result<Word> {
        let n = self.n();
        let bad = || Error::Invalid(format!("unknown generator {s}"));
        let (head, rest) = s.split_at(1.min(s.len()));
        let primed = rest.ends_with('\'');
        let index: usize = rest.trim_end_matches('\'').parse().map_err(|_| bad())?;
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, rank: n });
        }
        let word = match (half, head, primed) {
            (Half::Plus, "E", false) | (Half::Minus, "F", false) if index < n => Word::letter(index, n),
            (Half::Plus, "K", false) | (Half::Minus, "K", true) if index < n => Word::torus_unit(index, n, 1),
            (Half::Plus, "A", false) | (Half::Minus, "B", false) if index == n => Word::torus_unit(n, n, 1),
            _ => return Err(bad()),
        };
        Ok(word)
    }
}

/// All words over letters `1..n` with the given letter counts, in lexicographic order.
pub fn words_with_content(content: &[usize]) -> Vec<Vec<usize>> {
    fn go(remaining: &mut [usize], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.iter().all(|&c| c == 0) {
            out.push(current.clone());
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                current.push(i + 1);
                go(remaining, current, out);
                current.pop();
                remaining[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut content.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// All letter-count vectors of length `n - 1` with total between `1` and `max_height`.
pub fn contents_up_to(n: usize, max_height: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; n - 1]];
    let mut frontier = out.clone();
    for _ in 0..max_height {
        let mut next = Vec::new();
        for c in &frontier {
            let start = c.iter().rposition(|&x| x > 0).unwrap_or(0);
            for i in start..n - 1 {
                let mut d = c.clone();
                d[i] += 1;
                next.push(d);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.remove(0);
    out
}

/// Number of ways to write `content` as a sum of positive roots `α_i + .. + α_j`.
pub fn kostant_partition_count(content: &[usize]) -> usize {
    let r = content.len();
    let roots: Vec<(usize, usize)> = (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect();
    fn go(roots: &[(usize, usize)], remaining: &mut [usize]) -> usize {
        let Some((&(i, j), rest)) = roots.split_first() else {
            return usize::from(remaining.iter().all(|&c| c == 0));
        };
        let mut total = go(rest, remaining);
        let mut used = 0;
        while remaining[i..=j].iter().all(|&c| c > 0) {
            remaining[i..=j].iter_mut().for_each(|c| *c -= 1);
            used += 1;
            total += go(rest, remaining);
        }
        remaining[i..=j].iter_mut().for_each(|c| *c += used);
        total
    }
    go(&roots, &mut content.to_vec())
}

/// A graded piece `B_ξ` with a word basis and the dual basis of `B'_{-ξ}`.
#[derive(Clone, Debug)]
pub struct GradedComponent {
    /// Letter counts of `ξ`.
    pub content: Vec<usize>,
    /// Positive words `E_w` forming a basis of `B_ξ`.
    pub basis: Vec<Vec<usize>>,
    /// Negative words used to span the dual piece.
    pub dual_words: Vec<Vec<usize>>,
    /// `dual[k]` pairs to `δ_kl` with `E_{basis[l]}`.
    pub dual: Vec<HalfElement>,
    /// Gram matrix of `dual_words` against `basis`.
    pub gram: Vec<Vec<RatFunc>>,
}

/// Extends `chosen` greedily by the vectors that raise the rank.
fn greedy_independent(vectors: &[Vec<RatFunc>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for (k, _) in vectors.iter().enumerate() {
        let mut trial: Vec<Vec<RatFunc>> = chosen.iter().map(|&c| vectors[c].clone()).collect();
        trial.push(vectors[k].clone());
        if rref(&trial).len() == trial.len() {
            chosen.push(k);
        }
    }
    chosen
}

impl Pairing {
    /// Word basis of `B_ξ` modulo the radical of the pairing, and its dual basis.
    pub fn graded_component(&self, content: &[usize]) -> Result<GradedComponent> {
        let n = self.n();
        let words = words_with_content(content);
        let full: Vec<Vec<RatFunc>> = words
            .iter()
            .map(|f| {
                words.iter().map(|e| self.pair_words(&Word::from_letters(f, n), &Word::from_letters(e, n))).collect()
            })
            .collect();
        let columns: Vec<Vec<RatFunc>> =
            (0..words.len()).map(|j| full.iter().map(|r| r[j].clone()).collect()).collect();
        let basis_idx = greedy_independent(&columns);
        let restricted: Vec<Vec<RatFunc>> =
            full.iter().map(|r| basis_idx.iter().map(|&j| r[j].clone()).collect()).collect();
        let dual_idx = greedy_independent(&restricted);
        let gram: Vec<Vec<RatFunc>> = dual_idx.iter().map(|&i| restricted[i].clone()).collect();
        let inv = invert(&gram).ok_or_else(|| Error::SingularGram(format!("{content:?}")))?;
        let dual = (0..basis_idx.len())
            .map(|k| {
                let mut e = HalfElement::zero(Half::Minus, n);
                for (m, &i) in dual_idx.iter().enumerate() {
                    e.add_term(Word::from_letters(&words[i], n), &inv[k][m]);
                }
                e
            })
            .collect();
        Ok(GradedComponent {
            content: content.to_vec(),
            basis: basis_idx.iter().map(|&j| words[j].clone()).collect(),
            dual_words: dual_idx.iter().map(|&i| words[i].clone()).collect(),
            dual,
            gram,
        })
    }
}

fn compare(name: String, lhs: &RatFunc, rhs: &RatFunc) -> Option<Check> {
    (lhs != rhs).then(|| Check::fail(name, format!("lhs {lhs}, rhs {rhs}")))
}

/// Collapses a family of comparisons into one check reporting the first failure.
fn summarise(name: &str, count: usize, failures: Vec<Check>) -> Check {
    match failures.into_iter().next() {
        None => Check::from_bool(name, true, format!("{count} cases")),
        Some(first) => Check::fail(name, format!("{}: {}", first.name, first.detail.unwrap_or_default())),
    }
}

/// Torus exponent vectors used to probe relations: zero, each unit vector and one inverse.
fn probe_tori(n: usize) -> Vec<Vec<i32>> {
    let mut out = vec![vec![0; n]];
    for i in 1..=n {
        out.push(Word::torus_unit(i, n, 1).torus);
    }
    out.push(Word::torus_unit(1, n, -1).torus);
    out
}

/// Serre elements with coefficient `c`: `a^2 b - c [2] a b a + c^2 b a^2` and the mirrored form.
fn serre_elements(half: Half, n: usize, i: usize, c: &RatFunc) -> [HalfElement; 2] {
    let q: RatFunc = "v+1/v".parse().expect("constant expression");
    let j = i + 1;
    let build = |words: [[usize; 3]; 3]| {
        let mut e = HalfElement::zero(half, n);
        e.add_term(Word::from_letters(&words[0], n), &RatFunc::one());
        e.add_term(Word::from_letters(&words[1], n), &-(c * &q));
        e.add_term(Word::from_letters(&words[2], n), &(c * c));
        e
    };
    [build([[i, i, j], [i, j, i], [j, i, i]]), build([[i, j, j], [j, i, j], [j, j, i]])]
}

/// Checks that the pairing is compatible with the defining relations and with the antipodes.
pub fn verify_pairing_relations(n: usize, max_height: usize) -> Result<Vec<Check>> {
    let p = Pairing::new(n)?;
    let mut out = Vec::new();
    let tori = probe_tori(n);
    let letters_tori: Vec<Vec<i32>> = tori.iter().filter(|t| t[n - 1] == 0).cloned().collect();

    // the two peel orders
    let mut failures = Vec::new();
    let mut count = 0;
    for content in contents_up_to(n, max_height) {
        let words = words_with_content(&content);
        for xt in &letters_tori {
            for yt in &tori {
                for xw in &words {
                    for yw in &words {
                        let x = Word { torus: xt.clone(), letters: xw.clone() };
                        let y = Word { torus: yt.clone(), letters: yw.clone() };
                        count += 1;
                        let name = format!("({}, {})", x.render(Half::Minus), y.render(Half::Plus));
                        failures.extend(compare(name, &p.pair_words(&x, &y), &p.pair_words_forward(&x, &y)?));
                    }
                }
            }
        }
    }
    out.push(summarise("peel orders agree", count, failures));

    // exchange relations seen through the pairing
    let mut failures = Vec::new();
    let mut count = 0;
    for i in 1..n {
        for j in 1..n {
            let s = p.exchange_scalar(Half::Plus, j, i);
            for a in &letters_tori {
                let x = Word { torus: a.clone(), letters: vec![i] };
                let lhs = p.pair_against_product(&x, &Word::torus_unit(j, n, 1), &Word::letter(i, n))?;
                let rhs = &s * &p.pair_against_product(&x, &Word::letter(i, n), &Word::torus_unit(j, n, 1))?;
                count += 1;
                let name = format!("({}, K{j} E{i})", x.render(Half::Minus));
                failures.extend(compare(name, &lhs, &rhs));
            }
            let s = p.exchange_scalar(Half::Minus, j, i);
            for c in &tori {
                let y = Word { torus: c.clone(), letters: vec![i] };
                let lhs = p.pair_product_against(&Word::torus_unit(j, n, 1), &Word::letter(i, n), &y)?;
                let rhs = &s * &p.pair_product_against(&Word::letter(i, n), &Word::torus_unit(j, n, 1), &y)?;
                count += 1;
                let name = format!("(K{j}' F{i}, {})", y.render(Half::Plus));
                failures.extend(compare(name, &lhs, &rhs));
            }
        }
    }
    for i in 1..=n {
        for a in &tori {
            let x = Word { torus: a.clone(), letters: Vec::new() };
            let lhs = p.pair_against_product(&x, &Word::torus_unit(i, n, 1), &Word::torus_unit(i, n, -1))?;
            count += 1;
            let name = format!("({}, K{i} K{i}^-1)", x.render(Half::Minus));
            failures.extend(compare(name, &lhs, &RatFunc::one()));
        }
    }
    out.push(summarise("torus exchange relations respected", count, failures));

    // Serre elements lie in the radical
    let mut failures = Vec::new();
    let mut count = 0;
    for i in 1..n.saturating_sub(1) {
        for (half, c) in [(Half::Plus, RatFunc::t()), (Half::Minus, RatFunc::vt_monomial(1, 0, -1))] {
            for serre in serre_elements(half, n, i, &c) {
                let content = serre.terms.keys().next().expect("nonempty").content(n);
                for w in words_with_content(&content) {
                    for torus in &letters_tori {
                        let other = HalfElement::from_word(
                            if half == Half::Plus { Half::Minus } else { Half::Plus },
                            Word { torus: torus.clone(), letters: w.clone() },
                        );
                        let value = match half {
                            Half::Plus => p.pair(&other, &serre)?,
                            Half::Minus => p.pair(&serre, &other)?,
                        };
                        count += 1;
                        failures.extend(compare(format!("{serre} against {w:?}"), &value, &RatFunc::zero()));
                    }
                }
            }
        }
    }
    for i in 1..n {
        for j in i + 2..n {
            for half in [Half::Plus, Half::Minus] {
                let mut comm = HalfElement::zero(half, n);
                comm.add_term(Word::from_letters(&[i, j], n), &RatFunc::one());
                comm.add_term(Word::from_letters(&[j, i], n), &RatFunc::from_int(-1));
                for w in [[i, j], [j, i]] {
                    let other = Word::from_letters(&w, n);
                    let value = match half {
                        Half::Plus => p.pair(&HalfElement::from_word(Half::Minus, other), &comm)?,
                        Half::Minus => p.pair(&comm, &HalfElement::from_word(Half::Plus, other))?,
                    };
                    count += 1;
                    failures.extend(compare(format!("{comm} against {w:?}"), &value, &RatFunc::zero()));
                }
            }
        }
    }
    out.push(summarise("Serre and commutation elements pair to zero", count, failures));

    out.push(antipode_check(&p, MinusAntipode::Plain)?);
    Ok(out)
}

/// Products of at most two generators of one half, normal-ordered.
fn short_products(p: &Pairing, half: Half) -> Result<Vec<(RatFunc, Word)>> {
    let n = p.n();
    let mut gens: Vec<Word> = (1..n).map(|i| Word::letter(i, n)).collect();
    gens.extend((1..n).map(|i| Word::torus_unit(i, n, 1)));
    let mut out = vec![(RatFunc::one(), Word::one(n))];
    for a in &gens {
        out.push((RatFunc::one(), a.clone()));
        for b in &gens {
            out.push(p.mul_words(half, a, b)?);
        }
    }
    Ok(out)
}

/// `(S(x), S(y)) = (x, y)` over products of at most two generators.
pub fn antipode_check(p: &Pairing, which: MinusAntipode) -> Result<Check> {
    let name = match which {
        MinusAntipode::Plain => "antipode compatibility (plain antipode on the negative half)",
        MinusAntipode::Inverse => "antipode compatibility (co-opposite antipode on the negative half)",
    };
    let minus = short_products(p, Half::Minus)?;
    let plus = short_products(p, Half::Plus)?;
    let mut failures = Vec::new();
    let mut count = 0;
    for (cx, x) in &minus {
        let sx = p.antipode_minus(x, which)?;
        for (cy, y) in &plus {
            if x.height() != y.height() {
                continue;
            }
            let sy = p.antipode_plus(y)?;
            let lhs = cx * cy * p.pair(&sx, &sy)?;
            let rhs = cx * cy * p.pair_words(x, y);
            count += 1;
            if let Some(mut c) = compare(format!("({}, {})", x.render(Half::Minus), y.render(Half::Plus)), &lhs, &rhs) {
                if let Ok(ratio) = lhs.checked_div(&rhs) {
                    c.detail = Some(format!("{} (ratio {ratio})", c.detail.unwrap_or_default()));
                }
                failures.push(c);
            }
        }
    }
    Ok(summarise(name, count, failures))
}

/// An element of the double: `Σ c · (positive word) ⊗ (negative word)`.
pub type DoubleElement = BTreeMap<(Word, Word), RatFunc>;

fn double_add(d: &mut DoubleElement, key: (Word, Word), c: &RatFunc) {
    let e = d.entry(key).or_insert_with(RatFunc::zero);
    *e += c;
    d.retain(|_, c| !c.is_zero());
}

/// Renders a double element as `[c]*a ⊗ f + ..`.
pub fn format_double(d: &DoubleElement) -> String {
    if d.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = d
        .iter()
        .map(|((a, f), c)| {
            let a = HalfElement::from_word(Half::Plus, a.clone());
            let f = HalfElement::from_word(Half::Minus, f.clone());
            let strip = |s: String| s.trim_start_matches("[1]*").into();
            let (a, f): (String, String) = (strip(format!("{a}")), strip(format!("{f}")));
            format!("[{c}]*{a} ⊗ {f}")
        })
        .collect();
    parts.join(" + ")
}

impl Pairing {
    /// `(1 ⊗ f)(a ⊗ 1) = Σ (S(f_(1)), a_(1)) (f_(3), a_(3)) a_(2) ⊗ f_(2)`.
    pub fn double_product(&self, f: &Word, a: &Word, convention: DoubleConvention) -> Result<DoubleElement> {
        let (opposite, which) = match convention {
            DoubleConvention::Plain => (false, MinusAntipode::Plain),
            DoubleConvention::CoOpposite => (true, MinusAntipode::Inverse),
        };
        let fs = self.coproduct2(Half::Minus, f, opposite)?;
        let as_ = self.coproduct2(Half::Plus, a, false)?;
        let mut out = DoubleElement::new();
        for (sf, fp) in &fs {
            let s1 = self.antipode_minus(&fp[0], which)?;
            for (sa, ap) in &as_ {
                let c = self.pair(&s1, &HalfElement::from_word(Half::Plus, ap[0].clone()))?;
                if c.is_zero() {
                    continue;
                }
                let d = self.pair_words(&fp[2], &ap[2]);
                if d.is_zero() {
                    continue;
                }
                double_add(&mut out, (ap[1].clone(), fp[1].clone()), &(sf * sa * c * d));
            }
        }
        Ok(out)
    }
}

/// Cross relations in the double between generators `E_i`, `K_i` and `F_j`, `K'_j`.
pub fn double_cross_relation(i: usize, j: usize, n: usize, convention: DoubleConvention) -> Result<Vec<Check>> {
    let p = Pairing::new(n)?;
    let idx_ok = |x: usize| (1..n).contains(&x);
    if !idx_ok(i) || !idx_ok(j) {
        return Err(Error::IndexOutOfRange { index: i.max(j), rank: n });
    }
    let one = Word::one(n);
    let mut out = Vec::new();
    let mut push = |name: String, got: DoubleElement, want: DoubleElement| {
        let ok = got == want;
        out.push(Check::from_bool(name, ok, format!("got {}, expected {}", format_double(&got), format_double(&want))));
    };

    let mut want = DoubleElement::new();
    double_add(&mut want, (Word::letter(i, n), Word::letter(j, n)), &RatFunc::one());
    if i == j {
        let c = letter_pairing();
        double_add(&mut want, (Word::torus_unit(i, n, 1), one.clone()), &c);
        double_add(&mut want, (one.clone(), Word::torus_unit(j, n, 1)), &-c);
    }
    push(
        format!("F{j} E{i} cross relation"),
        p.double_product(&Word::letter(j, n), &Word::letter(i, n), convention)?,
        want,
    );

    let mut want = DoubleElement::new();
    double_add(&mut want, (Word::torus_unit(i, n, 1), Word::torus_unit(j, n, 1)), &RatFunc::one());
    push(
        format!("K{j}' K{i} commute"),
        p.double_product(&Word::torus_unit(j, n, 1), &Word::torus_unit(i, n, 1), convention)?,
        want,
    );

    // K'_j E_i K'_j^-1 = v^(-j.i) t^(<j,i> - <i,j>) E_i
    let cartan = CartanDatum::new(n)?;
    let mut want = DoubleElement::new();
    double_add(
        &mut want,
        (Word::letter(i, n), Word::torus_unit(j, n, 1)),
        &monomial(-cartan.dot(j, i), cartan.skew(j, i)),
    );
    push(
        format!("K{j}' E{i} exchange"),
        p.double_product(&Word::torus_unit(j, n, 1), &Word::letter(i, n), convention)?,
        want,
    );

    // F_j K_i = v^(i.j) t^(<i,j> - <j,i>) K_i F_j
    let mut want = DoubleElement::new();
    double_add(
        &mut want,
        (Word::torus_unit(i, n, 1), Word::letter(j, n)),
        &monomial(cartan.dot(i, j), cartan.skew(i, j)),
    );
    push(
        format!("F{j} K{i} exchange"),
        p.double_product(&Word::letter(j, n), &Word::torus_unit(i, n, 1), convention)?,
        want,
    );
    Ok(out)
}

/// The weight of `v_j` as an exponent vector of `K_1 .. K_{n-1}, A_n`.
fn basis_torus(j: usize, n: usize) -> Vec<i32> {
    Weight::of_basis_vector(j, n).0
}

/// `(K'_λ, K_μ)` for weights given as exponent vectors.
pub fn group_like_pairing(n: usize, lambda: &Weight, mu: &Weight) -> Result<RatFunc> {
    Ok(Pairing::new(n)?.torus_pairing(&lambda.0, &mu.0))
}

/// The scalar by which `f` acts on `v_j ⊗ v_i`.
pub fn f_factor(n: usize, j: usize, i: usize, convention: FactorConvention) -> Result<RatFunc> {
    let p = Pairing::new(n)?;
    let (a, b) = match convention {
        FactorConvention::Literal => (basis_torus(j, n), basis_torus(i, n)),
        FactorConvention::Swapped => (basis_torus(i, n), basis_torus(j, n)),
    };
    p.torus_pairing(&a, &b).inv()
}

/// The truncation `Σ_{ht ξ <= h} Σ_k v_k^ξ ⊗ u_k^ξ` of the canonical element as an operator on `V_n ⊗ V_n`.
pub fn theta_operator(n: usize, max_height: usize) -> Result<SparseMatrix> {
    let p = Pairing::new(n)?;
    let g = natural_rep(n)?;
    let word_matrix =
        |mats: &[SparseMatrix], w: &[usize]| w.iter().fold(SparseMatrix::identity(n), |acc, &i| acc.mul(&mats[i - 1]));
    let mut theta = SparseMatrix::identity(n * n);
    for content in contents_up_to(n, max_height) {
        let comp = p.graded_component(&content)?;
        for (u, dual) in comp.basis.iter().zip(&comp.dual) {
            let right = word_matrix(&g.e, u);
            if right.is_zero() {
                continue;
            }
            let mut left = SparseMatrix::zeros(n, n);
            for (w, c) in &dual.terms {
                left = left.add(&word_matrix(&g.f, &w.letters).scale(c));
            }
            theta = theta.add(&left.kron(&right));
        }
    }
    Ok(theta)
}

/// `v_i ⊗ v_j ↦ Θ f (v_j ⊗ v_i)` with `Θ` truncated at `max_height`.
pub fn rtilde_from_theta(n: usize, max_height: usize, convention: FactorConvention) -> Result<SparseMatrix> {
    let theta = theta_operator(n, max_height)?;
    let mut swap = SparseMatrix::zeros(n * n, n * n);
    for i in 1..=n {
        for j in 1..=n {
            let from = (i - 1) * n + (j - 1);
            let to = (j - 1) * n + (i - 1);
            swap.set(to, from, f_factor(n, j, i, convention)?);
        }
    }
    Ok(theta.mul(&swap))
}

/// Pairings of all generator pairs as `(negative, positive, value)`.
pub fn generator_table(n: usize) -> Result<Vec<(String, String, RatFunc)>> {
    let p = Pairing::new(n)?;
    let mut minus: Vec<String> = (1..n).flat_map(|i| [format!("F{i}"), format!("K{i}'")]).collect();
    minus.push(format!("B{n}"));
    let mut plus: Vec<String> = (1..n).flat_map(|i| [format!("E{i}"), format!("K{i}")]).collect();
    plus.push(format!("A{n}"));
    let mut out = Vec::new();
    for x in &minus {
        for y in &plus {
            out.push((x.clone(), y.clone(), p.pair_generators(x, y)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix_sw::rtilde;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn generator_values_rank_two() {
        let p = Pairing::new(2).unwrap();
        assert_eq!(p.pair_generators("K1'", "K1").unwrap(), rf("v^2"));
        assert_eq!(p.pair_generators("B2", "K1").unwrap(), rf("t/v"));
        assert_eq!(p.pair_generators("K1'", "A2").unwrap(), rf("1/(v*t)"));
        assert_eq!(p.pair_generators("B2", "A2").unwrap(), rf("1"));
        assert_eq!(p.pair_generators("F1", "E1").unwrap(), rf("1/(1/v-v)"));
        assert_eq!(p.pair_generators("F1", "K1").unwrap(), rf("0"));
    }

    #[test]
    fn first_dual_basis() {
        let p = Pairing::new(3).unwrap();
        let comp = p.graded_component(&[1, 0]).unwrap();
        assert_eq!(comp.basis, vec![vec![1]]);
        assert_eq!(format!("{}", comp.dual[0]), format!("[{}]*F1", rf("1/v-v")));
    }

    #[test]
    fn dimensions_follow_root_partitions() {
        let p = Pairing::new(3).unwrap();
        for content in contents_up_to(3, 3) {
            let comp = p.graded_component(&content).unwrap();
            assert_eq!(comp.basis.len(), kostant_partition_count(&content), "{content:?}");
        }
    }

    #[test]
    fn relations_hold() {
        for check in verify_pairing_relations(3, 3).unwrap() {
            assert!(check.passed, "{check:?}");
        }
    }

    #[test]
    fn rank_two_recovers_braiding() {
        let r = rtilde_from_theta(2, 2, FactorConvention::Swapped).unwrap();
        assert_eq!(r.first_difference(&rtilde(2)), None);
    }

    #[test]
    fn displayed_cross_relation() {
        for check in double_cross_relation(1, 1, 2, DoubleConvention::Plain).unwrap() {
            assert!(check.passed, "{check:?}");
        }
    }
}
