//! Compositions, integer and super matrices, permutations of `S_r` and the
//! double-coset combinatorics that index the bases of Schur superalgebras.
//!
//! Matrix and composition accessors are 1-based to match the usual
//! notation; storage is 0-based.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A composition of `r` into `n` nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn r(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `[λ̃_0, λ̃_1, ..., λ̃_n]` with `λ̃_0 = 0` and `λ̃_n = r`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        out.push(0);
        for p in &self.parts {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Whether `s_i` (1-based) lies in the Young subgroup `S_λ`.
    pub fn contains_simple(&self, i: usize) -> bool {
        let ps = self.partial_sums();
        !ps.contains(&i)
    }

    /// Block index (0-based) containing letter `x` (1-based).
    pub fn block_of(&self, x: usize) -> usize {
        let ps = self.partial_sums();
        (0..self.n()).find(|&b| ps[b] < x && x <= ps[b + 1]).expect("letter in range")
    }

    /// Dot product with an integer vector.
    pub fn dot(&self, j: &[i64]) -> i64 {
        self.parts.iter().zip(j).map(|(&a, &b)| a as i64 * b).sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All compositions of `r` into `n` parts, with earlier parts as large as
/// possible first: `(2,0), (1,1), (0,2)`.
pub fn compositions(n: usize, r: usize) -> Vec<Composition> {
    fn rec(n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 1 {
            cur.push(r);
            out.push(Composition::new(cur.clone()));
            cur.pop();
            return;
        }
        for first in (0..=r).rev() {
            cur.push(first);
            rec(n - 1, r - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if r == 0 {
            out.push(Composition::new(Vec::new()));
        }
        return out;
    }
    rec(n, r, &mut Vec::new(), &mut out);
    out
}

/// Square matrix over ℕ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl NatMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("matrix is not square".into()));
        }
        Ok(Self { n, entries: rows.iter().flatten().copied().collect() })
    }

    pub fn diag(parts: &[usize]) -> Self {
        let mut m = Self::zero(parts.len());
        for (i, &p) in parts.iter().enumerate() {
            m.set(i + 1, i + 1, p);
        }
        m
    }

    /// Unit matrix `E_{i,j}`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.set(i, j, 1);
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n.max(1)).map(|c| c.to_vec()).take(self.n).collect()
    }

    /// Entry `a_{i,j}` (1-based).
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, x: usize) {
        self.entries[(i - 1) * self.n + (j - 1)] = x;
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn ro(&self) -> Composition {
        Composition::new((1..=self.n).map(|i| (1..=self.n).map(|j| self.get(i, j)).sum()).collect())
    }

    pub fn co(&self) -> Composition {
        Composition::new((1..=self.n).map(|j| (1..=self.n).map(|i| self.get(i, j)).sum()).collect())
    }

    /// Column-major reading `ν_A = (a_{11}, ..., a_{n1}, a_{12}, ...)`.
    pub fn nu(&self) -> Composition {
        let mut parts = Vec::with_capacity(self.n * self.n);
        for j in 1..=self.n {
            for i in 1..=self.n {
                parts.push(self.get(i, j));
            }
        }
        Composition::new(parts)
    }

    /// Partial sum `ã_{i,j} = Σ_{p<j} Σ_u a_{u,p} + Σ_{u≤i} a_{u,j}`, for
    /// `0 ≤ i ≤ n`, `1 ≤ j ≤ n`.
    pub fn atilde(&self, i: usize, j: usize) -> usize {
        let before: usize = (1..j).map(|p| (1..=self.n).map(|u| self.get(u, p)).sum::<usize>()).sum();
        before + (1..=i).map(|u| self.get(u, j)).sum::<usize>()
    }

    /// `σ_{i,j} = μ̃_{j-1} + Σ_{u≤i, p≥j} a_{u,p}` with `μ = co(A)`.
    pub fn sigma(&self, i: usize, j: usize) -> usize {
        let mu = self.co().partial_sums();
        let mut s = mu[j - 1];
        for u in 1..=i {
            for p in j..=self.n {
                s += self.get(u, p);
            }
        }
        s
    }

    /// Row prefix `𝐚(h,k) = Σ_{u<k} a_{h,u}`.
    pub fn rowpre(&self, h: usize, k: usize) -> usize {
        (1..k).map(|u| self.get(h, u)).sum()
    }

    /// Row suffix `𝐛(h,k) = Σ_{j>k} a_{h,j}`.
    pub fn rowsuf(&self, h: usize, k: usize) -> usize {
        (k + 1..=self.n).map(|j| self.get(h, j)).sum()
    }

    /// `A ± (E_{h,k} − E_{h+1,k})`; `None` if an entry would go negative.
    pub fn shift(&self, h: usize, k: usize, plus: bool) -> Result<Option<NatMatrix>> {
        if h == 0 || h >= self.n || k == 0 || k > self.n {
            return Err(Error::IndexOutOfRange(format!("shift at ({h},{k}) for n = {}", self.n)));
        }
        let (up, down) = if plus { (h, h + 1) } else { (h + 1, h) };
        if self.get(down, k) == 0 {
            return Ok(None);
        }
        let mut m = self.clone();
        m.set(up, k, m.get(up, k) + 1);
        m.set(down, k, m.get(down, k) - 1);
        Ok(Some(m))
    }

    /// Entrywise `self + sign * other`; `None` when negative.
    pub fn add_signed(&self, other: &[(usize, usize, i64)]) -> Option<NatMatrix> {
        let mut m = self.clone();
        for &(i, j, d) in other {
            let x = m.get(i, j) as i64 + d;
            if x < 0 {
                return None;
            }
            m.set(i, j, x as usize);
        }
        Some(m)
    }

    pub fn plus(&self, other: &NatMatrix) -> NatMatrix {
        NatMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    /// Stats of the matrix, bundled.
    pub fn stats(&self) -> MatrixStats {
        let n = self.n;
        MatrixStats {
            ro: self.ro(),
            co: self.co(),
            nu: self.nu(),
            atilde: (0..=n).map(|i| (1..=n).map(|j| self.atilde(i, j)).collect()).collect(),
            sigma: (0..=n).map(|i| (1..=n).map(|j| self.sigma(i, j)).collect()).collect(),
            rowpre: (1..=n).map(|h| (1..=n).map(|k| self.rowpre(h, k)).collect()).collect(),
            rowsuf: (1..=n).map(|h| (1..=n).map(|k| self.rowsuf(h, k)).collect()).collect(),
        }
    }
}

impl fmt::Debug for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl Serialize for NatMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for NatMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<usize>> = Vec::deserialize(d)?;
        NatMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Row/column data of a matrix; index conventions: `atilde[i][j-1]`,
/// `sigma[i][j-1]`, `rowpre[h-1][k-1]`, `rowsuf[h-1][k-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixStats {
    pub ro: Composition,
    pub co: Composition,
    pub nu: Composition,
    pub atilde: Vec<Vec<usize>>,
    pub sigma: Vec<Vec<usize>>,
    pub rowpre: Vec<Vec<usize>>,
    pub rowsuf: Vec<Vec<usize>>,
}

/// `(A⁰ | A¹)` with `A¹` a 0/1 matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SuperMatrix {
    pub even: NatMatrix,
    pub odd: NatMatrix,
}

impl SuperMatrix {
    pub fn new(even: NatMatrix, odd: NatMatrix) -> Result<Self> {
        if even.n() != odd.n() {
            return Err(Error::Malformed("even and odd parts differ in size".into()));
        }
        if odd.entries().iter().any(|&x| x > 1) {
            return Err(Error::Malformed("odd part must be a 0/1 matrix".into()));
        }
        Ok(Self { even, odd })
    }

    pub fn from_rows(even: &[Vec<usize>], odd: &[Vec<usize>]) -> Result<Self> {
        Self::new(NatMatrix::from_rows(even)?, NatMatrix::from_rows(odd)?)
    }

    pub fn zero(n: usize) -> Self {
        Self { even: NatMatrix::zero(n), odd: NatMatrix::zero(n) }
    }

    pub fn even_only(even: NatMatrix) -> Self {
        let n = even.n();
        Self { even, odd: NatMatrix::zero(n) }
    }

    pub fn diag(parts: &[usize]) -> Self {
        Self::even_only(NatMatrix::diag(parts))
    }

    pub fn n(&self) -> usize {
        self.even.n()
    }

    pub fn hat(&self) -> NatMatrix {
        self.even.plus(&self.odd)
    }

    pub fn size(&self) -> usize {
        self.even.size() + self.odd.size()
    }

    pub fn parity(&self) -> usize {
        self.odd.size() % 2
    }

    pub fn ro(&self) -> Composition {
        self.hat().ro()
    }

    pub fn co(&self) -> Composition {
        self.hat().co()
    }

    /// `a_{i,j} = a⁰_{i,j} + a¹_{i,j}`.
    pub fn a(&self, i: usize, j: usize) -> usize {
        self.even.get(i, j) + self.odd.get(i, j)
    }

    pub fn e(&self, i: usize, j: usize) -> usize {
        self.even.get(i, j)
    }

    pub fn o(&self, i: usize, j: usize) -> usize {
        self.odd.get(i, j)
    }

    /// Whether the even diagonal vanishes (membership in `M*(n|ℤ₂)`).
    pub fn is_star(&self) -> bool {
        (1..=self.n()).all(|i| self.even.get(i, i) == 0)
    }

    /// `(A⁰ + diag(λ) | A¹)`.
    pub fn add_diag(&self, lambda: &[usize]) -> SuperMatrix {
        Self { even: self.even.plus(&NatMatrix::diag(lambda)), odd: self.odd.clone() }
    }

    /// Split into the `M*` part and the even diagonal.
    pub fn strip_diag(&self) -> (SuperMatrix, Vec<usize>) {
        let n = self.n();
        let mut even = self.even.clone();
        let lambda: Vec<usize> = (1..=n).map(|i| even.get(i, i)).collect();
        for i in 1..=n {
            even.set(i, i, 0);
        }
        (Self { even, odd: self.odd.clone() }, lambda)
    }

    /// Apply signed unit changes to the even and odd parts. Returns `None`
    /// for illegal results (negative entry or odd entry above 1), which is
    /// how vanishing terms of the closed formulas are dropped.
    pub fn adjust(&self, even: &[(usize, usize, i64)], odd: &[(usize, usize, i64)]) -> Option<SuperMatrix> {
        let e = self.even.add_signed(even)?;
        let o = self.odd.add_signed(odd)?;
        if o.entries().iter().any(|&x| x > 1) {
            return None;
        }
        Some(SuperMatrix { even: e, odd: o })
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}|{:?})", self.even, self.odd)
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Deserialize)]
struct SuperMatrixRepr {
    even: NatMatrix,
    odd: NatMatrix,
}

impl<'de> Deserialize<'de> for SuperMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SuperMatrixRepr::deserialize(d)?;
        SuperMatrix::new(r.even, r.odd).map_err(serde::de::Error::custom)
    }
}

/// All of `M(n,r)`, row-major with larger entries first.
pub fn enumerate_nat(n: usize, r: usize) -> Vec<NatMatrix> {
    compositions(n * n, r)
        .into_iter()
        .map(|c| NatMatrix { n, entries: c.parts })
        .collect()
}

/// All of `M(n,r|ℤ₂)`, ordered by the odd part (as a bit pattern in
/// row-major order, ascending) and then by the even part as in
/// [`enumerate_nat`].
pub fn enumerate_super(n: usize, r: usize) -> Vec<SuperMatrix> {
    let cells = n * n;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << cells) {
        let k = mask.count_ones() as usize;
        if k > r {
            continue;
        }
        let odd = NatMatrix {
            n,
            entries: (0..cells).map(|c| ((mask >> c) & 1) as usize).collect(),
        };
        for even in enumerate_nat(n, r - k) {
            out.push(SuperMatrix { even, odd: odd.clone() });
        }
    }
    out
}

/// All of `M*(n|ℤ₂)` with `|A| = s` (zero even diagonal).
pub fn enumerate_star(n: usize, s: usize) -> Vec<SuperMatrix> {
    enumerate_super(n, s).into_iter().filter(|a| a.is_star()).collect()
}

/// Permutation of `{1..r}` in one-line notation `[w(1), ..., w(r)]`.
/// Products compose as functions: `(uw)(i) = u(w(i))`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    img: Vec<usize>,
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    /// By length, then one-line notation.
    fn cmp(&self, other: &Self) -> Ordering {
        self.length().cmp(&other.length()).then_with(|| self.img.cmp(&other.img))
    }
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Self { img: (1..=r).collect() }
    }

    pub fn from_one_line(img: Vec<usize>) -> Result<Self> {
        let r = img.len();
        let mut seen = vec![false; r + 1];
        for &x in &img {
            if x == 0 || x > r || seen[x] {
                return Err(Error::Malformed(format!("{img:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Self { img })
    }

    /// Product `s_{i_1} s_{i_2} ⋯ s_{i_k}` on `r` letters.
    pub fn from_word(r: usize, word: &[usize]) -> Self {
        let mut w = Self::identity(r);
        for &i in word {
            w = w.mul_simple(i);
        }
        w
    }

    pub fn r(&self) -> usize {
        self.img.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.img
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// `w s_i`: swaps positions `i`, `i+1` of the one-line notation.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut img = self.img.clone();
        img.swap(i - 1, i);
        Self { img }
    }

    /// `s_i w`: swaps the values `i`, `i+1`.
    pub fn simple_mul(&self, i: usize) -> Self {
        Self {
            img: self
                .img
                .iter()
                .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
                .collect(),
        }
    }

    /// Whether `ℓ(w s_i) > ℓ(w)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.img[i - 1] < self.img[i]
    }

    /// Whether `ℓ(s_i w) > ℓ(w)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        self.inverse().right_ascent(i)
    }

    pub fn mul(&self, other: &Permutation) -> Permutation {
        Self { img: other.img.iter().map(|&x| self.img[x - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0; self.r()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x - 1] = i + 1;
        }
        Self { img }
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.img.len() {
            for j in i + 1..self.img.len() {
                if self.img[i] > self.img[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Reduced word, found by repeatedly stripping the smallest right
    /// descent: `w = (w s_i) s_i`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.r()).find(|&i| !w.right_ascent(i)) {
            rev.push(i);
            w = w.mul_simple(i);
        }
        rev.reverse();
        rev
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.img)
    }
}

/// All of `S_r`, sorted by length then one-line notation.
pub fn all_permutations(r: usize) -> Vec<Permutation> {
    fn rec(r: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == r {
            out.push(Permutation { img: cur.clone() });
            return;
        }
        for x in 1..=r {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(r, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(r, &mut Vec::new(), &mut vec![false; r + 1], &mut out);
    out.sort();
    out
}

/// Elements of the Young subgroup `S_λ`, sorted.
pub fn young_subgroup(lambda: &Composition) -> Vec<Permutation> {
    let r = lambda.r();
    let ps = lambda.partial_sums();
    let mut out: Vec<Permutation> = vec![Permutation::identity(r)];
    for b in 0..lambda.n() {
        let (lo, len) = (ps[b], lambda.parts[b]);
        if len < 2 {
            continue;
        }
        let local = all_permutations(len);
        let mut next = Vec::with_capacity(out.len() * local.len());
        for w in &out {
            for u in &local {
                let mut img = w.img.clone();
                for t in 0..len {
                    img[lo + t] = lo + u.img[t];
                }
                next.push(Permutation { img });
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Minimal-length right coset representatives of `S_ν` in `S_r` that lie in
/// `S_μ`, i.e. `𝒟_ν ∩ S_μ`, sorted by length then one-line notation.
pub fn coset_reps(nu: &Composition, mu: &Composition) -> Result<Vec<Permutation>> {
    if nu.r() != mu.r() {
        return Err(Error::SizeMismatch(format!("|{nu}| != |{mu}|")));
    }
    let r = nu.r();
    let simples: Vec<usize> = (1..r).filter(|&i| nu.contains_simple(i)).collect();
    Ok(young_subgroup(mu)
        .into_iter()
        .filter(|d| {
            let inv = d.inverse();
            simples.iter().all(|&i| inv.right_ascent(i))
        })
        .collect())
}

/// `d_A` from its defining map `d_A(ã_{h−1,k} + p) = λ̃_{h−1} + 𝐚(h,k) + p`.
pub fn d_a_perm(a: &NatMatrix) -> Permutation {
    let n = a.n();
    let r = a.size();
    let lam = a.ro().partial_sums();
    let mut img = vec![0; r];
    for h in 1..=n {
        for k in 1..=n {
            let base = a.atilde(h - 1, k);
            for p in 1..=a.get(h, k) {
                img[base + p - 1] = lam[h - 1] + a.rowpre(h, k) + p;
            }
        }
    }
    Permutation { img }
}

/// The word of `w_{i,j}`: for `p = 1..a_{ij}` the descending run
/// `s_{σ_{i−1,j}+p−1} ⋯ s_{ã_{i−1,j}+p}`.
pub fn w_ij_word(a: &NatMatrix, i: usize, j: usize) -> Vec<usize> {
    let mut word = Vec::new();
    let (sig, at) = (a.sigma(i - 1, j), a.atilde(i - 1, j));
    if sig == at {
        return word;
    }
    for p in 1..=a.get(i, j) {
        let mut t = sig + p - 1;
        while t >= at + p {
            word.push(t);
            t -= 1;
        }
    }
    word
}

/// `d_A` as the concatenation of `w_{i,j}` over `j = 1..n−1`, `i = 2..n`.
pub fn d_a_word(a: &NatMatrix) -> Vec<usize> {
    let n = a.n();
    let mut word = Vec::new();
    for j in 1..n {
        for i in 2..=n {
            word.extend(w_ij_word(a, i, j));
        }
    }
    word
}

/// `d_A` with its reduced word.
pub fn d_a(a: &NatMatrix) -> (Permutation, Vec<usize>) {
    let word = d_a_word(a);
    (Permutation::from_word(a.size(), &word), word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[usize]]) -> NatMatrix {
        NatMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn composition_order() {
        let c: Vec<Vec<usize>> = compositions(2, 2).into_iter().map(|c| c.parts).collect();
        assert_eq!(c, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let c: Vec<Vec<usize>> = compositions(2, 1).into_iter().map(|c| c.parts).collect();
        assert_eq!(c, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(compositions(3, 3).len(), 10);
    }

    #[test]
    fn stats_antidiagonal() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.ro().parts, vec![1, 1]);
        assert_eq!(a.co().parts, vec![1, 1]);
        assert_eq!(a.nu().parts, vec![0, 1, 1, 0]);
        assert_eq!(a.atilde(0, 1), 0);
        assert_eq!(a.atilde(0, 2), a.atilde(2, 1));
    }

    #[test]
    fn d_a_examples() {
        let a = m(&[&[0, 1], &[1, 0]]);
        let (p, w) = d_a(&a);
        assert_eq!(w, vec![1]);
        assert_eq!(p, d_a_perm(&a));
        assert!(d_a(&NatMatrix::diag(&[2, 1])).0.is_identity());
        assert!(d_a(&m(&[&[2, 3], &[0, 1]])).0.is_identity());
    }

    #[test]
    fn shifts() {
        let a = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.shift(1, 1, true).unwrap(), Some(m(&[&[1, 0], &[0, 0]])));
        assert_eq!(NatMatrix::zero(2).shift(1, 1, true).unwrap(), None);
        assert_eq!(m(&[&[1, 0], &[0, 0]]).shift(1, 1, false).unwrap(), Some(a));
        assert!(NatMatrix::zero(2).shift(2, 1, true).is_err());
    }

    #[test]
    fn coset_examples() {
        let c = |p: &[usize]| Composition::new(p.to_vec());
        let reps = coset_reps(&c(&[1, 1]), &c(&[2])).unwrap();
        assert_eq!(reps, vec![Permutation::identity(2), Permutation::from_word(2, &[1])]);
        assert_eq!(coset_reps(&c(&[2, 1]), &c(&[2, 1])).unwrap(), vec![Permutation::identity(3)]);
        let reps = coset_reps(&c(&[1, 1, 1]), &c(&[2, 1])).unwrap();
        assert_eq!(reps, vec![Permutation::identity(3), Permutation::from_word(3, &[1])]);
        assert!(coset_reps(&c(&[1]), &c(&[2])).is_err());
    }

    #[test]
    fn super_counts() {
        assert_eq!(enumerate_super(2, 1).len(), 8);
        assert_eq!(enumerate_super(1, 1).len(), 2);
        assert_eq!(enumerate_super(3, 0).len(), 1);
        assert_eq!(enumerate_super(3, 3).len(), 978);
    }

    #[test]
    fn reduced_words() {
        for w in all_permutations(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(4, &word), w);
        }
    }
}
