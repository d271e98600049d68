//! Quantum root vectors, the PBW elements `𝔟^{A,𝐣}` as combinations of
//! generator words, and rank evidence for their images.

use super::words::{wordsum_apply, Symbol, WordSum};
use crate::combin::SuperMatrix;
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseVec};
use crate::ring::RatFunc;

/// `E_{i,j}` (or `Ē_{i,j}` when `odd`) for `i ≠ j`, expanded with the given
/// intermediate index `k` at the top level and `k = i ± 1` below.
pub fn root_vector_via(i: usize, j: usize, odd: bool, k: usize, n: usize) -> Result<WordSum> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange(format!("root vector ({i},{j}) for n = {n}")));
    }
    if i.abs_diff(j) == 1 {
        let s = match (i < j, odd) {
            (true, false) => Symbol::X(i),
            (true, true) => Symbol::XBar(i),
            (false, false) => Symbol::Y(j),
            (false, true) => Symbol::YBar(j),
        };
        return Ok(WordSum::word(vec![s]));
    }
    if !(i.min(j) < k && k < i.max(j)) {
        return Err(Error::IndexOutOfRange(format!("k = {k} is not strictly between {i} and {j}")));
    }
    let left = root_vector(i, k, false, n)?;
    let right = root_vector(k, j, odd, n)?;
    let c = if i < j { RatFunc::v_pow(1) } else { RatFunc::v_pow(-1) };
    Ok(left.times(&right).plus(right.times(&left).scaled(&-c)))
}

/// Root vector with the canonical choice `k = i + 1` (`k = i − 1` when
/// `i > j`).
pub fn root_vector(i: usize, j: usize, odd: bool, n: usize) -> Result<WordSum> {
    let k = if i < j { i + 1 } else { i.saturating_sub(1) };
    root_vector_via(i, j, odd, k, n)
}

/// `𝔟^{A,𝐣} = K^𝐣 · Π_{j=1}^{n−1}Π_{i=n}^{j+1} E_{i,j}^{a⁰}Ē_{i,j}^{a¹} ·
/// Π_{j=n}^{1}[K̄_j^{a¹_{j,j}} Π_{i=j−1}^{1} E_{i,j}^{a⁰}Ē_{i,j}^{a¹}]`,
/// with `E ↦ X`, `F ↦ Y`, `K ↦ G`.
pub fn pbw_word(a: &SuperMatrix, j: &[i64]) -> Result<WordSum> {
    let n = a.n();
    if !a.is_star() || j.len() != n {
        return Err(Error::Malformed(format!("({a}, {j:?}) is not a PBW index")));
    }
    let mut factors = Vec::new();
    let mut k_word = Vec::new();
    for (h, &e) in j.iter().enumerate() {
        let s = if e >= 0 { Symbol::G(h + 1) } else { Symbol::GInv(h + 1) };
        k_word.extend(std::iter::repeat(s).take(e.unsigned_abs() as usize));
    }
    factors.push(WordSum::word(k_word));
    let entry = |r: usize, c: usize, factors: &mut Vec<WordSum>| -> Result<()> {
        for _ in 0..a.e(r, c) {
            factors.push(root_vector(r, c, false, n)?);
        }
        for _ in 0..a.o(r, c) {
            factors.push(root_vector(r, c, true, n)?);
        }
        Ok(())
    };
    for c in 1..n {
        for r in (c + 1..=n).rev() {
            entry(r, c, &mut factors)?;
        }
    }
    for c in (1..=n).rev() {
        if a.o(c, c) == 1 {
            factors.push(WordSum::word(vec![Symbol::GBar(c)]));
        }
        for r in (1..c).rev() {
            entry(r, c, &mut factors)?;
        }
    }
    Ok(WordSum::product(&factors))
}

/// Rank of the images of the given elements in `Q̃(n,r)` over the `Φ`-basis.
pub fn rank_check(elements: &[WordSum], n: usize, r: usize) -> Result<usize> {
    let mut vecs: Vec<SparseVec<SuperMatrix>> = Vec::new();
    for w in elements {
        vecs.push(wordsum_apply(w, n, r)?.terms().clone());
    }
    Ok(rank(vecs))
}
