//! The partial order `≺` on `M*(n|ℤ₂)`, the monomials `𝔪^A` and the
//! triangularity check `𝔪^A = g_A A(A,𝐣_A) + Σ_{B≺A} g_{B,𝐣} A(B,𝐣)`.

use std::cmp::Ordering;

use serde_json::json;

use super::closed::word_expansion_closed;
use super::words::{word_apply, Symbol, Word};
use super::LongElement;
use crate::combin::SuperMatrix;
use crate::error::{Error, Result};
use crate::report::Report;

/// `co⁻(A)_min`: the first column with a nonzero entry strictly below the
/// diagonal, or `n` if there is none.
pub fn co_minus_min(a: &SuperMatrix) -> usize {
    let n = a.n();
    (1..n).find(|&j| (j + 1..=n).any(|i| a.a(i, j) > 0)).unwrap_or(n)
}

/// `A =⁺ B`: equal strictly upper triangular parts of `hat`.
fn eq_plus(a: &SuperMatrix, b: &SuperMatrix) -> bool {
    let n = a.n();
    (1..=n).all(|i| (i + 1..=n).all(|j| a.a(i, j) == b.a(i, j)))
}

/// `A =_k B`: column `k` agrees (even and odd) on rows `k..n`.
fn eq_col(a: &SuperMatrix, b: &SuperMatrix, k: usize) -> bool {
    (k..=a.n()).all(|i| a.e(i, k) == b.e(i, k) && a.o(i, k) == b.o(i, k))
}

/// `B <_k A`.
fn less_col(b: &SuperMatrix, a: &SuperMatrix, k: usize) -> bool {
    let n = a.n();
    let below = |m: &SuperMatrix| (k + 1..=n).map(|i| m.a(i, k)).sum::<usize>();
    let odd = |m: &SuperMatrix| (k..=n).map(|i| m.o(i, k)).collect::<Vec<_>>();
    let hat = |m: &SuperMatrix| (k..=n).map(|i| m.a(i, k)).collect::<Vec<_>>();
    match below(a).cmp(&below(b)) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => match odd(a).cmp(&odd(b)) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => hat(a) < hat(b),
        },
    }
}

/// `B ≺ A`.
pub fn prec(b: &SuperMatrix, a: &SuperMatrix) -> bool {
    let n = a.n();
    if b.n() != n {
        return false;
    }
    let block = |m: &SuperMatrix, s: usize, t: usize| -> usize { (1..=s).map(|i| (t..=n).map(|j| m.a(i, j)).sum::<usize>()).sum() };
    let dominated = (1..=n).all(|s| (s + 1..=n).all(|t| block(b, s, t) <= block(a, s, t)));
    if !eq_plus(a, b) {
        return dominated;
    }
    let (ka, kb) = (co_minus_min(a), co_minus_min(b));
    if ka < kb {
        return true;
    }
    if ka != kb || ka == n {
        return false;
    }
    let k = ka;
    if less_col(b, a, k) {
        return true;
    }
    (k + 1..n).any(|t| less_col(b, a, t) && (1..t).all(|j| eq_col(a, b, j)))
}

fn pow(w: &mut Word, syms: &[Symbol], times: usize) {
    for _ in 0..times {
        w.extend_from_slice(syms);
    }
}

/// `U^A_{i,j}`, `i < j`.
fn u_factor(a: &SuperMatrix, i: usize, j: usize) -> Word {
    let mut w = Word::new();
    let mut odd: Word = (i..=j.saturating_sub(2)).map(Symbol::X).collect();
    odd.push(Symbol::XBar(j - 1));
    pow(&mut w, &odd, a.o(i, j));
    for m in i..j {
        pow(&mut w, &[Symbol::X(m)], a.e(i, j));
    }
    w
}

/// `L^A_{i,j}`, `j < i`.
fn l_factor(a: &SuperMatrix, i: usize, j: usize) -> Word {
    let n = a.n();
    let mut w = Word::new();
    let mut odd: Word = (i..n).map(Symbol::X).collect();
    odd.push(Symbol::GBar(n));
    odd.extend((i..n).rev().map(Symbol::Y));
    pow(&mut w, &odd, a.o(i, j));
    let col: usize = (i..=n).map(|k| a.a(k, j)).sum();
    pow(&mut w, &[Symbol::Y(i - 1)], col);
    w
}

/// The word `𝔪^A = Π_{j=1}^{n−1}(Π_{i=n}^{j+1} L^A_{i,j}) · Π_{j=n}^{1}[D^A_{j,j} Π_{i=j−1}^{1} U^A_{i,j}]`.
pub fn monomial_word(a: &SuperMatrix) -> Result<Word> {
    if !a.is_star() {
        return Err(Error::Malformed(format!("{a} has a nonzero even diagonal")));
    }
    let n = a.n();
    let mut w = Word::new();
    for j in 1..n {
        for i in (j + 1..=n).rev() {
            w.extend(l_factor(a, i, j));
        }
    }
    for j in (1..=n).rev() {
        pow(&mut w, &[Symbol::GBar(j)], a.o(j, j));
        for i in (1..j).rev() {
            w.extend(u_factor(a, i, j));
        }
    }
    Ok(w)
}

/// Expansion of `𝔪^A` as a long element, built with the closed formulas
/// and checked against direct evaluation of the word at `r` and `r + 1`.
pub fn monomial_expansion(a: &SuperMatrix, r: usize) -> Result<LongElement> {
    let w = monomial_word(a)?;
    let x = word_expansion_closed(&w, a.n())?;
    for level in [r, r + 1] {
        if x.eval(level) != word_apply(&w, a.n(), level)? {
            return Err(Error::Stabilization(format!("expansion of m^{a} disagrees with the word at r = {level}")));
        }
    }
    Ok(x)
}

/// Leading term at `A` with nonzero coefficient, all other terms `≺ A`.
pub fn triangularity_check(a: &SuperMatrix, r: usize) -> Report {
    let mut rep = Report::new(format!("triangular {a}"));
    if r < a.size() + 2 {
        rep.record(Some(json!({"matrix": a, "error": format!("r = {r} < |A| + 2")})));
        return rep;
    }
    let x = match monomial_expansion(a, r) {
        Ok(x) => x,
        Err(e) => {
            rep.record(Some(json!({"matrix": a, "error": e.to_string()})));
            return rep;
        }
    };
    let leading: Vec<_> = x.terms().iter().filter(|((b, _), _)| b == a).collect();
    if leading.is_empty() {
        rep.record(Some(json!({"matrix": a, "error": "leading coefficient is zero"})));
        return rep;
    }
    let bad: Vec<_> = x.terms().keys().filter(|(b, _)| b != a && !prec(b, a)).map(|(b, j)| json!({"matrix": b, "j": j})).collect();
    if !bad.is_empty() {
        rep.record(Some(json!({"matrix": a, "error": "terms not below A", "terms": bad})));
        return rep;
    }
    rep.record(None);
    rep.info = Some(json!({
        "word": monomial_word(a).unwrap_or_default(),
        "leading": leading.iter().map(|((_, j), c)| json!({"j": j, "coeff": c})).collect::<Vec<_>>(),
        "terms": x.len(),
    }));
    rep
}
