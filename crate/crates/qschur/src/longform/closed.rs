//! Closed multiplication formulas `Z · A(A,𝐣)` for the raw left factors
//! `A(E_{h,h+1},O,0)`, `A(E_{h+1,h},O,0)`, `A(O,E_{h,h},0)`,
//! `A(O,E_{h,h+1},0)`, `A(O,E_{h+1,h},0)` and the diagonal factors
//! `A(O,𝐤)`. Terms whose matrix is illegal are dropped.

use serde::{Deserialize, Serialize};

use super::words::canonical_symbol;
use super::{add_vec, unit, LongElement, Symbol};
use crate::combin::SuperMatrix;
use crate::error::{Error, Result};
use crate::ring::RatFunc;
use crate::schur::closed::{sign, step_pd, step_pdr, step_q, step_qq};
use crate::sdp::{sdp_family, Family};

/// Raw left factors `A(M, 0)` with a single off-diagonal or odd entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "h")]
pub enum RawLeft {
    /// `A(E_{h,h+1}, O, 0)`
    UpperEven(usize),
    /// `A(E_{h+1,h}, O, 0)`
    LowerEven(usize),
    /// `A(O, E_{h,h}, 0)`
    DiagOdd(usize),
    /// `A(O, E_{h,h+1}, 0)`
    UpperOdd(usize),
    /// `A(O, E_{h+1,h}, 0)`
    LowerOdd(usize),
}

impl RawLeft {
    pub fn h(self) -> usize {
        match self {
            RawLeft::UpperEven(h) | RawLeft::LowerEven(h) | RawLeft::DiagOdd(h) | RawLeft::UpperOdd(h) | RawLeft::LowerOdd(h) => h,
        }
    }

    pub fn validate(self, n: usize) -> Result<()> {
        let h = self.h();
        let max = if matches!(self, RawLeft::DiagOdd(_)) { n } else { n.saturating_sub(1) };
        if h == 0 || h > max {
            return Err(Error::IndexOutOfRange(format!("h = {h} for {self:?} with n = {n}")));
        }
        Ok(())
    }

    pub fn matrix(self, n: usize) -> Result<SuperMatrix> {
        self.validate(n)?;
        let h = self.h();
        Ok(match self {
            RawLeft::UpperEven(_) => super::even_unit(n, h, h + 1),
            RawLeft::LowerEven(_) => super::even_unit(n, h + 1, h),
            RawLeft::DiagOdd(_) => super::odd_unit(n, h, h),
            RawLeft::UpperOdd(_) => super::odd_unit(n, h, h + 1),
            RawLeft::LowerOdd(_) => super::odd_unit(n, h + 1, h),
        })
    }

    /// The SDP hypothesis the closed formula needs on the right factor.
    pub fn hypothesis(self, n: usize) -> Option<Family> {
        match self {
            RawLeft::UpperEven(_) | RawLeft::LowerEven(_) => None,
            RawLeft::DiagOdd(h) if h == n => None,
            RawLeft::DiagOdd(_) | RawLeft::LowerOdd(_) => Some(Family::Diag),
            RawLeft::UpperOdd(_) => Some(Family::Plus),
        }
    }
}

/// Levels at which the long-level hypothesis is checked: `|A|` up to
/// `|A| + 4`, which covers every level used by evaluation mode.
pub const HYPOTHESIS_DEPTH: usize = 4;

pub fn long_hypothesis(a: &SuperMatrix, h: usize, family: Family) -> Result<bool> {
    let s = a.size();
    for r in s..=s + HYPOTHESIS_DEPTH {
        if !sdp_family(a, h, r, family)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn v(e: i64) -> RatFunc {
    RatFunc::v_pow(e)
}

type Adj = [(usize, usize, i64)];

/// Collects the terms of one formula applied to `A(A,𝐣)`.
struct Acc<'a> {
    a: &'a SuperMatrix,
    j: &'a [i64],
    out: LongElement,
}

impl<'a> Acc<'a> {
    fn new(a: &'a SuperMatrix, j: &'a [i64]) -> Self {
        Self { a, j, out: LongElement::zero(a.n()) }
    }

    fn shifted(&self, h: usize, k: i64) -> Vec<i64> {
        let mut j = self.j.to_vec();
        if k != 0 {
            j[h - 1] += k;
        }
        j
    }

    /// `c · A(A⁰ + even, A¹ + odd, 𝐣 + t ε_h)`.
    fn term(&mut self, c: RatFunc, even: &Adj, odd: &Adj, h: usize, t: i64) {
        let Some(b) = self.a.adjust(even, odd) else { return };
        if !b.is_star() {
            return;
        }
        let j = self.shifted(h, t);
        self.out.add_unchecked(b, j, c);
    }

    /// `c/(v²−1) · {A(𝐣+2ε_h) − A(𝐣)}`
    fn group2(&mut self, c: RatFunc, even: &Adj, odd: &Adj, h: usize) {
        let c = &c / &(&v(2) - &RatFunc::one());
        self.term(c.clone(), even, odd, h, 2);
        self.term(-c, even, odd, h, 0);
    }

    /// `c/(v⁴−1) · {A(𝐣+4ε_h) − (v²+1)A(𝐣+2ε_h) + v²A(𝐣)}`
    fn group4(&mut self, c: RatFunc, even: &Adj, odd: &Adj, h: usize) {
        let c = &c / &(&v(4) - &RatFunc::one());
        self.term(c.clone(), even, odd, h, 4);
        self.term(-(&c * &(&v(2) + &RatFunc::one())), even, odd, h, 2);
        self.term(&c * &v(2), even, odd, h, 0);
    }

    /// `c/(v⁴−1) · {A(𝐣+4ε_h) − A(𝐣)}`
    fn group4_diag(&mut self, c: RatFunc, even: &Adj, odd: &Adj, h: usize) {
        let c = &c / &(&v(4) - &RatFunc::one());
        self.term(c.clone(), even, odd, h, 4);
        self.term(-c, even, odd, h, 0);
    }
}

/// `A(O,𝐤) · A(A,𝐣) = v^{Σ_h Σ_u a_{h,u}k_h} A(A,𝐤+𝐣)`.
pub fn diag_left(k: &[i64], a: &SuperMatrix, j: &[i64]) -> LongElement {
    let hat = a.hat();
    let e: i64 = (1..=a.n()).map(|h| (1..=a.n()).map(|u| hat.get(h, u) as i64).sum::<i64>() * k[h - 1]).sum();
    let mut out = LongElement::zero(a.n());
    out.add_unchecked(a.clone(), add_vec(k, j), v(e));
    out
}

/// `A(A,𝐣) · A(O,𝐤) = v^{Σ_h Σ_u a_{u,h}k_h} A(A,𝐤+𝐣)`.
pub fn diag_right(a: &SuperMatrix, j: &[i64], k: &[i64]) -> LongElement {
    let hat = a.hat();
    let e: i64 = (1..=a.n()).map(|h| (1..=a.n()).map(|u| hat.get(u, h) as i64).sum::<i64>() * k[h - 1]).sum();
    let mut out = LongElement::zero(a.n());
    out.add_unchecked(a.clone(), add_vec(k, j), v(e));
    out
}

/// `Z · A(A,𝐣)` for a raw left factor `Z`, by the closed formula. Errors
/// if `A ∉ M*` or the SDP hypothesis fails.
pub fn raw_mul_key(left: RawLeft, a: &SuperMatrix, j: &[i64]) -> Result<LongElement> {
    let n = a.n();
    left.validate(n)?;
    if j.len() != n || !a.is_star() {
        return Err(Error::Malformed(format!("key ({a}, {j:?}) is not in M*(n|Z2) x Z^n")));
    }
    if let Some(fam) = left.hypothesis(n) {
        if !long_hypothesis(a, left.h(), fam)? {
            return Err(Error::Hypothesis(format!("{a} fails the {fam:?} SDP hypothesis on row {} required by {left:?}", left.h())));
        }
    }
    let mut acc = Acc::new(a, j);
    match left {
        RawLeft::UpperEven(h) => upper_even(&mut acc, h),
        RawLeft::LowerEven(h) => lower_even(&mut acc, h),
        RawLeft::DiagOdd(h) => diag_odd(&mut acc, h),
        RawLeft::UpperOdd(h) => upper_odd(&mut acc, h),
        RawLeft::LowerOdd(h) => lower_odd(&mut acc, h),
    }
    Ok(acc.out)
}

pub fn raw_mul(left: RawLeft, x: &LongElement) -> Result<LongElement> {
    let mut out = LongElement::zero(x.n());
    for ((a, j), c) in x.terms() {
        out.add_scaled(&raw_mul_key(left, a, j)?, c);
    }
    Ok(out)
}

/// The raw factor and `i` with `Z = v·G_i^{-1}·raw` for non-diagonal
/// generators.
pub fn raw_factor(s: Symbol) -> Option<(RawLeft, usize)> {
    match s {
        Symbol::G(_) | Symbol::GInv(_) => None,
        Symbol::GBar(i) => Some((RawLeft::DiagOdd(i), i)),
        Symbol::X(j) => Some((RawLeft::UpperEven(j), j)),
        Symbol::XBar(j) => Some((RawLeft::UpperOdd(j), j)),
        Symbol::Y(j) => Some((RawLeft::LowerEven(j), j + 1)),
        Symbol::YBar(j) => Some((RawLeft::LowerOdd(j), j + 1)),
    }
}

/// `Z · X` by the closed formulas: `G_i^{±1}` directly, every other
/// generator as `v·G_i^{-1}·A(M,O,0)` (or `A(O,M,0)`).
pub fn gen_mul_closed(s: Symbol, x: &LongElement) -> Result<LongElement> {
    let n = x.n();
    s.validate(n)?;
    let mut out = LongElement::zero(n);
    let g = |i: usize, sgn: i64| unit(n, i).into_iter().map(|e| e * sgn).collect::<Vec<_>>();
    match raw_factor(s) {
        None => {
            let k = match s {
                Symbol::G(i) => g(i, 1),
                Symbol::GInv(i) => g(i, -1),
                _ => unreachable!(),
            };
            for ((a, j), c) in x.terms() {
                out.add_scaled(&diag_left(&k, a, j), c);
            }
        }
        Some((raw, i)) => {
            let k = g(i, -1);
            let y = raw_mul(raw, x)?;
            for ((a, j), c) in y.terms() {
                out.add_scaled(&diag_left(&k, a, j), &(c * &v(1)));
            }
        }
    }
    Ok(out)
}

fn upper_even(acc: &mut Acc, h: usize) {
    let a = acc.a;
    let n = a.n();
    let hat = a.hat();
    let bk = |k| hat.rowsuf(h, k) as i64;
    let (jh, jh1) = (acc.j[h - 1], acc.j[h]);
    for k in 1..=n {
        let ex = 2 * bk(k) + 2 * a.o(h + 1, k) as i64;
        if k < h {
            acc.term(&v(ex) * &step_q(a.e(h, k) + 1), &[(h + 1, k, -1), (h, k, 1)], &[], h, 2);
        } else if k == h {
            acc.group2(v(ex - jh), &[(h + 1, h, -1)], &[], h);
        } else if k == h + 1 {
            acc.term(&v(ex + jh1) * &step_q(a.e(h, h + 1) + 1), &[(h, h + 1, 1)], &[], h, 0);
        } else {
            acc.term(&v(ex) * &step_q(a.e(h, k) + 1), &[(h + 1, k, -1), (h, k, 1)], &[], h, 0);
        }
    }
    for k in 1..=n {
        let t = if k < h { 2 } else { 0 };
        acc.term(v(2 * bk(k)), &[], &[(h + 1, k, -1), (h, k, 1)], h, t);
    }
    for k in 1..=n {
        let c = &v(2 * bk(k) - 2) * &step_pd(a.a(h, k) + 1);
        let odd = [(h, k, -1), (h + 1, k, -1)];
        if k < h {
            acc.term(c, &[(h, k, 2)], &odd, h, 2);
        } else if k == h {
            // printed with a plus sign; the grouped difference expands
            // `[[m]]_{q²} − [[m]]_q`, the negative of the other terms
            acc.group4(-v(2 * bk(h) - 2 * jh - 2), &[], &odd, h);
        } else {
            acc.term(c, &[(h, k, 2)], &odd, h, 0);
        }
    }
}

fn lower_even(acc: &mut Acc, h: usize) {
    let a = acc.a;
    let n = a.n();
    let hat = a.hat();
    let ak = |k| hat.rowpre(h + 1, k) as i64;
    let (jh, jh1) = (acc.j[h - 1], acc.j[h]);
    let g = h + 1;
    for k in 1..=n {
        let st = step_q(a.e(h + 1, k) + 1);
        let even = [(h, k, -1), (h + 1, k, 1)];
        if k < h {
            acc.term(&v(2 * ak(k)) * &st, &even, &[], h, 0);
        } else if k == h {
            acc.term(&v(2 * ak(h) + jh) * &st, &[(h + 1, h, 1)], &[], h, 0);
        } else if k == h + 1 {
            acc.group2(v(2 * ak(h + 1) - jh1), &[(h, h + 1, -1)], &[], g);
        } else {
            acc.term(&v(2 * ak(k)) * &st, &even, &[], g, 2);
        }
    }
    for k in 1..=n {
        let odd = [(h, k, -1), (h + 1, k, 1)];
        let ex = 2 * ak(k) + 2 * a.a(h, k) as i64 - 2;
        if k < h {
            acc.term(v(ex), &[], &odd, h, 0);
        } else if k == h {
            acc.term(v(2 * ak(h)), &[], &odd, h, 2);
        } else if k == h + 1 {
            acc.term(v(ex), &[], &odd, h, 0);
        } else {
            acc.term(v(ex), &[], &odd, g, 2);
        }
    }
    for k in 1..=n {
        let odd = [(h, k, -1), (h + 1, k, -1)];
        let even = [(h + 1, k, 2)];
        let st = step_pdr(a.a(h + 1, k) + 1);
        let ex = 2 * ak(k) + 2 * a.a(h, k) as i64 - 4;
        if k < h {
            acc.term(-(&v(ex) * &st), &even, &odd, h, 0);
        } else if k == h {
            acc.term(-(&v(2 * ak(h) - 2) * &st), &even, &odd, h, 2);
        } else if k == h + 1 {
            acc.group4(-v(2 * ak(h + 1) + 2 * a.a(h, h + 1) as i64 - 2 * jh1 - 4), &[], &odd, g);
        } else {
            acc.term(-(&v(ex) * &st), &even, &odd, g, 2);
        }
    }
}

/// `õ_{h−1,k}`: the column-major count of odd entries up to `(h−1, k)`.
fn ot(a: &SuperMatrix, h: usize, k: usize) -> usize {
    a.odd.atilde(h - 1, k)
}

fn diag_odd(acc: &mut Acc, h: usize) {
    let a = acc.a;
    let n = a.n();
    let hat = a.hat();
    let bk = |k| hat.rowsuf(h, k) as i64;
    let jh = acc.j[h - 1];
    let p = a.parity();
    for k in 1..=n {
        let s = sign(ot(a, h, k) + p);
        if k < h {
            acc.term(&s * &v(2 * bk(k)), &[(h, k, -1)], &[(h, k, 1)], h, 2);
        } else if k == h {
            acc.term(&s * &v(2 * bk(h) + jh), &[], &[(h, h, 1)], h, 0);
        } else {
            acc.term(&s * &v(2 * bk(k)), &[(h, k, -1)], &[(h, k, 1)], h, 0);
        }
    }
    for k in 1..=n {
        let s = sign(ot(a, h, k) + p + 1);
        if k < h {
            acc.term(&(&s * &v(2 * bk(k))) * &step_qq(a.a(h, k)), &[(h, k, 1)], &[(h, k, -1)], h, 2);
        } else if k == h {
            acc.group4_diag(&s * &v(2 * bk(h) - jh), &[], &[(h, h, -1)], h);
        } else {
            acc.term(&(&s * &v(2 * bk(k))) * &step_qq(a.a(h, k)), &[(h, k, 1)], &[(h, k, -1)], h, 0);
        }
    }
}

fn upper_odd(acc: &mut Acc, h: usize) {
    let a = acc.a;
    let n = a.n();
    let hat = a.hat();
    let bk = |k| hat.rowsuf(h, k) as i64;
    let (jh, jh1) = (acc.j[h - 1], acc.j[h]);
    let p = a.parity();
    for k in 1..=n {
        let s = sign(ot(a, h, k) + p);
        let ex = 2 * bk(k) + 2 * a.o(h + 1, k) as i64;
        if k < h {
            acc.term(&s * &v(ex), &[(h + 1, k, -1)], &[(h, k, 1)], h, 2);
        } else if k == h {
            acc.term(&s * &v(ex), &[(h + 1, h, -1)], &[(h, h, 1)], h, 0);
        } else if k == h + 1 {
            acc.term(&s * &v(ex + jh1), &[], &[(h, h + 1, 1)], h, 0);
        } else {
            acc.term(&s * &v(ex), &[(h + 1, k, -1)], &[(h, k, 1)], h, 0);
        }
    }
    for k in 1..=n {
        let s = sign(ot(a, h, k) + p + 1 + a.o(h, k));
        let c = &(&s * &v(2 * bk(k))) * &step_q(a.e(h, k) + 1);
        if k < h {
            acc.term(c, &[(h, k, 1)], &[(h + 1, k, -1)], h, 2);
        } else if k == h {
            acc.group2(&s * &v(2 * bk(h) - jh), &[], &[(h + 1, h, -1)], h);
        } else {
            acc.term(c, &[(h, k, 1)], &[(h + 1, k, -1)], h, 0);
        }
    }
    for k in 1..=n {
        let s = sign(ot(a, h, k) + p);
        let ex = 2 * bk(k) + 2 * a.o(h + 1, k) as i64 - 2;
        let c = &(&s * &v(ex)) * &step_pdr(a.a(h, k) + 1);
        let even = [(h + 1, k, -1), (h, k, 2)];
        if k < h {
            acc.term(c, &even, &[(h, k, -1)], h, 2);
        } else if k == h {
            acc.group4(&s * &v(ex - 2 * jh), &[(h + 1, h, -1)], &[(h, h, -1)], h);
        } else if k == h + 1 {
            let c = &(&s * &v(ex + jh1)) * &step_pdr(a.a(h, k) + 1);
            acc.term(c, &[(h, k, 2)], &[(h, k, -1)], h, 0);
        } else {
            acc.term(c, &even, &[(h, k, -1)], h, 0);
        }
    }
}

fn lower_odd(acc: &mut Acc, h: usize) {
    let a = acc.a;
    let n = a.n();
    let hat = a.hat();
    let ak = |k| hat.rowpre(h + 1, k) as i64;
    let (jh, jh1) = (acc.j[h - 1], acc.j[h]);
    let g = h + 1;
    let p = a.parity();
    for k in 1..=n {
        let s = sign(ot(a, h, k) + a.o(h, k) + p);
        if k < h {
            acc.term(&s * &v(2 * ak(k)), &[(h, k, -1)], &[(h + 1, k, 1)], h, 0);
        } else if k == h {
            acc.term(&s * &v(2 * ak(h) + jh), &[], &[(h + 1, h, 1)], h, 0);
        } else if k == h + 1 {
            acc.term(&s * &v(2 * ak(k)), &[(h, k, -1)], &[(h + 1, k, 1)], h, 0);
        } else {
            acc.term(&s * &v(2 * ak(k)), &[(h, k, -1)], &[(h + 1, k, 1)], g, 2);
        }
    }
    for k in 1..=n {
        let s = sign(ot(a, h, k) + a.o(h, k) + p + 1);
        let st = step_pdr(a.a(h + 1, k) + 1);
        let even = [(h, k, -1), (h + 1, k, 2)];
        let odd = [(h + 1, k, -1)];
        if k < h {
            acc.term(&(&s * &v(2 * ak(k) - 2)) * &st, &even, &odd, h, 0);
        } else if k == h {
            acc.term(&(&s * &v(2 * ak(h) + jh - 2)) * &st, &[(h + 1, h, 2)], &odd, h, 0);
        } else if k == h + 1 {
            acc.group4(&s * &v(2 * ak(k) - 2 * jh1 - 2), &[(h, k, -1)], &odd, g);
        } else {
            acc.term(&(&s * &v(2 * ak(k) - 2)) * &st, &even, &odd, g, 2);
        }
    }
    for k in 1..=n {
        let s = sign(ot(a, h, k) + p + 1);
        let ex = 2 * ak(k) + 2 * a.a(h, k) as i64 - 2;
        let st = step_q(a.e(h + 1, k) + 1);
        let even = [(h + 1, k, 1)];
        let odd = [(h, k, -1)];
        if k < h {
            acc.term(&(&s * &v(ex)) * &st, &even, &odd, h, 0);
        } else if k == h {
            acc.term(&(&s * &v(2 * ak(h))) * &st, &even, &odd, h, 2);
        } else if k == h + 1 {
            acc.group2(&s * &v(ex - jh1), &[], &odd, g);
        } else {
            acc.term(&(&s * &v(ex)) * &st, &even, &odd, g, 2);
        }
    }
}

/// `Z · X` by the closed formulas, rewriting `Z` into canonical symbols for
/// the keys where its hypothesis fails.
pub fn gen_mul_closed_or_rewrite(s: Symbol, x: &LongElement) -> Result<LongElement> {
    let n = x.n();
    let mut out = LongElement::zero(n);
    for ((a, j), c) in x.terms() {
        let key = LongElement::single(a.clone(), j.clone(), RatFunc::one())?;
        let p = match gen_mul_closed(s, &key) {
            Err(Error::Hypothesis(_)) => {
                let mut acc = LongElement::zero(n);
                for (k, w) in &canonical_symbol(s, n)?.0 {
                    acc.add_scaled(&word_expansion_closed_from(w, key.clone())?, k);
                }
                acc
            }
            r => r?,
        };
        out.add_scaled(&p, c);
    }
    Ok(out)
}

fn word_expansion_closed_from(w: &[Symbol], mut x: LongElement) -> Result<LongElement> {
    for &s in w.iter().rev() {
        x = gen_mul_closed_or_rewrite(s, &x)?;
    }
    Ok(x)
}

/// Long-element expansion of a word by the closed formulas, right to left
/// from `A(O,0)`.
pub fn word_expansion_closed(w: &[Symbol], n: usize) -> Result<LongElement> {
    word_expansion_closed_from(w, LongElement::one(n))
}
