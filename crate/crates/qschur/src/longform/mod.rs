//! Long elements `A(𝐣,r) = Σ_{λ∈Λ(n,r−|A|)} v^{λ·𝐣} Φ_{(A⁰+λ|A¹)}` and the
//! generators of `U_v(q_n)` realized through them.
//!
//! A [`LongElement`] is a finite combination of symbols `A(A,𝐣)` with
//! `A ∈ M*(n|ℤ₂)`; it can be evaluated at any level `r`. Products with
//! generators are computed either by the closed formulas ([`closed`]) or by
//! evaluating at several levels and solving for the coefficients
//! ([`eval`]).

pub mod closed;
pub mod eval;
pub mod order;
pub mod pbw;
pub mod relations;
pub mod words;

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Serialize};

use crate::combin::{compositions, NatMatrix, SuperMatrix};
use crate::error::{Error, Result};
use crate::ring::RatFunc;
use crate::schur::{Basis, SchurElement};

pub use words::{Symbol, Word, WordSum};

pub type LongKey = (SuperMatrix, Vec<i64>);

/// `ε_i` in `ℤⁿ` (1-based).
pub fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i - 1] = 1;
    e
}

pub(crate) fn add_vec(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Finite combination `Σ c · A(A,𝐣)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LongElement {
    n: usize,
    terms: BTreeMap<LongKey, RatFunc>,
}

impl LongElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    /// `c · A(A,𝐣)`.
    pub fn single(a: SuperMatrix, j: Vec<i64>, c: RatFunc) -> Result<Self> {
        let mut x = Self::zero(a.n());
        x.add_term(a, j, c)?;
        Ok(x)
    }

    /// `A(O,0)`, the identity.
    pub fn one(n: usize) -> Self {
        Self::single(SuperMatrix::zero(n), vec![0; n], RatFunc::one()).expect("valid key")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<LongKey, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, a: &SuperMatrix, j: &[i64]) -> RatFunc {
        self.terms.get(&(a.clone(), j.to_vec())).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|A|` among the keys.
    pub fn max_size(&self) -> usize {
        self.terms.keys().map(|(a, _)| a.size()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, a: SuperMatrix, j: Vec<i64>, c: RatFunc) -> Result<()> {
        if a.n() != self.n || j.len() != self.n {
            return Err(Error::SizeMismatch(format!("key of size {} in an element for n = {}", a.n(), self.n)));
        }
        if !a.is_star() {
            return Err(Error::Malformed(format!("{a} has a nonzero even diagonal")));
        }
        self.add_unchecked(a, j, c);
        Ok(())
    }

    fn add_unchecked(&mut self, a: SuperMatrix, j: Vec<i64>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let key = (a, j);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.n);
        for ((a, j), x) in &self.terms {
            out.add_unchecked(a.clone(), j.clone(), x * c);
        }
        out
    }

    pub fn add_scaled(&mut self, other: &LongElement, c: &RatFunc) {
        for ((a, j), x) in &other.terms {
            self.add_unchecked(a.clone(), j.clone(), x * c);
        }
    }

    /// Evaluation in `Q̃(n,r)`; keys with `|A| > r` vanish.
    pub fn eval(&self, r: usize) -> SchurElement {
        let mut out = SchurElement::zero(self.n, r, Basis::Twisted);
        for ((a, j), c) in &self.terms {
            out.add_scaled(&eval_long_star(a, j, r), c);
        }
        out
    }
}

impl std::ops::Add for &LongElement {
    type Output = LongElement;
    fn add(self, rhs: &LongElement) -> LongElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::one());
        out
    }
}

impl std::ops::Sub for &LongElement {
    type Output = LongElement;
    fn sub(self, rhs: &LongElement) -> LongElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::int(-1));
        out
    }
}

impl fmt::Debug for LongElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, j), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})A{a:?}{j:?}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    matrix: SuperMatrix,
    j: Vec<i64>,
    coeff: RatFunc,
}

#[derive(Serialize, Deserialize)]
struct LongRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for LongElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LongRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|((a, j), c)| TermRepr { matrix: a.clone(), j: j.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LongElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = LongRepr::deserialize(d)?;
        let mut x = LongElement::zero(r.n);
        for t in r.terms {
            x.add_term(t.matrix, t.j, t.coeff).map_err(D::Error::custom)?;
        }
        Ok(x)
    }
}

fn eval_long_star(a: &SuperMatrix, j: &[i64], r: usize) -> SchurElement {
    let n = a.n();
    let mut out = SchurElement::zero(n, r, Basis::Twisted);
    let s = a.size();
    if s > r || !a.is_star() {
        return out;
    }
    for lam in compositions(n, r - s) {
        out.add_term(a.add_diag(&lam.parts), RatFunc::v_pow(lam.dot(j)));
    }
    out
}

/// `A(A,𝐣,r)` on the twisted basis; zero when `|A| > r` or `A ∉ M*`.
pub fn eval_long(a: &SuperMatrix, j: &[i64], r: usize) -> Result<SchurElement> {
    if j.len() != a.n() {
        return Err(Error::SizeMismatch(format!("j has length {}, expected {}", j.len(), a.n())));
    }
    Ok(eval_long_star(a, j, r))
}

/// The long element of a generator.
pub fn generator(symbol: Symbol, n: usize) -> Result<LongElement> {
    let (a, j) = symbol.long_key(n)?;
    LongElement::single(a, j, RatFunc::one())
}

pub(crate) fn odd_unit(n: usize, i: usize, j: usize) -> SuperMatrix {
    SuperMatrix { even: NatMatrix::zero(n), odd: NatMatrix::unit(n, i, j) }
}

pub(crate) fn even_unit(n: usize, i: usize, j: usize) -> SuperMatrix {
    SuperMatrix::even_only(NatMatrix::unit(n, i, j))
}

/// How products with generators are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// The closed multiplication formulas; SDP hypotheses are checked.
    Closed,
    /// Evaluation at several levels and solving for the coefficients.
    Eval,
}

/// `Z · X` for a generator `Z`.
pub fn gen_mul(s: Symbol, x: &LongElement, mode: Mode) -> Result<LongElement> {
    match mode {
        Mode::Closed => closed::gen_mul_closed(s, x),
        Mode::Eval => eval::gen_mul_eval(s, x),
    }
}
