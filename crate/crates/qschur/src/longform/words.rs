//! Generator symbols, words in them and their evaluation in `Q̃(n,r)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{eval_long, even_unit, odd_unit, unit};
use crate::combin::SuperMatrix;
use crate::error::{Error, Result};
use crate::ring::RatFunc;
use crate::schur::{Basis, Schur, SchurElement};

/// `G_i`, `G_i^{-1}`, `Ḡ_i` (`1 ≤ i ≤ n`) and `X_j`, `X̄_j`, `Y_j`, `Ȳ_j`
/// (`1 ≤ j < n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    G(usize),
    GInv(usize),
    GBar(usize),
    X(usize),
    XBar(usize),
    Y(usize),
    YBar(usize),
}

impl Symbol {
    pub fn index(self) -> usize {
        match self {
            Symbol::G(i) | Symbol::GInv(i) | Symbol::GBar(i) => i,
            Symbol::X(i) | Symbol::XBar(i) | Symbol::Y(i) | Symbol::YBar(i) => i,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Symbol::GBar(_) | Symbol::XBar(_) | Symbol::YBar(_))
    }

    pub fn validate(self, n: usize) -> Result<()> {
        let i = self.index();
        let max = match self {
            Symbol::G(_) | Symbol::GInv(_) | Symbol::GBar(_) => n,
            _ => n.saturating_sub(1),
        };
        if i == 0 || i > max {
            return Err(Error::IndexOutOfRange(format!("{self} for n = {n}")));
        }
        Ok(())
    }

    /// Member of `{G_i^{±1}, X_j, Y_j, Ḡ_n}`.
    pub fn is_canonical(self, n: usize) -> bool {
        !matches!(self, Symbol::XBar(_) | Symbol::YBar(_)) && !matches!(self, Symbol::GBar(i) if i != n)
    }

    /// `(A, 𝐣)` with the generator equal to `A(A,𝐣)`.
    pub fn long_key(self, n: usize) -> Result<(SuperMatrix, Vec<i64>)> {
        self.validate(n)?;
        let neg = |i| unit(n, i).into_iter().map(|x: i64| -x).collect::<Vec<_>>();
        Ok(match self {
            Symbol::G(i) => (SuperMatrix::zero(n), unit(n, i)),
            Symbol::GInv(i) => (SuperMatrix::zero(n), neg(i)),
            Symbol::GBar(i) => (odd_unit(n, i, i), neg(i)),
            Symbol::X(j) => (even_unit(n, j, j + 1), neg(j)),
            Symbol::XBar(j) => (odd_unit(n, j, j + 1), neg(j)),
            Symbol::Y(j) => (even_unit(n, j + 1, j), neg(j + 1)),
            Symbol::YBar(j) => (odd_unit(n, j + 1, j), neg(j + 1)),
        })
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Symbol::G(i) => write!(f, "G{i}"),
            Symbol::GInv(i) => write!(f, "G{i}^-1"),
            Symbol::GBar(i) => write!(f, "Gbar{i}"),
            Symbol::X(i) => write!(f, "X{i}"),
            Symbol::XBar(i) => write!(f, "Xbar{i}"),
            Symbol::Y(i) => write!(f, "Y{i}"),
            Symbol::YBar(i) => write!(f, "Ybar{i}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("unknown generator {s:?}"));
        let (body, inv) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let split = body.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (name, idx) = body.split_at(split);
        let i: usize = idx.parse().map_err(|_| bad())?;
        Ok(match (name, inv) {
            ("G", false) => Symbol::G(i),
            ("G", true) => Symbol::GInv(i),
            ("Gbar", false) => Symbol::GBar(i),
            ("X", false) => Symbol::X(i),
            ("Xbar", false) => Symbol::XBar(i),
            ("Y", false) => Symbol::Y(i),
            ("Ybar", false) => Symbol::YBar(i),
            _ => return Err(bad()),
        })
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A product of generators, read left to right.
pub type Word = Vec<Symbol>;

/// Parity of a word: the number of barred symbols mod 2.
pub fn word_parity(w: &[Symbol]) -> usize {
    w.iter().filter(|s| s.is_odd()).count() % 2
}

/// A `Q(v)`-combination of words.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct WordSum(pub Vec<(RatFunc, Word)>);

impl WordSum {
    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self(vec![(RatFunc::one(), w)])
    }

    pub fn term(c: RatFunc, w: Word) -> Self {
        Self(vec![(c, w)])
    }

    pub fn plus(mut self, other: WordSum) -> Self {
        self.0.extend(other.0);
        self
    }

    pub fn scaled(self, c: &RatFunc) -> Self {
        Self(self.0.into_iter().map(|(x, w)| (&x * c, w)).collect())
    }

    /// Concatenation product, distributed over both sums.
    pub fn times(&self, other: &WordSum) -> WordSum {
        let mut out = Vec::new();
        for (a, u) in &self.0 {
            for (b, w) in &other.0 {
                let mut uw = u.clone();
                uw.extend(w.iter().copied());
                out.push((a * b, uw));
            }
        }
        WordSum(out)
    }

    pub fn product(factors: &[WordSum]) -> WordSum {
        factors.iter().fold(WordSum::word(Vec::new()), |acc, f| acc.times(f))
    }
}

/// The image of a word in `Q̃(n,r)`, each symbol replaced by its long element
/// at level `r`.
pub fn word_apply(w: &[Symbol], n: usize, r: usize) -> Result<SchurElement> {
    let engine = Schur::shared(n, r);
    let mut acc = SchurElement::identity(n, r, Basis::Twisted);
    for &s in w {
        let (a, j) = s.long_key(n)?;
        acc = engine.mul(&acc, &eval_long(&a, &j, r)?)?;
    }
    Ok(acc)
}

pub fn wordsum_apply(w: &WordSum, n: usize, r: usize) -> Result<SchurElement> {
    let mut out = SchurElement::zero(n, r, Basis::Twisted);
    for (c, word) in &w.0 {
        out.add_scaled(&word_apply(word, n, r)?, c);
    }
    Ok(out)
}

fn v(e: i64) -> RatFunc {
    RatFunc::v_pow(e)
}

/// Rewrite a barred symbol into words over `{G_i^{±1}, X_j, Y_j, Ḡ_n}`:
///
/// - `X̄_i = −v G_{i+1}Ḡ_{i+1}X_i + v^{-1} X_iG_{i+1}Ḡ_{i+1}`
/// - `Ȳ_i = v G_{i+1}^{-1}Ḡ_{i+1}Y_i − v^{-1} Y_iG_{i+1}^{-1}Ḡ_{i+1}`
/// - `Ḡ_i = X_iȲ_iG_{i+1} − Ȳ_iX_iG_{i+1} + G_i^{-1}Ḡ_{i+1}G_{i+1}`
///
/// applied recursively from `i = n−1` downwards.
pub fn canonical_symbol(s: Symbol, n: usize) -> Result<WordSum> {
    s.validate(n)?;
    if s.is_canonical(n) {
        return Ok(WordSum::word(vec![s]));
    }
    let w = |syms: &[Symbol]| WordSum::word(syms.to_vec());
    Ok(match s {
        Symbol::XBar(i) => {
            let gb = canonical_symbol(Symbol::GBar(i + 1), n)?;
            let a = WordSum::product(&[w(&[Symbol::G(i + 1)]), gb.clone(), w(&[Symbol::X(i)])]).scaled(&-v(1));
            let b = WordSum::product(&[w(&[Symbol::X(i), Symbol::G(i + 1)]), gb]).scaled(&v(-1));
            a.plus(b)
        }
        Symbol::YBar(i) => {
            let gb = canonical_symbol(Symbol::GBar(i + 1), n)?;
            let a = WordSum::product(&[w(&[Symbol::GInv(i + 1)]), gb.clone(), w(&[Symbol::Y(i)])]).scaled(&v(1));
            let b = WordSum::product(&[w(&[Symbol::Y(i), Symbol::GInv(i + 1)]), gb]).scaled(&-v(-1));
            a.plus(b)
        }
        Symbol::GBar(i) => {
            let yb = canonical_symbol(Symbol::YBar(i), n)?;
            let gb = canonical_symbol(Symbol::GBar(i + 1), n)?;
            let a = WordSum::product(&[w(&[Symbol::X(i)]), yb.clone(), w(&[Symbol::G(i + 1)])]);
            let b = WordSum::product(&[yb, w(&[Symbol::X(i), Symbol::G(i + 1)])]).scaled(&RatFunc::int(-1));
            let c = WordSum::product(&[w(&[Symbol::GInv(i)]), gb, w(&[Symbol::G(i + 1)])]);
            a.plus(b).plus(c)
        }
        _ => unreachable!("canonical symbols return early"),
    })
}

/// Every symbol of every word rewritten into the canonical set.
pub fn canonical(w: &WordSum, n: usize) -> Result<WordSum> {
    let mut out = WordSum::zero();
    for (c, word) in &w.0 {
        let factors = word.iter().map(|&s| canonical_symbol(s, n)).collect::<Result<Vec<_>>>()?;
        out = out.plus(WordSum::product(&factors).scaled(c));
    }
    Ok(out)
}
