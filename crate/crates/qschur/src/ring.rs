//! Exact arithmetic in `Q(v)`.
//!
//! [`LaurentPoly`] is a sparse map from powers of `v` to rationals,
//! [`RatFunc`] a reduced fraction of two of them. `q` is always `v^2`; there
//! is no separate symbol for it.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Laurent polynomial in `v` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Q::one(), 0)
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(q_int(n))
    }

    /// `c * v^e`.
    pub fn monomial(c: Q, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    pub fn v_pow(e: i64) -> Self {
        Self::monomial(Q::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Q {
        self.coeffs.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Single term `c v^e`, if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, &Q)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: i64, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Dense coefficient vector of `self * v^{-min_exp}` (ascending).
    fn dense(&self) -> Vec<Q> {
        let Some(lo) = self.min_exp() else {
            return Vec::new();
        };
        let hi = self.max_exp().unwrap();
        let mut out = vec![Q::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.coeffs {
            out[(e - lo) as usize] = c.clone();
        }
        out
    }

    fn from_dense(d: &[Q], shift: i64) -> Self {
        Self::from_terms(d.iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())))
    }
}

/// Sum `1 + v^e + ... + v^{(m-1)e}`; with `e = 2` this is `[[m]]_q`.
pub fn step(m: u32, e: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..m as i64).map(|k| (k * e as i64, Q::one())))
}

/// `step(m, e1) - step(m, e2)`.
pub fn step_diff(m: u32, e1: u32, e2: u32) -> LaurentPoly {
    &step(m, e1) - &step(m, e2)
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Q, e: i64) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    let unit = a.is_one();
    match (e, unit) {
        (0, _) => write!(f, "{a}"),
        (1, true) => write!(f, "v"),
        (_, true) => write!(f, "v^{e}"),
        (1, false) => write!(f, "{a}*v"),
        (_, false) => write!(f, "{a}*v^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            fmt_term(f, i == 0, c, *e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in &self.coeffs {
            m.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in raw {
            let e: i64 = e.trim().parse().map_err(D::Error::custom)?;
            let c: Q = c.trim().parse().map_err(|_| D::Error::custom(format!("bad rational {c:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

// ---- dense polynomial helpers over Q (ascending coefficient order) ----

fn trim(p: &mut Vec<Q>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quot = vec![Q::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / lb;
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        quot[k] = c;
        r.pop();
        trim(&mut r);
    }
    (quot, r)
}

fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &l;
        }
    }
    x
}

/// Element of `Q(v)` as a reduced fraction.
///
/// The denominator has lowest exponent 0 and leading coefficient 1, and is
/// coprime to the numerator, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::int(n))
    }

    pub fn rational(c: Q) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn v_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::v_pow(e))
    }

    /// `q^e = v^{2e}`.
    pub fn q_pow(e: i64) -> Self {
        Self::v_pow(2 * e)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Canonical reduced representative of `num / den`.
    pub fn normalize(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((e, c)) = den.as_monomial() {
            let inv = c.recip();
            return Ok(Self::from_poly(num.shift(-e).scale(&inv)));
        }
        let dlo = den.min_exp().unwrap();
        let nlo = num.min_exp().unwrap();
        let dd = den.dense();
        let nd = num.dense();
        let g = gcd(&nd, &dd);
        let (mut nq, mut dq) = if g.len() > 1 {
            (divrem(&nd, &g).0, divrem(&dd, &g).0)
        } else {
            (nd, dd)
        };
        let lead = dq.last().unwrap().clone();
        if !lead.is_one() {
            for c in nq.iter_mut() {
                *c /= &lead;
            }
            for c in dq.iter_mut() {
                *c /= &lead;
            }
        }
        Ok(Self {
            num: LaurentPoly::from_dense(&nq, nlo - dlo),
            den: LaurentPoly::from_dense(&dq, 0),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitute `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self::normalize(self.num.bar(), self.den.bar()).expect("nonzero denominator")
    }

    fn add_impl(&self, rhs: &Self, sign: bool) -> Self {
        let signed = |p: &LaurentPoly| if sign { p.clone() } else { -p };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return Self { num: signed(&rhs.num), den: rhs.den.clone() };
        }
        if self.den == rhs.den {
            let mut n = self.num.clone();
            if sign {
                n += &rhs.num;
            } else {
                n -= &rhs.num;
            }
            if self.den.is_one() {
                return Self::from_poly(n);
            }
            return Self::normalize(n, self.den.clone()).unwrap();
        }
        let n = &(&self.num * &rhs.den) + &signed(&(&rhs.num * &self.den));
        Self::normalize(n, &self.den * &rhs.den).unwrap()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, true)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, false)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num -= &rhs.num;
        } else {
            *self = &*self - rhs;
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let n = &self.num * &rhs.num;
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(n);
        }
        RatFunc::normalize(n, &self.den * &rhs.den).unwrap()
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::inv`] to handle it.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFuncRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(d)?;
        RatFunc::normalize(r.num, r.den).map_err(D::Error::custom)
    }
}

/// `[[m]]_q = 1 + q + ... + q^{m-1}` as a field element.
pub fn qint(m: u32) -> RatFunc {
    RatFunc::from_poly(step(m, 2))
}

/// `[[m]]_{q^2}`.
pub fn qqint(m: u32) -> RatFunc {
    RatFunc::from_poly(step(m, 4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, q_int(c))))
    }

    #[test]
    fn normalize_examples() {
        let r = RatFunc::normalize(p(&[(2, 1), (0, -1)]), p(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(r, RatFunc::from_poly(p(&[(1, 1), (0, 1)])));
        let r = RatFunc::normalize(LaurentPoly::zero(), p(&[(3, 1)])).unwrap();
        assert!(r.is_zero());
        let r = RatFunc::normalize(p(&[(4, 1), (2, -1)]), p(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(r, RatFunc::v_pow(2));
        assert_eq!(RatFunc::normalize(p(&[(0, 1)]), LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn den_is_normalized() {
        let r = RatFunc::normalize(p(&[(0, 3)]), p(&[(5, 2), (3, -4)])).unwrap();
        assert_eq!(r.den().min_exp(), Some(0));
        assert!(r.den().coeff(r.den().max_exp().unwrap()).is_one());
        assert_eq!(r.num(), &p(&[(-3, 1)]).scale(&Q::new(3.into(), 2.into())));
    }

    #[test]
    fn steps() {
        assert_eq!(step(1, 2), LaurentPoly::one());
        assert_eq!(step(3, 2), p(&[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(step(2, 4), p(&[(0, 1), (4, 1)]));
        assert_eq!(step(0, 3), LaurentPoly::zero());
        assert_eq!(step_diff(2, 4, 2), p(&[(4, 1), (2, -1)]));
        assert!(step_diff(5, 2, 2).is_zero());
        assert!(step_diff(1, 4, 2).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let r = RatFunc::normalize(p(&[(0, 3), (-1, 1)]), p(&[(2, 2), (0, -1)])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: RatFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(r, back);
        assert_eq!(serde_json::to_string(&RatFunc::v_pow(-2)).unwrap(), r#"{"num":{"-2":"1"},"den":{"0":"1"}}"#);
    }

    #[test]
    fn display() {
        assert_eq!(format!("{}", RatFunc::from_poly(p(&[(2, 1), (0, -1)]))), "v^2 - 1");
    }
}
