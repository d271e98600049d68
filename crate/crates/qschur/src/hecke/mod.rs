//! The Hecke–Clifford superalgebra `ℋᶜ_r` over `Q(v)`, `q = v^2`.
//!
//! Elements are stored in the basis `T_w c^α` (Clifford factors on the
//! right, sorted by index). Multiplication rewrites generator by generator
//! using
//!
//! - `c_i^2 = −1`, `c_i c_j = −c_j c_i`,
//! - `(T_i − q)(T_i + 1) = 0` and the braid relations (implicit in `T_w`),
//! - `c_{i+1} T_i = T_i c_i`, `c_i T_i = T_i c_{i+1} + (q−1)(c_i − c_{i+1})`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combin::{coset_reps, d_a, Composition, Permutation, SuperMatrix};
use crate::error::{Error, Result};
use crate::ring::RatFunc;

pub mod lemmas;

/// Packed one-line notation: nibble `i` holds `w(i+1) − 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PermCode(u64);

impl PermCode {
    pub fn identity(r: usize) -> Self {
        let mut c = 0u64;
        for i in 0..r {
            c |= (i as u64) << (4 * i);
        }
        Self(c)
    }

    pub fn from_perm(w: &Permutation) -> Self {
        let mut c = 0u64;
        for (i, &x) in w.one_line().iter().enumerate() {
            c |= ((x - 1) as u64) << (4 * i);
        }
        Self(c)
    }

    pub fn to_perm(self, r: usize) -> Permutation {
        Permutation::from_one_line((0..r).map(|i| self.at(i) + 1).collect()).expect("valid code")
    }

    #[inline]
    fn at(self, i: usize) -> usize {
        ((self.0 >> (4 * i)) & 0xf) as usize
    }

    /// `ℓ(w s_i) > ℓ(w)` (1-based `i`).
    #[inline]
    pub fn right_ascent(self, i: usize) -> bool {
        self.at(i - 1) < self.at(i)
    }

    /// `w s_i`.
    #[inline]
    pub fn mul_simple(self, i: usize) -> Self {
        let (a, b) = (self.at(i - 1) as u64, self.at(i) as u64);
        let s0 = 4 * (i - 1);
        let s1 = 4 * i;
        let cleared = self.0 & !(0xf << s0) & !(0xf << s1);
        Self(cleared | (b << s0) | (a << s1))
    }

    /// Position of value `x` (0-based both).
    #[inline]
    fn pos(self, r: usize, x: usize) -> usize {
        (0..r).find(|&i| self.at(i) == x).unwrap()
    }

    /// `ℓ(s_i w) < ℓ(w)`: value `i+1` occurs before value `i`.
    #[inline]
    pub fn left_descent(self, r: usize, i: usize) -> bool {
        self.pos(r, i) < self.pos(r, i - 1)
    }

    /// `s_i w`: swap the values `i`, `i+1`.
    pub fn simple_mul(self, r: usize, i: usize) -> Self {
        let (p, q) = (self.pos(r, i - 1), self.pos(r, i));
        let s0 = 4 * p;
        let s1 = 4 * q;
        let cleared = self.0 & !(0xf << s0) & !(0xf << s1);
        Self(cleared | ((i as u64) << s0) | (((i - 1) as u64) << s1))
    }

    pub fn length(self, r: usize) -> usize {
        let mut l = 0;
        for i in 0..r {
            for j in i + 1..r {
                if self.at(i) > self.at(j) {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn reduced_word(self, r: usize) -> Vec<usize> {
        let mut w = self;
        let mut rev = Vec::new();
        while let Some(i) = (1..r).find(|&i| !w.right_ascent(i)) {
            rev.push(i);
            w = w.mul_simple(i);
        }
        rev.reverse();
        rev
    }
}

/// Sign and mask of `c^α c^β` in sorted normal form.
#[inline]
pub fn clifford_mul(a: u32, b: u32) -> (bool, u32) {
    // each c_j of β passes the factors of α with larger index
    let mut swaps = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    swaps += (a & b).count_ones();
    (swaps % 2 == 1, a ^ b)
}

pub type Key = (PermCode, u32);

/// Sparse element of `ℋᶜ_r`.
#[derive(Clone, PartialEq, Eq)]
pub struct HCElement {
    r: usize,
    terms: BTreeMap<Key, RatFunc>,
}

fn push(terms: &mut BTreeMap<Key, RatFunc>, key: Key, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(s) => {
            s.insert(c);
        }
        Entry::Occupied(mut s) => {
            *s.get_mut() += &c;
            if s.get().is_zero() {
                s.remove();
            }
        }
    }
}

impl HCElement {
    pub fn zero(r: usize) -> Self {
        Self { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Self::basis(r, PermCode::identity(r), 0)
    }

    pub fn scalar(r: usize, c: RatFunc) -> Self {
        let mut e = Self::zero(r);
        push(&mut e.terms, (PermCode::identity(r), 0), c);
        e
    }

    pub fn basis(r: usize, w: PermCode, alpha: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((w, alpha), RatFunc::one());
        Self { r, terms }
    }

    /// `T_w`.
    pub fn t_w(w: &Permutation) -> Self {
        Self::basis(w.r(), PermCode::from_perm(w), 0)
    }

    /// `T_i` (1-based).
    pub fn t(r: usize, i: usize) -> Self {
        Self::basis(r, PermCode::identity(r).mul_simple(i), 0)
    }

    /// `T_i^{-1} = q^{-1}(T_i − (q−1))`.
    pub fn t_inv(r: usize, i: usize) -> Self {
        let qm1 = &RatFunc::q_pow(1) - &RatFunc::one();
        (&Self::t(r, i) - &Self::scalar(r, qm1)).scale(&RatFunc::q_pow(-1))
    }

    /// `c_j` (1-based).
    pub fn c(r: usize, j: usize) -> Self {
        Self::basis(r, PermCode::identity(r), 1 << (j - 1))
    }

    /// `c^α` for a 0/1 vector.
    pub fn c_alpha(alpha: &[u8]) -> Self {
        let mask = alpha.iter().enumerate().filter(|(_, &a)| a != 0).fold(0u32, |m, (i, _)| m | (1 << i));
        Self::basis(alpha.len(), PermCode::identity(alpha.len()), mask)
    }

    pub fn r(&self) -> usize {
        self.r
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

    pub fn terms(&self) -> &BTreeMap<Key, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation, alpha: u32) -> RatFunc {
        self.terms.get(&(PermCode::from_perm(w), alpha)).cloned().unwrap_or_default()
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Key, RatFunc)>) -> Self {
        let mut e = Self::zero(r);
        for (k, c) in terms {
            push(&mut e.terms, k, c);
        }
        e
    }

    /// Parity if homogeneous, `None` for mixed elements.
    pub fn parity(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|(_, a)| (a.count_ones() % 2) as usize);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.r);
        }
        Self { r: self.r, terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }

    pub fn add_scaled(&mut self, other: &HCElement, c: &RatFunc) {
        for (k, x) in &other.terms {
            push(&mut self.terms, *k, x * c);
        }
    }

    /// Right multiplication by `T_i`.
    pub fn mul_t(&self, i: usize) -> Self {
        let mut out = BTreeMap::new();
        let q = RatFunc::q_pow(1);
        let qm1 = &q - &RatFunc::one();
        let bi = 1u32 << (i - 1);
        let bj = 1u32 << i;
        for (&(w, alpha), coeff) in &self.terms {
            let a = alpha & bi != 0;
            let b = alpha & bj != 0;
            let rest = alpha & !(bi | bj);
            // c^α T_i = Σ [T_i] c^{rest·δ} … ; (has_t, sign, δ) where the
            // Clifford part is c^β δ c^γ = ±c^{rest ^ δ}
            let mut pieces: Vec<(bool, RatFunc, u32)> = Vec::with_capacity(3);
            match (a, b) {
                (false, false) => pieces.push((true, RatFunc::one(), 0)),
                (false, true) => pieces.push((true, RatFunc::one(), bi)),
                (true, false) => {
                    pieces.push((true, RatFunc::one(), bj));
                    pieces.push((false, qm1.clone(), bi));
                    pieces.push((false, -&qm1, bj));
                }
                (true, true) => {
                    pieces.push((true, -RatFunc::one(), bi | bj));
                    pieces.push((false, -&qm1, 0));
                    pieces.push((false, qm1.clone(), bi | bj));
                }
            }
            let low = rest & (bi - 1);
            let high = rest & !(bi | bj | (bi - 1));
            for (has_t, c, delta) in pieces {
                let (s1, m1) = clifford_mul(low, delta);
                let (s2, m2) = clifford_mul(m1, high);
                let mut c = &c * coeff;
                if s1 ^ s2 {
                    c = -c;
                }
                if !has_t {
                    push(&mut out, (w, m2), c);
                } else if w.right_ascent(i) {
                    push(&mut out, (w.mul_simple(i), m2), c);
                } else {
                    push(&mut out, (w, m2), &c * &qm1);
                    push(&mut out, (w.mul_simple(i), m2), &c * &q);
                }
            }
        }
        Self { r: self.r, terms: out }
    }

    /// Right multiplication by `T_w`.
    pub fn mul_tw(&self, w: PermCode) -> Self {
        let mut acc = self.clone();
        for i in w.reduced_word(self.r) {
            acc = acc.mul_t(i);
        }
        acc
    }

    /// Right multiplication by `c^β`.
    pub fn mul_c(&self, beta: u32) -> Self {
        if beta == 0 {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        for (&(w, alpha), coeff) in &self.terms {
            let (s, m) = clifford_mul(alpha, beta);
            push(&mut out, (w, m), if s { -coeff } else { coeff.clone() });
        }
        Self { r: self.r, terms: out }
    }

    /// Product in `ℋᶜ_r`.
    pub fn mul(&self, y: &HCElement) -> Result<HCElement> {
        if self.r != y.r {
            return Err(Error::SizeMismatch(format!("rank {} vs {}", self.r, y.r)));
        }
        Ok(self.mul_unchecked(y))
    }

    fn mul_unchecked(&self, y: &HCElement) -> HCElement {
        let mut out = HCElement::zero(self.r);
        if self.is_zero() || y.is_zero() {
            return out;
        }
        let mut by_w: BTreeMap<PermCode, Vec<(u32, &RatFunc)>> = BTreeMap::new();
        for ((w, a), c) in &y.terms {
            by_w.entry(*w).or_default().push((*a, c));
        }
        for (w, parts) in by_w {
            let xw = self.mul_tw(w);
            for (beta, c) in parts {
                for (&(u, alpha), x) in &xw.terms {
                    let (s, m) = clifford_mul(alpha, beta);
                    let prod = x * c;
                    push(&mut out.terms, (u, m), if s { -prod } else { prod });
                }
            }
        }
        out
    }

    /// Coordinates of `x_ρ · self` in the basis `x_ρ T_d c^α`, `d` a minimal
    /// right coset representative of `S_ρ`: `x_ρ T_u = q^{ℓ(u)} x_ρ` for
    /// `u ∈ S_ρ`.
    pub fn reduce_left(&self, rho: &Composition) -> BTreeMap<Key, RatFunc> {
        let r = self.r;
        let simples: Vec<usize> = (1..r).filter(|&i| rho.contains_simple(i)).collect();
        let mut out = BTreeMap::new();
        for (&(w, alpha), c) in &self.terms {
            let mut d = w;
            let mut len = 0i64;
            while let Some(&i) = simples.iter().find(|&&i| d.left_descent(r, i)) {
                d = d.simple_mul(r, i);
                len += 1;
            }
            push(&mut out, (d, alpha), c * &RatFunc::q_pow(len));
        }
        out
    }
}

impl std::ops::Add for &HCElement {
    type Output = HCElement;
    fn add(self, rhs: &HCElement) -> HCElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::one());
        out
    }
}

impl std::ops::Sub for &HCElement {
    type Output = HCElement;
    fn sub(self, rhs: &HCElement) -> HCElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::int(-1));
        out
    }
}

impl std::ops::Neg for &HCElement {
    type Output = HCElement;
    fn neg(self) -> HCElement {
        self.scale(&RatFunc::int(-1))
    }
}

impl std::ops::Mul for &HCElement {
    type Output = HCElement;
    /// Panics on rank mismatch; see [`HCElement::mul`].
    fn mul(self, rhs: &HCElement) -> HCElement {
        assert_eq!(self.r, rhs.r, "rank mismatch");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Debug for HCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, a), c)| format!("({c})T{:?}c{:0width$b}", w.to_perm(self.r), a, width = self.r))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    w: Permutation,
    alpha: Vec<u8>,
    coeff: RatFunc,
}

#[derive(Serialize, Deserialize)]
struct HCRepr {
    r: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for HCElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|((w, a), c)| TermRepr {
                w: w.to_perm(self.r),
                alpha: (0..self.r).map(|i| ((a >> i) & 1) as u8).collect(),
                coeff: c.clone(),
            })
            .collect();
        terms.sort_by(|x, y| x.w.cmp(&y.w).then_with(|| x.alpha.cmp(&y.alpha)));
        HCRepr { r: self.r, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HCElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = HCRepr::deserialize(d)?;
        let mut e = HCElement::zero(repr.r);
        for t in repr.terms {
            if t.w.r() != repr.r || t.alpha.len() != repr.r || t.alpha.iter().any(|&b| b > 1) {
                return Err(D::Error::custom("term does not match rank"));
            }
            let mask = t.alpha.iter().enumerate().fold(0u32, |m, (i, &b)| m | ((b as u32) << i));
            push(&mut e.terms, (PermCode::from_perm(&t.w), mask), t.coeff);
        }
        Ok(e)
    }
}

/// `x_λ = Σ_{w ∈ S_λ} T_w`.
pub fn x_lambda(lambda: &Composition) -> HCElement {
    let r = lambda.r();
    HCElement::from_terms(
        r,
        crate::combin::young_subgroup(lambda)
            .iter()
            .map(|w| ((PermCode::from_perm(w), 0), RatFunc::one())),
    )
}

/// `c_{q,i,j} = q^{j−i} c_i + q^{j−i−1} c_{i+1} + ⋯ + c_j`, or the primed
/// `c'_{q,i,j} = c_i + q c_{i+1} + ⋯ + q^{j−i} c_j`; zero when `i > j`.
pub fn c_interval(r: usize, i: usize, j: usize, primed: bool) -> Result<HCElement> {
    if i == 0 || j == 0 || i > r + 1 || j > r {
        return Err(Error::IndexOutOfRange(format!("c_{{q,{i},{j}}} in rank {r}")));
    }
    let mut e = HCElement::zero(r);
    for t in i..=j {
        let pw = if primed { t - i } else { j - t };
        push(&mut e.terms, (PermCode::identity(r), 1 << (t - 1)), RatFunc::q_pow(pw as i64));
    }
    Ok(e)
}

/// `c^α_λ = Π_m (c_{q, λ̃_{m−1}+1, λ̃_m})^{α_m}` (or its primed variant).
pub fn c_super(lambda: &Composition, alpha: &[usize], primed: bool) -> HCElement {
    let r = lambda.r();
    let ps = lambda.partial_sums();
    let mut e = HCElement::one(r);
    for (m, &a) in alpha.iter().enumerate() {
        if a == 1 {
            let f = c_interval(r, ps[m] + 1, ps[m + 1], primed).expect("in range");
            e = &e * &f;
        }
    }
    e
}

/// Ascending `T^{(i,j)} = 1 + T_i + T_iT_{i+1} + ⋯ + T_i⋯T_j` or descending
/// `T_{(i,j)} = 1 + T_i + T_iT_{i−1} + ⋯ + T_i⋯T_j`; an empty run is `1`.
pub fn t_sum(r: usize, i: usize, j: usize, ascending: bool) -> HCElement {
    let mut acc = HCElement::one(r);
    let mut run = HCElement::one(r);
    let steps: Vec<usize> = if ascending {
        if j + 1 > i { (i..=j).collect() } else { Vec::new() }
    } else if i + 1 > j {
        (j..=i).rev().collect()
    } else {
        Vec::new()
    };
    for s in steps {
        run = run.mul_t(s);
        acc = &acc + &run;
    }
    acc
}

/// `h'_A = T_{d_A} c_A Σ_{σ ∈ 𝒟_{ν_A} ∩ S_{co(A)}} T_σ`, so `T_A = x_{ro(A)} h'_A`.
pub fn h_prime(a: &SuperMatrix) -> HCElement {
    let hat = a.hat();
    let r = hat.size();
    let (d, _) = d_a(&hat);
    let nu = hat.nu();
    let alpha = a.odd.nu().parts;
    let ca = c_super(&nu, &alpha, false);
    let reps = coset_reps(&nu, &hat.co()).expect("same size");
    let sum = HCElement::from_terms(r, reps.iter().map(|s| ((PermCode::from_perm(s), 0), RatFunc::one())));
    let left = HCElement::t_w(&d);
    &(&left * &ca) * &sum
}

/// `T_A = x_{ro(A)} T_{d_A} c_A Σ T_σ`.
pub fn standard_t(a: &SuperMatrix) -> HCElement {
    &x_lambda(&a.ro()) * &h_prime(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::LaurentPoly;

    #[test]
    fn quadratic_relation() {
        let t = HCElement::t(2, 1);
        let tt = &t * &t;
        let q = RatFunc::q_pow(1);
        let expected = &t.scale(&(&q - &RatFunc::one())) + &HCElement::scalar(2, q);
        assert_eq!(tt, expected);
    }

    #[test]
    fn t_c_commutation() {
        // T_1 c_1 = c_2 T_1 is the basis element T_{s_1} c_1
        let prod = &HCElement::t(2, 1) * &HCElement::c(2, 1);
        assert_eq!(prod, &HCElement::c(2, 2) * &HCElement::t(2, 1));
        assert_eq!(prod, HCElement::basis(2, PermCode::identity(2).mul_simple(1), 0b01));
    }

    #[test]
    fn clifford_square() {
        let cc = &HCElement::c(2, 1) * &HCElement::c(2, 2);
        assert_eq!(&cc * &cc, HCElement::scalar(2, RatFunc::int(-1)));
    }

    #[test]
    fn x_lambda_examples() {
        let c = |p: &[usize]| Composition::new(p.to_vec());
        assert_eq!(x_lambda(&c(&[1, 1])), HCElement::one(2));
        let x2 = x_lambda(&c(&[2]));
        assert_eq!(x2, &HCElement::one(2) + &HCElement::t(2, 1));
        assert_eq!(&x2 * &HCElement::t(2, 1), x2.scale(&RatFunc::q_pow(1)));
    }

    #[test]
    fn c_interval_examples() {
        assert_eq!(c_interval(2, 1, 1, false).unwrap(), HCElement::c(2, 1));
        let c12 = c_interval(2, 1, 2, false).unwrap();
        assert_eq!(c12, &HCElement::c(2, 1).scale(&RatFunc::q_pow(1)) + &HCElement::c(2, 2));
        let sq = &c12 * &c12;
        let expected = -RatFunc::from_poly(LaurentPoly::from_terms([(0, 1.into()), (4, 1.into())].map(|(e, c): (i64, i64)| (e, crate::ring::Q::from_integer(c.into())))));
        assert_eq!(sq, HCElement::scalar(2, expected));
        assert!(c_interval(2, 2, 1, false).unwrap().is_zero());
    }

    #[test]
    fn t_sum_examples() {
        assert_eq!(t_sum(2, 1, 0, true), HCElement::one(2));
        assert_eq!(t_sum(2, 1, 1, true), &HCElement::one(2) + &HCElement::t(2, 1));
        let d = t_sum(3, 2, 1, false);
        let expected = &(&HCElement::one(3) + &HCElement::t(3, 2)) + &(&HCElement::t(3, 2) * &HCElement::t(3, 1));
        assert_eq!(d, expected);
    }

    #[test]
    fn standard_t_examples() {
        assert_eq!(standard_t(&SuperMatrix::diag(&[2, 1])), x_lambda(&Composition::new(vec![2, 1])));
        let a = SuperMatrix::from_rows(&[vec![0]], &[vec![1]]).unwrap();
        assert_eq!(standard_t(&a), HCElement::c(1, 1));
        let a = SuperMatrix::from_rows(&[vec![0, 0], vec![0, 0]], &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(standard_t(&a), &HCElement::c(2, 1) * &HCElement::c(2, 2));
    }
}
