//! The queer q-Schur superalgebra `𝒬_q(n,r)` on the basis `φ_A`, and its
//! twisted variant on `Φ_A`.
//!
//! Structure constants come from `φ_Bφ_A(x_{co(A)}) = T_B h'_A`, which is
//! expanded in `ℋᶜ_r` and decomposed against the `T_M`. Everything is
//! computed in left-reduced coordinates: `x_λ ℋᶜ` is free on
//! `x_λ T_d c^α` with `d` minimal in `S_λ d`, so `T_M = x_λ h'_M` is
//! represented by the reduction of `h'_M`.

pub mod closed;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::combin::{compositions, enumerate_super, Composition, SuperMatrix};
use crate::error::{Error, Result};
use crate::hecke::{h_prime, standard_t, HCElement, Key};
use crate::linalg::{axpy, Echelon, SparseVec};
use crate::ring::RatFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// `φ_A`
    #[serde(rename = "phi")]
    Plain,
    /// `Φ_A`
    #[serde(rename = "Phi")]
    Twisted,
}

/// Sparse combination of `φ_A` (or `Φ_A`), `A ∈ M(n,r|ℤ₂)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurElement {
    n: usize,
    r: usize,
    basis: Basis,
    terms: BTreeMap<SuperMatrix, RatFunc>,
}

impl SchurElement {
    pub fn zero(n: usize, r: usize, basis: Basis) -> Self {
        Self { n, r, basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(a: SuperMatrix, basis: Basis) -> Self {
        let (n, r) = (a.n(), a.size());
        let mut terms = BTreeMap::new();
        terms.insert(a, RatFunc::one());
        Self { n, r, basis, terms }
    }

    /// `Σ_λ φ_{(diag λ|O)}`.
    pub fn identity(n: usize, r: usize, basis: Basis) -> Self {
        let terms = compositions(n, r).into_iter().map(|l| (SuperMatrix::diag(&l.parts), RatFunc::one())).collect();
        Self { n, r, basis, terms }
    }

    pub fn from_terms(
        n: usize,
        r: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (SuperMatrix, RatFunc)>,
    ) -> Result<Self> {
        let mut e = Self::zero(n, r, basis);
        for (m, c) in terms {
            if m.n() != n || m.size() != r {
                return Err(Error::SizeMismatch(format!("{m} not in M({n},{r}|Z2)")));
            }
            e.add_term(m, c);
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<SuperMatrix, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, a: &SuperMatrix) -> RatFunc {
        self.terms.get(a).cloned().unwrap_or_default()
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

    pub fn add_term(&mut self, m: SuperMatrix, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.n, self.r, self.basis);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn add_scaled(&mut self, other: &SchurElement, c: &RatFunc) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    /// `Some(p)` if every term has parity `p`; `None` for zero or mixed.
    pub fn parity(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(SuperMatrix::parity);
        let p = it.next()?;
        it.all(|x| x == p).then_some(p)
    }

    /// Reinterpret the coefficients on the other basis.
    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }
}

impl std::ops::Add for &SchurElement {
    type Output = SchurElement;
    fn add(self, rhs: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::one());
        out
    }
}

impl std::ops::Sub for &SchurElement {
    type Output = SchurElement;
    fn sub(self, rhs: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::int(-1));
        out
    }
}

impl std::ops::Neg for &SchurElement {
    type Output = SchurElement;
    fn neg(self) -> SchurElement {
        self.scale(&RatFunc::int(-1))
    }
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Plain => "φ",
            Basis::Twisted => "Φ",
        };
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){sym}{m:?}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    matrix: SuperMatrix,
    coeff: RatFunc,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    n: usize,
    r: usize,
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Serialize for SchurElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            n: self.n,
            r: self.r,
            basis: self.basis,
            terms: self.terms.iter().map(|(m, c)| TermRepr { matrix: m.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let e = ElementRepr::deserialize(d)?;
        SchurElement::from_terms(e.n, e.r, e.basis, e.terms.into_iter().map(|t| (t.matrix, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

type Constants = Arc<BTreeMap<SuperMatrix, RatFunc>>;

struct Block {
    mats: Vec<SuperMatrix>,
    ech: Echelon<Key>,
}

/// Structure-constant engine for `𝒬_q(n,r)`. Caches `h'_M`, per-block
/// echelon forms and products; safe to share across threads.
pub struct Schur {
    n: usize,
    r: usize,
    by_block: HashMap<(Composition, Composition), Vec<SuperMatrix>>,
    hprime: RwLock<HashMap<SuperMatrix, Arc<HCElement>>>,
    blocks: RwLock<HashMap<(Composition, Composition), Arc<Block>>>,
    products: RwLock<HashMap<(SuperMatrix, SuperMatrix), Constants>>,
}

impl Schur {
    pub fn new(n: usize, r: usize) -> Self {
        let mut by_block: HashMap<_, Vec<_>> = HashMap::new();
        for m in enumerate_super(n, r) {
            by_block.entry((m.ro(), m.co())).or_default().push(m);
        }
        Self {
            n,
            r,
            by_block,
            hprime: RwLock::default(),
            blocks: RwLock::default(),
            products: RwLock::default(),
        }
    }

    /// Process-wide engine for `(n, r)`, so caches are shared between
    /// callers that evaluate at the same level.
    pub fn shared(n: usize, r: usize) -> Arc<Schur> {
        static ENGINES: OnceLock<Mutex<HashMap<(usize, usize), Arc<Schur>>>> = OnceLock::new();
        let mut map = ENGINES.get_or_init(Mutex::default).lock().unwrap();
        map.entry((n, r)).or_insert_with(|| Arc::new(Schur::new(n, r))).clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn check(&self, a: &SuperMatrix) -> Result<()> {
        if a.n() != self.n || a.size() != self.r {
            return Err(Error::SizeMismatch(format!("{a} not in M({},{}|Z2)", self.n, self.r)));
        }
        Ok(())
    }

    fn h_prime(&self, a: &SuperMatrix) -> Arc<HCElement> {
        if let Some(h) = self.hprime.read().unwrap().get(a) {
            return h.clone();
        }
        let h = Arc::new(h_prime(a));
        self.hprime.write().unwrap().insert(a.clone(), h.clone());
        h
    }

    fn block(&self, lambda: &Composition, mu: &Composition) -> Arc<Block> {
        let key = (lambda.clone(), mu.clone());
        if let Some(b) = self.blocks.read().unwrap().get(&key) {
            return b.clone();
        }
        let mats = self.by_block.get(&key).cloned().unwrap_or_default();
        let mut ech = Echelon::new();
        for m in &mats {
            ech.insert(self.h_prime(m).reduce_left(lambda));
        }
        let b = Arc::new(Block { mats, ech });
        self.blocks.write().unwrap().insert(key, b.clone());
        b
    }

    /// Coefficients of `x_λ y` against `T_M`, `ro(M) = λ`, `co(M) = μ`,
    /// given the left-reduced coordinates of `x_λ y`.
    fn solve_reduced(&self, coords: SparseVec<Key>, lambda: &Composition, mu: &Composition) -> Result<BTreeMap<SuperMatrix, RatFunc>> {
        let block = self.block(lambda, mu);
        match block.ech.solve(coords) {
            Ok(sol) => Ok(sol.into_iter().map(|(i, c)| (block.mats[i].clone(), c)).collect()),
            Err(res) => Err(Error::OutsideSpan(format!(
                "{} residual terms against block ({lambda}, {mu})",
                res.len()
            ))),
        }
    }

    /// `γ^M_{B,A}` with `φ_Bφ_A = Σ γ^M_{B,A} φ_M`.
    pub fn structure_constants(&self, b: &SuperMatrix, a: &SuperMatrix) -> Result<Constants> {
        self.check(b)?;
        self.check(a)?;
        if b.co() != a.ro() {
            return Ok(Arc::default());
        }
        let key = (b.clone(), a.clone());
        if let Some(c) = self.products.read().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let y = self.h_prime(b).mul(&self.h_prime(a))?;
        let lambda = b.ro();
        let c = Arc::new(self.solve_reduced(y.reduce_left(&lambda), &lambda, &a.co())?);
        self.products.write().unwrap().insert(key, c.clone());
        Ok(c)
    }

    /// `φ_B φ_A` by expansion in `ℋᶜ_r`.
    pub fn phi_mul_bruteforce(&self, b: &SuperMatrix, a: &SuperMatrix) -> Result<SchurElement> {
        let c = self.structure_constants(b, a)?;
        Ok(SchurElement { n: self.n, r: self.r, basis: Basis::Plain, terms: (*c).clone() })
    }

    /// `Φ_B Φ_A = (−1)^{p(A)p(B)} Σ γ^M_{B,A} Φ_M`.
    pub fn twist_mul(&self, b: &SuperMatrix, a: &SuperMatrix) -> Result<SchurElement> {
        let e = self.phi_mul_bruteforce(b, a)?.with_basis(Basis::Twisted);
        Ok(if a.parity() * b.parity() == 1 { -&e } else { e })
    }

    /// Product of two elements on the same basis.
    pub fn mul(&self, x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
        if x.basis != y.basis {
            return Err(Error::Malformed("factors use different bases".into()));
        }
        for e in [x, y] {
            if e.n != self.n || e.r != self.r {
                return Err(Error::SizeMismatch(format!("element of Q({},{}) in Q({},{})", e.n, e.r, self.n, self.r)));
            }
        }
        let mut by_ro: HashMap<Composition, Vec<(&SuperMatrix, &RatFunc)>> = HashMap::new();
        for (a, c) in &y.terms {
            by_ro.entry(a.ro()).or_default().push((a, c));
        }
        let mut out = SchurElement::zero(self.n, self.r, x.basis);
        for (b, cb) in &x.terms {
            let Some(right) = by_ro.get(&b.co()) else { continue };
            for &(a, ca) in right {
                let g = self.structure_constants(b, a)?;
                let mut coef = cb * ca;
                if x.basis == Basis::Twisted && a.parity() * b.parity() == 1 {
                    coef = -coef;
                }
                for (m, gm) in g.iter() {
                    out.add_term(m.clone(), gm * &coef);
                }
            }
        }
        Ok(out)
    }

    /// Coefficients of `z ∈ x_λℋᶜ ∩ ℋᶜx_μ` against `{T_M}`; errors if the
    /// residual after elimination is nonzero.
    pub fn decompose_in_ta(&self, z: &HCElement, lambda: &Composition, mu: &Composition) -> Result<BTreeMap<SuperMatrix, RatFunc>> {
        if z.r() != self.r || lambda.r() != self.r || mu.r() != self.r || lambda.n() != self.n || mu.n() != self.n {
            return Err(Error::SizeMismatch("decomposition outside Q(n,r)".into()));
        }
        // In x_λℋᶜ the coefficient on x_λ T_d c^α equals that of T_d c^α.
        let r = self.r;
        let simples: Vec<usize> = (1..r).filter(|&i| lambda.contains_simple(i)).collect();
        let coords: SparseVec<Key> = z
            .terms()
            .iter()
            .filter(|((w, _), _)| !simples.iter().any(|&i| w.left_descent(r, i)))
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        let sol = self.solve_reduced(coords, lambda, mu)?;
        let mut residual = z.terms().clone();
        for (m, c) in &sol {
            axpy(&mut residual, &-c, standard_t(m).terms());
        }
        if !residual.is_empty() {
            return Err(Error::OutsideSpan(format!("{} residual terms", residual.len())));
        }
        Ok(sol)
    }
}

/// `(|M(n,r|ℤ₂)|, rank of {T_A})`. Each `T_A` is expanded in `ℋᶜ_r` and
/// placed in the summand `x_λℋᶜ ∩ ℋᶜx_μ ≅ Hom(x_μℋᶜ, x_λℋᶜ)` for
/// `(λ, μ) = (ro(A), co(A))`.
pub fn dimension(n: usize, r: usize) -> (usize, usize) {
    let all = enumerate_super(n, r);
    let mut by_block: BTreeMap<(Composition, Composition), Vec<SparseVec<Key>>> = BTreeMap::new();
    for a in &all {
        by_block.entry((a.ro(), a.co())).or_default().push(standard_t(a).terms().clone());
    }
    let rank = by_block.into_values().map(crate::linalg::rank).sum();
    (all.len(), rank)
}
