//! Products of long elements computed by evaluation.
//!
//! `Z · A(A,𝐣)` is evaluated in `Q̃(n,r)` at a window of consecutive levels
//! and matched against `Σ_{B,𝐝} g_{B,𝐝} A(B, 𝐣 + 𝐣_Z + 𝐝)` with candidate
//! shifts `𝐝 ∈ {0, 2ε_h, 4ε_h}`. At level `r` the coefficient of
//! `Φ_{(B⁰+λ|B¹)}` is `Σ_𝐝 g_{B,𝐝} v^{λ·(𝐣+𝐣_Z+𝐝)}`, so each `B` gives a
//! small linear system over all `λ` in the window. The window starts with
//! three levels (enough for `{1, v^{2λ_h}, v^{4λ_h}}`) and grows if some `B`
//! does not separate; a shifted window is solved as a stabilization check.
//!
//! Barred generators other than `Ḡ_n` against keys outside the hypothesis
//! need not have this form; such a product falls back to the canonical
//! rewriting of the generator: `Ḡ₁ · A((E₂₁|E₁₂),0)` has `Φ`-coefficient
//! `(1 − v^{2λ₂})[λ₁]` at `B = O`, and `X̄₁` can produce `v^{-2λ₁}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::words::canonical_symbol;
use super::{add_vec, eval_long, LongElement, Symbol};
use crate::combin::{compositions, SuperMatrix};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::ring::RatFunc;
use crate::schur::{Schur, SchurElement};

/// Number of consecutive levels in the smallest fitting window.
pub const WINDOW: usize = 3;

/// Largest window tried before giving up on separating the shifts.
pub const MAX_WINDOW: usize = 7;

/// Candidate `𝐣`-shifts `0, 2ε_h, 4ε_h`.
pub fn candidate_shifts(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; n]];
    for h in 0..n {
        for t in [2, 4] {
            let mut d = vec![0; n];
            d[h] = t;
            out.push(d);
        }
    }
    out
}

enum FitError {
    Separate(String),
    Other(Error),
}

impl From<FitError> for Error {
    fn from(e: FitError) -> Self {
        match e {
            FitError::Separate(m) => Error::Stabilization(m),
            FitError::Other(e) => e,
        }
    }
}

/// Solve for the long element whose evaluations at `levels` are `samples`,
/// with keys `(B, base + 𝐝)`.
pub fn fit(n: usize, levels: &[usize], samples: &[SchurElement], base: &[i64]) -> Result<LongElement> {
    Ok(fit_inner(n, levels, samples, base)?)
}

fn fit_inner(
    n: usize,
    levels: &[usize],
    samples: &[SchurElement],
    base: &[i64],
) -> std::result::Result<LongElement, FitError> {
    let shifts: Vec<Vec<i64>> = candidate_shifts(n).iter().map(|d| add_vec(base, d)).collect();
    // target coefficients grouped by the M* part
    let mut targets: BTreeMap<SuperMatrix, SparseVec<(usize, Vec<usize>)>> = BTreeMap::new();
    for (&r, z) in levels.iter().zip(samples) {
        for (m, c) in z.terms() {
            let (b, lam) = m.strip_diag();
            targets.entry(b).or_default().insert((r, lam), c.clone());
        }
    }
    let mut out = LongElement::zero(n);
    for (b, target) in targets {
        let s = b.size();
        let mut ech = Echelon::new();
        for j in &shifts {
            let mut col = SparseVec::new();
            for &r in levels.iter().filter(|&&r| r >= s) {
                for lam in compositions(n, r - s) {
                    col.insert((r, lam.parts.clone()), RatFunc::v_pow(lam.dot(j)));
                }
            }
            if !ech.insert(col) {
                return Err(FitError::Separate(format!("levels {levels:?} do not separate the shifts of {b}")));
            }
        }
        let sol = ech
            .solve(target)
            .map_err(|res| {
                FitError::Other(Error::Stabilization(format!(
                    "{b}: {} coefficients outside the candidate span",
                    res.len()
                )))
            })?;
        for (i, c) in sol {
            out.add_unchecked(b.clone(), shifts[i].clone(), c);
        }
    }
    Ok(out)
}

/// The first level of the fitting window for a right factor of size `s`:
/// `s + 1`, so that every result of size at most `s + 1` is seen at three
/// values of `|λ|` including 0.
pub fn first_level(s: usize) -> usize {
    s + 1
}

type ProductKey = (SuperMatrix, Vec<i64>, SuperMatrix, Vec<i64>, usize);

fn product_cache() -> &'static Mutex<HashMap<ProductKey, Arc<LongElement>>> {
    static CACHE: OnceLock<Mutex<HashMap<ProductKey, Arc<LongElement>>>> = OnceLock::new();
    CACHE.get_or_init(Mutex::default)
}

/// `A(Z, 𝐣_Z) · A(A, 𝐣)` fitted on the window starting at `start`.
pub fn key_product_window(z: &SuperMatrix, jz: &[i64], a: &SuperMatrix, j: &[i64], start: usize) -> Result<Arc<LongElement>> {
    let key = (z.clone(), jz.to_vec(), a.clone(), j.to_vec(), start);
    if let Some(x) = product_cache().lock().unwrap().get(&key) {
        return Ok(x.clone());
    }
    let n = a.n();
    let base = add_vec(j, jz);
    let mut levels = Vec::new();
    let mut samples = Vec::new();
    let x = loop {
        while levels.len() < WINDOW {
            push_level(z, jz, a, j, start + levels.len(), &mut levels, &mut samples)?;
        }
        match fit_inner(n, &levels, &samples, &base) {
            Ok(x) => break Arc::new(x),
            Err(FitError::Separate(_)) if levels.len() < MAX_WINDOW => {
                push_level(z, jz, a, j, start + levels.len(), &mut levels, &mut samples)?;
            }
            Err(e) => return Err(e.into()),
        }
    };
    product_cache().lock().unwrap().insert(key, x.clone());
    Ok(x)
}

fn push_level(
    z: &SuperMatrix,
    jz: &[i64],
    a: &SuperMatrix,
    j: &[i64],
    r: usize,
    levels: &mut Vec<usize>,
    samples: &mut Vec<SchurElement>,
) -> Result<()> {
    let engine = Schur::shared(a.n(), r);
    samples.push(engine.mul(&eval_long(z, jz, r)?, &eval_long(a, j, r)?)?);
    levels.push(r);
    Ok(())
}

/// `A(Z, 𝐣_Z) · A(A, 𝐣)` from the window at `|A|+1`, checked against the
/// window one level higher.
pub fn key_product(z: &SuperMatrix, jz: &[i64], a: &SuperMatrix, j: &[i64]) -> Result<LongElement> {
    let r0 = first_level(a.size().max(z.size()));
    let lo = key_product_window(z, jz, a, j, r0)?;
    let hi = key_product_window(z, jz, a, j, r0 + 1)?;
    if lo != hi {
        return Err(Error::Stabilization(format!(
            "A({z},{jz:?})·A({a},{j:?}) differs between windows at {r0} and {}",
            r0 + 1
        )));
    }
    Ok((*lo).clone())
}

/// `Z · X` in evaluation mode, key by key.
pub fn gen_mul_eval(s: Symbol, x: &LongElement) -> Result<LongElement> {
    let (z, jz) = s.long_key(x.n())?;
    per_key(s, x, &|a, j| key_product(&z, &jz, a, j), &gen_mul_eval)
}

/// `A(Z,𝐣_Z) · X` in evaluation mode.
pub fn long_mul_eval(z: &SuperMatrix, jz: &[i64], x: &LongElement) -> Result<LongElement> {
    let mut out = LongElement::zero(x.n());
    for ((a, j), c) in x.terms() {
        out.add_scaled(&key_product(z, jz, a, j)?, c);
    }
    Ok(out)
}

/// `Z · X` from a single window (no cross-window check); used when the
/// result is verified by other means.
pub fn gen_mul_eval_fast(s: Symbol, x: &LongElement) -> Result<LongElement> {
    let (z, jz) = s.long_key(x.n())?;
    let direct = |a: &SuperMatrix, j: &[i64]| {
        let r0 = first_level(a.size().max(z.size()));
        key_product_window(&z, &jz, a, j, r0).map(|p| (*p).clone())
    };
    per_key(s, x, &direct, &gen_mul_eval_fast)
}

/// Multiply key by key with `direct`. A non-canonical symbol whose product
/// does not fit falls back to its canonical rewriting, applied with `recur`.
fn per_key(
    s: Symbol,
    x: &LongElement,
    direct: &dyn Fn(&SuperMatrix, &[i64]) -> Result<LongElement>,
    recur: &dyn Fn(Symbol, &LongElement) -> Result<LongElement>,
) -> Result<LongElement> {
    let n = x.n();
    let mut out = LongElement::zero(n);
    for ((a, j), c) in x.terms() {
        let p = match direct(a, j) {
            Err(Error::Stabilization(_)) if !s.is_canonical(n) => {
                let key = LongElement::single(a.clone(), j.clone(), RatFunc::one())?;
                let mut acc = LongElement::zero(n);
                for (k, w) in &canonical_symbol(s, n)?.0 {
                    let mut y = key.clone();
                    for &t in w.iter().rev() {
                        y = recur(t, &y)?;
                    }
                    acc.add_scaled(&y, k);
                }
                acc
            }
            r => r?,
        };
        out.add_scaled(&p, c);
    }
    Ok(out)
}

/// Long-element expansion of a word, built right to left from `A(O,0)`.
pub fn word_expansion(w: &[Symbol], n: usize) -> Result<LongElement> {
    let mut x = LongElement::one(n);
    for &s in w.iter().rev() {
        x = gen_mul_eval_fast(s, &x)?;
    }
    Ok(x)
}

/// Matrices appearing in an expansion.
pub fn matrices(x: &LongElement) -> BTreeSet<SuperMatrix> {
    x.terms().keys().map(|(a, _)| a.clone()).collect()
}
