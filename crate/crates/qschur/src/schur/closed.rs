//! Closed multiplication formulas `φ_X φ_A` for the six left-factor shapes
//! and the four special products. Illegal matrices in a formula are
//! dropped (the vanishing convention), via [`SuperMatrix::adjust`].

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combin::{Composition, SuperMatrix};
use crate::error::{Error, Result};
use crate::ring::{step, step_diff, RatFunc};
use crate::schur::{Basis, SchurElement};
use crate::sdp::{sdp_hypothesis, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// `(λ|O)`
    Diag,
    /// `(λ + E_{h,h+1} − E_{h+1,h+1}|O)`
    UpperEven,
    /// `(λ − E_{h,h} + E_{h+1,h}|O)`
    LowerEven,
    /// `(λ − E_{h,h}|E_{h,h})`
    DiagOdd,
    /// `(λ − E_{h+1,h+1}|E_{h,h+1})`
    UpperOdd,
    /// `(λ − E_{h,h}|E_{h+1,h})`
    LowerOdd,
}

impl Kind {
    pub const ALL: [Kind; 6] = [Kind::Diag, Kind::UpperEven, Kind::LowerEven, Kind::DiagOdd, Kind::UpperOdd, Kind::LowerOdd];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Diag => "diag",
            Kind::UpperEven => "upper_even",
            Kind::LowerEven => "lower_even",
            Kind::DiagOdd => "diag_odd",
            Kind::UpperOdd => "upper_odd",
            Kind::LowerOdd => "lower_odd",
        }
    }

    /// Whether `h` ranges over `[1, n]` rather than `[1, n−1]`.
    fn diagonal(self) -> bool {
        matches!(self, Kind::Diag | Kind::DiagOdd)
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown kind {s:?}")))
    }
}

/// The four special products with `μ ∈ Λ(n, r−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Special {
    /// `φ_{(μ|E_{h,h+1})} φ_{(μ+E_{h+1,h}|O)}`
    Upper1,
    /// `φ_{(μ|E_{h,h+1})} φ_{(μ|E_{h+1,h})}`
    Upper2,
    /// `φ_{(μ|E_{h+1,h})} φ_{(μ+E_{h,h+1}|O)}`
    Lower1,
    /// `φ_{(μ|E_{h+1,h})} φ_{(μ|E_{h,h+1})}`
    Lower2,
}

impl Special {
    pub const ALL: [Special; 4] = [Special::Upper1, Special::Upper2, Special::Lower1, Special::Lower2];
}

fn q(e: i64) -> RatFunc {
    RatFunc::q_pow(e)
}

pub(crate) fn sign(e: usize) -> RatFunc {
    RatFunc::int(if e % 2 == 0 { 1 } else { -1 })
}

/// `[[m]]_q`
pub(crate) fn step_q(m: usize) -> RatFunc {
    RatFunc::from_poly(step(m as u32, 2))
}

/// `[[m]]_{q²}`
pub(crate) fn step_qq(m: usize) -> RatFunc {
    RatFunc::from_poly(step(m as u32, 4))
}

/// `[[m]]_q − [[m]]_{q²}`
pub(crate) fn step_pd(m: usize) -> RatFunc {
    RatFunc::from_poly(step_diff(m as u32, 2, 4))
}

/// `[[m]]_{q²} − [[m]]_q`
pub(crate) fn step_pdr(m: usize) -> RatFunc {
    RatFunc::from_poly(step_diff(m as u32, 4, 2))
}

fn check_h(kind: Kind, n: usize, h: usize) -> Result<()> {
    let max = if kind.diagonal() { n } else { n - 1 };
    if h == 0 || h > max {
        return Err(Error::IndexOutOfRange(format!("h = {h} for {} with n = {n}", kind.name())));
    }
    Ok(())
}

/// The left factor `X` of the given shape.
pub fn left_factor(kind: Kind, h: usize, lambda: &Composition) -> Result<SuperMatrix> {
    let n = lambda.n();
    check_h(kind, n, h)?;
    let d = SuperMatrix::diag(&lambda.parts);
    let x = match kind {
        Kind::Diag => Some(d),
        Kind::UpperEven => d.adjust(&[(h, h + 1, 1), (h + 1, h + 1, -1)], &[]),
        Kind::LowerEven => d.adjust(&[(h, h, -1), (h + 1, h, 1)], &[]),
        Kind::DiagOdd => d.adjust(&[(h, h, -1)], &[(h, h, 1)]),
        Kind::UpperOdd => d.adjust(&[(h + 1, h + 1, -1)], &[(h, h + 1, 1)]),
        Kind::LowerOdd => d.adjust(&[(h, h, -1)], &[(h + 1, h, 1)]),
    };
    x.ok_or_else(|| Error::Precondition(format!("{} left factor needs a positive diagonal entry in {lambda}", kind.name())))
}

/// Whether `A` meets the hypothesis the formula for `kind` requires.
pub fn hypothesis_holds(kind: Kind, h: usize, a: &SuperMatrix) -> Result<bool> {
    match kind {
        Kind::Diag | Kind::UpperEven | Kind::LowerEven => Ok(true),
        Kind::DiagOdd | Kind::LowerOdd => sdp_hypothesis(a, h, Family::Diag),
        Kind::UpperOdd => sdp_hypothesis(a, h, Family::Plus),
    }
}

struct Out(SchurElement);

impl Out {
    fn add(&mut self, m: Option<SuperMatrix>, c: RatFunc) {
        if let Some(m) = m {
            self.0.add_term(m, c);
        }
    }
}

/// `φ_X φ_A` by the closed formula, with `X = left_factor(kind, h, λ)`.
/// Zero when `λ ≠ ro(A)` (since `co(X) = λ`). Odd kinds refuse with
/// [`Error::Hypothesis`] when the SDP hypothesis fails.
pub fn phi_mul_closed(kind: Kind, h: usize, lambda: &Composition, a: &SuperMatrix) -> Result<SchurElement> {
    let n = a.n();
    if lambda.n() != n || lambda.r() != a.size() {
        return Err(Error::SizeMismatch(format!("λ = {lambda} against {a}")));
    }
    left_factor(kind, h, lambda)?;
    let mut out = Out(SchurElement::zero(n, a.size(), Basis::Plain));
    if *lambda != a.ro() {
        return Ok(out.0);
    }
    if kind == Kind::Diag {
        out.0.add_term(a.clone(), RatFunc::one());
        return Ok(out.0);
    }
    if !hypothesis_holds(kind, h, a)? {
        return Err(Error::Hypothesis(format!("{} at h = {h} requires the SDP condition for {a}", kind.name())));
    }
    let hat = a.hat();
    for k in 1..=n {
        let ahk = hat.get(h, k);
        let e = |i, j| a.e(i, j);
        let o = |i, j| a.o(i, j);
        let b = hat.rowsuf(h, k) as i64;
        // partial sum at (h−1,k) of the odd part
        let ot = a.odd.atilde(h - 1, k);
        match kind {
            Kind::Diag => unreachable!(),
            Kind::UpperEven => {
                let o1 = o(h + 1, k) as i64;
                out.add(a.adjust(&[(h, k, 1), (h + 1, k, -1)], &[]), &q(b + o1) * &step_q(e(h, k) + 1));
                out.add(a.adjust(&[], &[(h, k, 1), (h + 1, k, -1)]), q(b));
                out.add(a.adjust(&[(h, k, 2)], &[(h, k, -1), (h + 1, k, -1)]), &q(b - 1) * &step_pd(ahk + 1));
            }
            Kind::LowerEven => {
                let ak = hat.rowpre(h + 1, k) as i64;
                let ah1k = hat.get(h + 1, k);
                out.add(a.adjust(&[(h, k, -1), (h + 1, k, 1)], &[]), &q(ak) * &step_q(e(h + 1, k) + 1));
                out.add(a.adjust(&[], &[(h, k, -1), (h + 1, k, 1)]), q(ak + ahk as i64 - 1));
                out.add(
                    a.adjust(&[(h + 1, k, 2)], &[(h, k, -1), (h + 1, k, -1)]),
                    -(&q(ak + ahk as i64 - 2) * &step_pdr(ah1k + 1)),
                );
            }
            Kind::DiagOdd => {
                let c = &sign(ot) * &q(b);
                out.add(a.adjust(&[(h, k, -1)], &[(h, k, 1)]), c.clone());
                out.add(a.adjust(&[(h, k, 1)], &[(h, k, -1)]), -(&c * &step_qq(ahk)));
            }
            Kind::UpperOdd => {
                let o1 = o(h + 1, k) as i64;
                out.add(a.adjust(&[(h + 1, k, -1)], &[(h, k, 1)]), &sign(ot) * &q(b + o1));
                out.add(
                    a.adjust(&[(h, k, 1)], &[(h + 1, k, -1)]),
                    &(&sign(ot + 1 + o(h, k)) * &q(b)) * &step_q(e(h, k) + 1),
                );
                out.add(
                    a.adjust(&[(h, k, 2), (h + 1, k, -1)], &[(h, k, -1)]),
                    &(&sign(ot) * &q(b - 1 + o1)) * &step_pdr(ahk + 1),
                );
            }
            Kind::LowerOdd => {
                let ak = hat.rowpre(h + 1, k) as i64;
                let ah1k = hat.get(h + 1, k);
                out.add(a.adjust(&[(h, k, -1)], &[(h + 1, k, 1)]), &sign(ot + o(h, k)) * &q(ak));
                out.add(
                    a.adjust(&[(h, k, -1), (h + 1, k, 2)], &[(h + 1, k, -1)]),
                    &(&sign(ot + o(h, k) + 1) * &q(ak - 1)) * &step_pdr(ah1k + 1),
                );
                out.add(
                    a.adjust(&[(h + 1, k, 1)], &[(h, k, -1)]),
                    &(&sign(ot + 1) * &q(ak + ahk as i64 - 1)) * &step_q(e(h + 1, k) + 1),
                );
            }
        }
    }
    Ok(out.0)
}

/// The factors `(X, A)` of a special product.
pub fn special_factors(which: Special, h: usize, mu: &Composition) -> Result<(SuperMatrix, SuperMatrix)> {
    let n = mu.n();
    if h == 0 || h >= n {
        return Err(Error::IndexOutOfRange(format!("h = {h} with n = {n}")));
    }
    let d = SuperMatrix::diag(&mu.parts);
    let up = d.adjust(&[], &[(h, h + 1, 1)]).expect("legal");
    let low = d.adjust(&[], &[(h + 1, h, 1)]).expect("legal");
    Ok(match which {
        Special::Upper1 => (up, d.adjust(&[(h + 1, h, 1)], &[]).expect("legal")),
        Special::Upper2 => (up, low),
        Special::Lower1 => (low, d.adjust(&[(h, h + 1, 1)], &[]).expect("legal")),
        Special::Lower2 => (low, up),
    })
}

/// Closed form of a special product.
pub fn special_closed(which: Special, h: usize, mu: &Composition) -> Result<SchurElement> {
    special_factors(which, h, mu)?;
    let n = mu.n();
    let d = SuperMatrix::diag(&mu.parts);
    let mut out = Out(SchurElement::zero(n, mu.r() + 1, Basis::Plain));
    let (mh, mh1) = (mu.parts[h - 1], mu.parts[h] as i64);
    let qm1 = &q(1) - &RatFunc::one();
    match which {
        Special::Upper1 => {
            out.add(d.adjust(&[(h + 1, h + 1, -1), (h + 1, h, 1)], &[(h, h + 1, 1)]), RatFunc::one());
            out.add(d.adjust(&[], &[(h, h, 1)]), q(mh1));
            out.add(d.adjust(&[(h + 1, h + 1, -1), (h, h, 1)], &[(h + 1, h + 1, 1)]), -(&qm1 * &step_q(mh + 1)));
        }
        Special::Upper2 => {
            out.add(d.adjust(&[(h, h, 1)], &[]), -(&step_q(mh + 1) * &q(mh1)));
            out.add(d.adjust(&[(h + 1, h + 1, -1)], &[(h, h + 1, 1), (h + 1, h, 1)]), RatFunc::int(-1));
            out.add(d.adjust(&[(h + 1, h + 1, -1)], &[(h, h, 1), (h + 1, h + 1, 1)]), qm1);
        }
        Special::Lower1 => {
            out.add(d.adjust(&[(h, h, -1), (h, h + 1, 1)], &[(h + 1, h, 1)]), RatFunc::one());
            out.add(d.adjust(&[], &[(h + 1, h + 1, 1)]), RatFunc::one());
        }
        Special::Lower2 => {
            out.add(d.adjust(&[(h, h, -1)], &[(h, h + 1, 1), (h + 1, h, 1)]), RatFunc::one());
            out.add(d.adjust(&[(h + 1, h + 1, 1)], &[]), -step_q(mu.parts[h] + 1));
        }
    }
    Ok(out.0)
}
