//! The semi-direct-product (SDP) condition, decided by comparing both sides
//! of `c_{λ̃_{h−1}+𝐚(h,k)+p} T_{d_A} = T_{d_A} c_{ã_{h−1,k}+p}` in `ℋᶜ_{|A|}`.

use serde_json::json;

use crate::combin::{compositions, d_a, enumerate_nat, enumerate_star, enumerate_super, NatMatrix, SuperMatrix};
use crate::error::{Error, Result};
use crate::hecke::HCElement;
use crate::report::Report;

/// SDP at `(h,k)`; requires `a_{h,k} > 0`.
pub fn sdp_at(a: &NatMatrix, h: usize, k: usize) -> Result<bool> {
    let n = a.n();
    if h == 0 || h > n || k == 0 || k > n {
        return Err(Error::IndexOutOfRange(format!("({h},{k}) for n = {n}")));
    }
    if a.get(h, k) == 0 {
        return Err(Error::Precondition(format!("a_{{{h},{k}}} = 0")));
    }
    let r = a.size();
    let td = HCElement::t_w(&d_a(a).0);
    let lam = a.ro().partial_sums();
    let left_base = lam[h - 1] + a.rowpre(h, k);
    let right_base = a.atilde(h - 1, k);
    for p in 1..=a.get(h, k) {
        let lhs = &HCElement::c(r, left_base + p) * &td;
        let rhs = &td * &HCElement::c(r, right_base + p);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`sdp_at`] on `hat(A)`.
pub fn sdp_at_super(a: &SuperMatrix, h: usize, k: usize) -> Result<bool> {
    sdp_at(&a.hat(), h, k)
}

/// SDP at every `(h,k)` with `a_{h,k} ≥ 1`; vacuous for a zero row.
pub fn sdp_row(a: &NatMatrix, h: usize) -> Result<bool> {
    for k in 1..=a.n() {
        if a.get(h, k) > 0 && !sdp_at(a, h, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn sdp_row_super(a: &SuperMatrix, h: usize) -> Result<bool> {
    sdp_row(&a.hat(), h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `(A+λ)` satisfies SDP on row `h`.
    Diag,
    /// `(A+λ)^+_{h,k}` satisfies SDP at `(h,k)` whenever `(A+λ)_{h+1,k} ≥ 1`.
    Plus,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diag" => Ok(Family::Diag),
            "plus" => Ok(Family::Plus),
            _ => Err(Error::Malformed(format!("unknown family {s:?}"))),
        }
    }
}

/// Whether `A` itself satisfies the hypothesis of the given family at row `h`.
pub fn sdp_hypothesis(a: &SuperMatrix, h: usize, variant: Family) -> Result<bool> {
    let hat = a.hat();
    match variant {
        Family::Diag => sdp_row(&hat, h),
        Family::Plus => {
            if h >= a.n() {
                return Err(Error::IndexOutOfRange(format!("row {h} has no successor")));
            }
            for k in 1..=a.n() {
                if hat.get(h + 1, k) >= 1 {
                    let ap = hat.shift(h, k, true)?.expect("entry is positive");
                    if !sdp_at(&ap, h, k)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
    }
}

/// The hypothesis over all `(A⁰+λ | A¹)`, `λ ∈ Λ(n, r−|A|)`.
pub fn sdp_family(a: &SuperMatrix, h: usize, r: usize, variant: Family) -> Result<bool> {
    let s = a.size();
    if r < s {
        return Err(Error::Precondition(format!("r = {r} < |A| = {s}")));
    }
    for lam in compositions(a.n(), r - s) {
        if !sdp_hypothesis(&a.add_diag(&lam.parts), h, variant)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sufficient criterion: `d_A = 1` gives SDP at every nonzero entry.
pub fn check_trivial_d(nmax: usize, rmax: usize) -> Report {
    let mut rep = Report::new("sdp_trivial_d");
    for n in 1..=nmax {
        for r in 1..=rmax {
            for a in enumerate_super(n, r) {
                let hat = a.hat();
                if !d_a(&hat).0.is_identity() {
                    continue;
                }
                for h in 1..=n {
                    for k in 1..=n {
                        if hat.get(h, k) > 0 {
                            let ok = sdp_at(&hat, h, k).unwrap();
                            rep.record((!ok).then(|| json!({"A": a, "h": h, "k": k})));
                        }
                    }
                }
            }
        }
    }
    rep
}

/// Sufficient criterion: the last row always satisfies SDP.
pub fn check_last_row(nmax: usize, rmax: usize) -> Report {
    let mut rep = Report::new("sdp_last_row");
    for n in 1..=nmax {
        for r in 1..=rmax {
            for a in enumerate_nat(n, r) {
                let ok = sdp_row(&a, n).unwrap();
                rep.record((!ok).then(|| json!({"A": a, "row": n})));
            }
        }
    }
    rep
}

/// Whether `a_{i,j} = 0` for `i > j`, and for `i < j` with `j > k`.
pub fn is_special_shape(a: &NatMatrix, k: usize) -> bool {
    let n = a.n();
    (1..=n).all(|i| (1..=n).all(|j| a.get(i, j) == 0 || i == j || (i < j && j <= k)))
}

/// Sufficient criterion for upper-triangular shapes supported in columns
/// `≤ k` off the diagonal: SDP at `(k−1,k)` and `(k,k)`, also after the
/// shift `(A+λ)^+_{k−1,k}` for `A ∈ M*(n|ℤ₂)`.
pub fn check_special_shape(nmax: usize, rmax: usize) -> Report {
    let mut rep = Report::new("sdp_special_shape");
    for n in 1..=nmax {
        for r in 1..=rmax {
            for a in enumerate_nat(n, r) {
                for k in 1..=n {
                    if !is_special_shape(&a, k) {
                        continue;
                    }
                    if k >= 2 && a.get(k - 1, k) > 0 {
                        let ok = sdp_at(&a, k - 1, k).unwrap();
                        rep.record((!ok).then(|| json!({"A": a, "at": [k - 1, k]})));
                    }
                    if a.get(k, k) > 0 {
                        let ok = sdp_at(&a, k, k).unwrap();
                        rep.record((!ok).then(|| json!({"A": a, "at": [k, k]})));
                    }
                }
            }
        }
        for s in 0..=rmax {
            for a in enumerate_star(n, s) {
                let hat = a.hat();
                for k in 2..=n {
                    if !is_special_shape(&hat, k) || (k + 1..=n).any(|j| hat.get(j, j) > 0) {
                        continue;
                    }
                    for r in s + 1..=rmax {
                        for lam in compositions(n, r - s) {
                            let m = a.add_diag(&lam.parts).hat();
                            if m.get(k, k) == 0 {
                                continue;
                            }
                            let plus = m.shift(k - 1, k, true).unwrap().unwrap();
                            let ok = sdp_at(&plus, k - 1, k).unwrap();
                            rep.record((!ok).then(|| json!({"A": a, "lambda": lam, "plus_at": [k - 1, k]})));
                            let ok = sdp_at(&m, k, k).unwrap();
                            rep.record((!ok).then(|| json!({"A": a, "lambda": lam, "at": [k, k]})));
                        }
                    }
                }
            }
        }
    }
    rep
}

/// First `(A, h, k)` (in enumeration order) at which SDP fails.
pub fn find_counterexample(n: usize, rmax: usize) -> Option<(NatMatrix, usize, usize)> {
    for r in 1..=rmax {
        for a in enumerate_nat(n, r) {
            for h in 1..=n {
                for k in 1..=n {
                    if a.get(h, k) > 0 && !sdp_at(&a, h, k).unwrap() {
                        return Some((a, h, k));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_upper_examples() {
        let d = NatMatrix::diag(&[2, 1]);
        assert!(sdp_at(&d, 1, 1).unwrap());
        let a = NatMatrix::from_rows(&[vec![1, 2], vec![0, 1]]).unwrap();
        assert!(sdp_at(&a, 1, 2).unwrap());
        assert!(sdp_at(&d, 1, 2).is_err());
    }

    #[test]
    fn family_examples() {
        let o = SuperMatrix::zero(2);
        for r in 0..=3 {
            assert!(sdp_family(&o, 1, r, Family::Diag).unwrap());
            assert!(sdp_family(&o, 2, r, Family::Diag).unwrap());
        }
        let e12 = SuperMatrix::even_only(NatMatrix::unit(2, 1, 2));
        assert!(sdp_family(&e12, 1, 2, Family::Plus).unwrap());
        assert!(sdp_family(&e12, 1, 0, Family::Plus).is_err());
    }
}
