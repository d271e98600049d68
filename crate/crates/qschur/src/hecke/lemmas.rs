//! Exhaustive checks of the defining relations of `ℋᶜ_r` and of the
//! standard identities between `x_λ`, Clifford sums and telescoping
//! `T`-sums, each side computed independently in the `T_w c^α` basis.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combin::{coset_reps, compositions, d_a, enumerate_nat, Composition, NatMatrix, Permutation};
use crate::hecke::{c_interval, c_super, t_sum, x_lambda, HCElement, PermCode};
use crate::report::Report;
use crate::ring::{qint, qqint, RatFunc};

fn q() -> RatFunc {
    RatFunc::q_pow(1)
}

fn qm1() -> RatFunc {
    &q() - &RatFunc::one()
}

/// `T_{i_1} T_{i_2} ⋯` for the given indices.
pub fn run(r: usize, idx: impl IntoIterator<Item = usize>) -> HCElement {
    let mut e = HCElement::one(r);
    for i in idx {
        e = e.mul_t(i);
    }
    e
}

/// Product of `T_i^{-1}` over the given indices.
fn run_inv(r: usize, idx: impl IntoIterator<Item = usize>) -> HCElement {
    let mut e = HCElement::one(r);
    for i in idx {
        e = &e * &HCElement::t_inv(r, i);
    }
    e
}

fn t_d(a: &NatMatrix) -> HCElement {
    HCElement::t_w(&d_a(a).0)
}

/// `Σ_{σ ∈ 𝒟_{ν_A} ∩ S_{co(A)}} T_σ`.
pub fn coset_sum(a: &NatMatrix) -> HCElement {
    let r = a.size();
    HCElement::from_terms(
        r,
        coset_reps(&a.nu(), &a.co())
            .expect("same size")
            .iter()
            .map(|s| ((PermCode::from_perm(s), 0), RatFunc::one())),
    )
}

fn pm(n: i64) -> usize {
    n.max(0) as usize
}

/// Relations of `ℋᶜ_r`, including the four identities for `T_k^{-1}`.
pub fn relations(r: usize) -> Report {
    let mut rep = Report::new(format!("hecke_relations_r{r}"));
    let one = HCElement::one(r);
    let minus_one = HCElement::scalar(r, RatFunc::int(-1));
    for i in 1..=r {
        let ci = HCElement::c(r, i);
        rep.check_eq(&(&ci * &ci), &minus_one, || format!("c_{i}^2"));
        for j in i + 1..=r {
            let cj = HCElement::c(r, j);
            rep.check_eq(&(&ci * &cj), &-&(&cj * &ci), || format!("c_{i}c_{j}"));
        }
    }
    for i in 1..r {
        let ti = HCElement::t(r, i);
        let lhs = &(&ti - &HCElement::scalar(r, q())) * &(&ti + &one);
        rep.check_eq(&lhs, &HCElement::zero(r), || format!("quadratic T_{i}"));
        for j in i + 1..r {
            let tj = HCElement::t(r, j);
            if j == i + 1 {
                rep.check_eq(&(&(&ti * &tj) * &ti), &(&(&tj * &ti) * &tj), || format!("braid {i}"));
            } else {
                rep.check_eq(&(&ti * &tj), &(&tj * &ti), || format!("T_{i}T_{j} commute"));
            }
        }
        for j in 1..=r {
            let cj = HCElement::c(r, j);
            if j != i && j != i + 1 {
                rep.check_eq(&(&ti * &cj), &(&cj * &ti), || format!("T_{i}c_{j}"));
            }
        }
        let (ci, cn) = (HCElement::c(r, i), HCElement::c(r, i + 1));
        rep.check_eq(&(&ti * &ci), &(&cn * &ti), || format!("T_{i}c_{i}"));
        let rhs = &(&ci * &ti) - &(&ci - &cn).scale(&qm1());
        rep.check_eq(&(&ti * &cn), &rhs, || format!("T_{i}c_{}", i + 1));

        // T_k^{-1} identities
        let tinv = HCElement::t_inv(r, i);
        rep.check_eq(&(&ti * &tinv), &one, || format!("T_{i}T_{i}^-1"));
        rep.check_eq(&(&tinv * &ti), &one, || format!("T_{i}^-1T_{i}"));
        let lhs = tinv.scale(&q());
        rep.check_eq(&lhs, &(&ti - &HCElement::scalar(r, qm1())), || format!("qT_{i}^-1"));
        for alpha in compositions(r.max(1), r).into_iter().filter(|a| a.contains_simple(i)) {
            let x = x_lambda(&alpha);
            rep.check_eq(&(&x * &tinv), &x.scale(&RatFunc::q_pow(-1)), || format!("x_{alpha} T_{i}^-1"));
        }
        let rhs = &(&ci * &tinv).scale(&q()) + &cn.scale(&qm1());
        rep.check_eq(&(&ti * &cn), &rhs, || format!("T_{i}c_{} via inverse", i + 1));
        let rhs = &(&tinv * &cn).scale(&q()) + &ci.scale(&qm1());
        rep.check_eq(&(&ci * &ti), &rhs, || format!("c_{i}T_{i} via inverse"));
    }
    rep
}

fn all_nat(nmax: usize, rmax: usize) -> Vec<NatMatrix> {
    (1..=nmax).flat_map(|n| (1..=rmax).flat_map(move |r| enumerate_nat(n, r))).collect()
}

/// Both parts of the shift lemma relating `T_{d_A}` and `T_{d_{A^±_{h,k}}}`.
pub fn pjshift(nmax: usize, rmax: usize) -> Report {
    let mut rep = Report::new("lemma_pjshift");
    for a in all_nat(nmax, rmax) {
        let (n, r) = (a.n(), a.size());
        let lam = a.ro().partial_sums();
        for h in 1..n {
            for k in 1..=n {
                if a.get(h + 1, k) > 0 {
                    let ap = a.shift(h, k, true).unwrap().unwrap();
                    let (lo, hi) = (a.rowpre(h + 1, k), a.rowpre(h + 1, k + 1));
                    let at = a.atilde(h, k);
                    let mut lhs = HCElement::zero(r);
                    let mut tail = HCElement::zero(r);
                    for j in lo..hi {
                        lhs = &lhs + &run(r, (1..=j).map(|t| lam[h] + t));
                        tail = &tail + &run(r, (1..=j - lo).map(|t| at + t));
                    }
                    let lhs = &lhs * &t_d(&a);
                    let head = run(r, (0..a.rowsuf(h, k)).map(|t| lam[h] - t));
                    let rhs = &(&head * &t_d(&ap)) * &tail;
                    rep.check_eq(&lhs, &rhs, || format!("(1) A={a:?} h={h} k={k}"));
                }
                if a.get(h, k) > 0 {
                    let am = a.shift(h, k, false).unwrap().unwrap();
                    let bk_prev = if k == 1 { a.ro().parts[h - 1] } else { a.rowsuf(h, k - 1) };
                    let (lo, hi) = (a.rowsuf(h, k), bk_prev);
                    let at = a.atilde(h, k);
                    let mut lhs = HCElement::zero(r);
                    let mut tail = HCElement::zero(r);
                    for j in lo..hi {
                        lhs = &lhs + &run(r, (1..=j).map(|t| lam[h] - t));
                        tail = &tail + &run(r, (1..=j - lo).map(|t| at - t));
                    }
                    let lhs = &lhs * &t_d(&a);
                    let head = run(r, (0..a.rowpre(h + 1, k)).map(|t| lam[h] + t));
                    let rhs = &(&head * &t_d(&am)) * &tail;
                    rep.check_eq(&lhs, &rhs, || format!("(2) A={a:?} h={h} k={k}"));
                }
            }
        }
    }
    rep
}

/// Telescoping sums against the coset sums `Σ T_σ`.
pub fn tnsum(nmax: usize, rmax: usize) -> Report {
    let mut rep = Report::new("lemma_tnsum");
    for a in all_nat(nmax, rmax) {
        let (n, r) = (a.n(), a.size());
        for h in 1..n {
            for k in 1..=n {
                let at = a.atilde(h, k) as i64;
                let (ahk, ah1k) = (a.get(h, k) as i64, a.get(h + 1, k) as i64);
                if ah1k >= 1 {
                    let ap = a.shift(h, k, true).unwrap().unwrap();
                    let lhs = &t_sum(r, pm(at + 1), pm(at + ah1k - 1), true) * &coset_sum(&a);
                    let rhs = &t_sum(r, pm(at), pm(at - ahk + 1), false) * &coset_sum(&ap);
                    rep.check_eq(&lhs, &rhs, || format!("(1) A={a:?} h={h} k={k}"));
                }
                if ahk >= 1 {
                    let am = a.shift(h, k, false).unwrap().unwrap();
                    let lhs = &t_sum(r, pm(at - 1), pm(at - ahk + 1), false) * &coset_sum(&a);
                    let rhs = &t_sum(r, pm(at), pm(at + ah1k - 1), true) * &coset_sum(&am);
                    rep.check_eq(&lhs, &rhs, || format!("(2) A={a:?} h={h} k={k}"));
                }
            }
        }
    }
    rep
}

/// `(α, u, j)` with `u + j ≤ r − 1 − extra` and `s_{u+1}, …, s_{u+j} ∈ S_α`.
fn admissible(nmax: usize, rmax: usize, extra: usize) -> Vec<(Composition, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        for r in 2..=rmax {
            for alpha in compositions(n, r) {
                for u in 1..r {
                    for j in 0..r {
                        if u + j + extra > r - 1 {
                            break;
                        }
                        if (u + 1..=u + j).all(|i| alpha.contains_simple(i)) {
                            out.push((alpha.clone(), u, j));
                        }
                    }
                }
            }
        }
    }
    out
}

/// `x_α` against telescoping sums and products of inverses.
pub fn xtinverse(nmax: usize, rmax: usize) -> Report {
    let mut rep = Report::new("lemma_xtinverse");
    for (alpha, u, j) in admissible(nmax, rmax, 0) {
        let r = alpha.r();
        let x = x_lambda(&alpha);
        if alpha.contains_simple(u) {
            let expected = x.scale(&qint(j as u32 + 2));
            rep.check_eq(&(&x * &t_sum(r, u, u + j, true)), &expected, || format!("(1) asc α={alpha} u={u} j={j}"));
            rep.check_eq(&(&x * &t_sum(r, u + j, u, false)), &expected, || format!("(1) desc α={alpha} u={u} j={j}"));
        }
        let lhs = &x * &run_inv(r, u..=u + j);
        let p = RatFunc::q_pow(-1 - j as i64);
        // T^{(u,u-1)} = 1 covers j = 0
        let rhs = &(&x * &run(r, u..=u + j)).scale(&p) - &(&x * &t_sum(r, u, u + j - 1, true)).scale(&(&p * &qm1()));
        rep.check_eq(&lhs, &rhs, || format!("(2) α={alpha} u={u} j={j}"));
    }
    rep
}

/// `x_α c_u` against products and sums of `T`'s, plus `(c_{q,i,j})^2`.
pub fn xct(nmax: usize, rmax: usize) -> Report {
    let mut rep = Report::new("lemma_xct");
    for (alpha, u, j) in admissible(nmax, rmax, 1) {
        let r = alpha.r();
        let x = x_lambda(&alpha);
        let xc = &x * &HCElement::c(r, u);
        // (1)
        let lhs = &xc * &run(r, u..=u + j);
        let mut sum = HCElement::zero(r);
        for k in 0..=j {
            sum = &sum + &(&run_inv(r, u..u + k) * &HCElement::c(r, u + k));
        }
        let last = &run_inv(r, u..=u + j) * &HCElement::c(r, u + j + 1);
        let rhs = &(&x * &sum).scale(&(&qm1() * &RatFunc::q_pow(j as i64))) + &(&x * &last).scale(&RatFunc::q_pow(j as i64 + 1));
        rep.check_eq(&lhs, &rhs, || format!("(1) α={alpha} u={u} j={j}"));
        // (2)
        let lhs = &xc * &t_sum(r, u, u + j, true);
        let mut sum = HCElement::zero(r);
        for k in 0..=j + 1 {
            sum = &sum + &(&run_inv(r, u..u + k) * &HCElement::c(r, u + k));
        }
        let rhs = (&x * &sum).scale(&RatFunc::q_pow(j as i64 + 1));
        rep.check_eq(&lhs, &rhs, || format!("(2) α={alpha} u={u} j={j}"));
        if alpha.contains_simple(u) {
            let rhs = &x * &c_interval(r, u, u + j + 1, false).unwrap();
            rep.check_eq(&lhs, &rhs, || format!("(2') α={alpha} u={u} j={j}"));
        }
    }
    // (3): s_u, s_{u-1}, …, s_{u-j} ∈ S_α
    for n in 1..=nmax {
        for r in 2..=rmax {
            for alpha in compositions(n, r) {
                for u in 1..r {
                    for j in 0..u {
                        if !(u - j..=u).all(|i| alpha.contains_simple(i)) {
                            continue;
                        }
                        let x = x_lambda(&alpha);
                        let lhs = &(&x * &HCElement::c(r, u + 1)) * &t_sum(r, u, u - j, false);
                        let rhs = &x * &c_interval(r, u - j, u + 1, false).unwrap();
                        rep.check_eq(&lhs, &rhs, || format!("(3) α={alpha} u={u} j={j}"));
                    }
                }
            }
        }
    }
    // (4)
    for r in 1..=rmax {
        for i in 1..=r {
            for j in i..=r {
                let c = c_interval(r, i, j, false).unwrap();
                let expected = HCElement::scalar(r, -qqint((j - i + 1) as u32));
                rep.check_eq(&(&c * &c), &expected, || format!("(4) r={r} i={i} j={j}"));
            }
        }
    }
    rep
}

/// `x_λ c^α_λ = (c^α_λ)' x_λ` for `α ≤ λ`.
pub fn xc(nmax: usize, rmax: usize) -> Report {
    let mut rep = Report::new("eq_xc");
    for n in 1..=nmax {
        for r in 1..=rmax {
            for lam in compositions(n, r) {
                for mask in 0u32..(1 << n) {
                    let alpha: Vec<usize> = (0..n).map(|i| ((mask >> i) & 1) as usize).collect();
                    if alpha.iter().zip(&lam.parts).any(|(a, l)| a > l) {
                        continue;
                    }
                    let x = x_lambda(&lam);
                    let lhs = &x * &c_super(&lam, &alpha, false);
                    let rhs = &c_super(&lam, &alpha, true) * &x;
                    rep.check_eq(&lhs, &rhs, || format!("λ={lam} α={alpha:?}"));
                }
            }
        }
    }
    rep
}

fn random_element(r: usize, rng: &mut ChaCha8Rng) -> HCElement {
    let mut x = HCElement::zero(r);
    for _ in 0..rng.gen_range(1..=3) {
        let mut img: Vec<usize> = (1..=r).collect();
        img.shuffle(rng);
        let w = PermCode::from_perm(&Permutation::from_one_line(img).expect("shuffled identity"));
        let alpha = rng.gen_range(0..1u32 << r);
        let c = &RatFunc::v_pow(rng.gen_range(-2..=2)) * &RatFunc::int(rng.gen_range(-3..=3));
        x.add_scaled(&HCElement::basis(r, w, alpha), &c);
    }
    x
}

/// `(xy)z = x(yz)` on `samples` random triples of short combinations of
/// basis elements, drawn from ChaCha8 seeded with `seed`.
pub fn associativity(r: usize, samples: usize, seed: u64) -> Report {
    let mut rep = Report::new(format!("hecke_associativity_r{r}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ r as u64);
    for k in 0..samples {
        let (x, y, z) = (random_element(r, &mut rng), random_element(r, &mut rng), random_element(r, &mut rng));
        rep.check_eq(&(&(&x * &y) * &z), &(&x * &(&y * &z)), || format!("triple {k}"));
    }
    rep
}
