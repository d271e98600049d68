//! Defining relations of `U_v(q_n)` checked on their images in `Q̃(n,r)`,
//! plus the auxiliary identities used to establish them.

use rayon::prelude::*;
use serde_json::json;

use super::words::{wordsum_apply, Symbol, WordSum};
use super::{eval_long, even_unit};
use crate::error::Result;
use crate::report::Report;
use crate::ring::RatFunc;
use crate::schur::{Basis, Schur, SchurElement};

/// A named identity `lhs = rhs` between combinations of words.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: WordSum,
    pub rhs: WordSum,
}

impl Relation {
    fn new(name: String, lhs: WordSum, rhs: WordSum) -> Self {
        Self { name, lhs, rhs }
    }

    /// Both sides at level `r`; `None` when they agree.
    pub fn check(&self, n: usize, r: usize) -> Result<Option<SchurElement>> {
        let l = wordsum_apply(&self.lhs, n, r)?;
        let rr = wordsum_apply(&self.rhs, n, r)?;
        let d = &l - &rr;
        Ok(if d.is_zero() { None } else { Some(d) })
    }
}

fn v(e: i64) -> RatFunc {
    RatFunc::v_pow(e)
}

fn int(x: i64) -> RatFunc {
    RatFunc::int(x)
}

fn w(s: &[Symbol]) -> WordSum {
    WordSum::word(s.to_vec())
}

fn t(c: RatFunc, s: &[Symbol]) -> WordSum {
    WordSum::term(c, s.to_vec())
}

fn one() -> WordSum {
    w(&[])
}

/// `ab − c·ba`.
fn comm(a: &[Symbol], b: &[Symbol], c: RatFunc) -> WordSum {
    let ab: Vec<Symbol> = a.iter().chain(b).copied().collect();
    let ba: Vec<Symbol> = b.iter().chain(a).copied().collect();
    w(&ab).plus(t(-c, &ba))
}

fn div(a: &RatFunc, b: &RatFunc) -> RatFunc {
    a / b
}

use Symbol::{GBar as Kb, GInv as Ki, XBar as Eb, YBar as Fb, G as K, X as E, Y as F};

/// Every instance of (QQ1)–(QQ6) for `U_v(q_n)`, with `E ↦ X`, `Ē ↦ X̄`,
/// `F ↦ Y`, `F̄ ↦ Ȳ`, `K^{±1} ↦ G^{±1}`, `K̄ ↦ Ḡ`.
pub fn qq_relations(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut push = |name: String, lhs: WordSum, rhs: WordSum| out.push(Relation::new(name, lhs, rhs));
    let zero = WordSum::zero;
    let vv = |a: i64| v(a);
    let ip = |i: usize, j: usize| -> i64 { (i == j) as i64 - (i == j + 1) as i64 };

    // QQ1
    for i in 1..=n {
        push(format!("QQ1 K{i} K{i}^-1 = 1"), w(&[K(i), Ki(i)]), one());
        push(format!("QQ1 K{i}^-1 K{i} = 1"), w(&[Ki(i), K(i)]), one());
        for j in 1..=n {
            if i < j {
                push(format!("QQ1 K{i} K{j} = K{j} K{i}"), w(&[K(i), K(j)]), w(&[K(j), K(i)]));
            }
            push(format!("QQ1 K{i} Kbar{j} = Kbar{j} K{i}"), w(&[K(i), Kb(j)]), w(&[Kb(j), K(i)]));
            if i <= j {
                let rhs = if i == j {
                    let c = div(&int(2), &(&vv(2) - &vv(-2)));
                    t(c.clone(), &[K(i), K(i)]).plus(t(-c, &[Ki(i), Ki(i)]))
                } else {
                    zero()
                };
                push(format!("QQ1 Kbar{i} Kbar{j} + Kbar{j} Kbar{i}"), comm(&[Kb(i)], &[Kb(j)], int(-1)), rhs);
            }
        }
    }
    // QQ2
    for i in 1..=n {
        for j in 1..n {
            let e = ip(i, j);
            for (name, s) in [("E", E(j)), ("Ebar", Eb(j))] {
                push(format!("QQ2 K{i} {name}{j}"), w(&[K(i), s]), t(vv(e), &[s, K(i)]));
            }
            for (name, s) in [("F", F(j)), ("Fbar", Fb(j))] {
                push(format!("QQ2 K{i} {name}{j}"), w(&[K(i), s]), t(vv(-e), &[s, K(i)]));
            }
        }
    }
    // QQ3
    for i in 1..=n {
        if i < n {
            push(format!("QQ3 Kbar{i} E{i}"), comm(&[Kb(i)], &[E(i)], vv(1)), w(&[Eb(i), Ki(i)]));
            push(format!("QQ3 Kbar{i} F{i}"), comm(&[Kb(i)], &[F(i)], vv(1)), t(int(-1), &[Fb(i), K(i)]));
            push(format!("QQ3 Kbar{i} Ebar{i}"), comm(&[Kb(i)], &[Eb(i)], -vv(1)), w(&[E(i), Ki(i)]));
            push(format!("QQ3 Kbar{i} Fbar{i}"), comm(&[Kb(i)], &[Fb(i)], -vv(1)), w(&[F(i), K(i)]));
        }
        if i > 1 {
            let p = i - 1;
            let lhs = |x: Symbol, c: i64| t(vv(1), &[Kb(i), x]).plus(t(int(c), &[x, Kb(i)]));
            push(format!("QQ3 Kbar{i} E{p}"), lhs(E(p), -1), t(int(-1), &[Ki(i), Eb(p)]));
            push(format!("QQ3 Kbar{i} F{p}"), lhs(F(p), -1), w(&[K(i), Fb(p)]));
            push(format!("QQ3 Kbar{i} Ebar{p}"), lhs(Eb(p), 1), w(&[Ki(i), E(p)]));
            push(format!("QQ3 Kbar{i} Fbar{p}"), lhs(Fb(p), 1), w(&[K(i), F(p)]));
        }
        for j in 1..n {
            if j == i || j + 1 == i {
                continue;
            }
            push(format!("QQ3 Kbar{i} E{j}"), comm(&[Kb(i)], &[E(j)], int(1)), zero());
            push(format!("QQ3 Kbar{i} F{j}"), comm(&[Kb(i)], &[F(j)], int(1)), zero());
            push(format!("QQ3 Kbar{i} Ebar{j}"), comm(&[Kb(i)], &[Eb(j)], int(-1)), zero());
            push(format!("QQ3 Kbar{i} Fbar{j}"), comm(&[Kb(i)], &[Fb(j)], int(-1)), zero());
        }
    }
    // QQ4
    let vd = &vv(1) - &vv(-1);
    for i in 1..n {
        for j in 1..n {
            let d = i == j;
            let pick = |x: WordSum| if d { x } else { zero() };
            let c = div(&int(1), &vd);
            push(
                format!("QQ4 E{i} F{j}"),
                comm(&[E(i)], &[F(j)], int(1)),
                pick(t(c.clone(), &[K(i), Ki(i + 1)]).plus(t(-c.clone(), &[Ki(i), K(i + 1)]))),
            );
            push(
                format!("QQ4 Ebar{i} Fbar{j}"),
                comm(&[Eb(i)], &[Fb(j)], int(-1)),
                pick(t(c.clone(), &[K(i), K(i + 1)]).plus(t(-c, &[Ki(i), Ki(i + 1)])).plus(t(vd.clone(), &[Kb(i), Kb(i + 1)]))),
            );
            push(
                format!("QQ4 E{i} Fbar{j}"),
                comm(&[E(i)], &[Fb(j)], int(1)),
                pick(w(&[Ki(i + 1), Kb(i)]).plus(t(int(-1), &[Kb(i + 1), Ki(i)]))),
            );
            push(
                format!("QQ4 Ebar{i} F{j}"),
                comm(&[Eb(i)], &[F(j)], int(1)),
                pick(w(&[K(i + 1), Kb(i)]).plus(t(int(-1), &[Kb(i + 1), K(i)]))),
            );
        }
    }
    // QQ5
    let frac = div(&vd, &(&vv(1) + &vv(-1)));
    for i in 1..n {
        push(format!("QQ5 Ebar{i}^2"), w(&[Eb(i), Eb(i)]), t(-frac.clone(), &[E(i), E(i)]));
        push(format!("QQ5 Fbar{i}^2"), w(&[Fb(i), Fb(i)]), t(frac.clone(), &[F(i), F(i)]));
        for j in 1..n {
            if i.abs_diff(j) != 1 {
                push(format!("QQ5 E{i} Ebar{j}"), comm(&[E(i)], &[Eb(j)], int(1)), zero());
                push(format!("QQ5 F{i} Fbar{j}"), comm(&[F(i)], &[Fb(j)], int(1)), zero());
            }
            if i.abs_diff(j) > 1 && i < j {
                push(format!("QQ5 E{i} E{j}"), comm(&[E(i)], &[E(j)], int(1)), zero());
                push(format!("QQ5 F{i} F{j}"), comm(&[F(i)], &[F(j)], int(1)), zero());
                push(format!("QQ5 Ebar{i} Ebar{j}"), comm(&[Eb(i)], &[Eb(j)], int(-1)), zero());
                push(format!("QQ5 Fbar{i} Fbar{j}"), comm(&[Fb(i)], &[Fb(j)], int(-1)), zero());
            }
        }
        if i + 1 < n {
            let k = i + 1;
            push(format!("QQ5 E{i} E{k}"), comm(&[E(i)], &[E(k)], vv(1)), comm(&[Eb(i)], &[Eb(k)], -vv(1)));
            push(format!("QQ5 E{i} Ebar{k}"), comm(&[E(i)], &[Eb(k)], vv(1)), comm(&[Eb(i)], &[E(k)], vv(1)));
            push(format!("QQ5 F{i} F{k}"), comm(&[F(i)], &[F(k)], vv(1)), comm(&[Fb(i)], &[Fb(k)], -vv(1)).scaled(&int(-1)));
            push(format!("QQ5 F{i} Fbar{k}"), comm(&[F(i)], &[Fb(k)], vv(1)), comm(&[Fb(i)], &[F(k)], vv(1)));
        }
    }
    // QQ6
    let serre = |a: Symbol, b: Symbol| w(&[a, a, b]).plus(t(-(&vv(1) + &vv(-1)), &[a, b, a])).plus(w(&[b, a, a]));
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) != 1 {
                continue;
            }
            push(format!("QQ6 E{i} E{j}"), serre(E(i), E(j)), zero());
            push(format!("QQ6 F{i} F{j}"), serre(F(i), F(j)), zero());
            push(format!("QQ6 E{i} Ebar{j}"), serre(E(i), Eb(j)), zero());
            push(format!("QQ6 F{i} Fbar{j}"), serre(F(i), Fb(j)), zero());
        }
    }
    out
}

fn run(name: &str, rels: &[Relation], n: usize, r: usize) -> Report {
    let results: Vec<(String, Result<Option<SchurElement>>)> = rels.par_iter().map(|rel| (rel.name.clone(), rel.check(n, r))).collect();
    let mut rep = Report::new(name);
    for (name, res) in results {
        match res {
            Ok(None) => rep.record(None),
            Ok(Some(d)) => rep.record(Some(json!({"relation": name, "difference": d}))),
            Err(e) => rep.record(Some(json!({"relation": name, "error": e.to_string()}))),
        }
    }
    rep
}

/// One report per relation family `QQ1`…`QQ6`.
pub fn verify_qq(n: usize, r: usize) -> Vec<Report> {
    let rels = qq_relations(n);
    (1..=6)
        .map(|f| {
            let tag = format!("QQ{f} ");
            let sel: Vec<Relation> = rels.iter().filter(|x| x.name.starts_with(&tag)).cloned().collect();
            run(&format!("QQ{f} n={n} r={r}"), &sel, n, r)
        })
        .collect()
}

/// `X̄_hȲ_h + Ȳ_hX̄_h`, `X_hȲ_h − Ȳ_hX_h`, `X̄_hY_h − Y_hX̄_h`.
pub fn mulform_ef(n: usize, r: usize) -> Report {
    let vd = &v(1) - &v(-1);
    let c = div(&int(1), &vd);
    let mut rels = Vec::new();
    for h in 1..n {
        rels.push(Relation::new(
            format!("(1) h={h}"),
            comm(&[Eb(h)], &[Fb(h)], int(-1)),
            t(c.clone(), &[K(h), K(h + 1)]).plus(t(-c.clone(), &[Ki(h), Ki(h + 1)])).plus(t(vd.clone(), &[Kb(h), Kb(h + 1)])),
        ));
        rels.push(Relation::new(
            format!("(2) h={h}"),
            comm(&[E(h)], &[Fb(h)], int(1)),
            w(&[Kb(h), Ki(h + 1)]).plus(t(int(-1), &[Ki(h), Kb(h + 1)])),
        ));
        rels.push(Relation::new(
            format!("(3) h={h}"),
            comm(&[Eb(h)], &[F(h)], int(1)),
            w(&[K(h + 1), Kb(h)]).plus(t(int(-1), &[Kb(h + 1), K(h)])),
        ));
    }
    run(&format!("mulform_ef n={n} r={r}"), &rels, n, r)
}

/// `X_hX_{h+1} − vX_{h+1}X_h = X̄_hX̄_{h+1} + vX̄_{h+1}X̄_h` and the `Y` analogue.
pub fn relation_eei(n: usize, r: usize) -> Report {
    let mut rels = Vec::new();
    for h in 1..n.saturating_sub(1) {
        let k = h + 1;
        rels.push(Relation::new(format!("(1) h={h}"), comm(&[E(h)], &[E(k)], v(1)), comm(&[Eb(h)], &[Eb(k)], -v(1))));
        rels.push(Relation::new(
            format!("(2) h={h}"),
            comm(&[F(h)], &[F(k)], v(1)),
            comm(&[Fb(h)], &[Fb(k)], -v(1)).scaled(&int(-1)),
        ));
    }
    run(&format!("relation_eei n={n} r={r}"), &rels, n, r)
}

/// `X_j = vG_j^{-1}A(E_{j,j+1},O,0) = A(E_{j,j+1},O,0)G_j^{-1}` and the
/// analogues for `Y_j` (with `G_{j+1}`), `X̄_j`, `Ȳ_j`.
pub fn xybar_comp(n: usize, r: usize) -> Result<Report> {
    let engine = Schur::shared(n, r);
    let mut rep = Report::new(format!("xybar_comp n={n} r={r}"));
    let zero_j = vec![0; n];
    for j in 1..n {
        let cases = [
            (Symbol::X(j), even_unit(n, j, j + 1), j),
            (Symbol::Y(j), even_unit(n, j + 1, j), j + 1),
            (Symbol::XBar(j), super::odd_unit(n, j, j + 1), j),
            (Symbol::YBar(j), super::odd_unit(n, j + 1, j), j + 1),
        ];
        for (s, m, i) in cases {
            let (a, ja) = s.long_key(n)?;
            let z = eval_long(&a, &ja, r)?;
            let raw = eval_long(&m, &zero_j, r)?;
            let (gi, gj) = Symbol::GInv(i).long_key(n)?;
            let ginv = eval_long(&gi, &gj, r)?;
            let left = engine.mul(&ginv, &raw)?.scale(&v(1));
            let right = engine.mul(&raw, &ginv)?;
            rep.check_eq(&z, &left, || format!("{s} = v G{i}^-1 A(M,0)"));
            rep.check_eq(&z, &right, || format!("{s} = A(M,0) G{i}^-1"));
        }
    }
    Ok(rep)
}

/// `Π_{k∈ks} (G_i − v^k)` at level `r`.
pub fn g_polynomial(n: usize, r: usize, i: usize, ks: impl IntoIterator<Item = i64>) -> Result<SchurElement> {
    let engine = Schur::shared(n, r);
    let (a, j) = Symbol::G(i).long_key(n)?;
    let g = eval_long(&a, &j, r)?;
    let id = SchurElement::identity(n, r, Basis::Twisted);
    let mut acc = id.clone();
    for k in ks {
        let f = &g - &id.scale(&v(k));
        acc = engine.mul(&acc, &f)?;
    }
    Ok(acc)
}

/// Kernel elements: `G_1⋯G_n = v^r`, and `Π_{k=0}^{r}(G_i − v^k) = 0`.
/// The product over `k ∈ [0, r−1]` is recorded in `info` for each `i`.
pub fn kernel_check(n: usize, r: usize) -> Result<Report> {
    let mut rep = Report::new(format!("kernel n={n} r={r}"));
    let all_g: Vec<Symbol> = (1..=n).map(Symbol::G).collect();
    let lhs = wordsum_apply(&w(&all_g), n, r)?;
    let rhs = SchurElement::identity(n, r, Basis::Twisted).scale(&v(r as i64));
    rep.check_eq(&lhs, &rhs, || "G_1...G_n = v^r".into());
    let mut short = Vec::new();
    for i in 1..=n {
        let full = g_polynomial(n, r, i, 0..=r as i64)?;
        rep.check_eq(&full.is_zero(), &true, || format!("prod_(k=0..r) (G{i} - v^k) = 0"));
        let partial = g_polynomial(n, r, i, 0..r as i64)?;
        short.push(json!({"i": i, "prod_k_0_to_r_minus_1": partial}));
    }
    rep.info = Some(json!({"short_products": short}));
    Ok(rep)
}
