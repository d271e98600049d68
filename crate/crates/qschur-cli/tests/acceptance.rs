//! Acceptance criteria 1–10. Each criterion prints one PASS/FAIL line; the
//! test fails at the end if any criterion failed.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qschur::combin::{compositions, enumerate_star, enumerate_super};
use qschur::error::Error;
use qschur::hecke::lemmas;
use qschur::longform::closed::{gen_mul_closed, raw_mul, RawLeft};
use qschur::longform::eval::{gen_mul_eval, long_mul_eval};
use qschur::longform::order::triangularity_check;
use qschur::longform::pbw::{pbw_word, rank_check, root_vector, root_vector_via};
use qschur::longform::relations::{kernel_check, verify_qq};
use qschur::longform::words::{word_apply, wordsum_apply};
use qschur::longform::{unit, LongElement, Symbol};
use qschur::report::Report;
use qschur::ring::RatFunc;
use qschur::schur::closed::{left_factor, phi_mul_closed, special_closed, special_factors, Kind, Special};
use qschur::schur::{dimension, Basis, Schur, SchurElement};
use qschur::sdp;

type Outcome = Result<String, String>;

fn all_pass(reps: impl IntoIterator<Item = Report>) -> Outcome {
    let mut instances = 0;
    for rep in reps {
        if !rep.passed() {
            return Err(serde_json::to_string(&rep).unwrap());
        }
        instances += rep.instances;
    }
    Ok(format!("{instances} instances"))
}

fn c1_relations() -> Outcome {
    let mut reps = Vec::new();
    for r in 2..=4 {
        reps.push(lemmas::relations(r));
        let assoc = lemmas::associativity(r, 200, 1);
        if assoc.instances != 200 {
            return Err(format!("{} associativity triples at r = {r}", assoc.instances));
        }
        reps.push(assoc);
    }
    all_pass(reps)
}

fn c2_hecke_lemmas() -> Outcome {
    all_pass([
        lemmas::pjshift(3, 4),
        lemmas::tnsum(3, 4),
        lemmas::xtinverse(3, 4),
        lemmas::xct(3, 4),
        lemmas::xc(3, 4),
    ])
}

fn c3_sdp() -> Outcome {
    all_pass([sdp::check_trivial_d(3, 4), sdp::check_last_row(3, 4), sdp::check_special_shape(3, 4)])
}

fn c4_basis() -> Outcome {
    for (n, r) in [(1, 1), (2, 1), (2, 2), (2, 3), (3, 2)] {
        let (count, rank) = dimension(n, r);
        if count != rank || count != enumerate_super(n, r).len() {
            return Err(format!("(n,r) = ({n},{r}): count {count}, rank {rank}"));
        }
    }
    match dimension(2, 1) {
        (8, 8) => Ok("5 cases, (2,1) → 8".into()),
        d => Err(format!("(2,1) → {d:?}")),
    }
}

fn c5_closed_schur() -> Outcome {
    let mut checked = 0;
    for r in 1..=3 {
        let s = Schur::new(2, r);
        for a in enumerate_super(2, r) {
            let lam = a.ro();
            for kind in Kind::ALL {
                for h in 1..=2 {
                    let Ok(x) = left_factor(kind, h, &lam) else { continue };
                    let closed = match phi_mul_closed(kind, h, &lam, &a) {
                        Ok(c) => c,
                        Err(Error::Hypothesis(_)) => continue,
                        Err(e) => return Err(format!("{kind:?} h={h} {a}: {e}")),
                    };
                    if closed != s.phi_mul_bruteforce(&x, &a).unwrap() {
                        return Err(format!("{kind:?} h={h} A={a}"));
                    }
                    checked += 1;
                }
            }
        }
        for mu in compositions(2, r - 1) {
            for which in Special::ALL {
                let (x, a) = special_factors(which, 1, &mu).unwrap();
                if special_closed(which, 1, &mu).unwrap() != s.phi_mul_bruteforce(&x, &a).unwrap() {
                    return Err(format!("{which:?} mu={mu}"));
                }
                checked += 1;
            }
        }
    }
    let s = Schur::new(3, 3);
    let all = enumerate_super(3, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sampled = 0;
    while sampled < 60 {
        let a = all.choose(&mut rng).unwrap();
        let kind = *Kind::ALL.choose(&mut rng).unwrap();
        let h = *[1, 2, 3].choose(&mut rng).unwrap();
        let lam = a.ro();
        let Ok(x) = left_factor(kind, h, &lam) else { continue };
        let Ok(closed) = phi_mul_closed(kind, h, &lam, a) else { continue };
        if closed != s.phi_mul_bruteforce(&x, a).unwrap() {
            return Err(format!("n = 3: {kind:?} h={h} A={a}"));
        }
        sampled += 1;
    }
    Ok(format!("{checked} at n = 2, {sampled} sampled at n = 3"))
}

fn c6_closed_long() -> Outcome {
    let n = 2;
    let mut e2 = vec![0; n];
    e2[1] = -1;
    let grid = [vec![0; n], unit(n, 1), e2];
    let mut keys = Vec::new();
    for s in 0..=2 {
        for a in enumerate_star(n, s) {
            for j in &grid {
                keys.push(LongElement::single(a.clone(), j.clone(), RatFunc::one()).unwrap());
            }
        }
    }
    let mut raws = vec![RawLeft::UpperEven(1), RawLeft::LowerEven(1), RawLeft::UpperOdd(1), RawLeft::LowerOdd(1)];
    raws.extend([RawLeft::DiagOdd(1), RawLeft::DiagOdd(2)]);
    let (mut checked, mut refused) = (0, 0);
    for raw in raws {
        let m = raw.matrix(n).unwrap();
        for x in &keys {
            let closed = match raw_mul(raw, x) {
                Ok(c) => c,
                Err(Error::Hypothesis(_)) => {
                    refused += 1;
                    continue;
                }
                Err(e) => return Err(e.to_string()),
            };
            // two fitting windows are compared inside
            let ev = long_mul_eval(&m, &[0, 0], x).map_err(|e| format!("{raw:?} {x:?}: {e}"))?;
            if closed != ev {
                return Err(format!("{raw:?} · {x:?}"));
            }
            checked += 1;
        }
    }
    let mut symbols = Vec::new();
    for i in 1..=n {
        symbols.extend([Symbol::G(i), Symbol::GInv(i), Symbol::GBar(i)]);
    }
    symbols.extend([Symbol::X(1), Symbol::XBar(1), Symbol::Y(1), Symbol::YBar(1)]);
    for s in symbols {
        for x in &keys {
            let ev = gen_mul_eval(s, x).map_err(|e| format!("{s} · {x:?}: {e}"))?;
            match gen_mul_closed(s, x) {
                Ok(c) if c == ev => checked += 1,
                Ok(_) => return Err(format!("{s} · {x:?}")),
                Err(Error::Hypothesis(_)) => refused += 1,
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!("{checked} products agree, {refused} outside the hypotheses"))
}

fn c7_qq() -> Outcome {
    let mut reps = Vec::new();
    for (n, r) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        reps.extend(verify_qq(n, r));
        let all: Vec<Symbol> = (1..=n).map(Symbol::G).collect();
        let id = SchurElement::identity(n, r, Basis::Twisted);
        if word_apply(&all, n, r).unwrap() != id.scale(&RatFunc::v_pow(r as i64)) {
            return Err(format!("G_1⋯G_n ≠ v^r at ({n},{r})"));
        }
        if n == 2 || r == 2 {
            reps.push(kernel_check(n, r).unwrap());
        }
    }
    all_pass(reps)
}

fn c8_triangular() -> Outcome {
    let mut failing = Vec::new();
    let mut total = 0;
    for (n, smax) in [(2, 3), (3, 2)] {
        for s in 0..=smax {
            for a in enumerate_star(n, s) {
                total += 1;
                let rep = triangularity_check(&a, s + 2);
                if !rep.passed() {
                    failing.push(format!("{a}: {}", rep.failures[0]["error"]));
                }
            }
        }
    }
    if failing.is_empty() {
        Ok(format!("{total} monomials"))
    } else {
        Err(format!("{} of {total} fail, first {}", failing.len(), failing[0]))
    }
}

fn c9_pbw() -> Outcome {
    let mut words = Vec::new();
    for s in 0..=2 {
        for a in enumerate_star(2, s) {
            for j in [vec![0, 0], unit(2, 1)] {
                words.push(pbw_word(&a, &j).unwrap());
            }
        }
    }
    let rank = rank_check(&words, 2, 4).unwrap();
    if rank != words.len() {
        return Err(format!("rank {rank} of {} PBW images", words.len()));
    }
    let (n, r) = (4usize, 3);
    let mut compared = 0;
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) < 2 {
                continue;
            }
            for odd in [false, true] {
                let reference = wordsum_apply(&root_vector(i, j, odd, n).unwrap(), n, r).unwrap();
                for k in i.min(j) + 1..i.max(j) {
                    let other = wordsum_apply(&root_vector_via(i, j, odd, k, n).unwrap(), n, r).unwrap();
                    if other != reference {
                        return Err(format!("E({i},{j}) odd={odd} depends on k = {k}"));
                    }
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("rank {rank} = {} instances; {compared} root vectors independent of k", words.len()))
}

fn c10_determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_qschur");
    let runs: [&[&str]; 3] = [
        &["hc-mul", "--r", "3", "--seed", "42"],
        &["verify-qq", "--n", "2", "--r", "2"],
        &["pbw-rank", "--n", "2", "--r", "2", "--max-weight", "1"],
    ];
    for args in runs {
        let run = || Command::new(exe).args(args).output().unwrap();
        let (a, b) = (run(), run());
        if !a.status.success() || a.stdout.is_empty() {
            return Err(format!("{args:?} exited with {}", a.status));
        }
        if a.stdout != b.stdout {
            return Err(format!("{args:?} differs between runs"));
        }
    }
    Ok("3 commands byte-identical across runs".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Hecke–Clifford relations and associativity", c1_relations),
        ("Hecke lemma suite", c2_hecke_lemmas),
        ("SDP criteria", c3_sdp),
        ("basis theorem ranks", c4_basis),
        ("closed forms vs oracle (Schur level)", c5_closed_schur),
        ("closed forms vs evaluation (long level) and stabilization", c6_closed_long),
        ("quantum-group relations", c7_qq),
        ("triangularity of monomials", c8_triangular),
        ("PBW independence and root-vector k-independence", c9_pbw),
        ("determinism of CLI reports", c10_determinism),
    ];
    let mut results = BTreeMap::new();
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => println!("criterion {:>2} FAIL {name}: {why} ({secs:.1}s)", i + 1),
        }
        results.insert(i + 1, outcome.is_ok());
    }
    let failed: Vec<_> = results.iter().filter(|(_, ok)| !**ok).map(|(i, _)| *i).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

