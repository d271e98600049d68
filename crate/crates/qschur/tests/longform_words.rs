use qschur::combin::{NatMatrix, SuperMatrix};
use qschur::longform::eval::gen_mul_eval;
use qschur::longform::relations::{g_polynomial, kernel_check, mulform_ef, relation_eei, verify_qq, xybar_comp};
use qschur::longform::words::{canonical, canonical_symbol, word_apply, wordsum_apply};
use qschur::longform::{eval_long, gen_mul, generator, unit, LongElement, Mode, Symbol, WordSum};
use qschur::ring::RatFunc;
use qschur::schur::{Basis, SchurElement};

fn odd(n: usize, i: usize, j: usize) -> SuperMatrix {
    SuperMatrix::new(NatMatrix::zero(n), NatMatrix::unit(n, i, j)).unwrap()
}

fn even(n: usize, i: usize, j: usize) -> SuperMatrix {
    SuperMatrix::even_only(NatMatrix::unit(n, i, j))
}

fn neg(v: Vec<i64>) -> Vec<i64> {
    v.into_iter().map(|x| -x).collect()
}

fn all_symbols(n: usize) -> Vec<Symbol> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.extend([Symbol::G(i), Symbol::GInv(i), Symbol::GBar(i)]);
    }
    for j in 1..n {
        out.extend([Symbol::X(j), Symbol::XBar(j), Symbol::Y(j), Symbol::YBar(j)]);
    }
    out
}

#[test]
fn eval_long_examples() {
    for r in 0..=3 {
        assert_eq!(
            eval_long(&SuperMatrix::zero(2), &[0, 0], r).unwrap(),
            SchurElement::identity(2, r, Basis::Twisted)
        );
    }
    let x = eval_long(&SuperMatrix::zero(2), &[1, 0], 1).unwrap();
    let mut want = SchurElement::zero(2, 1, Basis::Twisted);
    want.add_term(SuperMatrix::diag(&[1, 0]), RatFunc::v_pow(1));
    want.add_term(SuperMatrix::diag(&[0, 1]), RatFunc::one());
    assert_eq!(x, want);
    let big = SuperMatrix::from_rows(&[vec![0, 2], vec![0, 0]], &[vec![0, 0], vec![0, 0]]).unwrap();
    assert!(eval_long(&big, &[0, 0], 1).unwrap().is_zero());
    // not in M*: nonzero even diagonal
    assert!(eval_long(&SuperMatrix::diag(&[1, 0]), &[0, 0], 2).unwrap().is_zero());
    assert!(eval_long(&SuperMatrix::zero(2), &[0], 1).is_err());
}

#[test]
fn generator_examples() {
    let one = RatFunc::one();
    assert_eq!(
        generator(Symbol::G(1), 2).unwrap(),
        LongElement::single(SuperMatrix::zero(2), unit(2, 1), one.clone()).unwrap()
    );
    assert_eq!(
        generator(Symbol::XBar(1), 2).unwrap(),
        LongElement::single(odd(2, 1, 2), neg(unit(2, 1)), one.clone()).unwrap()
    );
    assert_eq!(
        generator(Symbol::YBar(1), 2).unwrap(),
        LongElement::single(odd(2, 2, 1), neg(unit(2, 2)), one.clone()).unwrap()
    );
    assert_eq!(
        generator(Symbol::X(1), 2).unwrap(),
        LongElement::single(even(2, 1, 2), neg(unit(2, 1)), one.clone()).unwrap()
    );
    assert!(generator(Symbol::X(2), 2).is_err());
    assert!(generator(Symbol::G(0), 2).is_err());
    assert!("Q1".parse::<Symbol>().is_err());
    for s in all_symbols(3) {
        assert_eq!(s.to_string().parse::<Symbol>().unwrap(), s);
    }
}

#[test]
fn gen_mul_examples() {
    for mode in [Mode::Closed, Mode::Eval] {
        // G_i · A(A,j) = v^{Σ_u a_iu} A(A, j + ε_i)
        let a = SuperMatrix::from_rows(&[vec![0, 2], vec![1, 0]], &[vec![1, 0], vec![0, 0]]).unwrap();
        let x = LongElement::single(a.clone(), vec![0, -1], RatFunc::one()).unwrap();
        let got = gen_mul(Symbol::G(1), &x, mode).unwrap();
        assert_eq!(got, LongElement::single(a.clone(), vec![1, -1], RatFunc::v_pow(3)).unwrap());
        let got = gen_mul(Symbol::GInv(2), &x, mode).unwrap();
        assert_eq!(got, LongElement::single(a, vec![0, -2], RatFunc::v_pow(-1)).unwrap());
        // Ḡ_n · A(O,0) = Ḡ_n = A(O|E_nn, −ε_n)
        let got = gen_mul(Symbol::GBar(2), &LongElement::one(2), mode).unwrap();
        assert_eq!(got, LongElement::single(odd(2, 2, 2), vec![0, -1], RatFunc::one()).unwrap());
    }
}

#[test]
fn identity_is_neutral_for_products() {
    let x = LongElement::single(odd(2, 1, 2), vec![1, 0], RatFunc::int(3)).unwrap();
    let id = SuperMatrix::zero(2);
    assert_eq!(qschur::longform::eval::long_mul_eval(&id, &[0, 0], &x).unwrap(), x);
}

#[test]
fn canonical_symbols_stabilize_n2() {
    let mut keys = vec![LongElement::one(2)];
    for (i, j) in [(1, 2), (2, 1)] {
        keys.push(LongElement::single(even(2, i, j), vec![0, 0], RatFunc::one()).unwrap());
        keys.push(LongElement::single(odd(2, i, j), unit(2, 1), RatFunc::one()).unwrap());
    }
    keys.push(LongElement::single(odd(2, 1, 1), neg(unit(2, 2)), RatFunc::one()).unwrap());
    for s in all_symbols(2).into_iter().filter(|s| s.is_canonical(2)) {
        for x in &keys {
            // a stabilization error would surface here
            let y = gen_mul_eval(s, x).unwrap();
            for r in 2..=4 {
                let direct = qschur::schur::Schur::shared(2, r)
                    .mul(&generator(s, 2).unwrap().eval(r), &x.eval(r))
                    .unwrap();
                assert_eq!(y.eval(r), direct, "{s} · {x:?} at r={r}");
            }
        }
    }
}

#[test]
fn word_apply_examples() {
    for (n, r) in [(2, 1), (2, 3), (3, 2)] {
        let id = SchurElement::identity(n, r, Basis::Twisted);
        assert_eq!(word_apply(&[], n, r).unwrap(), id);
        assert_eq!(word_apply(&[Symbol::G(1), Symbol::GInv(1)], n, r).unwrap(), id);
        assert_eq!(word_apply(&[Symbol::GInv(1), Symbol::G(1)], n, r).unwrap(), id);
        let all: Vec<Symbol> = (1..=n).map(Symbol::G).collect();
        assert_eq!(word_apply(&all, n, r).unwrap(), id.scale(&RatFunc::v_pow(r as i64)));
    }
}

#[test]
fn canonical_rewriting_agrees_with_direct_evaluation() {
    for n in [2, 3] {
        for r in 1..=3 {
            for s in all_symbols(n) {
                let rewritten = canonical_symbol(s, n).unwrap();
                for (_, w) in &rewritten.0 {
                    assert!(w.iter().all(|t| t.is_canonical(n)), "{s} rewrites to {w:?}");
                }
                assert_eq!(
                    wordsum_apply(&rewritten, n, r).unwrap(),
                    word_apply(&[s], n, r).unwrap(),
                    "{s} at n={n} r={r}"
                );
            }
        }
    }
    let w = WordSum::word(vec![Symbol::XBar(1), Symbol::YBar(1)]);
    assert_eq!(
        wordsum_apply(&canonical(&w, 2).unwrap(), 2, 2).unwrap(),
        wordsum_apply(&w, 2, 2).unwrap()
    );
}

#[test]
fn qq_relations_hold() {
    for (n, r) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        for rep in verify_qq(n, r) {
            assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
        }
    }
}

#[test]
fn odd_relations_hold() {
    for n in [2, 3] {
        for r in 1..=4 {
            let rep = mulform_ef(n, r);
            assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
        }
    }
    for r in 1..=4 {
        let rep = relation_eei(3, r);
        assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
    }
    for n in [2, 3] {
        for r in 1..=3 {
            let rep = xybar_comp(n, r).unwrap();
            assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
        }
    }
}

#[test]
fn kernel_elements() {
    for (n, r) in [(2, 1), (2, 2), (2, 3), (3, 2)] {
        let rep = kernel_check(n, r).unwrap();
        assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
    }
}

// The product over k < r alone does not vanish: on Φ_{(rε_i|O)} it acts by
// Π_{k<r} (v^r − v^k).
#[test]
fn short_kernel_product_survives_on_top_weight() {
    for (n, r) in [(2, 1), (2, 2), (2, 3), (3, 2)] {
        for i in 1..=n {
            let p = g_polynomial(n, r, i, 0..r as i64).unwrap();
            assert!(!p.is_zero());
            let mut parts = vec![0; n];
            parts[i - 1] = r;
            let mut want = RatFunc::one();
            for k in 0..r as i64 {
                want = &want * &(&RatFunc::v_pow(r as i64) - &RatFunc::v_pow(k));
            }
            assert_eq!(p.coeff(&SuperMatrix::diag(&parts)), want);
            assert_eq!(p.len(), 1, "only the top weight survives");
        }
    }
}
