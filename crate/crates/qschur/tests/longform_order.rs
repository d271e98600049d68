use qschur::combin::{enumerate_star, NatMatrix, SuperMatrix};
use qschur::longform::order::{co_minus_min, monomial_expansion, monomial_word, prec, triangularity_check};
use qschur::longform::{unit, LongElement, Symbol};
use qschur::ring::RatFunc;

fn sm(even: &[Vec<usize>], odd: &[Vec<usize>]) -> SuperMatrix {
    SuperMatrix::from_rows(even, odd).unwrap()
}

fn odd(n: usize, i: usize, j: usize) -> SuperMatrix {
    SuperMatrix::new(NatMatrix::zero(n), NatMatrix::unit(n, i, j)).unwrap()
}

fn even(n: usize, i: usize, j: usize) -> SuperMatrix {
    SuperMatrix::even_only(NatMatrix::unit(n, i, j))
}

#[test]
fn prec_examples() {
    let o = SuperMatrix::zero(2);
    let e21 = even(2, 2, 1);
    let e12 = even(2, 1, 2);
    let two_e12 = sm(&[vec![0, 2], vec![0, 0]], &[vec![0, 0], vec![0, 0]]);
    assert!(!prec(&e21, &e21));
    assert!(!prec(&o, &o));
    assert_eq!(co_minus_min(&e21), 1);
    assert_eq!(co_minus_min(&o), 2);
    assert!(prec(&o, &e21));
    assert!(!prec(&e21, &o));
    assert!(prec(&e12, &two_e12));
    assert!(!prec(&two_e12, &e12));
}

#[test]
fn prec_is_irreflexive_and_asymmetric() {
    let mut all = Vec::new();
    for s in 0..=2 {
        all.extend(enumerate_star(2, s));
    }
    for a in &all {
        assert!(!prec(a, a), "{a}");
        for b in &all {
            assert!(!(prec(a, b) && prec(b, a)), "{a} {b}");
        }
    }
}

#[test]
fn monomial_word_examples() {
    assert_eq!(monomial_word(&even(2, 1, 2)).unwrap(), vec![Symbol::X(1)]);
    assert_eq!(monomial_word(&odd(2, 1, 1)).unwrap(), vec![Symbol::GBar(1)]);
    assert_eq!(monomial_word(&odd(2, 2, 1)).unwrap(), vec![Symbol::GBar(2), Symbol::Y(1)]);
    assert_eq!(monomial_word(&SuperMatrix::zero(3)).unwrap(), vec![]);
    assert!(monomial_word(&SuperMatrix::diag(&[1, 0])).is_err());
}

#[test]
fn single_generator_expansions() {
    let x = monomial_expansion(&even(2, 1, 2), 3).unwrap();
    let want = LongElement::single(even(2, 1, 2), vec![-1, 0], RatFunc::one()).unwrap();
    assert_eq!(x, want);
    let x = monomial_expansion(&odd(2, 1, 1), 3).unwrap();
    let want = LongElement::single(odd(2, 1, 1), vec![-1, 0], RatFunc::one()).unwrap();
    assert_eq!(x, want);
    let _ = unit(2, 1);
}

#[test]
fn triangularity_n2_up_to_3() {
    for s in 0..=3 {
        for a in enumerate_star(2, s) {
            let rep = triangularity_check(&a, s + 2);
            assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
        }
    }
}

// At n = 3 every monomial with an odd (2,1) entry picks up terms with a
// nonzero (2,3) entry, which are not below A. Everything else passes.
#[test]
fn triangularity_n3_up_to_2() {
    let (mut failing, mut total) = (0, 0);
    for s in 0..=2 {
        for a in enumerate_star(3, s) {
            total += 1;
            let rep = triangularity_check(&a, s + 2);
            if a.o(2, 1) == 1 {
                failing += 1;
                assert!(!rep.passed(), "{a}");
                assert_eq!(rep.failures[0]["error"], "terms not below A");
            } else {
                assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
            }
        }
    }
    assert_eq!((failing, total), (15, 127));

    let e21 = odd(3, 2, 1);

    let x = monomial_expansion(&e21, 3).unwrap();
    assert_eq!(x.coeff(&e21, &[0, 0, 0]), RatFunc::one());
    let stray = SuperMatrix::new(NatMatrix::unit(3, 3, 1), NatMatrix::unit(3, 2, 3)).unwrap();
    assert_eq!(x.coeff(&stray, &[0, -2, -2]), RatFunc::v_pow(-2));
    assert!(!prec(&stray, &e21));
}

#[test]
fn triangularity_needs_two_spare_levels() {
    let rep = triangularity_check(&even(2, 1, 2), 2);
    assert!(!rep.passed());
}
