use proptest::prelude::*;

use qschur::combin::{NatMatrix, SuperMatrix};
use qschur::longform::order::prec;
use qschur::longform::{LongElement, Symbol};
use qschur::ring::{qint, LaurentPoly, RatFunc, Q};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, Q::from_integer(c.into())))))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_map(|(n, d)| {
        if d.is_zero() {
            RatFunc::from_poly(n)
        } else {
            &RatFunc::from_poly(n) / &RatFunc::from_poly(d)
        }
    })
}

fn super_matrix(n: usize) -> impl Strategy<Value = SuperMatrix> {
    (prop::collection::vec(0usize..=2, n * n), prop::collection::vec(0usize..=1, n * n)).prop_map(move |(e, o)| {
        let rows = |v: &[usize]| v.chunks(n).map(|c| c.to_vec()).collect::<Vec<_>>();
        let mut even = rows(&e);
        for (i, row) in even.iter_mut().enumerate() {
            row[i] = 0;
        }
        SuperMatrix::new(NatMatrix::from_rows(&even).unwrap(), NatMatrix::from_rows(&rows(&o)).unwrap()).unwrap()
    })
}

fn symbol(n: usize) -> impl Strategy<Value = Symbol> {
    (0usize..7, 1..=n).prop_map(move |(k, i)| {
        let j = i.min(n - 1);
        match k {
            0 => Symbol::G(i),
            1 => Symbol::GInv(i),
            2 => Symbol::GBar(i),
            3 => Symbol::X(j),
            4 => Symbol::XBar(j),
            5 => Symbol::Y(j),
            _ => Symbol::YBar(j),
        }
    })
}

proptest! {
    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, RatFunc::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), RatFunc::one());
        }
    }

    #[test]
    fn bar_is_a_ring_involution(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn ratfunc_json_round_trip(a in ratfunc()) {
        let back: RatFunc = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn quantum_integers_recur(m in 1u32..8) {
        // [[m+1]] = q[[m]] + 1
        prop_assert_eq!(qint(m + 1), &(&RatFunc::q_pow(1) * &qint(m)) + &RatFunc::one());
    }

    #[test]
    fn prec_is_a_strict_relation(a in super_matrix(3), b in super_matrix(3)) {
        prop_assert!(!prec(&a, &a));
        prop_assert!(!(prec(&a, &b) && prec(&b, &a)));
    }

    #[test]
    fn long_element_json_round_trip(a in super_matrix(2), j in prop::collection::vec(-3i64..=3, 2), c in ratfunc()) {
        prop_assume!(!c.is_zero());
        let x = LongElement::single(a, j, c).unwrap();
        let back: LongElement = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn symbol_text_round_trip(s in symbol(3)) {
        prop_assert_eq!(s.to_string().parse::<Symbol>().unwrap(), s);
        let back: Symbol = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }
}
