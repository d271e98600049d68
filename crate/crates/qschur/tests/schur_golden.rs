//! Frozen structure constants. Regenerate with `QSCHUR_BLESS=1`.

use std::path::PathBuf;

use qschur::combin::{enumerate_super, SuperMatrix};
use qschur::schur::closed::{left_factor, phi_mul_closed, Kind};
use qschur::schur::{Schur, SchurElement};
use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn check_golden(name: &str, value: &Value) {
    let path = fixture(name);
    if std::env::var_os("QSCHUR_BLESS").is_some() {
        std::fs::write(&path, serde_json::to_string(value).unwrap() + "\n").unwrap();
        return;
    }
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let frozen: Value = serde_json::from_str(&text).unwrap();
    assert!(&frozen == value, "{name} differs from the frozen values");
}

#[test]
fn table_n2_r2() {
    let s = Schur::new(2, 2);
    let all = enumerate_super(2, 2);
    let mut rows = Vec::new();
    for b in &all {
        for a in &all {
            let p = s.phi_mul_bruteforce(b, a).unwrap();
            if !p.is_zero() {
                rows.push(json!({"left": b, "right": a, "product": p}));
            }
        }
    }
    check_golden("schur_n2_r2.json", &Value::Array(rows));
}

#[test]
fn upper_example_n2_r2() {
    let b = SuperMatrix::from_rows(&[vec![0, 1], vec![0, 1]], &[vec![0, 0], vec![0, 0]]).unwrap();
    let a = SuperMatrix::from_rows(&[vec![0, 0], vec![1, 1]], &[vec![0, 0], vec![0, 0]]).unwrap();
    let s = Schur::new(2, 2);
    let p = s.phi_mul_bruteforce(&b, &a).unwrap();
    // validated against the closed form before freezing
    let lam = a.ro();
    assert_eq!(left_factor(Kind::UpperEven, 1, &lam).unwrap(), b);
    assert_eq!(phi_mul_closed(Kind::UpperEven, 1, &lam, &a).unwrap(), p);
    let back: SchurElement = serde_json::from_value(serde_json::to_value(&p).unwrap()).unwrap();
    assert_eq!(back, p);
    check_golden("schur_upper_example.json", &serde_json::to_value(&p).unwrap());
}
