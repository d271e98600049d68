use qschur::combin::NatMatrix;
use qschur::sdp;

#[test]
fn trivial_d_criterion() {
    let rep = sdp::check_trivial_d(3, 4);
    assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
}

#[test]
fn last_row_criterion() {
    let rep = sdp::check_last_row(3, 4);
    assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
}

#[test]
fn special_shape_criterion() {
    let rep = sdp::check_special_shape(3, 4);
    assert!(rep.passed(), "{}", serde_json::to_string(&rep).unwrap());
    assert!(rep.instances > 0);
}

#[test]
fn counterexample_search() {
    // no existence is assumed; when one is found it must really fail
    if let Some((a, h, k)) = sdp::find_counterexample(3, 4) {
        println!("first SDP failure: {a:?} at ({h},{k})");
        assert!(!sdp::sdp_at(&a, h, k).unwrap());
    }
}

#[test]
fn zero_entry_is_a_precondition_error() {
    let a = NatMatrix::diag(&[1, 0]);
    assert!(sdp::sdp_at(&a, 2, 2).is_err());
    assert!(sdp::sdp_row(&a, 2).unwrap());
}
