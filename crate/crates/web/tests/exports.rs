use serde_json::Value;

use vknot_web::{invariants, reduce, scramble};

fn json(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn invariants_of_virtual_trefoil() {
    let v = json(invariants("O1+O2+U1+U2+", ""));
    assert_eq!(v["polynomial"], "t^-1 + t - 2");
    assert_eq!(v["odd_writhe"], 2);
}

#[test]
fn pinned_hopf_link() {
    let v = json(invariants("O1+U2+|U1+O2+", " -1, 2 "));
    assert_eq!(v["polynomial"], "t^-4 + t^4 - 2");
}

#[test]
fn errors_are_json() {
    let v = json(invariants("O1+X", ""));
    assert_eq!(v["error"]["kind"], "syntax");
    let v = json(invariants("O1+U2+|U1+O2+", "0,x"));
    assert_eq!(v["error"]["kind"], "syntax");
    assert!(v["error"]["message"].as_str().unwrap().contains("offset 2"));
    let v = json(reduce("O1+O2+U1+U2+", ""));
    assert!(v.get("error").is_none());
}

#[test]
fn scramble_keeps_polynomial() {
    let a = scramble("O1+O2+U1+U2+", 25, 3);
    assert_eq!(a, scramble("O1+O2+U1+U2+", 25, 3));
    let v = json(a);
    assert_eq!(v["polynomial"], "t^-1 + t - 2");
    assert_eq!(v["trace"].as_array().unwrap().len(), 25);
}

#[test]
fn reduce_trefoil() {
    let v = json(reduce("O1+U2+O3+U1+O2+U3+", ""));
    assert_eq!(v["diagram"], "|");
    assert_eq!(v["smoothed"], serde_json::json!([1, 2, 3]));
}
