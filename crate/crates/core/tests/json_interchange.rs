use dse_hopf::dse::solve;
use dse_hopf::json::{decode_element, decode_forest, decode_tensor, decode_tree, encode_element, encode_forest, encode_tensor, encode_tree};
use dse_hopf::rational::frac;
use dse_hopf::series::solve_family;
use dse_hopf::trees::ladder;
use dse_hopf::{coproduct, Error, Forest, Mode};
use serde_json::Value;

#[test]
fn ladder_round_trip() {
    let t = ladder(4);
    let v = encode_tree(&t);
    assert_eq!(v.to_string(), r#"{"c":[{"c":[{"c":[{"c":[],"d":null}],"d":null}],"d":null}],"d":null}"#);
    assert_eq!(decode_tree(&v).unwrap(), t);
}

#[test]
fn empty_forest_is_empty_array() {
    assert_eq!(encode_forest(&Forest::unit()), Value::Array(vec![]));
    assert_eq!(decode_forest(&Value::Array(vec![]), Mode::Planar).unwrap(), Forest::unit());
}

#[test]
fn fractional_generator_round_trip() {
    let sol = solve(&solve_family(&frac(1, 1), &frac(1, 2), 3), 3, Mode::Planar).unwrap();
    let v = encode_element(sol.a(3));
    assert!(v.to_string().contains(r#""coeff":"3/4""#));
    assert_eq!(&decode_element(&v, Mode::Planar).unwrap(), sol.a(3));
    let d = coproduct(sol.a(3), 3);
    assert_eq!(decode_tensor(&encode_tensor(&d), Mode::Planar).unwrap(), d);
}

#[test]
fn encoding_is_byte_stable() {
    let sol = solve(&solve_family(&frac(2, 1), &frac(7, 3), 4), 4, Mode::Commutative).unwrap();
    let a = encode_element(sol.a(4)).to_string();
    let b = encode_element(sol.a(4)).to_string();
    assert_eq!(a, b);
    let reparsed: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(reparsed.to_string(), a);
}

#[test]
fn schema_violations_name_the_path() {
    let bad: Value = serde_json::from_str(r#"[{"coeff":"1","left":[],"right":[{"c":[],"d":[1,2]}]}]"#).unwrap();
    match decode_tensor(&bad, Mode::Planar).unwrap_err() {
        Error::Decode { path, .. } => assert_eq!(path, "$[0].right[0].d"),
        e => panic!("unexpected {e}"),
    }
    let bad: Value = serde_json::from_str(r#"{"c":"x","d":null}"#).unwrap();
    assert!(matches!(decode_tree(&bad), Err(Error::Decode { path, .. }) if path == "$.c"));
}
