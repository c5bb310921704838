//! JSON interchange for trees, forests, algebra and tensor elements, and
//! Hopf verdicts.
//!
//! A tree is `{"c": [children], "d": null | [i, u1, u2]}`, a forest is an
//! array of trees, and coefficients are `"p/q"` strings. Objects use sorted
//! keys so output is byte-stable.

use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraElement, TensorElement};
use crate::error::{Error, Result};
use crate::hopfcheck::HopfVerdict;
use crate::rational::{self, Rational};
use crate::trees::{Decoration, Forest, Mode, Tree};

fn decode_err(path: &str, reason: impl Into<String>) -> Error {
    Error::Decode { path: path.to_string(), reason: reason.into() }
}

pub fn encode_tree(t: &Tree) -> Value {
    let d = match t.label() {
        None => Value::Null,
        Some(dec) => json!([dec.i, dec.u1, dec.u2]),
    };
    json!({ "c": t.children().iter().map(encode_tree).collect::<Vec<_>>(), "d": d })
}

pub fn encode_forest(f: &Forest) -> Value {
    Value::Array(f.trees().iter().map(encode_tree).collect())
}

pub fn encode_element(x: &AlgebraElement) -> Value {
    Value::Array(
        x.terms()
            .map(|(f, c)| json!({ "coeff": rational::format(c), "forest": encode_forest(f) }))
            .collect(),
    )
}

pub fn encode_tensor(x: &TensorElement) -> Value {
    Value::Array(
        x.terms()
            .map(|((l, r), c)| {
                json!({ "coeff": rational::format(c), "left": encode_forest(l), "right": encode_forest(r) })
            })
            .collect(),
    )
}

pub fn encode_verdict(v: &HopfVerdict) -> Value {
    let mut m = Map::new();
    m.insert("mode".into(), json!(v.mode.name()));
    m.insert("weight".into(), json!(v.weight));
    m.insert("pass".into(), json!(v.pass));
    m.insert("failing_weight".into(), json!(v.failing_weight));
    m.insert("residual".into(), v.residual.as_ref().map_or(Value::Null, encode_tensor));
    m.insert(
        "candidate".into(),
        v.candidate.as_ref().map_or(Value::Null, |(a, b)| {
            json!({ "alpha": rational::format(a), "beta": rational::format(b) })
        }),
    );
    m.insert("matches_family".into(), json!(v.matches_family));
    m.insert("span_dims".into(), json!(v.span_dims));
    Value::Object(m)
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| decode_err(path, "expected an array"))
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    let obj = v.as_object().ok_or_else(|| decode_err(path, "expected an object"))?;
    obj.get(key).ok_or_else(|| decode_err(path, format!("missing field {key:?}")))
}

fn decode_rational(v: &Value, path: &str) -> Result<Rational> {
    let s = v.as_str().ok_or_else(|| decode_err(path, "expected a \"p/q\" string"))?;
    rational::parse(s).map_err(|e| decode_err(path, e.to_string()))
}

fn decode_tree_at(v: &Value, path: &str) -> Result<Tree> {
    let children = as_array(field(v, "c", path)?, &format!("{path}.c"))?
        .iter()
        .enumerate()
        .map(|(k, c)| decode_tree_at(c, &format!("{path}.c[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    let dpath = format!("{path}.d");
    let label = match field(v, "d", path)? {
        Value::Null => None,
        d => {
            let parts = as_array(d, &dpath)?;
            if parts.len() != 3 {
                return Err(decode_err(&dpath, "decoration needs three entries"));
            }
            let mut xs = [0u8; 3];
            for (k, p) in parts.iter().enumerate() {
                xs[k] = p
                    .as_u64()
                    .and_then(|x| u8::try_from(x).ok())
                    .filter(|&x| x >= 1)
                    .ok_or_else(|| decode_err(&format!("{dpath}[{k}]"), "expected a letter 1..=255"))?;
            }
            Some(Decoration::new(xs[0], xs[1], xs[2]))
        }
    };
    Ok(Tree::node(label, children))
}

pub fn decode_tree(v: &Value) -> Result<Tree> {
    decode_tree_at(v, "$")
}

fn decode_forest_at(v: &Value, path: &str, mode: Mode) -> Result<Forest> {
    let trees = as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, t)| decode_tree_at(t, &format!("{path}[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Forest::new(trees, mode))
}

pub fn decode_forest(v: &Value, mode: Mode) -> Result<Forest> {
    decode_forest_at(v, "$", mode)
}

pub fn decode_element(v: &Value, mode: Mode) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(mode);
    for (k, term) in as_array(v, "$")?.iter().enumerate() {
        let path = format!("$[{k}]");
        let c = decode_rational(field(term, "coeff", &path)?, &format!("{path}.coeff"))?;
        let f = decode_forest_at(field(term, "forest", &path)?, &format!("{path}.forest"), mode)?;
        out.add_term(f, c);
    }
    Ok(out)
}

pub fn decode_tensor(v: &Value, mode: Mode) -> Result<TensorElement> {
    let mut out = TensorElement::zero(mode);
    for (k, term) in as_array(v, "$")?.iter().enumerate() {
        let path = format!("$[{k}]");
        let c = decode_rational(field(term, "coeff", &path)?, &format!("{path}.coeff"))?;
        let l = decode_forest_at(field(term, "left", &path)?, &format!("{path}.left"), mode)?;
        let r = decode_forest_at(field(term, "right", &path)?, &format!("{path}.right"), mode)?;
        out.add_term(l, r, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coproduct_tree;
    use crate::rational::frac;

    #[test]
    fn tree_round_trip() {
        let t = Tree::node(Some(Decoration::new(1, 2, 1)), vec![Tree::leaf(Some(Decoration::new(2, 1, 1)))]);
        let v = encode_tree(&t);
        assert_eq!(v.to_string(), r#"{"c":[{"c":[],"d":[2,1,1]}],"d":[1,2,1]}"#);
        assert_eq!(decode_tree(&v).unwrap(), t);
    }

    #[test]
    fn element_and_tensor_round_trip() {
        let mut x = AlgebraElement::zero(Mode::Commutative);
        x.add_term(Forest::parse("[[]][]").unwrap(), frac(-3, 4));
        x.add_term(Forest::unit(), frac(1, 1));
        assert_eq!(decode_element(&encode_element(&x), Mode::Commutative).unwrap(), x);
        let d = coproduct_tree(&Tree::parse("[[][[]]]").unwrap(), Mode::Planar);
        assert_eq!(decode_tensor(&encode_tensor(&d), Mode::Planar).unwrap(), d);
    }

    #[test]
    fn decode_errors_name_the_path() {
        let v: Value = serde_json::from_str(r#"[{"coeff":"1/0","forest":[]}]"#).unwrap();
        match decode_element(&v, Mode::Planar).unwrap_err() {
            Error::Decode { path, .. } => assert_eq!(path, "$[0].coeff"),
            e => panic!("unexpected {e}"),
        }
        let v: Value = serde_json::from_str(r#"{"c":[{"c":[]}],"d":null}"#).unwrap();
        match decode_tree(&v).unwrap_err() {
            Error::Decode { path, reason } => {
                assert_eq!(path, "$.c[0]");
                assert!(reason.contains("\"d\""));
            }
            e => panic!("unexpected {e}"),
        }
    }
}
