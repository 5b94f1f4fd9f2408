//! End-to-end runs of the `formint` binary. Documents marked verified are
//! re-verified from their emitted text alone.

use std::process::Command;

use formint::cli::{parse_form, parse_function};
use formint::integrate::oneform::verify_1form_primitive;
use formint::integrate::{LogTerm, Primitive};
use formint::telescoping::{verify_telescoper, OreOp, Telescoped};
use formint::Vars;
use serde_json::Value;

const OMEGA: &str = "(t*x*y*z - 1)/(x^2*y*z) * d(x) + (t*x*y*z - 1)/(x*y^2*z) * d(y) + (t^2*x*y*z + x*y*z - 1)/(x*y*z^2) * d(z)";

fn formint(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_formint")).args(args).output().expect("binary runs");
    let doc = serde_json::from_slice(&out.stdout).expect("one JSON document");
    (doc, out.status.code().unwrap())
}

#[test]
fn integrate1_document_reverifies() {
    let (doc, code) = formint(&["integrate1", "--vars", "x,y,z", "--param", "t", OMEGA]);
    assert_eq!(code, 0);
    assert_eq!(doc["verified"], Value::Bool(true));
    let v = Vars::with_param(&["x", "y", "z"]);
    let r = &doc["result"];
    let logs = r["logs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| LogTerm {
            respoly: parse_function(l["respoly"].as_str().unwrap(), &v).unwrap().num().clone(),
            argpoly: parse_function(l["argpoly"].as_str().unwrap(), &v).unwrap(),
        })
        .collect();
    let p = Primitive { rational: parse_function(r["rational"].as_str().unwrap(), &v).unwrap(), logs };
    assert!(verify_1form_primitive(&parse_form(OMEGA, &v).unwrap(), &p).unwrap());
}

#[test]
fn telescope_document_reverifies() {
    let (doc, code) = formint(&["telescope", "--vars", "x,y,z", "--format", "pretty", OMEGA]);
    assert_eq!(code, 0);
    let v = Vars::with_param(&["x", "y", "z"]);
    let r = &doc["result"];
    let coeffs = r["operator"].as_array().unwrap().iter().map(|c| parse_function(c.as_str().unwrap(), &v).unwrap()).collect();
    let t = Telescoped {
        operator: OreOp::new(coeffs, 3, v.nvars()),
        certificate: parse_function(r["certificate"].as_str().unwrap(), &v).unwrap(),
    };
    assert!(verify_telescoper(&parse_form(OMEGA, &v).unwrap(), &t));
    assert_eq!(r["operator_text"], "(t^4-1)*D^2 + (-2*t^3-2*t)*D + 2*t^2+2");
}

#[test]
fn exit_codes() {
    assert_eq!(formint(&["exact1", "--vars", "x", "1/x * d(x)"]).1, 0);
    assert_eq!(formint(&["integrate1", "--vars", "x,y", "y*d(x)"]).1, 2);
    assert_eq!(formint(&["gd", "--vars", "x,y,z", "1/(x^3+y^3+z^3)"]).1, 3);
    assert_eq!(formint(&["smooth", "--vars", "a,b", "a*b^2"]).1, 0);
    assert_eq!(formint(&["gd", "--vars", "a,b,c", "1", "a*b*c", "1"]).1, 3);
    let (doc, code) = formint(&["hermite", "--vars", "x", "1/x * * d(x)"]);
    assert_eq!(code, 4);
    assert_eq!(doc["error"]["kind"], "ParseError");
    assert_eq!(doc["error"]["column"], 7);
}
