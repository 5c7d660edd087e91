use qsusy_cli::report::{Check, Report};
use serde_json::{json, Value};
use std::collections::BTreeSet;

fn schema() -> Value {
    serde_json::from_str(include_str!("../../../schema/report.schema.json")).unwrap()
}

fn keys(v: &Value) -> BTreeSet<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

fn required(v: &Value) -> BTreeSet<String> {
    v["required"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn sample() -> Value {
    let mut r = Report::new("sample", json!({ "n_susy": 2, "two_j": [1], "max_degree": 2, "killing_hh": 1 }));
    r.push(Check::gated("a.pass", true, None, json!(1)));
    r.push(Check::gated("b.fail", false, Some("witness".into()), json!(null)));
    r.push(Check::report_only("c.info", None, json!({})));
    r.stamp();
    serde_json::from_str(&r.to_json()).unwrap()
}

#[test]
fn report_fields_match_schema() {
    let s = schema();
    let r = sample();
    assert_eq!(keys(&r), required(&s));
    assert_eq!(keys(&r["summary"]), required(&s["properties"]["summary"]));
    let check = &s["$defs"]["check"];
    let statuses: BTreeSet<String> =
        check["properties"]["status"]["enum"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().into()).collect();
    for c in r["checks"].as_array().unwrap() {
        assert_eq!(keys(c), required(check));
        assert!(statuses.contains(c["status"].as_str().unwrap()));
    }
    assert_eq!(r["schema_version"], s["properties"]["schema_version"]["const"]);
}

#[test]
fn scalar_encoding_matches_schema() {
    let s = schema();
    let v = serde_json::to_value(qsusy_core::Scalar::q_int(2, &qsusy_core::Scalar::q())).unwrap();
    assert_eq!(keys(&v), required(&s["$defs"]["scalar"]));
}
