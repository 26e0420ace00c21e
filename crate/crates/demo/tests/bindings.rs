use clausen_demo::{beyond_bound_json, char_poly_json, verify_product_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn char_poly_view() {
    let v = parse(&char_poly_json("1/2", "1/2", 1).unwrap());
    assert_eq!(v["report"]["polynomial"], serde_json::json!(["1", "7/8", "1/8"]));
    assert_eq!(v["report"]["status"], "Verified");
    assert_eq!(v["integer_values"][1], "2");
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples[0], serde_json::json!([0.0, 1.0]));
    assert_eq!(samples.last().unwrap()[0], 6.0);
}

#[test]
fn product_rows_included() {
    let v = parse(&verify_product_json("1/4", "2/3", 1, "1,-1/2,3", 12).unwrap());
    assert_eq!(v["report"]["status"], "Verified");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 13);
    assert_eq!(rows[0]["lhs"], rows[0]["rhs"]);
}

#[test]
fn beyond_bound_view() {
    let v = parse(&beyond_bound_json("1/4", "2/3", 0, "1,1,1").unwrap());
    assert_eq!(v["report"]["status"], "Deviation");
    assert_eq!(v["report"]["first_deviation"]["k"], 3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 13);
}

#[test]
fn bad_input_is_an_error() {
    assert!(char_poly_json("1/0", "1", 1).unwrap_err().starts_with("a:"));
    assert!(char_poly_json("-1/2", "1", 1).is_err());
    assert!(verify_product_json("1/3", "1/5", 1, "1,0", 10).is_err());
}
