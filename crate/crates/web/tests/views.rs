use eqbundle_web::{classify_view, skeleton_view, table1_view};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn skeleton_has_coordinates_for_every_vertex() {
    let v = parse(skeleton_view("octahedral", 0));
    let complex = &v["complex"];
    assert_eq!(
        complex["coordinates"]["vertices"].as_array().unwrap().len(),
        complex["vertices"].as_array().unwrap().len()
    );
    assert_eq!(v["signature"], serde_json::json!([2, 3, 4]));
}

#[test]
fn classify_lists_explicit_chern_numbers() {
    let v = parse(classify_view("cyclic", 3, "circle", -3, 3));
    assert_eq!(v["symbolic"], false);
    assert!(v["classes"].as_array().unwrap().iter().all(|c| c["chern"].is_i64()));
}

#[test]
fn table_ends_with_icosahedral_row() {
    let v = parse(table1_view(3));
    let last = v.as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["family"], "icosahedral");
    assert_eq!(last["N"], 60);
}

#[test]
fn errors_are_reported_inline() {
    assert!(parse(skeleton_view("cyclic", 0))["error"].is_string());
    assert!(parse(classify_view("cyclic", 2, "finite:cyclic:2", -1, 1))["error"].is_string());
    assert!(parse(classify_view("nonagonal", 2, "circle", -1, 1))["error"].is_string());
}
