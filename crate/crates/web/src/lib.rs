//! Browser bindings. Every function returns a JSON string; failures come
//! back as `{"error": "..."}` so the page can show them inline.

use std::sync::Arc;

use eqbundle::classify::classify;
use eqbundle::export::{export_complex, table1};
use eqbundle::families::{Family, FamilyKind};
use eqbundle::isotropy::isotropy_groupoid;
use eqbundle::orbit::orbit_graph;
use eqbundle::skeleton::build_skeleton;
use eqbundle::target::TargetGroup;
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

fn respond<T: Serialize>(r: eqbundle::Result<T>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("documents serialize"),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// `n = 0` selects the polyhedral families, which take no parameter.
fn family(kind: &str, n: u32) -> eqbundle::Result<Family> {
    Family::new(kind.parse::<FamilyKind>()?, (n > 0).then_some(n))
}

/// The skeleton with sphere coordinates and the signature of its orbit
/// graph.
#[wasm_bindgen]
pub fn skeleton_view(kind: &str, n: u32) -> String {
    respond((|| {
        let x = Arc::new(build_skeleton(family(kind, n)?));
        let signature = isotropy_groupoid(Arc::new(orbit_graph(x.clone())?))?.signature();
        Ok(json!({ "complex": export_complex(&x, true), "signature": signature }))
    })())
}

/// Bundle classes for a target such as `circle`, `su2` or `u2`.
#[wasm_bindgen]
pub fn classify_view(kind: &str, n: u32, target: &str, lo: i32, hi: i32) -> String {
    respond((|| {
        let target: TargetGroup = target.parse()?;
        classify(family(kind, n)?, &target, Some((lo as i64, hi as i64)))
    })())
}

#[wasm_bindgen]
pub fn table1_view(max_n: u32) -> String {
    respond(table1(2, max_n))
}
