//! Browser bindings for the adder demo page in `www/`.
//!
//! Each export takes plain numbers or strings and returns a JSON string, so
//! the page needs no generated TypeScript types. The logic lives in [`demo`]
//! and is tested natively.

use wasm_bindgen::prelude::*;

pub mod demo;

fn to_js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// Adds `constant` to an equal-weight superposition of the comma-separated
/// basis values in `values`.
#[wasm_bindgen(js_name = constAdd)]
pub fn const_add(n: u32, constant: i32, values: &str) -> Result<String, JsValue> {
    to_js(demo::const_add(n as usize, constant as i64, values))
}

/// Entry phases of the QFT circuit's matrix and its distance to the DFT.
#[wasm_bindgen(js_name = qftMatrix)]
pub fn qft_matrix(n: u32) -> Result<String, JsValue> {
    to_js(demo::qft_matrix(n as usize))
}

/// Operation counts of both adders for `N = 1..=n_max`.
#[wasm_bindgen(js_name = gateCounts)]
pub fn gate_counts(n_max: u32) -> Result<String, JsValue> {
    to_js(demo::gate_counts(n_max as usize))
}
