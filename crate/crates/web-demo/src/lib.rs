//! Browser bindings: each export takes plain text and returns a JSON string.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use tspread::graphs::edge_ideal;
use tspread::io::{parse_graph, parse_ideal};
use tspread::report::{graph_report, invariants_report};
use tspread::resolutions::betti_table_with_limit;
use tspread::tspread::{format_polynomial, pascal_ideal, pascal_report};

/// Keeps the page responsive; the oracle is exponential in `n`.
pub const BROWSER_MAX_N: u32 = 12;

fn to_json(v: impl serde::Serialize) -> Result<Value, String> {
    serde_json::to_value(v).map_err(|e| e.to_string())
}

pub fn pascal_explorer_json(n: u32, t: u32) -> Result<String, String> {
    let report = pascal_report(n, t).map_err(|e| e.to_string())?;
    let mut out = json!({
        "report": to_json(&report)?,
        "hilbert": format!(
            "({}) / (1 - z)^{}",
            format_polynomial(&report.hilbert_numerator),
            report.hilbert_denominator_exponent
        ),
    });
    if n <= BROWSER_MAX_N {
        let p = pascal_ideal(n, t).map_err(|e| e.to_string())?;
        let table = betti_table_with_limit(&p.ideal, BROWSER_MAX_N).map_err(|e| e.to_string())?;
        out["diagram"] = Value::String(table.diagram());
    }
    Ok(out.to_string())
}

pub fn ideal_invariants_json(text: &str, t: Option<u32>) -> Result<String, String> {
    let ideal = parse_ideal(text, None).map_err(|e| e.to_string())?;
    let report = invariants_report(&ideal, t, BROWSER_MAX_N).map_err(|e| e.to_string())?;
    let diagram = report.betti.diagram();
    let mut value = to_json(&report)?;
    value["diagram"] = Value::String(diagram);
    Ok(value.to_string())
}

pub fn graph_regularity_json(text: &str) -> Result<String, String> {
    let graph = parse_graph(text, None).map_err(|e| e.to_string())?;
    let report = graph_report(&graph, BROWSER_MAX_N).map_err(|e| e.to_string())?;
    let ideal = edge_ideal(&graph).map_err(|e| e.to_string())?;
    let table = betti_table_with_limit(&ideal, BROWSER_MAX_N).map_err(|e| e.to_string())?;
    let mut value = to_json(&report)?;
    value["diagram"] = Value::String(table.diagram());
    Ok(value.to_string())
}

#[wasm_bindgen]
pub fn pascal_explorer(n: u32, t: u32) -> Result<String, JsValue> {
    pascal_explorer_json(n, t).map_err(|e| JsValue::from_str(&e))
}

/// `t = 0` means no t-spread analysis.
#[wasm_bindgen]
pub fn ideal_invariants(text: &str, t: u32) -> Result<String, JsValue> {
    ideal_invariants_json(text, (t > 0).then_some(t)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn graph_regularity(text: &str) -> Result<String, JsValue> {
    graph_regularity_json(text).map_err(|e| JsValue::from_str(&e))
}
