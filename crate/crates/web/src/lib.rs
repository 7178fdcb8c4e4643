//! Browser bindings. Every exported function takes and returns strings so the
//! page can stay plain JavaScript; the `*_json` functions are ordinary Rust and
//! are what the tests exercise.

mod svg;

use serde::Serialize;
use wasm_bindgen::prelude::*;

use wilddiag::io::{parse_factor, render_json, render_text, InputDocument, CATALOG};
use wilddiag::{compile, hom_class, Circle};

pub use svg::render_svg;

#[derive(Serialize)]
struct BuildReport {
    report: serde_json::Value,
    text: String,
    svg: String,
}

/// Compiles an input document and returns the JSON report together with a
/// text summary and an SVG drawing of the diagram.
pub fn build_json(source: &str) -> Result<String, String> {
    let doc = InputDocument::parse(source).map_err(|e| e.to_string())?;
    let compiled = compile(&doc.input).map_err(|e| e.to_string())?;
    let report = serde_json::from_str(&render_json(&compiled)).map_err(|e| e.to_string())?;
    let out = BuildReport {
        report,
        text: render_text(&compiled),
        svg: render_svg(&compiled.diagram),
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CircleInfo {
    circle: String,
    ram: u64,
    slope: String,
    irr: u64,
}

#[derive(Serialize)]
struct HomEntry {
    circle: String,
    mult: u64,
    ram: u64,
    slope: String,
}

#[derive(Serialize)]
struct HomReport {
    a: CircleInfo,
    b: CircleInfo,
    hom: Vec<HomEntry>,
    irr: u64,
    rank: u64,
}

fn circle_info(c: &Circle) -> CircleInfo {
    CircleInfo {
        circle: c.to_string(),
        ram: c.ram(),
        slope: c.slope().to_string(),
        irr: c.irr(),
    }
}

/// Describes the irregular class of Hom between two circles given by
/// exponential factors such as `x^(3/2)` or `z3*x^2 - x`.
pub fn hom_json(a: &str, b: &str) -> Result<String, String> {
    let ca = Circle::of(&parse_factor(a).map_err(|e| format!("first factor: {e}"))?);
    let cb = Circle::of(&parse_factor(b).map_err(|e| format!("second factor: {e}"))?);
    let hom = hom_class(&ca, &cb).map_err(|e| e.to_string())?;
    let report = HomReport {
        a: circle_info(&ca),
        b: circle_info(&cb),
        hom: hom
            .entries()
            .iter()
            .map(|(c, mult)| HomEntry {
                circle: c.to_string(),
                mult: *mult,
                ram: c.ram(),
                slope: c.slope().to_string(),
            })
            .collect(),
        irr: hom.irr(),
        rank: hom.rank(),
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ExampleInfo {
    name: &'static str,
    title: &'static str,
    source: &'static str,
}

/// The built-in examples with their input documents.
pub fn examples_json() -> String {
    let list: Vec<ExampleInfo> = CATALOG
        .iter()
        .map(|e| ExampleInfo {
            name: e.name,
            title: e.title,
            source: e.source,
        })
        .collect();
    serde_json::to_string(&list).expect("example list serializes")
}

#[wasm_bindgen]
pub fn build(source: &str) -> Result<String, JsValue> {
    build_json(source).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn hom(a: &str, b: &str) -> Result<String, JsValue> {
    hom_json(a, b).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn examples() -> String {
    examples_json()
}
