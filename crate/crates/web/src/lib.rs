//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns JSON text. Failures come back as
//! `{"error": "..."}` rather than as exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use matroid_flat::constructions::{family_mn, family_mn_circuit};
use matroid_flat::document::MatroidDocument;
use matroid_flat::flatness::{self, flatness_degree, FlatCollection};
use matroid_flat::pseudomod::is_pseudomodular;
use matroid_flat::{Matroid, Subset};

/// Ground sets above this size are refused; the page enumerates all flats.
pub const DEMO_CAP: usize = 12;

/// `M_n` above this `n` has too many elements for the chart.
pub const MAX_MN: usize = 7;

fn respond(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn parse(doc: &str) -> Result<Matroid, String> {
    MatroidDocument::from_json(doc)
        .and_then(|d| d.build(DEMO_CAP))
        .map_err(|e| e.to_string())
}

fn labels(m: &Matroid, s: Subset) -> Vec<String> {
    m.ground().labels_of(s)
}

/// Cyclic flats with their ranks, the cover relation between them, the
/// flatness degree and pseudomodularity.
pub fn analyze_json(doc: &str) -> Result<Value, String> {
    let m = parse(doc)?;
    let cyclic = m.cyclic_flats();
    let nodes: Vec<Value> = cyclic
        .iter()
        .enumerate()
        .map(|(i, &z)| json!({ "id": i, "set": labels(&m, z), "rank": m.rank(z).unwrap_or(0) }))
        .collect();
    let below = |a: Subset, b: Subset| a != b && a.is_subset_of(b);
    let mut covers = Vec::new();
    for (i, &lo) in cyclic.iter().enumerate() {
        for (j, &hi) in cyclic.iter().enumerate() {
            if below(lo, hi) && !cyclic.iter().any(|&z| below(lo, z) && below(z, hi)) {
                covers.push(json!([i, j]));
            }
        }
    }
    let degree = flatness_degree(&m).map_err(|e| e.to_string())?;
    let pm = is_pseudomodular(&m);
    Ok(json!({
        "elements": m.size(),
        "labels": m.ground().labels(),
        "rank": m.full_rank(),
        "flats": m.flats().len(),
        "cyclic_flats": nodes,
        "covers": covers,
        "degree": degree.degree.to_string(),
        "degree_witness": degree.witness.map(|w| json!({
            "delta": w.delta,
            "members": w.members.iter().map(|&f| labels(&m, f)).collect::<Vec<_>>(),
        })),
        "pseudomodular": pm.pseudomodular,
        "pseudomodular_witness": pm.witness.map(|w| json!({
            "a": labels(&m, w.a),
            "b": labels(&m, w.b),
            "b1": labels(&m, w.b1),
            "b2": labels(&m, w.b2),
            "ranks": w.ranks,
        })),
    }))
}

/// `Δ` of the flats given as a JSON array of label arrays.
pub fn delta_json(doc: &str, members: &str) -> Result<Value, String> {
    let m = parse(doc)?;
    let sets: Vec<Vec<String>> = serde_json::from_str(members).map_err(|e| e.to_string())?;
    if sets.is_empty() {
        return Err("select at least one flat".into());
    }
    let members = sets
        .iter()
        .map(|s| m.ground().subset(s))
        .collect::<matroid_flat::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    let c = FlatCollection::new(&m, members).map_err(|e| e.to_string())?;
    let d = flatness::delta(&c).map_err(|e| e.to_string())?;
    Ok(json!({ "delta": d, "size": c.len() }))
}

/// `Δ` of the first `k` circuits `F_1, .., F_k` of `M_n`, for `k = 1..=n`.
pub fn mn_series_json(n: usize) -> Result<Value, String> {
    if !(5..=MAX_MN).contains(&n) {
        return Err(format!("n must be between 5 and {MAX_MN}"));
    }
    let m = family_mn(n).map_err(|e| e.to_string())?;
    let circuits: Vec<Subset> = (1..=n).map(|i| family_mn_circuit(n, i)).collect();
    let mut points = Vec::new();
    for k in 1..=n {
        let c = FlatCollection::new(&m, circuits[..k].to_vec()).map_err(|e| e.to_string())?;
        let d = flatness::delta(&c).map_err(|e| e.to_string())?;
        let formula = (k >= 3).then(|| k as i64 - n as i64 + 1);
        points.push(json!({ "m": k, "delta": d, "formula": formula }));
    }
    Ok(json!({ "n": n, "elements": m.size(), "rank": m.full_rank(), "points": points }))
}

#[wasm_bindgen]
pub fn analyze(doc: &str) -> String {
    respond(analyze_json(doc))
}

#[wasm_bindgen]
pub fn delta(doc: &str, members: &str) -> String {
    respond(delta_json(doc, members))
}

#[wasm_bindgen]
pub fn mn_series(n: usize) -> String {
    respond(mn_series_json(n))
}
