//! WebAssembly bindings for the static demo in `www/`.
//!
//! Every export takes plain strings and numbers and returns a JSON string.
//! Failures come back as `{"error": {"kind": ..., "message": ...}}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use vknot::report::{invariants_report, labels_json};
use vknot::{affine_index_polynomial, compute_labeling, null_weight_reduction, parse, scramble as scramble_moves};
use vknot::{Error, LabelingMode};

fn error_json(e: &Error) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

fn to_string(r: Result<Value, Error>) -> String {
    r.unwrap_or_else(|e| error_json(&e)).to_string()
}

/// Parses `"0,-3"` into pinned bases. Blank means no pinning.
fn bases(pin: &str) -> Result<Option<Vec<i64>>, Error> {
    let pin = pin.trim();
    if pin.is_empty() {
        return Ok(None);
    }
    let mut offset = 0;
    let mut out = Vec::new();
    for part in pin.split(',') {
        let n = part.trim().parse::<i64>().map_err(|_| Error::Syntax {
            offset,
            message: format!("bad base label `{}`", part.trim()),
        })?;
        out.push(n);
        offset += part.len() + 1;
    }
    Ok(Some(out))
}

/// Affine index polynomial, writhes, weights and genus data.
#[wasm_bindgen]
pub fn invariants(code: &str, pin: &str) -> String {
    to_string((|| {
        let d = parse(code)?;
        let mode = match bases(pin)? {
            Some(b) => LabelingMode::Pinned(b),
            None => LabelingMode::Symbolic,
        };
        invariants_report(&d, &mode)
    })())
}

/// Applies `moves` random Reidemeister moves and returns the end diagram with its trace.
#[wasm_bindgen]
pub fn scramble(code: &str, moves: u32, seed: u32) -> String {
    to_string((|| {
        let d = parse(code)?;
        let (out, trace) = scramble_moves(&d, moves as usize, u64::from(seed));
        let p = affine_index_polynomial(&out, &LabelingMode::Symbolic)?;
        Ok(json!({ "diagram": out.to_string(), "polynomial": p.shift_normal_form().to_string(), "trace": trace }))
    })())
}

/// Smooths every weight-zero crossing under the pinned labeling (zeros when `pin` is blank).
#[wasm_bindgen]
pub fn reduce(code: &str, pin: &str) -> String {
    to_string((|| {
        let d = parse(code)?;
        let mode = match bases(pin)? {
            Some(b) => LabelingMode::Pinned(b),
            None => LabelingMode::zeros(&d),
        };
        let l = compute_labeling(&d, &mode)?;
        let (out, ol) = null_weight_reduction(&d, &l)?;
        let kept = out.crossing_ids();
        let smoothed: Vec<u32> = d.crossing_ids().into_iter().filter(|c| !kept.contains(c)).collect();
        Ok(json!({
            "diagram": out.to_string(),
            "components": out.num_components(),
            "smoothed": smoothed,
            "labels": labels_json(&ol),
        }))
    })())
}
