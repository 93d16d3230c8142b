//! JSON reports shared by the command line tool and the browser demo.

use num::rational::Ratio;
use serde_json::{json, Map, Value};

use crate::cobordism::{four_ball_genus_bounds, seifert_stats, TraceReport};
use crate::error::Result;
use crate::gauss::{serialize, Diagram};
use crate::invariants::InvariantReport;
use crate::labeling::{is_compatible, AffineLabeling, LabelingMode, Parity};
use crate::poly::IndexPolynomial;

pub fn polynomial_json(p: &IndexPolynomial) -> Value {
    json!(p.to_terms())
}

/// An integer when the value is whole, otherwise the string `"p/q"`.
pub fn ratio_json(r: Ratio<i64>) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(r.to_string())
    }
}

pub fn compat_report(d: &Diagram) -> Value {
    let c = is_compatible(d);
    json!({ "diagram": d.to_string(), "compatible": c.compatible, "defects": c.defects })
}

pub fn invariants_report(d: &Diagram, mode: &LabelingMode) -> Result<Value> {
    let r = InvariantReport::compute(d, mode)?;
    let weights: Vec<Value> = r
        .weights
        .iter()
        .map(|w| {
            json!({
                "crossing": w.crossing,
                "sign": w.sign.value(),
                "weight": w.weight.to_string(),
                "parity": w.parity.map(|p| if p == Parity::Odd { "odd" } else { "even" }),
            })
        })
        .collect();
    let spectrum: Map<String, Value> = r.wr_spectrum.by_weight.iter().map(|(n, v)| (n.to_string(), json!(v))).collect();
    let stats = seifert_stats(d);
    let genus_bounds = if d.is_knot() { Some(four_ball_genus_bounds(d)?) } else { None };
    Ok(json!({
        "diagram": d.to_string(),
        "canonical": serialize(d),
        "components": d.num_components(),
        "compatible": true,
        "writhe": r.writhe,
        "odd_writhe": r.odd_writhe,
        "wr_spectrum": spectrum,
        "wr_0": r.wr_spectrum.wr_0,
        "polynomial": r.polynomial.to_string(),
        "polynomial_terms": polynomial_json(&r.polynomial),
        "flat_polynomial": r.flat_polynomial.map(|f| f.to_string()),
        "weights": weights,
        "seifert": { "n": stats.n, "r": stats.r, "genus": stats.genus().ok() },
        "genus_bounds": genus_bounds,
    }))
}

pub fn genus_report(d: &Diagram) -> Result<Value> {
    let stats = seifert_stats(d);
    let bounds = four_ball_genus_bounds(d)?;
    Ok(json!({
        "n": stats.n,
        "r": stats.r,
        "genus": stats.genus()?,
        "exact_four_ball_genus": bounds.exact,
        "genus_bounds": bounds,
    }))
}

/// Arc labels per component, as integers when pinned and `x_i + k` otherwise.
pub fn labels_json(l: &AffineLabeling) -> Value {
    let comps: Vec<Value> = l
        .arc_labels()
        .iter()
        .map(|labels| {
            labels
                .iter()
                .map(|a| a.pinned_value().map_or_else(|| json!(a.exponent().to_string()), |v| json!(v)))
                .collect()
        })
        .collect();
    json!(comps)
}

pub fn trace_report(r: &TraceReport) -> Value {
    json!({
        "genus": ratio_json(r.genus()),
        "concordance": r.is_concordance(),
        "births": r.births,
        "deaths": r.deaths,
        "saddles": r.saddles,
        "start_components": r.start_components,
        "end_components": r.end_components,
        "end": r.end.to_string(),
        "critical_points_paired": r.critical_points_paired,
        "levels": r.levels,
    })
}
