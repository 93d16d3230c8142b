//! The affine index polynomial and the writhe-type invariants built from
//! crossing weights.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{Chirality, Diagram, FlatDiagram};
use crate::labeling::{compute_labeling, crossing_weights, CrossingWeight, LabelingMode, Parity};
use crate::poly::{AffineExponent, FlatPolynomial, IndexPolynomial};

/// `sum_c sign(c) * (t^W(c) - 1)`.
pub fn polynomial_from_weights(weights: &[CrossingWeight]) -> IndexPolynomial {
    let mut p = IndexPolynomial::zero();
    for w in weights {
        let s = w.sign.value();
        p.add_term(w.weight.clone(), s);
        p.add_term(AffineExponent::constant(0), -s);
    }
    p
}

pub fn affine_index_polynomial(d: &Diagram, mode: &LabelingMode) -> Result<IndexPolynomial> {
    let labeling = compute_labeling(d, mode)?;
    Ok(polynomial_from_weights(&crossing_weights(d, &labeling)))
}

pub fn writhe(d: &Diagram) -> i64 {
    d.crossings().values().map(|c| c.sign.value()).sum()
}

/// Sum of the signs of odd crossings. Knots only.
pub fn odd_writhe(d: &Diagram) -> Result<i64> {
    if !d.is_knot() {
        return Err(Error::MultiComponent { components: d.num_components() });
    }
    let weights = crossing_weights(d, &compute_labeling(d, &LabelingMode::Symbolic)?);
    Ok(weights.iter().filter(|w| w.parity == Some(Parity::Odd)).map(|w| w.sign.value()).sum())
}

/// Signed crossing counts per integer weight.
///
/// `by_weight` holds the nonzero weights. `wr_0` is kept apart: a first
/// Reidemeister move changes it. Crossings whose weight is still
/// symbolic (between components, in symbolic mode) are left out.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct WritheSpectrum {
    pub by_weight: BTreeMap<i64, i64>,
    pub wr_0: i64,
}

impl WritheSpectrum {
    pub fn from_weights(weights: &[CrossingWeight]) -> Self {
        let mut out = WritheSpectrum::default();
        for w in weights {
            match w.weight.as_integer() {
                Some(0) => out.wr_0 += w.sign.value(),
                Some(n) => *out.by_weight.entry(n).or_insert(0) += w.sign.value(),
                None => {}
            }
        }
        out.by_weight.retain(|_, v| *v != 0);
        out
    }

    /// Sum of `wr_n` over odd `n`; equals the odd writhe on knots.
    pub fn odd_sum(&self) -> i64 {
        self.by_weight.iter().filter(|(n, _)| *n % 2 != 0).map(|(_, v)| v).sum()
    }

    /// `sum_n wr_n * (t^n - 1)`.
    pub fn polynomial(&self) -> IndexPolynomial {
        let mut p = IndexPolynomial::zero();
        for (&n, &w) in &self.by_weight {
            p.add_term(AffineExponent::constant(n), w);
            p.add_term(AffineExponent::constant(0), -w);
        }
        p
    }
}

pub fn wr_spectrum(d: &Diagram, mode: &LabelingMode) -> Result<WritheSpectrum> {
    let labeling = compute_labeling(d, mode)?;
    Ok(WritheSpectrum::from_weights(&crossing_weights(d, &labeling)))
}

/// `sum_c (t^|W(c)| + 1)` over GF(2), from the flat diagram alone.
pub fn flat_affine_polynomial(f: &FlatDiagram) -> Result<FlatPolynomial> {
    if f.num_components() != 1 {
        return Err(Error::MultiComponent { components: f.num_components() });
    }
    let comp = &f.components[0];
    let delta = |c: Chirality| if c == Chirality::LeftIncoming { -1 } else { 1 };
    // label entering each passage
    let mut incoming = Vec::with_capacity(comp.len());
    let mut label = 0i64;
    for p in comp {
        incoming.push(label);
        label += delta(p.chirality);
    }
    let mut left: BTreeMap<u32, i64> = BTreeMap::new();
    let mut right: BTreeMap<u32, i64> = BTreeMap::new();
    for (p, &l) in comp.iter().zip(&incoming) {
        match p.chirality {
            Chirality::LeftIncoming => left.insert(p.crossing, l),
            Chirality::RightIncoming => right.insert(p.crossing, l),
        };
    }
    let mut out = FlatPolynomial::zero();
    for (id, a) in left {
        let b = right[&id];
        out.add_term((a - b - 1).unsigned_abs());
        out.add_term(0);
    }
    Ok(out)
}

/// Everything computed for one diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub polynomial: IndexPolynomial,
    pub writhe: i64,
    /// Knots only.
    pub odd_writhe: Option<i64>,
    pub wr_spectrum: WritheSpectrum,
    /// Knots only.
    pub flat_polynomial: Option<FlatPolynomial>,
    pub weights: Vec<CrossingWeight>,
}

impl InvariantReport {
    pub fn compute(d: &Diagram, mode: &LabelingMode) -> Result<Self> {
        let labeling = compute_labeling(d, mode)?;
        let weights = crossing_weights(d, &labeling);
        let knot = d.is_knot();
        let odd = knot.then(|| weights.iter().filter(|w| w.parity == Some(Parity::Odd)).map(|w| w.sign.value()).sum());
        let flat_polynomial = if knot { Some(flat_affine_polynomial(&d.flatten())?) } else { None };
        Ok(InvariantReport {
            polynomial: polynomial_from_weights(&weights),
            writhe: writhe(d),
            odd_writhe: odd,
            wr_spectrum: WritheSpectrum::from_weights(&weights),
            flat_polynomial,
            weights,
        })
    }
}
