//! Affine labelings, crossing weights and Gauss-code parity.
//!
//! Every arc carries a label `base + offset`. Travelling along a component,
//! the label changes by [`passage_delta`] at each passage: `-sign` when
//! passing over and `+sign` when passing under. A component closes up
//! exactly when the deltas of its passages at crossings with *other*
//! components sum to zero, because the two passages of a self-crossing
//! contribute `+s` and `-s`.
//!
//! The weight of a crossing is
//! `label_in(over) - label_in(under) - sign`, the label entering the over
//! passage minus the label entering the under passage, corrected by the
//! sign. For a positive crossing this is `a - (b + 1)` with `a` the label of
//! the left incoming arc; for a negative crossing it is `b - (a - 1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{ArcRef, Diagram, Passage, Role, Slot};
use crate::poly::AffineExponent;

/// Label change when travelling through a passage.
pub fn passage_delta(p: &Passage) -> i64 {
    match p.role {
        Role::Over => -p.sign.value(),
        Role::Under => p.sign.value(),
    }
}

/// How component bases are chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabelingMode {
    /// Component `i` starts at the variable `x_i`, with `x_0 = 0`.
    Symbolic,
    /// Component `i` starts at the given integer.
    Pinned(Vec<i64>),
}

impl LabelingMode {
    /// Pinned at zero for every component.
    pub fn zeros(d: &Diagram) -> Self {
        LabelingMode::Pinned(vec![0; d.num_components()])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LabelBase {
    Var(usize),
    Pinned(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineLabel {
    pub base: LabelBase,
    pub offset: i64,
}

impl AffineLabel {
    pub fn exponent(&self) -> AffineExponent {
        match self.base {
            LabelBase::Var(i) => &AffineExponent::var(i) + &AffineExponent::constant(self.offset),
            LabelBase::Pinned(b) => AffineExponent::constant(b + self.offset),
        }
    }

    pub fn pinned_value(&self) -> Option<i64> {
        match self.base {
            LabelBase::Pinned(b) => Some(b + self.offset),
            LabelBase::Var(_) => None,
        }
    }

    /// `self - other`, defined when both are pinned or both symbolic.
    pub fn difference(&self, other: &AffineLabel) -> Option<AffineExponent> {
        match (self.base, other.base) {
            (LabelBase::Pinned(_), LabelBase::Pinned(_)) | (LabelBase::Var(_), LabelBase::Var(_)) => {
                Some(&self.exponent() - &other.exponent())
            }
            _ => None,
        }
    }

    /// Pinned labels rewritten on base 0, so equal values compare equal.
    pub fn normalized(&self) -> AffineLabel {
        match self.base {
            LabelBase::Pinned(b) => AffineLabel { base: LabelBase::Pinned(0), offset: b + self.offset },
            LabelBase::Var(_) => *self,
        }
    }

    fn plus(&self, k: i64) -> AffineLabel {
        AffineLabel { base: self.base, offset: self.offset + k }
    }
}

/// Labels for every arc of a diagram.
///
/// `offsets[c][p]` is the offset of the arc leaving passage `p` on component
/// `c`; the arc entering passage 0 has offset 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineLabeling {
    bases: Vec<LabelBase>,
    offsets: Vec<Vec<i64>>,
}

impl AffineLabeling {
    pub fn bases(&self) -> &[LabelBase] {
        &self.bases
    }

    pub fn is_pinned(&self) -> bool {
        self.bases.iter().all(|b| matches!(b, LabelBase::Pinned(_)))
    }

    /// Pinned integer bases, if every base is pinned.
    pub fn pinned_bases(&self) -> Option<Vec<i64>> {
        self.bases
            .iter()
            .map(|b| match b {
                LabelBase::Pinned(v) => Some(*v),
                LabelBase::Var(_) => None,
            })
            .collect()
    }

    pub fn label(&self, arc: ArcRef) -> Option<AffineLabel> {
        let base = *self.bases.get(arc.component)?;
        let offs = &self.offsets[arc.component];
        let offset = if offs.is_empty() {
            (arc.position == 0).then_some(0)?
        } else {
            *offs.get(arc.position)?
        };
        Some(AffineLabel { base, offset })
    }

    /// Label of the arc entering the passage at `slot`.
    pub fn incoming(&self, slot: Slot) -> AffineLabel {
        let base = self.bases[slot.component];
        let offset = if slot.position == 0 { 0 } else { self.offsets[slot.component][slot.position - 1] };
        AffineLabel { base, offset }
    }

    /// Labels per component, one per arc in [`Diagram::arcs`] order.
    pub fn arc_labels(&self) -> Vec<Vec<AffineLabel>> {
        self.bases
            .iter()
            .zip(&self.offsets)
            .map(|(&base, offs)| {
                if offs.is_empty() {
                    vec![AffineLabel { base, offset: 0 }]
                } else {
                    offs.iter().map(|&offset| AffineLabel { base, offset }).collect()
                }
            })
            .collect()
    }

    /// Rebuilds a labeling from explicit per-arc labels, checking the
    /// crossing rule on every passage (which includes closure).
    pub fn from_arc_labels(d: &Diagram, labels: Vec<Vec<AffineLabel>>) -> Result<Self> {
        if labels.len() != d.num_components() {
            return Err(Error::InvalidLabeling(format!(
                "{} label lists for {} components",
                labels.len(),
                d.num_components()
            )));
        }
        let mut bases = Vec::new();
        let mut offsets = Vec::new();
        for (c, (comp, labs)) in d.components().iter().zip(labels).enumerate() {
            let labs: Vec<AffineLabel> = labs.iter().map(AffineLabel::normalized).collect();
            if labs.len() != comp.len().max(1) {
                return Err(Error::InvalidLabeling(format!("component {c} has {} arcs", comp.len().max(1))));
            }
            if labs.iter().any(|l| l.base != labs[0].base) {
                return Err(Error::InvalidLabeling(format!("component {c} mixes bases")));
            }
            let entering = *labs.last().expect("at least one arc");
            for (p, pass) in comp.iter().enumerate() {
                let before = if p == 0 { entering } else { labs[p - 1] };
                if labs[p] != before.plus(passage_delta(pass)) {
                    return Err(Error::InvalidLabeling(format!(
                        "component {c}, passage {p} ({pass}): {} does not follow {}",
                        labs[p].offset, before.offset
                    )));
                }
            }
            let base = match entering.base {
                LabelBase::Pinned(b) => LabelBase::Pinned(b + entering.offset),
                LabelBase::Var(i) if entering.offset == 0 => LabelBase::Var(i),
                LabelBase::Var(_) => {
                    return Err(Error::InvalidLabeling(format!(
                        "component {c}: symbolic base must label the arc entering position 0"
                    )))
                }
            };
            let shift = entering.offset;
            bases.push(base);
            offsets.push(if comp.is_empty() { Vec::new() } else { labs.iter().map(|l| l.offset - shift).collect() });
        }
        Ok(AffineLabeling { bases, offsets })
    }

    /// Same labeling with one pinned component shifted by a constant.
    pub fn shift_component(&self, component: usize, by: i64) -> Result<Self> {
        let mut out = self.clone();
        match out.bases.get_mut(component) {
            Some(LabelBase::Pinned(b)) => *b += by,
            Some(LabelBase::Var(_)) => {
                return Err(Error::InvalidLabeling("cannot shift a symbolic base by a constant".into()))
            }
            None => return Err(Error::InvalidComponent(component)),
        }
        Ok(out)
    }
}

/// Net label change around each component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Compatibility {
    pub compatible: bool,
    pub defects: Vec<i64>,
}

/// A diagram admits an affine labeling iff every component's net label
/// change (from its crossings with other components) is zero.
pub fn is_compatible(d: &Diagram) -> Compatibility {
    let defects: Vec<i64> = d.components().iter().map(|c| c.iter().map(passage_delta).sum()).collect();
    Compatibility { compatible: defects.iter().all(|&x| x == 0), defects }
}

pub fn compute_labeling(d: &Diagram, mode: &LabelingMode) -> Result<AffineLabeling> {
    let compat = is_compatible(d);
    if let Some((component, &defect)) = compat.defects.iter().enumerate().find(|(_, x)| **x != 0) {
        return Err(Error::IncompatibleLink { component, defect });
    }
    let bases: Vec<LabelBase> = match mode {
        LabelingMode::Symbolic => (0..d.num_components()).map(LabelBase::Var).collect(),
        LabelingMode::Pinned(v) => {
            if v.len() != d.num_components() {
                return Err(Error::PinnedArity { expected: d.num_components(), got: v.len() });
            }
            v.iter().copied().map(LabelBase::Pinned).collect()
        }
    };
    let offsets = d
        .components()
        .iter()
        .map(|comp| {
            comp.iter()
                .scan(0i64, |acc, p| {
                    *acc += passage_delta(p);
                    Some(*acc)
                })
                .collect()
        })
        .collect();
    Ok(AffineLabeling { bases, offsets })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingWeight {
    pub crossing: u32,
    pub weight: AffineExponent,
    pub sign: crate::gauss::Sign,
    /// Set only when both passages lie on one component.
    pub parity: Option<Parity>,
}

/// Weight of every crossing, ordered by crossing id.
pub fn crossing_weights(d: &Diagram, labeling: &AffineLabeling) -> Vec<CrossingWeight> {
    d.crossings()
        .into_iter()
        .map(|(id, slots)| {
            let over = labeling.incoming(slots.over);
            let under = labeling.incoming(slots.under);
            let weight = over
                .difference(&under)
                .expect("one labeling uses one kind of base")
                .shifted(-slots.sign.value());
            let parity = slots.is_self_crossing().then(|| slot_parity(slots.over, slots.under));
            CrossingWeight { crossing: id, weight, sign: slots.sign, parity }
        })
        .collect()
}

fn slot_parity(a: Slot, b: Slot) -> Parity {
    let between = a.position.abs_diff(b.position) - 1;
    if between % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Odd when the crossing's two passages enclose an odd number of passages.
pub fn crossing_parity(d: &Diagram, crossing: u32) -> Result<Parity> {
    let slots = d.crossing(crossing)?;
    if !slots.is_self_crossing() {
        return Err(Error::CrossingSpansComponents(crossing));
    }
    Ok(slot_parity(slots.over, slots.under))
}
