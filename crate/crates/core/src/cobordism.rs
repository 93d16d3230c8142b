//! Smoothings, saddles, births and deaths, and what they do to genus and
//! to the affine index polynomial.
//!
//! Oriented smoothing is computed on arc units: the arc leaving each
//! passage. Walking along a unit reaches the next passage; if that passage
//! belongs to a smoothed crossing the walk jumps from the incoming over
//! strand to the outgoing under strand (and from incoming under to outgoing
//! over), otherwise the passage survives. Each cycle of this walk is a
//! component of the smoothed diagram.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num::rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{ArcRef, Diagram, Passage, Role, Slot};
use crate::invariants::affine_index_polynomial;
use crate::labeling::{compute_labeling, crossing_weights, AffineLabel, AffineLabeling, LabelingMode};
use crate::moves::MoveSite;
use crate::poly::AffineExponent;
use crate::transforms::rotate_after;

/// One component of a smoothed diagram, with the old arcs it is made of.
#[derive(Debug, Clone)]
struct SmoothedComponent {
    passages: Vec<Passage>,
    /// `arcs[k]` lists the old arcs merged into the new arc leaving passage
    /// `k` (a single entry for a crossing-free circle).
    arcs: Vec<Vec<ArcRef>>,
    origins: BTreeSet<usize>,
}

fn smooth_set(d: &Diagram, smoothed: &BTreeSet<u32>) -> Vec<SmoothedComponent> {
    let crossings = d.crossings();
    let mut visited: HashSet<ArcRef> = HashSet::new();
    let mut out = Vec::new();
    for (c, comp) in d.components().iter().enumerate() {
        if comp.is_empty() {
            out.push(SmoothedComponent {
                passages: Vec::new(),
                arcs: vec![vec![ArcRef::new(c, 0)]],
                origins: BTreeSet::from([c]),
            });
            continue;
        }
        let len = comp.len();
        for start_pos in std::iter::once(len - 1).chain(0..len - 1) {
            let start = ArcRef::new(c, start_pos);
            if visited.contains(&start) {
                continue;
            }
            let mut passages = Vec::new();
            let mut entering: Vec<Vec<ArcRef>> = Vec::new();
            let mut acc: Vec<ArcRef> = Vec::new();
            let mut origins = BTreeSet::new();
            let mut cur = start;
            loop {
                visited.insert(cur);
                origins.insert(cur.component);
                acc.push(cur);
                let next = d.next_slot(Slot { component: cur.component, position: cur.position });
                let pass = d.passage(next).expect("slot in range");
                let following = if smoothed.contains(&pass.crossing) {
                    let cs = &crossings[&pass.crossing];
                    cs.slot(pass.role.flip())
                } else {
                    passages.push(pass);
                    entering.push(std::mem::take(&mut acc));
                    next
                };
                cur = ArcRef::new(following.component, following.position);
                if cur == start {
                    break;
                }
            }
            let arcs = if passages.is_empty() {
                vec![acc]
            } else {
                // the arc after the last passage runs round to the first one
                let mut arcs: Vec<Vec<ArcRef>> = entering[1..].to_vec();
                let mut wrap = acc;
                wrap.extend(entering[0].iter().copied());
                arcs.push(wrap);
                arcs
            };
            out.push(SmoothedComponent { passages, arcs, origins });
        }
    }
    out
}

fn assemble(parts: &[SmoothedComponent]) -> Diagram {
    Diagram::from_parts(parts.iter().map(|p| p.passages.clone()).collect())
}

/// Replaces a crossing by its oriented smoothing.
///
/// Components untouched by the crossing keep their order and rotation;
/// pieces of split or merged components appear in the order they are met.
pub fn smooth_crossing(d: &Diagram, id: u32) -> Result<Diagram> {
    d.crossing(id)?;
    Ok(assemble(&smooth_set(d, &BTreeSet::from([id]))))
}

/// Smooths every crossing in `ids` at once.
pub fn smooth_crossings(d: &Diagram, ids: &[u32]) -> Result<Diagram> {
    for &id in ids {
        d.crossing(id)?;
    }
    Ok(assemble(&smooth_set(d, &ids.iter().copied().collect())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertStats {
    /// classical crossings
    pub n: usize,
    /// Seifert circles
    pub r: usize,
    pub components: usize,
}

impl SeifertStats {
    /// `(n - r + 1) / 2`, the genus of the Seifert surface of a knot.
    pub fn genus(&self) -> Result<i64> {
        if self.components != 1 {
            return Err(Error::MultiComponent { components: self.components });
        }
        let twice = self.n as i64 - self.r as i64 + 1;
        debug_assert!(twice % 2 == 0 && twice >= 0, "odd Seifert count for a knot: {self:?}");
        Ok(twice / 2)
    }
}

pub fn seifert_stats(d: &Diagram) -> SeifertStats {
    let all: BTreeSet<u32> = d.crossings().into_keys().collect();
    SeifertStats { n: all.len(), r: smooth_set(d, &all).len(), components: d.num_components() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBounds {
    pub lower: i64,
    pub upper: i64,
    pub exact: Option<i64>,
}

/// Bounds on the four-ball genus of a virtual knot.
///
/// The Seifert surface gives the upper bound. A nonzero affine index
/// polynomial rules out sliceness, so the lower bound is then 1. For
/// diagrams whose crossings all have one sign the Seifert genus is exact.
pub fn four_ball_genus_bounds(d: &Diagram) -> Result<GenusBounds> {
    if !d.is_knot() {
        return Err(Error::MultiComponent { components: d.num_components() });
    }
    let upper = seifert_stats(d).genus()?;
    let crossings = d.crossings();
    let one_signed = crossings.values().all(|c| c.sign.value() > 0) || crossings.values().all(|c| c.sign.value() < 0);
    if one_signed {
        return Ok(GenusBounds { lower: upper, upper, exact: Some(upper) });
    }
    let p = affine_index_polynomial(d, &LabelingMode::Symbolic)?;
    Ok(GenusBounds { lower: i64::from(!p.is_zero()), upper, exact: None })
}

/// Smooths every crossing of weight zero.
///
/// Smoothing a null-weight crossing joins arcs with equal labels, so the
/// labeling carries over to the result and the remaining weights do not
/// change. The labeling must be pinned.
pub fn null_weight_reduction(d: &Diagram, labeling: &AffineLabeling) -> Result<(Diagram, AffineLabeling)> {
    if !labeling.is_pinned() {
        return Err(Error::InvalidLabeling("null-weight reduction needs a pinned labeling".into()));
    }
    let zero = AffineExponent::constant(0);
    let null: BTreeSet<u32> = crossing_weights(d, labeling)
        .into_iter()
        .filter(|w| w.weight == zero)
        .map(|w| w.crossing)
        .collect();
    if null.is_empty() {
        return Ok((d.clone(), labeling.clone()));
    }
    let parts = smooth_set(d, &null);
    let reduced = assemble(&parts);
    let labels = inherited_labels(&parts, labeling)?;
    let inherited = AffineLabeling::from_arc_labels(&reduced, labels)?;
    Ok((reduced, inherited))
}

/// Whether smoothing crossing `id` joins only arcs with equal labels, so
/// that the labeling passes to the smoothed diagram.
pub fn smoothing_preserves_labeling(d: &Diagram, labeling: &AffineLabeling, id: u32) -> Result<bool> {
    d.crossing(id)?;
    let parts = smooth_set(d, &BTreeSet::from([id]));
    Ok(inherited_labels(&parts, labeling).is_ok())
}

fn inherited_labels(parts: &[SmoothedComponent], labeling: &AffineLabeling) -> Result<Vec<Vec<AffineLabel>>> {
    parts
        .iter()
        .map(|part| {
            part.arcs
                .iter()
                .map(|units| {
                    let first = labeling.label(units[0]).expect("old arc exists").normalized();
                    if units.iter().any(|u| labeling.label(*u).map(|l| l.normalized()) != Some(first)) {
                        return Err(Error::InvalidLabeling("smoothing joins arcs with different labels".into()));
                    }
                    Ok(first)
                })
                .collect()
        })
        .collect()
}

/// Whether the arcs carry the same integer label.
pub fn labels_equal_at(labeling: &AffineLabeling, a1: ArcRef, a2: ArcRef) -> bool {
    match (labeling.label(a1), labeling.label(a2)) {
        (Some(x), Some(y)) => x.pinned_value().is_some() && x.pinned_value() == y.pinned_value(),
        _ => false,
    }
}

/// Cuts both arcs and reconnects them respecting orientation.
///
/// Two arcs of one component split it in two: the piece starting after
/// `a1` stays in place and the piece starting after `a2` is inserted right
/// after it. Arcs of different components merge them into the lower index.
pub fn saddle(d: &Diagram, a1: ArcRef, a2: ArcRef) -> Result<Diagram> {
    if a1 == a2 {
        return Err(Error::SameArc);
    }
    d.check_arc(a1)?;
    d.check_arc(a2)?;
    let mut comps = d.components().to_vec();
    if a1.component == a2.component {
        let comp = &comps[a1.component];
        let len = comp.len();
        let k = (a2.position + len - a1.position) % len;
        let first: Vec<Passage> = rotate_after(comp, a1.position).into_iter().take(k).collect();
        let second: Vec<Passage> = rotate_after(comp, a2.position).into_iter().take(len - k).collect();
        comps[a1.component] = first;
        comps.insert(a1.component + 1, second);
    } else {
        let merged: Vec<Passage> = rotate_after(&comps[a1.component], a1.position)
            .into_iter()
            .chain(rotate_after(&comps[a2.component], a2.position))
            .collect();
        let (lo, hi) = (a1.component.min(a2.component), a1.component.max(a2.component));
        comps[lo] = merged;
        comps.remove(hi);
    }
    Ok(Diagram::from_parts(comps))
}

/// Saddle between two arcs with equal pinned labels; the result inherits
/// the labeling.
pub fn saddle_labeled(
    d: &Diagram,
    labeling: &AffineLabeling,
    a1: ArcRef,
    a2: ArcRef,
) -> Result<(Diagram, AffineLabeling)> {
    if !labels_equal_at(labeling, a1, a2) {
        return Err(Error::InvalidLabeling(format!("labels at {a1:?} and {a2:?} differ")));
    }
    let out = saddle(d, a1, a2)?;
    let cut = labeling.label(a1).expect("checked above");
    let mut after: BTreeMap<(u32, Role), AffineLabel> = BTreeMap::new();
    for (c, comp) in d.components().iter().enumerate() {
        for (p, pass) in comp.iter().enumerate() {
            after.insert((pass.crossing, pass.role), labeling.label(ArcRef::new(c, p)).expect("arc exists"));
        }
    }
    let labels = out
        .components()
        .iter()
        .map(|comp| {
            if comp.is_empty() {
                vec![cut]
            } else {
                comp.iter().map(|p| after[&(p.crossing, p.role)]).collect()
            }
        })
        .collect();
    let inherited = AffineLabeling::from_arc_labels(&out, labels)?;
    Ok((out, inherited))
}

/// Adds a crossing-free circle as a new last component.
pub fn birth(d: &Diagram) -> Diagram {
    let mut comps = d.components().to_vec();
    comps.push(Vec::new());
    Diagram::from_parts(comps)
}

/// Removes a crossing-free component.
pub fn death(d: &Diagram, component: usize) -> Result<Diagram> {
    let comp = d.component(component).ok_or(Error::InvalidComponent(component))?;
    if !comp.is_empty() {
        return Err(Error::ComponentNotUnknottedCircle(component));
    }
    let mut comps = d.components().to_vec();
    comps.remove(component);
    Ok(Diagram::from_parts(comps))
}

/// Where a saddle happens: between two arcs, or at a crossing (its oriented
/// smoothing).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SaddleSite {
    Arcs { arcs: [ArcRef; 2] },
    Crossing { crossing: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum CobordismEvent {
    Birth,
    Death { component: usize },
    Saddle(SaddleSite),
    Isotopy { moves: Vec<MoveSite> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CobordismTrace {
    pub start: Diagram,
    pub events: Vec<CobordismEvent>,
}

/// The diagram and its polynomial after each event.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Level {
    /// `None` for the starting diagram.
    pub event: Option<usize>,
    pub diagram: String,
    pub components: usize,
    /// Affine index polynomial up to base shifts, `None` when incompatible.
    pub polynomial: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    pub end: Diagram,
    pub births: usize,
    pub deaths: usize,
    pub saddles: usize,
    pub start_components: usize,
    pub end_components: usize,
    pub levels: Vec<Level>,
    /// Every birth is later merged by a saddle and every death removes a
    /// circle produced by an earlier saddle.
    pub critical_points_paired: bool,
}

impl TraceReport {
    /// `(2 - m - (b + d - s)) / 2` with `m` the number of boundary circles.
    pub fn genus(&self) -> Ratio<i64> {
        let m = (self.start_components + self.end_components) as i64;
        let euler = self.births as i64 + self.deaths as i64 - self.saddles as i64;
        Ratio::new(2 - m - euler, 2)
    }

    pub fn is_concordance(&self) -> bool {
        self.genus() == Ratio::from_integer(0)
    }
}

fn level(event: Option<usize>, d: &Diagram) -> Level {
    let polynomial = affine_index_polynomial(d, &LabelingMode::Symbolic)
        .ok()
        .map(|p| p.shift_normal_form().to_string());
    Level { event, diagram: crate::gauss::serialize(d), components: d.num_components(), polynomial }
}

/// Replays a trace, checking each event against the running diagram.
pub fn replay(trace: &CobordismTrace) -> Result<TraceReport> {
    let mut d = trace.start.clone();
    // (waiting for a saddle after birth, produced by a saddle)
    let mut flags: Vec<(bool, bool)> = vec![(false, false); d.num_components()];
    let mut paired = true;
    let (mut births, mut deaths, mut saddles) = (0, 0, 0);
    let mut levels = vec![level(None, &d)];
    for (index, event) in trace.events.iter().enumerate() {
        let wrap = |e: Error| Error::InapplicableEvent { index, source: Box::new(e) };
        match event {
            CobordismEvent::Birth => {
                d = birth(&d);
                flags.push((true, false));
                births += 1;
            }
            CobordismEvent::Death { component } => {
                d = death(&d, *component).map_err(wrap)?;
                let (_, fed) = flags.remove(*component);
                paired &= fed;
                deaths += 1;
            }
            CobordismEvent::Saddle(SaddleSite::Arcs { arcs: [a1, a2] }) => {
                d = saddle(&d, *a1, *a2).map_err(wrap)?;
                if a1.component == a2.component {
                    flags[a1.component] = (false, true);
                    flags.insert(a1.component + 1, (false, true));
                } else {
                    let (lo, hi) = (a1.component.min(a2.component), a1.component.max(a2.component));
                    flags[lo] = (false, true);
                    flags.remove(hi);
                }
                saddles += 1;
            }
            CobordismEvent::Saddle(SaddleSite::Crossing { crossing }) => {
                let slots = d.crossing(*crossing).map_err(wrap)?;
                let touched = [slots.over.component, slots.under.component];
                let parts = smooth_set(&d, &BTreeSet::from([*crossing]));
                flags = parts
                    .iter()
                    .map(|p| {
                        if p.origins.iter().any(|o| touched.contains(o)) {
                            (false, true)
                        } else {
                            flags[*p.origins.first().expect("non-empty")]
                        }
                    })
                    .collect();
                d = assemble(&parts);
                saddles += 1;
            }
            CobordismEvent::Isotopy { moves } => {
                for m in moves {
                    d = m.apply(&d).map_err(wrap)?;
                }
            }
        }
        levels.push(level(Some(index), &d));
    }
    paired &= flags.iter().all(|(pending, _)| !pending);
    Ok(TraceReport {
        end_components: d.num_components(),
        end: d,
        births,
        deaths,
        saddles,
        start_components: trace.start.num_components(),
        levels,
        critical_points_paired: paired,
    })
}

pub fn trace_genus(trace: &CobordismTrace) -> Result<Ratio<i64>> {
    Ok(replay(trace)?.genus())
}

/// Pinned labeling with every base zero.
pub fn zero_labeling(d: &Diagram) -> Result<AffineLabeling> {
    compute_labeling(d, &LabelingMode::zeros(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{parse, Sign};
    use crate::invariants::affine_index_polynomial;
    use crate::poly::IndexPolynomial;
    use crate::transforms::{connected_sum, vertical_mirror};

    const VT: &str = "O1+O2+U1+U2+";
    const CT: &str = "O1+U2+O3+U1+O2+U3+";

    // Brute-force successor map on (component, position) arcs: follow each
    // arc into the next passage, jumping over <-> under at smoothed crossings.
    fn oracle_cycles(code: &str, smoothed: &[u32]) -> usize {
        let d = parse(code).unwrap();
        let arcs = d.arcs();
        let mut seen = vec![false; arcs.len()];
        let index = |a: ArcRef| arcs.iter().position(|b| *b == a).unwrap();
        let mut cycles = 0;
        for i in 0..arcs.len() {
            if seen[i] {
                continue;
            }
            cycles += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                let a = arcs[j];
                let comp = d.component(a.component).unwrap();
                if comp.is_empty() {
                    break;
                }
                let q = (a.position + 1) % comp.len();
                let p = comp[q];
                let target = if smoothed.contains(&p.crossing) {
                    let cs = d.crossing(p.crossing).unwrap();
                    if p.role == Role::Over { cs.under } else { cs.over }
                } else {
                    Slot { component: a.component, position: q }
                };
                j = index(ArcRef::new(target.component, target.position));
            }
        }
        // cycles made only of kept passages are counted once per visit start
        cycles
    }

    #[test]
    fn seifert_counts_match_oracle() {
        assert_eq!(oracle_cycles(CT, &[1, 2, 3]), 2);
        assert_eq!(oracle_cycles(VT, &[1, 2]), 1);
        let ct = seifert_stats(&parse(CT).unwrap());
        assert_eq!((ct.n, ct.r, ct.genus().unwrap()), (3, 2, 1));
        let vt = seifert_stats(&parse(VT).unwrap());
        assert_eq!((vt.n, vt.r, vt.genus().unwrap()), (2, 1, 1));
        let u = seifert_stats(&Diagram::unknot());
        assert_eq!((u.n, u.r, u.genus().unwrap()), (0, 1, 0));
        let hl = seifert_stats(&parse("O1+U2+|U1+O2+").unwrap());
        assert_eq!(hl.genus(), Err(Error::MultiComponent { components: 2 }));
    }

    #[test]
    fn smoothing_trefoil_crossing_gives_hopf_link() {
        let ct = parse(CT).unwrap();
        let h = smooth_crossing(&ct, 1).unwrap();
        assert_eq!(h.num_components(), 2);
        assert_eq!(h.crossing_count(), 2);
        // both remaining crossings join the two components
        assert!(h.crossings().values().all(|c| !c.is_self_crossing()));
        assert!(h.isomorphic(&parse("U1+O2+|O1+U2+").unwrap()));
    }

    #[test]
    fn smoothing_both_vt_crossings() {
        let out = smooth_crossings(&parse(VT).unwrap(), &[1, 2]).unwrap();
        assert_eq!(out, Diagram::unknot());
    }

    #[test]
    fn smoothing_changes_component_count_by_one() {
        for code in [VT, CT, "O1+U2+|U1+O2+", "O1-O2+U1-U2+"] {
            let d = parse(code).unwrap();
            for id in d.crossing_ids() {
                let s = smooth_crossing(&d, id).unwrap();
                assert_eq!(s.num_components().abs_diff(d.num_components()), 1, "{code} at {id}");
            }
        }
        assert_eq!(smooth_crossing(&parse(VT).unwrap(), 9), Err(Error::UnknownCrossing(9)));
    }

    // Removing a crossing's passages and then saddling the two arcs that ran
    // through it must give the oriented smoothing.
    fn saddle_route(d: &Diagram, id: u32) -> Option<Diagram> {
        let cs = d.crossing(id).unwrap();
        let mut comps = d.components().to_vec();
        let arc_at = |slot: Slot| -> ArcRef {
            // arc after the passage preceding `slot`, indices after removal
            let comp = &d.components()[slot.component];
            let mut pos = (slot.position + comp.len() - 1) % comp.len();
            while comp[pos].crossing == id {
                pos = (pos + comp.len() - 1) % comp.len();
            }
            let removed_before = comp[..pos].iter().filter(|p| p.crossing == id).count();
            let remaining = comp.len() - comp.iter().filter(|p| p.crossing == id).count();
            ArcRef::new(slot.component, if remaining == 0 { 0 } else { pos - removed_before })
        };
        let (a1, a2) = (arc_at(cs.over), arc_at(cs.under));
        for comp in comps.iter_mut() {
            comp.retain(|p| p.crossing != id);
        }
        let bare = Diagram::new(comps).unwrap();
        saddle(&bare, a1, a2).ok()
    }

    #[test]
    fn saddle_reproduces_smoothing() {
        let ct = parse(CT).unwrap();
        let via_saddle = saddle_route(&ct, 1).unwrap();
        assert!(via_saddle.same_up_to_rotation(&smooth_crossing(&ct, 1).unwrap()));
        let mut checked = 0;
        for code in [VT, CT, "O1+U2+|U1+O2+", "O1-O2+U3+U1-O3+U2+", "O1+U2-O3-U1+|O2-U3-"] {
            let d = parse(code).unwrap();
            for id in d.crossing_ids() {
                if let Some(s) = saddle_route(&d, id) {
                    assert!(s.same_up_to_rotation(&smooth_crossing(&d, id).unwrap()), "{code} at {id}");
                    checked += 1;
                }
            }
        }
        assert!(checked >= 8);
    }

    #[test]
    fn saddle_basics() {
        let u2 = Diagram::unlink(2);
        assert_eq!(saddle(&u2, ArcRef::new(0, 0), ArcRef::new(1, 0)).unwrap(), Diagram::unknot());
        assert_eq!(saddle(&u2, ArcRef::new(0, 0), ArcRef::new(0, 0)), Err(Error::SameArc));
        let vt = parse(VT).unwrap();
        let split = saddle(&vt, ArcRef::new(0, 0), ArcRef::new(0, 2)).unwrap();
        assert_eq!(split.to_string(), "O2+U1+|U2+O1+");
        assert_eq!(saddle(&split, ArcRef::new(0, 1), ArcRef::new(1, 1)).unwrap().to_string(), "O2+U1+U2+O1+");
    }

    #[test]
    fn birth_and_death() {
        let vt = parse(VT).unwrap();
        let b = birth(&vt);
        assert_eq!(b.num_components(), 2);
        assert_eq!(death(&b, 1).unwrap(), vt);
        assert_eq!(death(&b, 0), Err(Error::ComponentNotUnknottedCircle(0)));
        assert_eq!(death(&b, 5), Err(Error::InvalidComponent(5)));
    }

    #[test]
    fn labels_at_saddle_points() {
        let ct = parse(CT).unwrap();
        let l = zero_labeling(&ct).unwrap();
        // labels [-1, 0, -1, 0, -1, 0]
        assert!(labels_equal_at(&l, ArcRef::new(0, 1), ArcRef::new(0, 3)));
        assert!(!labels_equal_at(&l, ArcRef::new(0, 0), ArcRef::new(0, 1)));
        let circles = Diagram::unlink(2);
        let pinned = compute_labeling(&circles, &LabelingMode::Pinned(vec![5, 5])).unwrap();
        assert!(labels_equal_at(&pinned, ArcRef::new(0, 0), ArcRef::new(1, 0)));
        let sym = compute_labeling(&circles, &LabelingMode::Symbolic).unwrap();
        assert!(!labels_equal_at(&sym, ArcRef::new(0, 0), ArcRef::new(1, 0)));
    }

    #[test]
    fn labeled_saddle_keeps_polynomial() {
        let ct = parse(CT).unwrap();
        let l = zero_labeling(&ct).unwrap();
        let (split, inherited) = saddle_labeled(&ct, &l, ArcRef::new(0, 1), ArcRef::new(0, 3)).unwrap();
        assert_eq!(split.num_components(), 2);
        let p = affine_index_polynomial(&split, &LabelingMode::Pinned(inherited.pinned_bases().unwrap())).unwrap();
        assert!(p.is_zero());
        assert!(saddle_labeled(&ct, &l, ArcRef::new(0, 0), ArcRef::new(0, 1)).is_err());
    }

    #[test]
    fn genus_bounds() {
        let vt = parse(VT).unwrap();
        assert_eq!(four_ball_genus_bounds(&vt).unwrap(), GenusBounds { lower: 1, upper: 1, exact: Some(1) });
        let ct = parse(CT).unwrap();
        assert_eq!(four_ball_genus_bounds(&ct).unwrap().exact, Some(1));
        let vm = connected_sum(&vt, ArcRef::new(0, 0), &vertical_mirror(&vt), ArcRef::new(0, 0)).unwrap();
        let b = four_ball_genus_bounds(&vm).unwrap();
        assert_eq!(b.lower, 0);
        assert_eq!(b.exact, None);
        assert_eq!(b.upper, seifert_stats(&vm).genus().unwrap());
        let neg = crate::transforms::flip_signs(&ct);
        assert_eq!(four_ball_genus_bounds(&neg).unwrap().exact, Some(1));
        assert!(four_ball_genus_bounds(&Diagram::unlink(2)).is_err());
    }

    #[test]
    fn null_weight_reduction_fixtures() {
        let ct = parse(CT).unwrap();
        let (r, l) = null_weight_reduction(&ct, &zero_labeling(&ct).unwrap()).unwrap();
        assert_eq!(r, Diagram::unlink(2));
        assert!(affine_index_polynomial(&r, &LabelingMode::Pinned(l.pinned_bases().unwrap())).unwrap().is_zero());

        let vt = parse(VT).unwrap();
        let lv = zero_labeling(&vt).unwrap();
        assert_eq!(null_weight_reduction(&vt, &lv).unwrap(), (vt.clone(), lv));

        let vc = connected_sum(&vt, ArcRef::new(0, 3), &ct, ArcRef::new(0, 5)).unwrap();
        let lvc = zero_labeling(&vc).unwrap();
        let mut ws: Vec<i64> =
            crossing_weights(&vc, &lvc).iter().map(|w| w.weight.as_integer().unwrap()).collect();
        ws.sort();
        assert_eq!(ws, vec![-1, 0, 0, 0, 1]);
        let (r, l) = null_weight_reduction(&vc, &lvc).unwrap();
        assert_eq!(r.num_components(), 2);
        assert!(r.components().iter().any(Vec::is_empty));
        let knot = r.components().iter().find(|c| !c.is_empty()).unwrap().clone();
        assert!(Diagram::new(vec![knot]).unwrap().same_up_to_rotation(&vt));
        let p = affine_index_polynomial(&r, &LabelingMode::Pinned(l.pinned_bases().unwrap())).unwrap();
        assert_eq!(p, IndexPolynomial::from_integer_terms([(1, 1), (-1, 1), (0, -2)]));
        assert!(null_weight_reduction(&vt, &compute_labeling(&vt, &LabelingMode::Symbolic).unwrap()).is_err());
    }

    #[test]
    fn trace_genus_for_vt_and_unknot() {
        let vt = CobordismTrace {
            start: parse(VT).unwrap(),
            events: vec![
                CobordismEvent::Saddle(SaddleSite::Crossing { crossing: 1 }),
                CobordismEvent::Saddle(SaddleSite::Crossing { crossing: 2 }),
                CobordismEvent::Death { component: 0 },
            ],
        };
        let rep = replay(&vt).unwrap();
        assert_eq!(rep.genus(), Ratio::from_integer(1));
        assert_eq!(rep.end, Diagram::unlink(0));
        assert_eq!(rep.levels.len(), 4);
        assert_eq!(rep.levels[0].polynomial.as_deref(), Some("t^-1 + t - 2"));

        let un = CobordismTrace { start: Diagram::unknot(), events: vec![CobordismEvent::Death { component: 0 }] };
        let rep = replay(&un).unwrap();
        assert_eq!(rep.genus(), Ratio::from_integer(0));
        assert!(rep.is_concordance());
        assert!(!rep.critical_points_paired);
    }

    #[test]
    fn birth_then_equal_label_saddle_is_a_concordance() {
        let vt = parse(VT).unwrap();
        let tr = CobordismTrace {
            start: vt.clone(),
            events: vec![
                CobordismEvent::Birth,
                CobordismEvent::Saddle(SaddleSite::Arcs { arcs: [ArcRef::new(0, 3), ArcRef::new(1, 0)] }),
            ],
        };
        let rep = replay(&tr).unwrap();
        assert_eq!(rep.genus(), Ratio::from_integer(0));
        assert!(rep.critical_points_paired);
        assert!(rep.levels.iter().all(|l| l.polynomial.as_deref() == Some("t^-1 + t - 2")));

        let l = compute_labeling(&birth(&vt), &LabelingMode::Pinned(vec![0, 0])).unwrap();
        let (k, lk) = saddle_labeled(&birth(&vt), &l, ArcRef::new(0, 3), ArcRef::new(1, 0)).unwrap();
        assert_eq!(
            affine_index_polynomial(&k, &LabelingMode::Pinned(lk.pinned_bases().unwrap())).unwrap(),
            affine_index_polynomial(&vt, &LabelingMode::Symbolic).unwrap()
        );
    }

    #[test]
    fn inapplicable_events_are_reported() {
        let tr = CobordismTrace { start: parse(VT).unwrap(), events: vec![CobordismEvent::Death { component: 0 }] };
        assert!(matches!(replay(&tr), Err(Error::InapplicableEvent { index: 0, .. })));
    }

    #[test]
    fn trace_json() {
        let events = vec![
            CobordismEvent::Birth,
            CobordismEvent::Saddle(SaddleSite::Arcs { arcs: [ArcRef::new(0, 1), ArcRef::new(1, 0)] }),
            CobordismEvent::Saddle(SaddleSite::Crossing { crossing: 2 }),
            CobordismEvent::Isotopy {
                moves: vec![MoveSite::R1Remove { crossing: 1 }],
            },
            CobordismEvent::Death { component: 0 },
        ];
        let v = serde_json::to_value(&events).unwrap();
        assert_eq!(v[0], serde_json::json!({"op": "birth"}));
        assert_eq!(v[1], serde_json::json!({"op": "saddle", "arcs": [{"component": 0, "position": 1}, {"component": 1, "position": 0}]}));
        assert_eq!(v[2], serde_json::json!({"op": "saddle", "crossing": 2}));
        assert_eq!(v[3], serde_json::json!({"op": "isotopy", "moves": [{"kind": "R1rem", "crossing": 1}]}));
        assert_eq!(v[4], serde_json::json!({"op": "death", "component": 0}));
        let back: Vec<CobordismEvent> = serde_json::from_value(v).unwrap();
        assert_eq!(back, events);
        let _ = Sign::Positive;
    }
}
