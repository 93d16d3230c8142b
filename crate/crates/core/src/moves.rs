//! Reidemeister moves on Gauss codes.
//!
//! The moves implemented here form a sound subset of the oriented moves:
//!
//! * R1: insert or delete a kink `O_c U_c` / `U_c O_c` (either sign) on one arc.
//! * R2: one strand passes over another twice, `O_a O_b` on the first strand
//!   and `U_a U_b` (parallel) or `U_b U_a` (antiparallel) on the second, with
//!   opposite signs at `a` and `b`.
//! * R3: the braid-relation triangle. With all three signs equal, a top
//!   strand `O_x O_y`, a middle strand `U_x O_z` and a bottom strand
//!   `U_y U_z` become `O_y O_x`, `O_z U_x`, `U_z U_y`, and back.
//!
//! Every move keeps the labels of arcs outside the touched strands.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{ArcRef, CrossingSlots, Diagram, Passage, Role, Sign, Slot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KinkOrder {
    OverFirst,
    UnderFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StrandOrientation {
    Parallel,
    Antiparallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

/// A move together with where it applies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum MoveSite {
    #[serde(rename = "R1add")]
    R1Add { arc: ArcRef, sign: Sign, order: KinkOrder },
    #[serde(rename = "R1rem")]
    R1Remove { crossing: u32 },
    #[serde(rename = "R2add")]
    R2Add { over: ArcRef, under: ArcRef, orientation: StrandOrientation, sign: Sign },
    #[serde(rename = "R2rem")]
    R2Remove { crossings: [u32; 2] },
    #[serde(rename = "R3")]
    R3 { crossings: [u32; 3] },
}

impl MoveSite {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSite::R1Add { .. } => MoveKind::R1Add,
            MoveSite::R1Remove { .. } => MoveKind::R1Remove,
            MoveSite::R2Add { .. } => MoveKind::R2Add,
            MoveSite::R2Remove { .. } => MoveKind::R2Remove,
            MoveSite::R3 { .. } => MoveKind::R3,
        }
    }

    pub fn apply(&self, d: &Diagram) -> Result<Diagram> {
        match *self {
            MoveSite::R1Add { arc, sign, order } => r1_add(d, arc, sign, order),
            MoveSite::R1Remove { crossing } => r1_remove(d, crossing),
            MoveSite::R2Add { over, under, orientation, sign } => r2_add(d, over, under, orientation, sign),
            MoveSite::R2Remove { crossings: [a, b] } => r2_remove(d, a, b),
            MoveSite::R3 { crossings: [a, b, c] } => r3_apply(d, a, b, c),
        }
    }
}

fn insert_index(d: &Diagram, arc: ArcRef) -> Result<usize> {
    d.check_arc(arc)?;
    Ok(if d.components()[arc.component].is_empty() { 0 } else { arc.position + 1 })
}

/// Adds a kink with a fresh crossing on `arc`.
pub fn r1_add(d: &Diagram, arc: ArcRef, sign: Sign, order: KinkOrder) -> Result<Diagram> {
    let at = insert_index(d, arc)?;
    let id = d.max_crossing_id() + 1;
    let (o, u) = (Passage::over(id, sign), Passage::under(id, sign));
    let kink = match order {
        KinkOrder::OverFirst => [o, u],
        KinkOrder::UnderFirst => [u, o],
    };
    let mut comps = d.components().to_vec();
    comps[arc.component].splice(at..at, kink);
    Ok(Diagram::from_parts(comps))
}

fn is_kink(d: &Diagram, slots: &CrossingSlots) -> bool {
    slots.is_self_crossing() && (d.next_slot(slots.over) == slots.under || d.next_slot(slots.under) == slots.over)
}

pub fn r1_remove(d: &Diagram, crossing: u32) -> Result<Diagram> {
    let slots = d.crossing(crossing)?;
    if !is_kink(d, &slots) {
        return Err(Error::NotAKink(crossing));
    }
    Ok(remove_slots(d, &[slots.over, slots.under]))
}

fn remove_slots(d: &Diagram, slots: &[Slot]) -> Diagram {
    let mut comps = d.components().to_vec();
    let mut sorted = slots.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    for s in sorted {
        comps[s.component].remove(s.position);
    }
    Diagram::from_parts(comps)
}

/// Pushes the strand through `over` across the strand through `under`,
/// creating two fresh crossings of opposite sign.
pub fn r2_add(
    d: &Diagram,
    over: ArcRef,
    under: ArcRef,
    orientation: StrandOrientation,
    sign: Sign,
) -> Result<Diagram> {
    if over == under {
        return Err(Error::SameArc);
    }
    let at_over = insert_index(d, over)?;
    let at_under = insert_index(d, under)?;
    let a = d.max_crossing_id() + 1;
    let b = a + 1;
    let top = [Passage::over(a, sign), Passage::over(b, sign.flip())];
    let bottom = match orientation {
        StrandOrientation::Parallel => [Passage::under(a, sign), Passage::under(b, sign.flip())],
        StrandOrientation::Antiparallel => [Passage::under(b, sign.flip()), Passage::under(a, sign)],
    };
    let mut comps = d.components().to_vec();
    let mut inserts = [(over.component, at_over, top), (under.component, at_under, bottom)];
    // later insertion first so the earlier index stays valid
    inserts.sort_by_key(|y| std::cmp::Reverse((y.0, y.1)));
    for (c, at, ps) in inserts {
        comps[c].splice(at..at, ps);
    }
    Ok(Diagram::from_parts(comps))
}

fn adjacent(d: &Diagram, a: Slot, b: Slot) -> bool {
    a.component == b.component && a != b && (d.next_slot(a) == b || d.next_slot(b) == a)
}

fn is_r2_pair(d: &Diagram, a: &CrossingSlots, b: &CrossingSlots) -> bool {
    a.sign != b.sign && adjacent(d, a.over, b.over) && adjacent(d, a.under, b.under)
}

pub fn r2_remove(d: &Diagram, c1: u32, c2: u32) -> Result<Diagram> {
    let a = d.crossing(c1)?;
    let b = d.crossing(c2)?;
    if c1 == c2 || !is_r2_pair(d, &a, &b) {
        return Err(Error::NotAnR2Pair(c1, c2));
    }
    Ok(remove_slots(d, &[a.over, a.under, b.over, b.under]))
}

// The three adjacent pairs (first, second) of a triangle, if `x, y, z`
// in this order match either side of the braid relation.
fn triangle_pairs(d: &Diagram, x: &CrossingSlots, y: &CrossingSlots, z: &CrossingSlots) -> Option<[(Slot, Slot); 3]> {
    if x.sign != y.sign || y.sign != z.sign {
        return None;
    }
    let next = |s: Slot| d.next_slot(s);
    let left = next(x.over) == y.over && next(x.under) == z.over && next(y.under) == z.under;
    if left {
        return Some([(x.over, y.over), (x.under, z.over), (y.under, z.under)]);
    }
    let right = next(y.over) == x.over && next(z.over) == x.under && next(z.under) == y.under;
    if right {
        return Some([(y.over, x.over), (z.over, x.under), (z.under, y.under)]);
    }
    None
}

fn find_triangle(d: &Diagram, ids: [u32; 3]) -> Result<[(Slot, Slot); 3]> {
    let [a, b, c] = ids;
    if a == b || b == c || a == c {
        return Err(Error::NotAnR3Triangle(ids));
    }
    let slots = [d.crossing(a)?, d.crossing(b)?, d.crossing(c)?];
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS
        .iter()
        .find_map(|[i, j, k]| triangle_pairs(d, &slots[*i], &slots[*j], &slots[*k]))
        .ok_or(Error::NotAnR3Triangle(ids))
}

/// Slides a strand across the crossing of the other two.
pub fn r3_apply(d: &Diagram, c1: u32, c2: u32, c3: u32) -> Result<Diagram> {
    let pairs = find_triangle(d, [c1, c2, c3])?;
    let mut comps = d.components().to_vec();
    for (a, b) in pairs {
        let pa = comps[a.component][a.position];
        comps[a.component][a.position] = comps[b.component][b.position];
        comps[b.component][b.position] = pa;
    }
    Ok(Diagram::from_parts(comps))
}

/// Every removal and R3 site, plus a fixed family of insertion sites.
///
/// Insertions are representative rather than exhaustive: one kink per arc
/// (variant chosen by arc index) and, per arc, bigons with the arcs at its
/// crossing's twin passage and with the arc half-way round the arc list.
pub fn enumerate_sites(d: &Diagram) -> Vec<MoveSite> {
    let crossings = d.crossings();
    let mut sites = Vec::new();

    for (&id, s) in &crossings {
        if is_kink(d, s) {
            sites.push(MoveSite::R1Remove { crossing: id });
        }
    }

    for (&a, sa) in &crossings {
        let after = d.next_slot(sa.over);
        let Some(p) = d.passage(after) else { continue };
        if p.role != Role::Over || p.crossing == a {
            continue;
        }
        let sb = &crossings[&p.crossing];
        if is_r2_pair(d, sa, sb) {
            sites.push(MoveSite::R2Remove { crossings: [a.min(p.crossing), a.max(p.crossing)] });
        }
    }
    sites.sort_by_key(|s| format!("{s:?}"));
    sites.dedup();

    let mut triangles = BTreeSet::new();
    for &x in crossings.keys() {
        for y in neighbours(d, &crossings, x) {
            for z in neighbours(d, &crossings, x).into_iter().chain(neighbours(d, &crossings, y)) {
                let mut key = [x, y, z];
                key.sort_unstable();
                if key[0] == key[1] || key[1] == key[2] || triangles.contains(&key) {
                    continue;
                }
                if find_triangle(d, key).is_ok() {
                    triangles.insert(key);
                }
            }
        }
    }
    sites.extend(triangles.into_iter().map(|crossings| MoveSite::R3 { crossings }));

    let arcs = d.arcs();
    for (k, &arc) in arcs.iter().enumerate() {
        let sign = if k % 2 == 0 { Sign::Positive } else { Sign::Negative };
        let order = if (k / 2) % 2 == 0 { KinkOrder::OverFirst } else { KinkOrder::UnderFirst };
        sites.push(MoveSite::R1Add { arc, sign, order });
    }

    let mut bigons = BTreeSet::new();
    for (k, &arc) in arcs.iter().enumerate() {
        let mut partners = Vec::new();
        match d.passage(Slot { component: arc.component, position: arc.position }) {
            Some(p) => {
                let twin = crossings[&p.crossing].slot(p.role.flip());
                let len = d.components()[twin.component].len();
                partners.push(ArcRef::new(twin.component, twin.position));
                partners.push(ArcRef::new(twin.component, (twin.position + len - 1) % len));
            }
            None => {
                for c in (0..d.num_components()).filter(|&c| c != arc.component) {
                    partners.push(ArcRef::new(c, 0));
                }
            }
        }
        if arcs.len() > 1 {
            partners.push(arcs[(k + arcs.len() / 2) % arcs.len()]);
        }
        for (j, partner) in partners.into_iter().enumerate() {
            if partner == arc {
                continue;
            }
            let (over, under) = if j % 2 == 0 { (arc, partner) } else { (partner, arc) };
            let orientation =
                if (k + j) % 2 == 0 { StrandOrientation::Parallel } else { StrandOrientation::Antiparallel };
            let sign = if (k / 2 + j) % 2 == 0 { Sign::Positive } else { Sign::Negative };
            bigons.insert((over, under, orientation == StrandOrientation::Parallel, sign));
        }
    }
    for (over, under, parallel, sign) in bigons {
        let orientation = if parallel { StrandOrientation::Parallel } else { StrandOrientation::Antiparallel };
        sites.push(MoveSite::R2Add { over, under, orientation, sign });
    }
    sites
}

// Crossings met right before or after either passage of `id`.
fn neighbours(d: &Diagram, crossings: &BTreeMap<u32, CrossingSlots>, id: u32) -> Vec<u32> {
    let s = &crossings[&id];
    let mut out = Vec::new();
    for slot in [s.over, s.under] {
        let len = d.components()[slot.component].len();
        for pos in [(slot.position + 1) % len, (slot.position + len - 1) % len] {
            let c = d.components()[slot.component][pos].crossing;
            if c != id && !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

/// Applies `n` random moves. Each step picks a move kind uniformly among
/// the kinds with at least one site, then a site of that kind uniformly.
/// The result depends only on `(d, n, seed)`.
pub fn scramble(d: &Diagram, n: usize, seed: u64) -> (Diagram, Vec<MoveSite>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = d.clone();
    let mut trace = Vec::with_capacity(n);
    for _ in 0..n {
        let mut by_kind: BTreeMap<MoveKind, Vec<MoveSite>> = BTreeMap::new();
        for s in enumerate_sites(&current) {
            by_kind.entry(s.kind()).or_default().push(s);
        }
        let kinds: Vec<&Vec<MoveSite>> = by_kind.values().collect();
        let Some(group) = kinds.choose(&mut rng) else { break };
        let site = group.choose(&mut rng).expect("groups are non-empty").clone();
        current = site.apply(&current).expect("enumerated sites always apply");
        trace.push(site);
    }
    (current, trace)
}
