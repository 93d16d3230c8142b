//! Mirror images, reversal and connected sum on Gauss codes.

use crate::error::{Error, Result};
use crate::gauss::{ArcRef, Diagram, Passage};

/// Reverses the orientation of every component.
pub fn reverse(d: &Diagram) -> Diagram {
    Diagram::from_parts(
        d.components().iter().map(|c| c.iter().rev().copied().collect()).collect(),
    )
}

/// Switches every crossing (the mirror image `K*`).
pub fn switch_all(d: &Diagram) -> Diagram {
    map_passages(d, |p| Passage::new(p.crossing, p.role.flip(), p.sign.flip()))
}

pub fn switch_crossing(d: &Diagram, id: u32) -> Result<Diagram> {
    d.crossing(id)?;
    Ok(map_passages(d, |p| {
        if p.crossing == id {
            Passage::new(p.crossing, p.role.flip(), p.sign.flip())
        } else {
            p
        }
    }))
}

/// Reflection in a plane perpendicular to the diagram followed by reversal
/// (`K!`): components reversed, signs flipped, roles kept.
pub fn vertical_mirror(d: &Diagram) -> Diagram {
    reverse(&flip_signs(d))
}

/// Reflection in a line of the diagram plane: every sign flips.
pub fn flip_signs(d: &Diagram) -> Diagram {
    map_passages(d, |p| Passage::new(p.crossing, p.role, p.sign.flip()))
}

fn map_passages(d: &Diagram, f: impl Fn(Passage) -> Passage) -> Diagram {
    Diagram::from_parts(d.components().iter().map(|c| c.iter().map(|&p| f(p)).collect()).collect())
}

/// Splices `k2` into `k1` by cutting each at the given arc.
///
/// Crossings of `k2` are renumbered above those of `k1`. The result starts
/// just after the cut in `k1`.
pub fn connected_sum(k1: &Diagram, a1: ArcRef, k2: &Diagram, a2: ArcRef) -> Result<Diagram> {
    for k in [k1, k2] {
        if !k.is_knot() {
            return Err(Error::MultiComponent { components: k.num_components() });
        }
    }
    k1.check_arc(a1)?;
    k2.check_arc(a2)?;
    let offset = k1.max_crossing_id();
    let first = rotate_after(&k1.components()[0], a1.position);
    let second = rotate_after(&k2.components()[0], a2.position)
        .into_iter()
        .map(|p| Passage { crossing: p.crossing + offset, ..p });
    Ok(Diagram::from_parts(vec![first.into_iter().chain(second).collect()]))
}

/// The cyclic sequence read starting just after `position`.
pub(crate) fn rotate_after(comp: &[Passage], position: usize) -> Vec<Passage> {
    if comp.is_empty() {
        return Vec::new();
    }
    let start = (position + 1) % comp.len();
    comp[start..].iter().chain(&comp[..start]).copied().collect()
}
