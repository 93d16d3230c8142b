//! Signed Gauss codes for virtual knot and link diagrams.
//!
//! A diagram is an ordered list of components. Each component is the cyclic
//! sequence of classical crossing passages met while travelling along it.
//! Virtual crossings are not recorded; the Gauss code already forgets them.
//!
//! Text form: components are separated by `|`, and each passage is written
//! as `O` or `U`, a positive crossing id, and `+` or `-`. For example the
//! virtual trefoil is `O1+O2+U1+U2+` and an empty component (`""`) is a
//! crossing-free circle. Whitespace is ignored.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, ValidationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flip(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

/// Crossing sign. Serialized as the integer `1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

/// One visit of a component to a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passage {
    pub crossing: u32,
    pub role: Role,
    pub sign: Sign,
}

impl Passage {
    pub fn new(crossing: u32, role: Role, sign: Sign) -> Self {
        Passage { crossing, role, sign }
    }

    pub fn over(crossing: u32, sign: Sign) -> Self {
        Passage::new(crossing, Role::Over, sign)
    }

    pub fn under(crossing: u32, sign: Sign) -> Self {
        Passage::new(crossing, Role::Under, sign)
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.role {
            Role::Over => 'O',
            Role::Under => 'U',
        };
        write!(f, "{r}{}{}", self.crossing, self.sign.symbol())
    }
}

/// Location of a passage inside a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub component: usize,
    pub position: usize,
}

/// The arc leaving the passage at `position` on `component`.
///
/// For an empty component the only arc is the whole circle, `position == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcRef {
    pub component: usize,
    pub position: usize,
}

impl ArcRef {
    pub fn new(component: usize, position: usize) -> Self {
        ArcRef { component, position }
    }
}

/// Where the two passages of a crossing sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingSlots {
    pub over: Slot,
    pub under: Slot,
    pub sign: Sign,
}

impl CrossingSlots {
    pub fn slot(&self, role: Role) -> Slot {
        match role {
            Role::Over => self.over,
            Role::Under => self.under,
        }
    }

    pub fn is_self_crossing(&self) -> bool {
        self.over.component == self.under.component
    }
}

/// A virtual knot or link diagram given by its signed Gauss code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    components: Vec<Vec<Passage>>,
}

impl Diagram {
    /// Builds a diagram, checking that every crossing appears exactly twice,
    /// once over and once under, with one sign.
    pub fn new(components: Vec<Vec<Passage>>) -> Result<Self> {
        validate(&components)?;
        Ok(Diagram { components })
    }

    pub(crate) fn from_parts(components: Vec<Vec<Passage>>) -> Self {
        debug_assert!(validate(&components).is_ok(), "invalid Gauss code {components:?}");
        Diagram { components }
    }

    /// The crossing-free circle.
    pub fn unknot() -> Self {
        Diagram { components: vec![Vec::new()] }
    }

    /// `n` disjoint crossing-free circles.
    pub fn unlink(n: usize) -> Self {
        Diagram { components: vec![Vec::new(); n] }
    }

    pub fn components(&self) -> &[Vec<Passage>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Option<&[Passage]> {
        self.components.get(i).map(Vec::as_slice)
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn into_components(self) -> Vec<Vec<Passage>> {
        self.components
    }

    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn passage(&self, slot: Slot) -> Option<Passage> {
        self.components.get(slot.component)?.get(slot.position).copied()
    }

    /// Crossing ids in increasing order.
    pub fn crossing_ids(&self) -> Vec<u32> {
        self.crossings().into_keys().collect()
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.components.iter().flatten().map(|p| p.crossing).max().unwrap_or(0)
    }

    /// Over/under slots for every crossing, keyed by id.
    pub fn crossings(&self) -> BTreeMap<u32, CrossingSlots> {
        let mut half: HashMap<u32, (Option<Slot>, Option<Slot>, Sign)> = HashMap::new();
        for (c, comp) in self.components.iter().enumerate() {
            for (p, pass) in comp.iter().enumerate() {
                let e = half.entry(pass.crossing).or_insert((None, None, pass.sign));
                let slot = Slot { component: c, position: p };
                match pass.role {
                    Role::Over => e.0 = Some(slot),
                    Role::Under => e.1 = Some(slot),
                }
            }
        }
        half.into_iter()
            .map(|(id, (o, u, sign))| {
                let over = o.expect("validated diagram has an over passage");
                let under = u.expect("validated diagram has an under passage");
                (id, CrossingSlots { over, under, sign })
            })
            .collect()
    }

    pub fn crossing(&self, id: u32) -> Result<CrossingSlots> {
        let mut over = None;
        let mut under = None;
        let mut sign = Sign::Positive;
        for (c, comp) in self.components.iter().enumerate() {
            for (p, pass) in comp.iter().enumerate() {
                if pass.crossing == id {
                    sign = pass.sign;
                    let slot = Slot { component: c, position: p };
                    match pass.role {
                        Role::Over => over = Some(slot),
                        Role::Under => under = Some(slot),
                    }
                }
            }
        }
        match (over, under) {
            (Some(over), Some(under)) => Ok(CrossingSlots { over, under, sign }),
            _ => Err(Error::UnknownCrossing(id)),
        }
    }

    /// Slot of the passage following `slot` along its component.
    pub fn next_slot(&self, slot: Slot) -> Slot {
        let len = self.components[slot.component].len();
        Slot { component: slot.component, position: (slot.position + 1) % len }
    }

    pub fn check_arc(&self, arc: ArcRef) -> Result<()> {
        let bad = Error::InvalidArc { component: arc.component, position: arc.position };
        let comp = self.components.get(arc.component).ok_or(bad.clone())?;
        let limit = comp.len().max(1);
        if arc.position < limit {
            Ok(())
        } else {
            Err(bad)
        }
    }

    /// One arc per passage, plus a whole-circle arc per empty component.
    pub fn arcs(&self) -> Vec<ArcRef> {
        let mut out = Vec::new();
        for (c, comp) in self.components.iter().enumerate() {
            for p in 0..comp.len().max(1) {
                out.push(ArcRef::new(c, p));
            }
        }
        out
    }

    /// Renumbers crossings 1..n in order of first visit.
    pub fn renumbered(&self) -> Diagram {
        let mut map: HashMap<u32, u32> = HashMap::new();
        let components = self
            .components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|p| {
                        let next = map.len() as u32 + 1;
                        let id = *map.entry(p.crossing).or_insert(next);
                        Passage { crossing: id, ..*p }
                    })
                    .collect()
            })
            .collect();
        Diagram { components }
    }

    /// Equality up to cyclic rotation of each component and reordering of
    /// components. Crossing ids must agree.
    pub fn same_up_to_rotation(&self, other: &Diagram) -> bool {
        fn key(d: &Diagram) -> Vec<Vec<Passage>> {
            let mut comps: Vec<Vec<Passage>> = d
                .components
                .iter()
                .map(|c| {
                    (0..c.len().max(1))
                        .map(|r| c.iter().cycle().skip(r).take(c.len()).copied().collect::<Vec<_>>())
                        .min()
                        .unwrap_or_default()
                })
                .collect();
            comps.sort();
            comps
        }
        self.components.len() == other.components.len() && key(self) == key(other)
    }

    /// Equality up to rotation, component order and crossing renumbering.
    ///
    /// Brute force over rotations of the first non-empty component, so only
    /// meant for small diagrams in tests and trace checks.
    pub fn isomorphic(&self, other: &Diagram) -> bool {
        if self.components.len() != other.components.len()
            || self.crossing_count() != other.crossing_count()
        {
            return false;
        }
        let canon = |d: &Diagram| -> Vec<Vec<Passage>> {
            let mut comps = d.components.clone();
            comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
            let mut best: Option<Vec<Vec<Passage>>> = None;
            let mut choose = |cs: Vec<Vec<Passage>>| {
                let r = Diagram { components: cs }.renumbered().components;
                if best.as_ref().is_none_or(|b| r < *b) {
                    best = Some(r);
                }
            };
            rotations_product(&comps, 0, &mut Vec::new(), &mut choose);
            best.unwrap_or_default()
        };
        canon(self) == canon(other)
    }

    /// Forgets over/under information.
    pub fn flatten(&self) -> FlatDiagram {
        let components = self
            .components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|p| FlatPassage {
                        crossing: p.crossing,
                        chirality: if crate::labeling::passage_delta(p) < 0 {
                            Chirality::LeftIncoming
                        } else {
                            Chirality::RightIncoming
                        },
                    })
                    .collect()
            })
            .collect();
        FlatDiagram { components }
    }
}

// Enumerates every choice of rotation per component (components of equal
// length are also permuted) and feeds each to `f`.
fn rotations_product(
    comps: &[Vec<Passage>],
    idx: usize,
    acc: &mut Vec<Vec<Passage>>,
    f: &mut dyn FnMut(Vec<Vec<Passage>>),
) {
    if idx == comps.len() {
        let mut perms = Vec::new();
        permute_equal_lengths(acc.clone(), 0, &mut perms);
        for p in perms {
            f(p);
        }
        return;
    }
    let c = &comps[idx];
    for r in 0..c.len().max(1) {
        acc.push(c.iter().cycle().skip(r).take(c.len()).copied().collect());
        rotations_product(comps, idx + 1, acc, f);
        acc.pop();
    }
}

fn permute_equal_lengths(comps: Vec<Vec<Passage>>, start: usize, out: &mut Vec<Vec<Vec<Passage>>>) {
    if start >= comps.len() {
        out.push(comps);
        return;
    }
    let mut comps = comps;
    for j in start..comps.len() {
        if comps[j].len() != comps[start].len() {
            continue;
        }
        comps.swap(start, j);
        permute_equal_lengths(comps.clone(), start + 1, out);
        comps.swap(start, j);
    }
}

fn validate(components: &[Vec<Passage>]) -> Result<()> {
    let mut seen: BTreeMap<u32, Vec<Passage>> = BTreeMap::new();
    for p in components.iter().flatten() {
        if p.crossing == 0 {
            return Err(Error::Validation { crossing: 0, kind: ValidationKind::ZeroId });
        }
        seen.entry(p.crossing).or_default().push(*p);
    }
    for (&crossing, ps) in &seen {
        let kind = match ps.as_slice() {
            [_] => Some(ValidationKind::MissingTwin),
            [a, b] if a.role == b.role => Some(ValidationKind::DuplicateRole),
            [a, b] if a.sign != b.sign => Some(ValidationKind::SignMismatch),
            [_, _] => None,
            _ => Some(ValidationKind::TooManyPassages),
        };
        if let Some(kind) = kind {
            return Err(Error::Validation { crossing, kind });
        }
    }
    Ok(())
}

/// Parses a Gauss code into a validated diagram.
pub fn parse(text: &str) -> Result<Diagram> {
    let mut components = vec![Vec::new()];
    let mut chars = text.char_indices().peekable();
    while let Some((offset, ch)) = chars.next() {
        match ch {
            c if c.is_whitespace() => {}
            '|' => components.push(Vec::new()),
            'O' | 'U' | 'o' | 'u' => {
                let role = if ch.eq_ignore_ascii_case(&'O') { Role::Over } else { Role::Under };
                while chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
                let mut digits = String::new();
                while let Some((_, d)) = chars.next_if(|(_, c)| c.is_ascii_digit()) {
                    digits.push(d);
                }
                if digits.is_empty() {
                    let at = chars.peek().map_or(text.len(), |(o, _)| *o);
                    return Err(Error::Syntax { offset: at, message: "expected crossing id".into() });
                }
                let crossing: u32 = digits.parse().map_err(|_| Error::Syntax {
                    offset,
                    message: format!("crossing id {digits} out of range"),
                })?;
                if crossing == 0 {
                    return Err(Error::Syntax { offset, message: "crossing id must be positive".into() });
                }
                while chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
                let sign = match chars.next() {
                    Some((_, '+')) => Sign::Positive,
                    Some((_, '-' | '\u{2212}')) => Sign::Negative,
                    Some((o, c)) => {
                        return Err(Error::Syntax { offset: o, message: format!("expected '+' or '-', found {c:?}") })
                    }
                    None => {
                        return Err(Error::Syntax { offset: text.len(), message: "expected '+' or '-'".into() })
                    }
                };
                components.last_mut().expect("at least one component").push(Passage { crossing, role, sign });
            }
            other => {
                return Err(Error::Syntax { offset, message: format!("unexpected character {other:?}") });
            }
        }
    }
    Diagram::new(components)
}

/// Canonical text: crossings renumbered by first visit, no whitespace.
pub fn serialize(d: &Diagram) -> String {
    raw_code(&d.renumbered())
}

/// Text form keeping the diagram's own crossing ids.
pub fn raw_code(d: &Diagram) -> String {
    let mut out = String::new();
    for (i, comp) in d.components.iter().enumerate() {
        if i > 0 {
            out.push('|');
        }
        for p in comp {
            out.push_str(&p.to_string());
        }
    }
    out
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&raw_code(self))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Chirality {
    LeftIncoming,
    RightIncoming,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlatPassage {
    pub crossing: u32,
    pub chirality: Chirality,
}

/// A diagram with crossing types forgotten: each crossing is an immersion
/// point entered once from the left and once from the right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlatDiagram {
    pub components: Vec<Vec<FlatPassage>>,
}

impl FlatDiagram {
    pub fn num_components(&self) -> usize {
        self.components.len()
    }
}
