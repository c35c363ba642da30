//! Arc systems on the six-punctured sphere: normal forms, the concrete
//! drawing, intersection with the fixed curves, and the twist action.

pub mod component;
pub mod embedding;
pub mod overlay;
pub mod twist;
pub mod word;

use serde::{Deserialize, Serialize};

pub use component::{Component, End, Label};
pub use embedding::Embedding;
pub use overlay::{Overlay, Piece};
pub use twist::EdgeTwist;
pub use word::Letter;

use crate::error::{Result, TangleError};
use crate::surface::{Disk, NamedCurve, Puncture, Region};

/// A finite collection of disjoint arcs and closed curves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcSystem {
    pub components: Vec<Component>,
}

/// Label-preserving normal form; equal forms mean isotopic systems.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub components: Vec<CanonicalComponent>,
    /// Crossings per edge `a1..a6` in minimal position.
    pub edge_counts: [usize; 6],
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalComponent {
    pub label: Option<u8>,
    pub ends: Option<((u8, Region), (u8, Region))>,
    pub word: Vec<Letter>,
}

impl ArcSystem {
    /// Builds a system, checking each component's word.
    pub fn new(components: Vec<Component>) -> Result<Self> {
        for c in &components {
            c.validate()?;
        }
        let mut seen = std::collections::HashSet::new();
        for c in components.iter().filter(|c| c.is_arc()) {
            let (p, q) = c.endpoints().expect("arc");
            for x in [p, q] {
                if !seen.insert(x) {
                    return Err(TangleError::Input(format!("two arcs end at {x}")));
                }
            }
        }
        Ok(ArcSystem { components })
    }

    pub fn arcs(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.is_arc())
    }

    pub fn strand(&self, i: u8) -> Option<&Component> {
        self.components.iter().find(|c| c.label() == Label::Strand(i))
    }

    /// Removes every bigon with the line and every inessential closed
    /// component. The result is in minimal position with the line and
    /// hence with every fixed curve.
    pub fn reduce_to_minimal_position(&self) -> ArcSystem {
        let mut components: Vec<Component> = self.components.iter().filter_map(|c| c.normalized()).collect();
        components.sort_by_key(sort_key);
        ArcSystem { components }
    }

    pub fn embedding(&self) -> Embedding {
        Embedding::build(&self.components)
    }

    pub fn overlay(&self) -> Result<Overlay> {
        Overlay::build(self)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let r = self.reduce_to_minimal_position();
        let mut edge_counts = [0usize; 6];
        let components = r
            .components
            .iter()
            .map(|c| {
                for x in c.crossings() {
                    edge_counts[x.unsigned_abs() as usize - 1] += 1;
                }
                let label = match c.label() {
                    Label::Strand(i) => Some(i),
                    Label::Curve(_) => None,
                };
                let ends = match c {
                    Component::Arc { start, end, .. } => Some((
                        (start.puncture.index(), start.region),
                        (end.puncture.index(), end.region),
                    )),
                    Component::Closed { .. } => None,
                };
                CanonicalComponent {
                    label,
                    ends,
                    word: c.crossings().to_vec(),
                }
            })
            .collect::<Vec<_>>();
        let mut components = components;
        components.sort();
        CanonicalForm {
            components,
            edge_counts,
        }
    }

    pub fn apply_twist(&self, t: EdgeTwist) -> ArcSystem {
        ArcSystem {
            components: self.components.iter().map(|c| t.apply(c)).collect(),
        }
    }

    /// Geometric intersection number with a fixed curve or arc.
    pub fn geometric_intersection(&self, curve: NamedCurve) -> Result<usize> {
        let r = self.reduce_to_minimal_position();
        match curve {
            NamedCurve::DiskBoundary(d) | NamedCurve::Window(d) => Ok(r.overlay()?.count(d)),
            NamedCurve::Equator(d) => Ok(r
                .components
                .iter()
                .flat_map(|c| c.crossings())
                .filter(|x| x.unsigned_abs() == d.core().index())
                .count()),
        }
    }

    /// Intersection numbers with `∂E1, ∂E2, ∂E3`.
    pub fn disk_intersections(&self) -> Result<[usize; 3]> {
        let o = self.reduce_to_minimal_position().overlay()?;
        Ok([o.count(Disk::ALL[0]), o.count(Disk::ALL[1]), o.count(Disk::ALL[2])])
    }

    pub fn total_weight(&self) -> usize {
        self.components.iter().map(|c| c.weight()).sum()
    }
}

fn sort_key(c: &Component) -> (u8, Label, Vec<Letter>) {
    match c.label() {
        Label::Strand(i) => (0, Label::Strand(i), vec![]),
        Label::Curve(_) => (1, Label::Curve(0), c.crossings().to_vec()),
    }
}

/// The straight arcs: `β_i` is the core of `E_i`.
pub fn straight_bridge_arcs() -> ArcSystem {
    let components = Disk::ALL
        .iter()
        .map(|d| {
            let (p, q) = d.punctures();
            Component::Arc {
                label: Label::Strand(d.index()),
                start: End::new(p, Region::Upper),
                crossings: vec![],
                end: End::new(q, Region::Upper),
            }
        })
        .collect();
    ArcSystem { components }
}

/// The closed curve `∂E_i`, read from the upper region.
pub fn disk_boundary(d: Disk, label: Label) -> Component {
    Component::Closed {
        label,
        crossings: vec![d.left_edge().index() as Letter, -(d.right_edge().index() as Letter)],
    }
    .normalized()
    .expect("disk boundary is essential")
}

/// Boundary of a regular neighbourhood of an arc.
pub fn curve_from_arc(arc: &Component, label: Label) -> Result<Component> {
    let Component::Arc { start, end, .. } = arc else {
        return Err(TangleError::Input("expected an arc".into()));
    };
    let w = arc.upper_germ_word();
    let lp = word::puncture_loop(start.puncture);
    let lq = word::puncture_loop(end.puncture);
    let mut loop_word: Vec<Letter> = Vec::with_capacity(2 * w.len() + 4);
    loop_word.extend_from_slice(&lp);
    loop_word.extend_from_slice(&w);
    loop_word.extend_from_slice(&lq);
    loop_word.extend(word::inverse(&w));
    Component::Closed {
        label,
        crossings: loop_word,
    }
    .normalized()
    .ok_or_else(|| TangleError::PaperViolation("neighbourhood boundary is inessential".into()))
}

pub fn puncture(k: u8) -> Puncture {
    Puncture::new(k).expect("index in range")
}
