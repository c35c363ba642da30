use serde::{Deserialize, Serialize};
use std::fmt;

use super::word::{
    cyclic_reduce, edge_of, free_reduce, inverse, is_inessential_loop, least_upper_rotation, region_after,
    signs_consistent, Letter,
};
use crate::error::{Result, TangleError};
use crate::surface::{Puncture, Region};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    /// The bridge arc `β_i`, `i` in `1..=3`.
    #[serde(rename = "strand")]
    Strand(u8),
    /// An anonymous closed curve.
    #[serde(rename = "curve")]
    Curve(u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Strand(i) => write!(f, "b{i}"),
            Label::Curve(i) => write!(f, "c{i}"),
        }
    }
}

/// Where an arc leaves a puncture: the puncture and the region its first
/// segment lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct End {
    pub puncture: Puncture,
    pub region: Region,
}

impl End {
    pub fn new(puncture: Puncture, region: Region) -> Self {
        End { puncture, region }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Component {
    Arc {
        label: Label,
        start: End,
        crossings: Vec<Letter>,
        end: End,
    },
    Closed {
        label: Label,
        crossings: Vec<Letter>,
    },
}

impl Component {
    /// Builds and validates an arc; the end region follows from the word.
    pub fn arc(label: Label, start: End, crossings: Vec<Letter>, to: Puncture) -> Result<Self> {
        let end = End::new(to, region_after(start.region, crossings.len()));
        let c = Component::Arc {
            label,
            start,
            crossings,
            end,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn label(&self) -> Label {
        match self {
            Component::Arc { label, .. } | Component::Closed { label, .. } => *label,
        }
    }

    pub fn crossings(&self) -> &[Letter] {
        match self {
            Component::Arc { crossings, .. } | Component::Closed { crossings, .. } => crossings,
        }
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, Component::Arc { .. })
    }

    pub fn endpoints(&self) -> Option<(Puncture, Puncture)> {
        match self {
            Component::Arc { start, end, .. } => Some((start.puncture, end.puncture)),
            Component::Closed { .. } => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Component::Arc {
                label,
                start,
                crossings,
                end,
            } => {
                if start.puncture == end.puncture {
                    return Err(TangleError::Input(format!(
                        "arc {label} starts and ends at {}",
                        start.puncture
                    )));
                }
                if region_after(start.region, crossings.len()) != end.region {
                    return Err(TangleError::Input(format!(
                        "arc {label}: end region does not match crossing count"
                    )));
                }
                if !signs_consistent(start.region, crossings) || crossings.contains(&0) {
                    return Err(TangleError::Input(format!(
                        "arc {label}: crossing signs do not alternate with regions"
                    )));
                }
            }
            Component::Closed { label, crossings } => {
                if crossings.len() % 2 == 1 || !signs_consistent(Region::Upper, crossings) || crossings.contains(&0) {
                    return Err(TangleError::Input(format!(
                        "curve {label}: crossing word must start in the upper region and alternate"
                    )));
                }
            }
        }
        for x in self.crossings() {
            if x.unsigned_abs() > 6 {
                return Err(TangleError::Input(format!("edge index {x} outside 1..=6")));
            }
        }
        Ok(())
    }

    /// The arc read from the upper germ at each end. Prefixing the crossing
    /// of an incident edge turns a lower start into an upper one.
    pub fn upper_germ_word(&self) -> Vec<Letter> {
        match self {
            Component::Arc {
                start, crossings, end, ..
            } => {
                let mut w = Vec::with_capacity(crossings.len() + 2);
                if start.region == Region::Lower {
                    w.push(start.puncture.index() as Letter);
                }
                w.extend_from_slice(crossings);
                if end.region == Region::Lower {
                    w.push(-(end.puncture.index() as Letter));
                }
                w
            }
            Component::Closed { crossings, .. } => crossings.clone(),
        }
    }

    /// Minimal position with the line. Arcs lose bigons and end crossings
    /// and are oriented so that the canonical tuple is least; closed
    /// curves are cyclically reduced and rotated. Returns `None` for an
    /// inessential closed curve.
    pub fn normalized(&self) -> Option<Component> {
        match self {
            Component::Arc { label, start, end, .. } => {
                let w = self.upper_germ_word();
                Some(normalize_arc(*label, start.puncture, &w, end.puncture))
            }
            Component::Closed { label, crossings } => {
                let w = cyclic_reduce(crossings);
                if is_inessential_loop(&w) {
                    return None;
                }
                let a = least_upper_rotation(&w);
                let b = least_upper_rotation(&inverse(&w));
                Some(Component::Closed {
                    label: *label,
                    crossings: a.min(b),
                })
            }
        }
    }

    /// Number of letters; a proxy for complexity used in tie-breaks.
    pub fn weight(&self) -> usize {
        self.crossings().len()
    }

    pub fn with_label(mut self, l: Label) -> Component {
        match &mut self {
            Component::Arc { label, .. } | Component::Closed { label, .. } => *label = l,
        }
        self
    }
}

/// Reduces an arc given by its upper-germ word.
pub(crate) fn normalize_arc(label: Label, p: Puncture, w: &[Letter], q: Puncture) -> Component {
    let mut w = free_reduce(w);
    let mut rp = Region::Upper;
    let mut rq = Region::Upper;
    loop {
        let mut changed = false;
        if let Some(&x) = w.first() {
            if edge_of(x).is_incident(p) {
                w.remove(0);
                rp = rp.other();
                changed = true;
            }
        }
        if let Some(&x) = w.last() {
            if edge_of(x).is_incident(q) {
                w.pop();
                rq = rq.other();
                changed = true;
            }
        }
        if !changed {
            break;
        }
        w = free_reduce(&w);
    }
    let neighbours = p.incident_edges().iter().any(|e| e.is_incident(q));
    if w.is_empty() && rp == Region::Lower && neighbours {
        rp = Region::Upper;
        rq = Region::Upper;
    }
    let fwd = (p, rp, w.clone(), q, rq);
    let bwd = (q, rq, inverse(&w), p, rp);
    let (a, ra, word, b, rb) = if fwd <= bwd { fwd } else { bwd };
    Component::Arc {
        label,
        start: End::new(a, ra),
        crossings: word,
        end: End::new(b, rb),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: u8) -> Puncture {
        Puncture::new(k).unwrap()
    }

    #[test]
    fn arc_end_crossings_slide_off() {
        let c = normalize_arc(Label::Strand(1), p(1), &[1, -3, 3], p(2));
        assert_eq!(
            c,
            Component::Arc {
                label: Label::Strand(1),
                start: End::new(p(1), Region::Lower),
                crossings: vec![],
                end: End::new(p(2), Region::Lower),
            }
            .normalized()
            .unwrap()
        );
    }

    #[test]
    fn lower_chord_between_neighbours_is_upper_chord() {
        let c = Component::Arc {
            label: Label::Strand(2),
            start: End::new(p(3), Region::Lower),
            crossings: vec![],
            end: End::new(p(4), Region::Lower),
        };
        let n = c.normalized().unwrap();
        assert!(matches!(n, Component::Arc { start, .. } if start.region == Region::Upper));
    }

    #[test]
    fn far_chords_keep_their_region() {
        let c = Component::Arc {
            label: Label::Strand(2),
            start: End::new(p(2), Region::Lower),
            crossings: vec![],
            end: End::new(p(4), Region::Lower),
        };
        let n = c.normalized().unwrap();
        assert!(matches!(n, Component::Arc { start, .. } if start.region == Region::Lower));
    }

    #[test]
    fn closed_normal_form_is_orientation_free() {
        let a = Component::Closed {
            label: Label::Curve(0),
            crossings: vec![6, -2],
        };
        let b = Component::Closed {
            label: Label::Curve(0),
            crossings: vec![2, -6],
        };
        assert_eq!(a.normalized(), b.normalized());
    }

    #[test]
    fn validation_rejects_bad_signs() {
        let c = Component::Arc {
            label: Label::Strand(1),
            start: End::new(p(1), Region::Upper),
            crossings: vec![-3],
            end: End::new(p(2), Region::Lower),
        };
        assert!(c.validate().is_err());
    }
}
