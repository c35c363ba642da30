//! Half twists along the edges of the line.
//!
//! The half twist `σ_j` exchanges the endpoints of `a_j` inside a small
//! neighbourhood of that edge. On crossing words it substitutes the letter
//! `j` and leaves every other letter alone; an arc ending at a moved
//! puncture also picks up a short prefix that returns its germ to the
//! upper region.

use serde::{Deserialize, Serialize};

use super::component::{normalize_arc, Component};
use super::word::{cyclic_reduce, free_reduce, inverse, Letter};
use crate::surface::{wrap, Edge, Puncture};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeTwist {
    pub edge: Edge,
    /// Counterclockwise when true.
    pub ccw: bool,
}

impl EdgeTwist {
    pub fn new(edge: Edge, ccw: bool) -> Self {
        EdgeTwist { edge, ccw }
    }

    pub fn inverse(self) -> Self {
        EdgeTwist {
            edge: self.edge,
            ccw: !self.ccw,
        }
    }

    fn j(self) -> i32 {
        self.edge.index() as i32
    }

    fn image_of_core(self) -> [Letter; 3] {
        let j = self.j();
        let (prev, next) = (wrap(j - 1) as Letter, wrap(j + 1) as Letter);
        if self.ccw {
            [prev, -(j as Letter), next]
        } else {
            [next, -(j as Letter), prev]
        }
    }

    pub fn substitute(self, w: &[Letter], out: &mut Vec<Letter>) {
        let j = self.j() as Letter;
        let img = self.image_of_core();
        for &x in w {
            if x == j {
                out.extend_from_slice(&img);
            } else if x == -j {
                out.extend(img.iter().rev().map(|y| -y));
            } else {
                out.push(x);
            }
        }
    }

    /// Image of a puncture together with the word that carries the image of
    /// its upper germ back to the upper germ of the image puncture.
    fn germ(self, p: Puncture) -> (Puncture, Vec<Letter>) {
        let j = self.j();
        let lo = Puncture::of(j);
        let hi = Puncture::of(j + 1);
        let (prev, next) = (wrap(j - 1) as Letter, wrap(j + 1) as Letter);
        if self.ccw {
            if p == hi {
                return (lo, vec![]);
            }
            if p == lo {
                return (hi, vec![next, -prev]);
            }
        } else {
            if p == lo {
                return (hi, vec![]);
            }
            if p == hi {
                return (lo, vec![prev, -next]);
            }
        }
        (p, vec![])
    }

    pub fn apply(self, c: &Component) -> Component {
        match c {
            Component::Arc { label, start, end, .. } => {
                let w = c.upper_germ_word();
                let (p2, pre) = self.germ(start.puncture);
                let (q2, post) = self.germ(end.puncture);
                let mut out = pre;
                self.substitute(&w, &mut out);
                out.extend(inverse(&post));
                normalize_arc(*label, p2, &free_reduce(&out), q2)
            }
            Component::Closed { label, crossings } => {
                let mut out = Vec::with_capacity(crossings.len() + 4);
                self.substitute(crossings, &mut out);
                let w = cyclic_reduce(&out);
                Component::Closed {
                    label: *label,
                    crossings: w,
                }
                .normalized()
                .unwrap_or(Component::Closed {
                    label: *label,
                    crossings: vec![],
                })
            }
        }
    }

    pub fn apply_puncture(self, p: Puncture) -> Puncture {
        self.germ(p).0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::component::{End, Label};
    use crate::surface::Region;

    fn arc(p: u8, w: Vec<Letter>, q: u8) -> Component {
        let p = Puncture::new(p).unwrap();
        let q = Puncture::new(q).unwrap();
        normalize_arc(Label::Strand(1), p, &w, q)
    }

    fn tw(e: u8, ccw: bool) -> EdgeTwist {
        EdgeTwist::new(Edge::new(e).unwrap(), ccw)
    }

    #[test]
    fn twist_then_inverse_is_identity() {
        let samples = [arc(1, vec![], 2), arc(3, vec![6, -2], 4), arc(2, vec![4, -6, 1], 5)];
        for a in &samples {
            for e in 1..=6 {
                for ccw in [true, false] {
                    let t = tw(e, ccw);
                    assert_eq!(t.inverse().apply(&t.apply(a)), *a, "edge {e} ccw {ccw}");
                }
            }
        }
    }

    #[test]
    fn braid_relation_on_a_sample_arc() {
        let a = arc(3, vec![6, -2], 4);
        let (s, t) = (tw(2, true), tw(3, true));
        let lhs = s.apply(&t.apply(&s.apply(&a)));
        let rhs = t.apply(&s.apply(&t.apply(&a)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn core_edge_is_fixed_by_its_own_twist() {
        let a = arc(1, vec![], 2);
        assert_eq!(tw(1, true).apply(&a), a);
        let Component::Arc { start, .. } = tw(1, true).apply(&a) else {
            panic!()
        };
        assert_eq!(start.region, Region::Upper);
        let _ = End::new(start.puncture, start.region);
    }
}
