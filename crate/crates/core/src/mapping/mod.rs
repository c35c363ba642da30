//! The twist generators and words in them.
//!
//! `H1, H2, H3` are counterclockwise half twists on the disks `E_i`.
//! `D1` and `D2` are clockwise half twists on the disks `C1 = N(a2)` and
//! `C2`, a neighbourhood of the upper chord from `p1` to `p4`. `D3` is a
//! counterclockwise half twist on `E4'`, a neighbourhood of the arc that
//! leaves `p5` upward, crosses `a2` and ends at `p6` from below.
//!
//! A half twist on the neighbourhood of an arc `h(a_j)` is `h σ_j h⁻¹`.
//! Words act on the left: in `g * h` the map `h` is applied first.

mod parse;
pub mod waves;

use serde::{Deserialize, Serialize};
use std::fmt;

pub use parse::parse_word;
pub use waves::{reduce_waves_by_twists, WaveReport, WaveStep};

use crate::curve::{ArcSystem, EdgeTwist};
use crate::surface::Edge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    H1,
    H2,
    H3,
    D1,
    D2,
    D3,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::H1,
        Generator::H2,
        Generator::H3,
        Generator::D1,
        Generator::D2,
        Generator::D3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::H1 => "H1",
            Generator::H2 => "H2",
            Generator::H3 => "H3",
            Generator::D1 => "D1",
            Generator::D2 => "D2",
            Generator::D3 => "D3",
        }
    }

    pub fn from_name(s: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.name() == s)
    }

    /// Edge twists realising the generator, in the order they are applied.
    pub fn edge_twists(self) -> Vec<EdgeTwist> {
        let t = |e: u8, ccw: bool| EdgeTwist::new(Edge::new(e).expect("edge"), ccw);
        match self {
            Generator::H1 => vec![t(1, true)],
            Generator::H2 => vec![t(3, true)],
            Generator::H3 => vec![t(5, true)],
            Generator::D1 => vec![t(2, false)],
            Generator::D2 => conjugate(&[t(2, false), t(3, false)], t(1, false)),
            Generator::D3 => conjugate(&[t(2, true), t(3, false), t(4, false), t(6, false)], t(1, true)),
        }
    }
}

/// `h σ h⁻¹` as an application sequence: `h⁻¹` first, `h` last.
fn conjugate(h: &[EdgeTwist], s: EdgeTwist) -> Vec<EdgeTwist> {
    let mut out: Vec<EdgeTwist> = h.iter().rev().map(|x| x.inverse()).collect();
    out.push(s);
    out.extend_from_slice(h);
    out
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Term {
    Atom(Generator, i32),
    Group(TwistWord, i32),
}

/// A word in the generators, kept with its grouping for display.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistWord {
    pub terms: Vec<Term>,
}

impl TwistWord {
    pub fn identity() -> TwistWord {
        TwistWord::default()
    }

    pub fn atom(g: Generator, power: i32) -> TwistWord {
        TwistWord {
            terms: vec![Term::Atom(g, power)],
        }
    }

    pub fn then(mut self, other: TwistWord) -> TwistWord {
        self.terms.extend(other.terms);
        self
    }

    /// Flattens to `(generator, counterclockwise)` letters, leftmost first.
    pub fn letters(&self) -> Vec<(Generator, bool)> {
        let mut out = Vec::new();
        for t in &self.terms {
            let (inner, power) = match t {
                Term::Atom(g, p) => (vec![(*g, true)], *p),
                Term::Group(w, p) => (w.letters(), *p),
            };
            let once: Vec<(Generator, bool)> = if power >= 0 {
                inner
            } else {
                inner.iter().rev().map(|(g, s)| (*g, !s)).collect()
            };
            for _ in 0..power.unsigned_abs() {
                out.extend_from_slice(&once);
            }
        }
        out
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            terms: vec![Term::Group(self.clone(), -1)],
        }
    }

    pub fn len(&self) -> usize {
        self.letters().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Edge twists in application order: the rightmost letter first.
    pub fn edge_twists(&self) -> Vec<EdgeTwist> {
        let mut out = Vec::new();
        for (g, fwd) in self.letters().into_iter().rev() {
            let seq = g.edge_twists();
            if fwd {
                out.extend(seq);
            } else {
                out.extend(seq.iter().rev().map(|t| t.inverse()));
            }
        }
        out
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match t {
                Term::Atom(g, 1) => write!(f, "{g}")?,
                Term::Atom(g, p) => write!(f, "{g}^{p}")?,
                Term::Group(w, 1) => write!(f, "({w})")?,
                Term::Group(w, p) => write!(f, "({w})^{p}")?,
            }
        }
        Ok(())
    }
}

/// Applies `w` to every component and returns the reduced image.
pub fn apply_word(s: &ArcSystem, w: &TwistWord) -> ArcSystem {
    let mut cur = s.clone();
    for t in w.edge_twists() {
        cur = cur.apply_twist(t);
    }
    cur.reduce_to_minimal_position()
}

pub fn apply_generator(s: &ArcSystem, g: Generator, power: i32) -> ArcSystem {
    apply_word(s, &TwistWord::atom(g, power))
}

/// The generators that carry bridge systems of the trivial tangle to
/// bridge systems of the trivial tangle, with their inverses.
pub fn epsilon_preserving_generators() -> Vec<TwistWord> {
    let d12 = || TwistWord {
        terms: vec![Term::Atom(Generator::D1, 1), Term::Atom(Generator::D2, -1)],
    };
    let mut out = Vec::new();
    for base in [
        TwistWord::atom(Generator::H1, 1),
        TwistWord::atom(Generator::H2, 1),
        TwistWord::atom(Generator::H3, 1),
        d12(),
        TwistWord::atom(Generator::D3, 1),
    ] {
        out.push(base.clone());
        out.push(base.inverse());
    }
    out
}
