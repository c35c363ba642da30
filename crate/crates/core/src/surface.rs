//! The six-punctured sphere and its fixed cell decomposition.
//!
//! The punctures `p1..p6` sit in cyclic order on a great circle, the *line*.
//! The line is cut by the punctures into six edges: edge `a_k` runs from
//! `p_k` to `p_{k+1}` (indices mod 6, so `a6` runs from `p6` back to `p1`).
//! The two complementary hemispheres are the regions [`Region::Upper`] and
//! [`Region::Lower`], each an ideal hexagon whose vertices are the punctures.
//!
//! The three disks `E1, E2, E3` are regular neighbourhoods of the edges `a1`,
//! `a3`, `a5`. Each boundary `∂E_i` meets the line twice: once on `a_{2i-2}`
//! (its *left foot*) and once on `a_{2i}` (its *right foot*).

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::TangleError;

/// Number of punctures.
pub const N: u8 = 6;

/// Reduces any integer to the range `1..=6`.
pub fn wrap(k: i32) -> u8 {
    ((k - 1).rem_euclid(N as i32) + 1) as u8
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Puncture(u8);

impl Puncture {
    pub fn new(k: u8) -> Result<Self, TangleError> {
        if (1..=N).contains(&k) {
            Ok(Puncture(k))
        } else {
            Err(TangleError::Input(format!("puncture index {k} outside 1..=6")))
        }
    }

    pub(crate) fn of(k: i32) -> Self {
        Puncture(wrap(k))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// The two edges incident to this puncture: `a_{k-1}` and `a_k`.
    pub fn incident_edges(self) -> [Edge; 2] {
        [Edge(wrap(self.0 as i32 - 1)), Edge(self.0)]
    }

    /// The disk `E_i` containing this puncture.
    pub fn disk(self) -> Disk {
        Disk(self.0.div_ceil(2))
    }
}

impl TryFrom<u8> for Puncture {
    type Error = TangleError;
    fn try_from(k: u8) -> Result<Self, Self::Error> {
        Puncture::new(k)
    }
}

impl From<Puncture> for u8 {
    fn from(p: Puncture) -> u8 {
        p.0
    }
}

impl fmt::Display for Puncture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Edge(u8);

impl Edge {
    pub fn new(k: u8) -> Result<Self, TangleError> {
        if (1..=N).contains(&k) {
            Ok(Edge(k))
        } else {
            Err(TangleError::Input(format!("edge index {k} outside 1..=6")))
        }
    }

    pub(crate) fn of(k: i32) -> Self {
        Edge(wrap(k))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// Endpoints `(p_k, p_{k+1})`.
    pub fn ends(self) -> (Puncture, Puncture) {
        (Puncture(self.0), Puncture(wrap(self.0 as i32 + 1)))
    }

    pub fn is_incident(self, p: Puncture) -> bool {
        let (a, b) = self.ends();
        a == p || b == p
    }
}

impl TryFrom<u8> for Edge {
    type Error = TangleError;
    fn try_from(k: u8) -> Result<Self, Self::Error> {
        Edge::new(k)
    }
}

impl From<Edge> for u8 {
    fn from(e: Edge) -> u8 {
        e.0
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    #[serde(rename = "U")]
    Upper,
    #[serde(rename = "L")]
    Lower,
}

impl Region {
    pub fn other(self) -> Region {
        match self {
            Region::Upper => Region::Lower,
            Region::Lower => Region::Upper,
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::Upper => "U",
            Region::Lower => "L",
        })
    }
}

/// One of the three disks `E1, E2, E3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Disk(u8);

impl Disk {
    pub const ALL: [Disk; 3] = [Disk(1), Disk(2), Disk(3)];

    pub fn new(i: u8) -> Result<Self, TangleError> {
        if (1..=3).contains(&i) {
            Ok(Disk(i))
        } else {
            Err(TangleError::Input(format!("disk index {i} outside 1..=3")))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub(crate) fn slot(self) -> usize {
        self.0 as usize - 1
    }

    pub fn punctures(self) -> (Puncture, Puncture) {
        (Puncture(2 * self.0 - 1), Puncture(2 * self.0))
    }

    /// The edge `a_{2i-1}` joining the two punctures of the disk.
    pub fn core(self) -> Edge {
        Edge(2 * self.0 - 1)
    }

    /// The edge `a_{2i-2}` carrying the left foot of `∂E_i`.
    pub fn left_edge(self) -> Edge {
        Edge::of(2 * self.0 as i32 - 2)
    }

    /// The edge `a_{2i}` carrying the right foot of `∂E_i`.
    pub fn right_edge(self) -> Edge {
        Edge(2 * self.0)
    }

    pub fn next(self) -> Disk {
        Disk(self.0 % 3 + 1)
    }

    pub fn prev(self) -> Disk {
        Disk((self.0 + 1) % 3 + 1)
    }
}

impl TryFrom<u8> for Disk {
    type Error = TangleError;
    fn try_from(i: u8) -> Result<Self, Self::Error> {
        Disk::new(i)
    }
}

impl From<Disk> for u8 {
    fn from(d: Disk) -> u8 {
        d.0
    }
}

impl fmt::Display for Disk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.0)
    }
}

/// Curves and arcs with a fixed name in the standard picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedCurve {
    /// The boundary `∂E_i`.
    DiskBoundary(Disk),
    /// The equator of `E_i`: the core edge between its two punctures.
    Equator(Disk),
    /// The window of `∂E_i`: its upper half, between the two feet.
    Window(Disk),
}

/// The decomposition data: which edge bounds which region, and how the
/// named curves sit in it. The decomposition is rigid, so this is a value
/// type with no state beyond the pairing convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDecomposition {
    pub punctures: Vec<Puncture>,
    pub edges: Vec<Edge>,
    pub regions: Vec<Region>,
    /// For each `E_i`, the pair of punctures it contains.
    pub pairing: Vec<(Puncture, Puncture)>,
}

impl CellDecomposition {
    /// Edges of a region in boundary order; both hexagons use every edge.
    pub fn region_boundary(&self, _region: Region) -> &[Edge] {
        &self.edges
    }

    pub fn disk_of(&self, p: Puncture) -> Disk {
        p.disk()
    }
}

pub fn build_standard_surface() -> CellDecomposition {
    CellDecomposition {
        punctures: (1..=N).map(Puncture).collect(),
        edges: (1..=N).map(Edge).collect(),
        regions: vec![Region::Upper, Region::Lower],
        pairing: Disk::ALL.iter().map(|d| d.punctures()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_is_cyclic() {
        assert_eq!(wrap(0), 6);
        assert_eq!(wrap(7), 1);
        assert_eq!(wrap(-1), 5);
    }

    #[test]
    fn disk_feet() {
        let e1 = Disk(1);
        assert_eq!(e1.left_edge(), Edge(6));
        assert_eq!(e1.right_edge(), Edge(2));
        assert_eq!(e1.core(), Edge(1));
        assert_eq!(Disk(3).next(), Disk(1));
        assert_eq!(Disk(1).prev(), Disk(3));
    }

    #[test]
    fn every_puncture_is_a_hexagon_corner() {
        let s = build_standard_surface();
        for p in &s.punctures {
            let [a, b] = p.incident_edges();
            assert!(a.is_incident(*p) && b.is_incident(*p));
        }
        assert_eq!(s.pairing.len(), 3);
    }
}
