//! Decides whether a rational 3-tangle, given by three disjoint bridge
//! arcs on the six-punctured sphere, is the trivial tangle.

pub mod corpus;
pub mod curve;
pub mod dehn;
pub mod detector;
pub mod error;
pub mod mapping;
pub mod oracle;
pub mod schema;
pub mod surface;

pub use curve::{curve_from_arc, straight_bridge_arcs, ArcSystem, CanonicalForm, Component, End, Label};
pub use error::{Result, TangleError};
pub use surface::{build_standard_surface, CellDecomposition, Disk, Edge, NamedCurve, Puncture, Region};
