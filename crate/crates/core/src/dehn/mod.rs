//! Coordinates for multicurves relative to the disks `E1, E2, E3`.
//!
//! For each disk the triple `(p_i, q_i, t_i)` records half the number of
//! crossings with `∂E_i`, how many of the arcs inside `E_i` wind around the
//! left puncture before twisting, and the number of half twists applied
//! inside `E_i`. When `p_i = 0` the entry `t_i` counts parallel copies of
//! `∂E_i` instead.

mod build;
mod weights;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use weights::{weights_from_intersections, PantsWeights};

use crate::curve::{disk_boundary, ArcSystem, Component, EdgeTwist, Label};
use crate::error::{Result, TangleError};
use crate::surface::Disk;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DehnParams {
    pub p: [u64; 3],
    pub q: [u64; 3],
    pub t: [i64; 3],
}

impl DehnParams {
    pub fn validate(&self) -> Result<()> {
        for i in 0..3 {
            if self.p[i] == 0 {
                if self.q[i] != 0 || self.t[i] < 0 {
                    return Err(TangleError::Input(format!(
                        "disk {}: with p = 0 need q = 0 and t >= 0",
                        i + 1
                    )));
                }
            } else if self.q[i] >= self.p[i] {
                return Err(TangleError::Input(format!("disk {}: need q < p", i + 1)));
            }
        }
        let counts = self.intersections();
        weights_from_intersections(counts).map(|_| ())
    }

    pub fn intersections(&self) -> [u64; 3] {
        [2 * self.p[0], 2 * self.p[1], 2 * self.p[2]]
    }

    pub fn to_tuple(&self) -> [i64; 9] {
        let mut out = [0i64; 9];
        for i in 0..3 {
            out[3 * i] = self.p[i] as i64;
            out[3 * i + 1] = self.q[i] as i64;
            out[3 * i + 2] = self.t[i];
        }
        out
    }

    pub fn from_tuple(v: [i64; 9]) -> Result<Self> {
        let mut d = DehnParams::default();
        for i in 0..3 {
            if v[3 * i] < 0 || v[3 * i + 1] < 0 {
                return Err(TangleError::Input("p and q must be non-negative".into()));
            }
            d.p[i] = v[3 * i] as u64;
            d.q[i] = v[3 * i + 1] as u64;
            d.t[i] = v[3 * i + 2];
        }
        d.validate()?;
        Ok(d)
    }
}

impl Serialize for DehnParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_tuple().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DehnParams {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = <[i64; 9]>::deserialize(d)?;
        DehnParams::from_tuple(v).map_err(serde::de::Error::custom)
    }
}

fn half_twist(d: Disk, forward: bool) -> EdgeTwist {
    EdgeTwist::new(d.core(), forward)
}

/// Applies `n` half twists on `E_i` (counterclockwise for positive `n`).
pub fn twist_disk(s: &ArcSystem, d: Disk, n: i64) -> ArcSystem {
    let mut cur = s.clone();
    let t = half_twist(d, n > 0);
    for _ in 0..n.unsigned_abs() {
        cur = cur.apply_twist(t);
    }
    cur
}

/// The drawing before any half twist, for `q_i <= p_i`.
pub fn untwisted_system(p: [u64; 3], q: [u64; 3]) -> Result<ArcSystem> {
    if (0..3).any(|i| q[i] > p[i]) {
        return Err(TangleError::Input("need q <= p".into()));
    }
    let w = weights_from_intersections([2 * p[0], 2 * p[1], 2 * p[2]])?;
    Ok(ArcSystem {
        components: build::closed(build::untwisted_words(&w, q)),
    })
}

pub fn system_from_dehn_params(d: &DehnParams) -> Result<ArcSystem> {
    d.validate()?;
    let mut comps = untwisted_system(d.p, d.q)?.components;
    let mut next_label = comps.len() as u32;
    for disk in Disk::ALL {
        let i = disk.slot();
        if d.p[i] == 0 {
            for _ in 0..d.t[i] {
                comps.push(disk_boundary(disk, Label::Curve(next_label)));
                next_label += 1;
            }
        }
    }
    let mut s = ArcSystem { components: comps };
    for disk in Disk::ALL {
        let i = disk.slot();
        if d.p[i] > 0 {
            s = twist_disk(&s, disk, d.t[i]);
        }
    }
    Ok(s.reduce_to_minimal_position())
}

/// Crossings with the core edge of each disk.
pub fn equator_counts(s: &ArcSystem) -> [usize; 3] {
    let mut out = [0usize; 3];
    for c in &s.components {
        for x in c.crossings() {
            let e = x.unsigned_abs();
            if e % 2 == 1 {
                out[(e as usize - 1) / 2] += 1;
            }
        }
    }
    out
}

pub(crate) fn is_disk_boundary(c: &Component, d: Disk) -> bool {
    !c.is_arc() && c.crossings() == disk_boundary(d, c.label()).crossings()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Standardized {
    pub system: ArcSystem,
    /// Half twists applied on each disk.
    pub twists: [i64; 3],
}

/// Applies half twists on the disks while some single twist shortens the
/// total crossing word. Half twists on `E_i` keep the crossings with every
/// `∂E_j`, so only the drawing inside the disks changes.
pub fn standardize(s: &ArcSystem) -> Result<Standardized> {
    let mut cur = s.reduce_to_minimal_position();
    let mut weight = cur.total_weight();
    let mut twists = [0i64; 3];
    let mut improved = true;
    while improved {
        improved = false;
        for d in Disk::ALL {
            for dir in [1i64, -1] {
                loop {
                    let next = twist_disk(&cur, d, dir).reduce_to_minimal_position();
                    let w = next.total_weight();
                    if w >= weight {
                        break;
                    }
                    weight = w;
                    cur = next;
                    twists[d.slot()] += dir;
                    improved = true;
                }
            }
        }
    }
    Ok(Standardized { system: cur, twists })
}

/// Recovers the parameters of a multicurve. Copies of `∂E_i` are counted
/// directly; for the rest, half twists are undone until the drawing
/// matches one of the finitely many untwisted patterns with the same `p`.
pub fn dehn_params_from_system(s: &ArcSystem) -> Result<DehnParams> {
    let s = s.reduce_to_minimal_position();
    if s.components.iter().any(|c| c.is_arc()) {
        return Err(TangleError::Input("expected closed curves only".into()));
    }
    let counts = s.disk_intersections()?;
    let counts = [counts[0] as u64, counts[1] as u64, counts[2] as u64];
    if counts.iter().any(|c| c % 2 == 1) {
        return Err(TangleError::Parity(counts));
    }
    let mut d = DehnParams {
        p: [counts[0] / 2, counts[1] / 2, counts[2] / 2],
        ..DehnParams::default()
    };
    let mut rest = Vec::new();
    for c in s.components {
        match Disk::ALL
            .into_iter()
            .find(|disk| d.p[disk.slot()] == 0 && is_disk_boundary(&c, *disk))
        {
            Some(disk) => d.t[disk.slot()] += 1,
            None => rest.push(c),
        }
    }
    let gamma = ArcSystem { components: rest };
    let active: Vec<Disk> = Disk::ALL.into_iter().filter(|x| d.p[x.slot()] > 0).collect();
    if active.is_empty() {
        return if gamma.components.is_empty() {
            Ok(d)
        } else {
            Err(TangleError::PaperViolation(
                "curves missing every boundary are not parallel to one".into(),
            ))
        };
    }

    let mut table = std::collections::HashMap::new();
    let mut q = [0u64; 3];
    loop {
        let key = untwisted_system(d.p, q)?.canonical_form();
        table.insert(key, q);
        let mut i = 0;
        loop {
            if i == 3 {
                break;
            }
            q[i] += 1;
            if q[i] < d.p[i].max(1) {
                break;
            }
            q[i] = 0;
            i += 1;
        }
        if i == 3 {
            break;
        }
    }

    // Descend on length along half twists, then search around the minimum.
    let mut base = [0i64; 3];
    let mut cur = gamma.clone();
    let mut improved = true;
    while improved {
        improved = false;
        for disk in &active {
            for dir in [1i64, -1] {
                let next = twist_disk(&cur, *disk, -dir).reduce_to_minimal_position();
                if next.total_weight() < cur.total_weight() {
                    cur = next;
                    base[disk.slot()] += dir;
                    improved = true;
                }
            }
        }
    }
    let bound = 4 + cur.total_weight() as i64;
    for radius in 0..=bound {
        let mut offsets = vec![[0i64; 3]];
        for disk in &active {
            let mut grown = Vec::new();
            for o in &offsets {
                for k in -radius..=radius {
                    let mut v = *o;
                    v[disk.slot()] = k;
                    grown.push(v);
                }
            }
            offsets = grown;
        }
        for o in offsets {
            if o.iter().all(|k| k.abs() < radius) {
                continue;
            }
            let mut probe = cur.clone();
            for disk in &active {
                probe = twist_disk(&probe, *disk, -o[disk.slot()]);
            }
            if let Some(qv) = table.get(&probe.canonical_form()) {
                for disk in &active {
                    let i = disk.slot();
                    d.q[i] = qv[i];
                    d.t[i] = base[i] + o[i];
                }
                return Ok(d);
            }
        }
    }
    Err(TangleError::PaperViolation(
        "no twist of an untwisted pattern matches".into(),
    ))
}
