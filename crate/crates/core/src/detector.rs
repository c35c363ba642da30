//! Bridge arc replacement and the triviality decision.
//!
//! A system is *dense* when consecutive points along every `∂E_i` belong
//! to different arcs. If two consecutive points belong to the same arc,
//! the subarc between them is swapped for the short piece of `∂E_i`
//! joining them. The new arc has the same ends and misses the others, so
//! it is again a bridge arc, and the system meets `∂E` in fewer points.
//! For bridge systems of the trivial tangle the dense systems are exactly
//! the straight ones.

use serde::{Deserialize, Serialize};

use crate::curve::embedding::circle_key;
use crate::curve::overlay::Overlay;
use crate::curve::word::inverse;
use crate::curve::{curve_from_arc, disk_boundary, ArcSystem, CanonicalForm, Component, Label, Letter};
use crate::dehn::standardize;
use crate::error::{Result, TangleError};
use crate::surface::{Disk, Region};

/// Whether some arc of the system in `P` has both ends on one `∂E_i`.
pub fn has_wave(s: &ArcSystem) -> Result<bool> {
    let o = s.overlay()?;
    Ok(o.pieces(s).iter().any(|p| {
        p.inside.is_none() && matches!((p.start, p.end), (Some(a), Some(b)) if o.events[a].disk == o.events[b].disk)
    }))
}

/// Whether an arc crosses `∂E_i` the same way at both points of a site.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Same,
    Opposite,
}

/// Two consecutive points on `∂E_i` that lie on the same arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrSite {
    pub disk: Disk,
    /// Position of the first point in the cyclic order along `∂E_i`; the
    /// second point is the next one.
    pub position: usize,
    pub label: Label,
    pub direction: Direction,
}

fn adjacent_same_arc(o: &Overlay, sys: &ArcSystem, d: Disk) -> Option<BrSite> {
    sites_on(o, sys, d).next()
}

fn sites_on<'a>(o: &'a Overlay, sys: &'a ArcSystem, d: Disk) -> impl Iterator<Item = BrSite> + 'a {
    let list = &o.boundary[d.slot()];
    let n = if list.len() < 2 { 0 } else { list.len() };
    (0..n).filter_map(move |k| {
        let (a, b) = (o.events[list[k]], o.events[list[(k + 1) % n]]);
        if a.comp == b.comp && sys.components[a.comp].is_arc() {
            Some(BrSite {
                disk: d,
                position: k,
                label: sys.components[a.comp].label(),
                direction: if a.entering == b.entering {
                    Direction::Same
                } else {
                    Direction::Opposite
                },
            })
        } else {
            None
        }
    })
}

/// Every replacement site of the reduced system, by disk and position.
pub fn all_br_sites(s: &ArcSystem) -> Result<Vec<BrSite>> {
    let s = s.reduce_to_minimal_position();
    let o = s.overlay()?;
    Ok(Disk::ALL.into_iter().flat_map(|d| sites_on(&o, &s, d)).collect())
}

pub fn is_dense(s: &ArcSystem) -> Result<bool> {
    Ok(find_br_site(s)?.is_none())
}

/// The site with the least `(disk, position)`.
pub fn find_br_site(s: &ArcSystem) -> Result<Option<BrSite>> {
    let s = s.reduce_to_minimal_position();
    let o = s.overlay()?;
    Ok(first_site(&o, &s))
}

fn first_site(o: &Overlay, s: &ArcSystem) -> Option<BrSite> {
    Disk::ALL.into_iter().find_map(|d| adjacent_same_arc(o, s, d))
}

/// Letters of the walk along `∂E_i` from position `k` to `k + 1`.
fn boundary_step(o: &Overlay, d: Disk, k: usize) -> Vec<Letter> {
    let list = &o.boundary[d.slot()];
    let n = list.len();
    let upper = |pos: usize| o.events[list[pos]].region == Region::Upper;
    let right = d.right_edge().index() as Letter;
    let left = d.left_edge().index() as Letter;
    if k + 1 < n {
        if upper(k) && !upper(k + 1) {
            vec![right]
        } else {
            vec![]
        }
    } else {
        match (upper(k), upper(0)) {
            (false, true) => vec![-left],
            (true, true) => vec![right, -left],
            (false, false) => vec![-left, right],
            (true, false) => unreachable!("upper points precede lower ones"),
        }
    }
}

pub fn apply_br(s: &ArcSystem, site: BrSite) -> Result<ArcSystem> {
    let s = s.reduce_to_minimal_position();
    let o = s.overlay()?;
    replace_at(&o, &s, site)
}

/// The replacement on a reduced system `s` drawn as `o`.
fn replace_at(o: &Overlay, s: &ArcSystem, site: BrSite) -> Result<ArcSystem> {
    let list = &o.boundary[site.disk.slot()];
    let n = list.len();
    if n < 2 || site.position >= n {
        return Err(TangleError::Input(format!("no replacement site at {site:?}")));
    }
    let (ix, iy) = (list[site.position], list[(site.position + 1) % n]);
    let (ex, ey) = (o.events[ix], o.events[iy]);
    let direction = if ex.entering == ey.entering {
        Direction::Same
    } else {
        Direction::Opposite
    };
    if ex.comp != ey.comp || s.components[ex.comp].label() != site.label || direction != site.direction {
        return Err(TangleError::Input(format!("site {site:?} does not join one arc")));
    }
    let step = boundary_step(o, site.disk, site.position);
    let order = |id: usize| {
        let e = o.events[id];
        (e.segment, o.by_comp[e.comp].iter().position(|x| *x == id))
    };
    let (first, second, path) = if order(ix) < order(iy) {
        (ex, ey, step)
    } else {
        (ey, ex, inverse(&step))
    };
    let Component::Arc {
        label,
        start,
        crossings,
        end,
    } = &s.components[ex.comp]
    else {
        return Err(TangleError::Input("replacement site on a closed curve".into()));
    };
    let mut w: Vec<Letter> = crossings[..first.segment].to_vec();
    w.extend(path);
    w.extend_from_slice(&crossings[second.segment..]);
    let replaced = Component::Arc {
        label: *label,
        start: *start,
        crossings: w,
        end: *end,
    };
    replaced.validate()?;
    let mut out = s.clone();
    out.components[ex.comp] = replaced;
    Ok(out.reduce_to_minimal_position())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrStep {
    pub site: BrSite,
    pub before: usize,
    pub after: usize,
}

fn boundary_total(o: &Overlay) -> usize {
    Disk::ALL.into_iter().map(|d| o.count(d)).sum()
}

/// Runs replacements from `start` until the system is dense, reporting
/// each step with the system it produced.
fn replace_until_dense(
    start: &ArcSystem,
    max_steps: usize,
    mut on_step: impl FnMut(&BrStep, &ArcSystem),
) -> Result<(ArcSystem, usize)> {
    let mut cur = start.reduce_to_minimal_position();
    let mut o = cur.overlay()?;
    let mut count = 0usize;
    while let Some(site) = first_site(&o, &cur) {
        if count >= max_steps {
            return Err(TangleError::StepBudget(max_steps));
        }
        let before = boundary_total(&o);
        let next = replace_at(&o, &cur, site)?;
        let next_o = next.overlay()?;
        let after = boundary_total(&next_o);
        if after >= before {
            return Err(TangleError::PaperViolation(format!(
                "replacement at {site:?} did not lower the boundary count ({before} -> {after})"
            )));
        }
        on_step(&BrStep { site, before, after }, &next);
        cur = next;
        o = next_o;
        count += 1;
    }
    Ok((cur, count))
}

/// Replaces arcs until the system is dense.
pub fn make_dense(s: &ArcSystem, max_steps: usize) -> Result<(ArcSystem, Vec<BrStep>)> {
    let mut steps = Vec::new();
    let (out, _) = replace_until_dense(s, max_steps, |st, _| steps.push(st.clone()))?;
    Ok((out, steps))
}

/// Whether the arcs are the cores of the three disks, matched one to one.
pub fn is_straight_collection(s: &ArcSystem) -> Result<bool> {
    let s = s.reduce_to_minimal_position();
    let arcs: Vec<&Component> = s.arcs().collect();
    if arcs.len() != 3 {
        return Ok(false);
    }
    let mut used = [false; 3];
    for a in arcs {
        let g = curve_from_arc(a, Label::Curve(0))?;
        let hit = Disk::ALL
            .into_iter()
            .find(|d| !used[d.slot()] && disk_boundary(*d, Label::Curve(0)) == g);
        match hit {
            Some(d) => used[d.slot()] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Checks that no two chords of the drawing cross, by matching chord ends
/// like brackets around the boundary of each hexagon.
pub fn check_disjoint(s: &ArcSystem) -> Result<()> {
    let s = s.reduce_to_minimal_position();
    let emb = s.embedding();
    for region in [Region::Upper, Region::Lower] {
        let mut ends: Vec<((u8, usize), usize)> = Vec::new();
        for (id, c) in emb.chords.iter().enumerate().filter(|(_, c)| c.region == region) {
            ends.push((circle_key(c.from), id));
            ends.push((circle_key(c.to), id));
        }
        ends.sort();
        let mut open = vec![false; emb.chords.len()];
        let mut stack: Vec<usize> = Vec::new();
        for (_, id) in ends {
            if !open[id] {
                open[id] = true;
                stack.push(id);
            } else if stack.last() == Some(&id) {
                stack.pop();
            } else {
                let other = *stack.last().expect("an open chord");
                return Err(TangleError::Intersecting(
                    s.components[emb.chords[other].comp].label().to_string(),
                    s.components[emb.chords[id].comp].label().to_string(),
                ));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reason {
    StraightArcs,
    PairingMismatch,
    DenseNotStraight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason")]
pub enum Verdict {
    Trivial(Reason),
    NonTrivial(Reason),
}

impl Verdict {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Verdict::Trivial(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    Reduce {
        form: CanonicalForm,
    },
    Replace {
        site: BrSite,
        before: usize,
        after: usize,
        form: CanonicalForm,
    },
    Standardize {
        twists: [i64; 3],
        form: CanonicalForm,
    },
    Decide {
        verdict: Verdict,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detection {
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
    pub result: ArcSystem,
}

fn check_bridge_input(s: &ArcSystem) -> Result<()> {
    let arcs: Vec<&Component> = s.arcs().collect();
    if arcs.len() != 3 || s.components.len() != 3 {
        return Err(TangleError::Input("expected exactly three arcs".into()));
    }
    let mut labels: Vec<Label> = arcs.iter().map(|a| a.label()).collect();
    labels.sort();
    if labels != [Label::Strand(1), Label::Strand(2), Label::Strand(3)] {
        return Err(TangleError::Input("arcs must be labelled b1, b2, b3".into()));
    }
    for a in &arcs {
        a.validate()?;
    }
    let mut ends: Vec<u8> = arcs
        .iter()
        .flat_map(|a| {
            let (p, q) = a.endpoints().expect("arc");
            [p.index(), q.index()]
        })
        .collect();
    ends.sort();
    if ends != [1, 2, 3, 4, 5, 6] {
        return Err(TangleError::Input("arcs must end at six distinct punctures".into()));
    }
    check_disjoint(s)
}

pub fn detect_infinity_tangle(s: &ArcSystem, max_steps: usize) -> Result<Detection> {
    check_bridge_input(s)?;
    let mut trace = Vec::new();
    let reduced = s.reduce_to_minimal_position();
    trace.push(TraceStep::Reduce {
        form: reduced.canonical_form(),
    });
    let paired = reduced.arcs().all(|a| {
        let (p, q) = a.endpoints().expect("arc");
        p.disk() == q.disk()
    });
    if !paired {
        let verdict = Verdict::NonTrivial(Reason::PairingMismatch);
        trace.push(TraceStep::Decide { verdict });
        return Ok(Detection {
            verdict,
            trace,
            result: reduced,
        });
    }
    let (cur, _) = replace_until_dense(&reduced, max_steps, |st, next| {
        trace.push(TraceStep::Replace {
            site: st.site,
            before: st.before,
            after: st.after,
            form: next.canonical_form(),
        })
    })?;
    let st = standardize(&cur)?;
    trace.push(TraceStep::Standardize {
        twists: st.twists,
        form: st.system.canonical_form(),
    });
    let verdict = if is_straight_collection(&st.system)? {
        Verdict::Trivial(Reason::StraightArcs)
    } else {
        Verdict::NonTrivial(Reason::DenseNotStraight)
    };
    trace.push(TraceStep::Decide { verdict });
    Ok(Detection {
        verdict,
        trace,
        result: st.system,
    })
}

/// Re-runs the detector and checks every recorded step.
pub fn replay(s: &ArcSystem, trace: &[TraceStep], max_steps: usize) -> Result<Verdict> {
    let fresh = detect_infinity_tangle(s, max_steps)?;
    if fresh.trace != trace {
        let at = fresh
            .trace
            .iter()
            .zip(trace)
            .position(|(a, b)| a != b)
            .unwrap_or(trace.len().min(fresh.trace.len()));
        return Err(TangleError::PaperViolation(format!("trace diverges at step {at}")));
    }
    Ok(fresh.verdict)
}
