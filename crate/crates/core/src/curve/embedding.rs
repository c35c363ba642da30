//! A concrete drawing of a system in minimal position.
//!
//! The crossings on each edge are ordered by following the strands through
//! them in parallel until they part ways; the hexagon they part in decides
//! which lies nearer to the start of the edge. The result is a list of
//! crossing points per edge and, for each component, its chords through
//! the two hexagons.

use std::cmp::Ordering;

use super::component::Component;
use super::word::Letter;
use crate::surface::{Edge, Puncture, Region};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointRef {
    pub comp: usize,
    pub t: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Puncture(Puncture),
    Point { edge: Edge, index: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chord {
    pub region: Region,
    pub from: Node,
    pub to: Node,
    pub comp: usize,
    /// Segment `s` runs from crossing `s - 1` to crossing `s`.
    pub segment: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// Crossing points on `a_k` at slot `k - 1`, ordered from `p_k`.
    pub edges: [Vec<PointRef>; 6],
    /// Position of crossing `t` of component `c` on its edge.
    pub index: Vec<Vec<usize>>,
    pub chords: Vec<Chord>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Target {
    Edge(u8),
    Puncture(u8),
}

/// Steps from crossing `t` of `c` in direction `dir`, yielding the next
/// edges crossed and finally the puncture reached, if any.
fn walk(c: &Component, t: usize, dir: isize) -> impl Iterator<Item = Target> + '_ {
    let w = c.crossings();
    let n = w.len() as isize;
    let closed = !c.is_arc();
    let ends = c.endpoints();
    let mut i = t as isize;
    let mut steps = 0isize;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        i += dir;
        steps += 1;
        if closed {
            if steps > n + 2 {
                return None;
            }
            let k = i.rem_euclid(n) as usize;
            return Some(Target::Edge(w[k].unsigned_abs()));
        }
        if i >= n || i < 0 {
            done = true;
            let (p, q) = ends.expect("arc has ends");
            return Some(Target::Puncture(if i >= n { q.index() } else { p.index() }));
        }
        Some(Target::Edge(w[i as usize].unsigned_abs()))
    })
}

/// Distance along the hexagon boundary from the far end of edge `e`.
fn dist(e: u8, target: Target) -> i32 {
    let from = e as i32 + 1;
    match target {
        Target::Puncture(x) => (x as i32 - from).rem_euclid(6) * 2,
        Target::Edge(x) => (x as i32 - from).rem_euclid(6) * 2 + 1,
    }
}

/// Direction along the word that enters `region` from crossing `t`.
fn side_dir(w: &[Letter], t: usize, region: Region) -> isize {
    let down = w[t] > 0;
    match (region, down) {
        (Region::Lower, true) | (Region::Upper, false) => 1,
        _ => -1,
    }
}

fn compare(comps: &[Component], a: PointRef, b: PointRef, e: u8) -> Ordering {
    let (ca, cb) = (&comps[a.comp], &comps[b.comp]);
    for region in [Region::Lower, Region::Upper] {
        let ga = walk(ca, a.t, side_dir(ca.crossings(), a.t, region));
        let gb = walk(cb, b.t, side_dir(cb.crossings(), b.t, region));
        let mut cur = e;
        let mut flip = false;
        for (ta, tb) in ga.zip(gb) {
            if ta != tb {
                let ord = dist(cur, tb).cmp(&dist(cur, ta));
                return if flip { ord.reverse() } else { ord };
            }
            if let Target::Edge(x) = ta {
                cur = x;
            }
            flip = !flip;
        }
    }
    // Parallel copies of one closed curve: order the band by copy index,
    // read against the direction of travel.
    let ord = a.comp.cmp(&b.comp).then(a.t.cmp(&b.t));
    if ca.crossings()[a.t] > 0 {
        ord
    } else {
        ord.reverse()
    }
}

/// Orders the points on every edge by comparing strands pairwise. Works
/// for any input, including systems that cannot be drawn disjointly.
fn sorted_order(comps: &[Component]) -> [Vec<PointRef>; 6] {
    let mut edges: [Vec<PointRef>; 6] = Default::default();
    for (ci, c) in comps.iter().enumerate() {
        for (t, x) in c.crossings().iter().enumerate() {
            edges[x.unsigned_abs() as usize - 1].push(PointRef { comp: ci, t });
        }
    }
    for (slot, list) in edges.iter_mut().enumerate() {
        let e = slot as u8 + 1;
        list.sort_by(|a, b| compare(comps, *a, *b, e));
    }
    edges
}

/// Positions on the hexagon boundary: puncture `p` at `2(p - 1)`, edge `e`
/// at `2e - 1`.
fn puncture_slot(p: Puncture) -> usize {
    2 * (p.index() as usize - 1)
}

fn edge_slot(e: u8) -> usize {
    2 * e as usize - 1
}

fn region_index(r: Region) -> usize {
    match r {
        Region::Upper => 0,
        Region::Lower => 1,
    }
}

/// Chords of a disjoint system in one hexagon are fixed by how many join
/// each pair of boundary slots: parallel chords nest, and along an edge the
/// chords are grouped by their far end, farthest first.
struct Layout {
    count: [[[usize; 12]; 12]; 2],
    offset: [[[usize; 12]; 12]; 2],
}

impl Layout {
    fn new(comps: &[Component]) -> Option<Layout> {
        let mut count = [[[0usize; 12]; 12]; 2];
        for c in comps {
            let w = c.crossings();
            let n = w.len();
            let mut add = |r: Region, x: usize, y: usize| {
                if x == y {
                    return false;
                }
                count[region_index(r)][x][y] += 1;
                count[region_index(r)][y][x] += 1;
                true
            };
            match c {
                Component::Arc { start, end, .. } => {
                    let mut region = start.region;
                    for s in 0..=n {
                        let from = if s == 0 {
                            puncture_slot(start.puncture)
                        } else {
                            edge_slot(w[s - 1].unsigned_abs())
                        };
                        let to = if s == n {
                            puncture_slot(end.puncture)
                        } else {
                            edge_slot(w[s].unsigned_abs())
                        };
                        if !add(region, from, to) {
                            return None;
                        }
                        region = region.other();
                    }
                }
                Component::Closed { .. } => {
                    for s in 0..n {
                        let region = if w[s] > 0 { Region::Upper } else { Region::Lower };
                        let from = edge_slot(w[(s + n - 1) % n].unsigned_abs());
                        if !add(region, from, edge_slot(w[s].unsigned_abs())) {
                            return None;
                        }
                    }
                }
            }
        }
        let mut offset = [[[0usize; 12]; 12]; 2];
        for r in 0..2 {
            for x in 0..12 {
                let mut at = 0;
                for d in (1..12).rev() {
                    let y = (x + d) % 12;
                    offset[r][x][y] = at;
                    at += count[r][x][y];
                }
            }
        }
        Some(Layout { count, offset })
    }

    /// The far end of the chord in region `r` leaving slot `x` at position
    /// `i` along it.
    fn follow(&self, r: usize, x: usize, i: usize) -> Option<(usize, usize)> {
        for d in (1..12).rev() {
            let y = (x + d) % 12;
            let (o, c) = (self.offset[r][x][y], self.count[r][x][y]);
            if i >= o && i < o + c {
                return Some((y, self.offset[r][y][x] + c - 1 - (i - o)));
            }
        }
        None
    }
}

/// Orders the points by laying out each hexagon from its chord counts and
/// following every component through the layout. Gives up when the words
/// do not fit together disjointly.
fn traced_order(comps: &[Component]) -> Option<[Vec<PointRef>; 6]> {
    let layout = Layout::new(comps)?;
    let mut sizes = [0usize; 6];
    for c in comps {
        for x in c.crossings() {
            sizes[x.unsigned_abs() as usize - 1] += 1;
        }
    }
    let mut at: [Vec<Option<PointRef>>; 6] = Default::default();
    for (slot, list) in at.iter_mut().enumerate() {
        *list = vec![None; sizes[slot]];
    }
    for (ci, c) in comps.iter().enumerate() {
        let Component::Arc { start, end, .. } = c else { continue };
        let w = c.crossings();
        let r0 = region_index(start.region);
        let (mut y, mut i) = layout.follow(r0, puncture_slot(start.puncture), 0)?;
        for (t, x) in w.iter().enumerate() {
            if y != edge_slot(x.unsigned_abs()) {
                return None;
            }
            let e = x.unsigned_abs() as usize - 1;
            if at[e][i].is_some() {
                return None;
            }
            at[e][i] = Some(PointRef { comp: ci, t });
            let r = if *x > 0 { 1 } else { 0 };
            (y, i) = layout.follow(r, y, i)?;
        }
        if y != puncture_slot(end.puncture) {
            return None;
        }
    }

    // The rest splits into closed orbits, matched to closed components by
    // their reduced words.
    let mut waiting: std::collections::HashMap<Vec<Letter>, Vec<usize>> = Default::default();
    for (ci, c) in comps.iter().enumerate().rev() {
        if !c.is_arc() {
            waiting.entry(closed_key(c.crossings())).or_default().push(ci);
        }
    }
    for e0 in 0..6 {
        for i0 in 0..sizes[e0] {
            if at[e0][i0].is_some() {
                continue;
            }
            let mut orbit: Vec<(usize, usize)> = Vec::new();
            let mut letters: Vec<Letter> = Vec::new();
            let (mut e, mut i, mut down) = (e0, i0, true);
            loop {
                orbit.push((e, i));
                let k = (e + 1) as Letter;
                letters.push(if down { k } else { -k });
                let (y, j) = layout.follow(if down { 1 } else { 0 }, edge_slot(e as u8 + 1), i)?;
                if y % 2 == 0 {
                    return None;
                }
                (e, i, down) = ((y - 1) / 2, j, !down);
                if (e, i) == (e0, i0) {
                    break;
                }
                if orbit.len() > sizes.iter().sum::<usize>() {
                    return None;
                }
            }
            if !down {
                return None;
            }
            let ci = waiting.get_mut(&closed_key(&letters))?.pop()?;
            let w = comps[ci].crossings();
            let n = w.len();
            let place = |t: usize, k: usize, flip: bool| {
                if flip {
                    orbit[n - 1 - (t + k) % n]
                } else {
                    orbit[(t + k) % n]
                }
            };
            let (k, flip) = match find_rotation(&letters, w) {
                Some(k) => (k, false),
                None => (find_rotation(&crate::curve::word::inverse(&letters), w)?, true),
            };
            for t in 0..n {
                let (e, i) = place(t, k, flip);
                if at[e][i].is_some() {
                    return None;
                }
                at[e][i] = Some(PointRef { comp: ci, t });
            }
        }
    }
    if waiting.values().any(|v| !v.is_empty()) {
        return None;
    }
    let mut edges: [Vec<PointRef>; 6] = Default::default();
    for (slot, list) in at.into_iter().enumerate() {
        edges[slot] = list.into_iter().collect::<Option<Vec<_>>>()?;
    }
    Some(edges)
}

fn closed_key(w: &[Letter]) -> Vec<Letter> {
    use crate::curve::word::{inverse, least_upper_rotation};
    least_upper_rotation(w).min(least_upper_rotation(&inverse(w)))
}

/// Some `k` with `w` equal to `o` rotated left by `k`.
fn find_rotation(o: &[Letter], w: &[Letter]) -> Option<usize> {
    let n = o.len();
    if w.len() != n {
        return None;
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut k = 0;
    for i in 0..2 * n - 1 {
        let x = o[i % n];
        while k > 0 && x != w[k] {
            k = fail[k - 1];
        }
        if x == w[k] {
            k += 1;
        }
        if k == n {
            return Some(i + 1 - n);
        }
    }
    None
}

impl Embedding {
    pub fn build(comps: &[Component]) -> Embedding {
        let edges = traced_order(comps).unwrap_or_else(|| sorted_order(comps));
        let mut index: Vec<Vec<usize>> = comps.iter().map(|c| vec![0; c.crossings().len()]).collect();
        for list in &edges {
            for (i, p) in list.iter().enumerate() {
                index[p.comp][p.t] = i;
            }
        }
        let node = |ci: usize, t: usize| {
            let x = comps[ci].crossings()[t];
            Node::Point {
                edge: Edge::of(x.unsigned_abs() as i32),
                index: index[ci][t],
            }
        };
        let mut chords = Vec::new();
        for (ci, c) in comps.iter().enumerate() {
            let n = c.crossings().len();
            match c {
                Component::Arc { start, end, .. } => {
                    let mut region = start.region;
                    for s in 0..=n {
                        let from = if s == 0 {
                            Node::Puncture(start.puncture)
                        } else {
                            node(ci, s - 1)
                        };
                        let to = if s == n {
                            Node::Puncture(end.puncture)
                        } else {
                            node(ci, s)
                        };
                        chords.push(Chord {
                            region,
                            from,
                            to,
                            comp: ci,
                            segment: s,
                        });
                        region = region.other();
                    }
                }
                Component::Closed { .. } => {
                    for s in 0..n {
                        let region = if s % 2 == 0 { Region::Upper } else { Region::Lower };
                        let from = node(ci, (s + n - 1) % n);
                        chords.push(Chord {
                            region,
                            from,
                            to: node(ci, s),
                            comp: ci,
                            segment: s,
                        });
                    }
                }
            }
        }
        Embedding { edges, index, chords }
    }

    pub fn edge_count(&self, e: Edge) -> usize {
        self.edges[e.index() as usize - 1].len()
    }
}

/// Position of a node on the boundary circle of either hexagon, as a
/// fraction-free key: punctures at even ticks, edge points in between.
pub fn circle_key(n: Node) -> (u8, usize) {
    match n {
        Node::Puncture(p) => (2 * (p.index() - 1), 0),
        Node::Point { edge, index } => (2 * (edge.index() - 1) + 1, index),
    }
}

/// Whether two chords in the same hexagon cross.
pub fn chords_cross(a: &Chord, b: &Chord) -> bool {
    if a.region != b.region {
        return false;
    }
    let (a0, a1) = order(circle_key(a.from), circle_key(a.to));
    let (b0, b1) = order(circle_key(b.from), circle_key(b.to));
    if a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1 {
        return false;
    }
    let inside = |x: (u8, usize)| a0 < x && x < a1;
    inside(b0) != inside(b1)
}

fn order<T: Ord>(x: T, y: T) -> (T, T) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}
