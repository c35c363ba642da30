//! The curves `∂E_i` drawn on top of a system in minimal position.
//!
//! In the drawing, `∂E_i` is a pair of chords (one per hexagon) joining a
//! slot on its left edge to a slot on its right edge. Everything on the
//! left edge past the left slot, everything on the right edge before the
//! right slot, the core edge and the two punctures of `E_i` lie inside.
//! The slots are chosen to minimise the number of chords that change
//! sides, which is the geometric intersection number.

use super::component::Component;
use super::embedding::{Embedding, Node};
use super::word::Letter;
use super::ArcSystem;
use crate::error::{Result, TangleError};
use crate::surface::{Disk, Region};

/// A point where a component meets some `∂E_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Event {
    pub disk: Disk,
    pub comp: usize,
    /// The segment of the component the crossing lies on.
    pub segment: usize,
    /// Whether the component enters `E_i` here, following its word.
    pub entering: bool,
    pub region: Region,
    /// Position in the cyclic order along `∂E_i`.
    pub position: usize,
}

/// A maximal subarc of a component between events (or ends).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub comp: usize,
    /// `None` for the pants `P`, otherwise the disk the piece lies in.
    pub inside: Option<Disk>,
    pub start: Option<usize>,
    pub end: Option<usize>,
    pub letters: Vec<Letter>,
}

type KeyedEvent = (Region, (u8, usize), usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlay {
    pub embedding: Embedding,
    /// `(left slot, right slot)` per disk.
    pub slots: [(usize, usize); 3],
    pub events: Vec<Event>,
    /// Event ids in cyclic order along each `∂E_i`: the upper chord from
    /// the left foot to the right foot, then the lower chord back.
    pub boundary: [Vec<usize>; 3],
    /// Event ids of each component in the order met along its word.
    pub by_comp: Vec<Vec<usize>>,
}

/// Which side of `∂E_i` a node lies on, for slots `(l, r)`.
fn inside(d: Disk, l: usize, r: usize, n: Node) -> bool {
    match n {
        Node::Puncture(p) => p.disk() == d,
        Node::Point { edge, index } => {
            if edge == d.core() {
                true
            } else if edge == d.left_edge() {
                index >= l
            } else if edge == d.right_edge() {
                index < r
            } else {
                false
            }
        }
    }
}

/// Order of an inside node along the span from the left foot.
fn span_key(d: Disk, n: Node) -> (u8, usize) {
    match n {
        Node::Puncture(p) => (if p == d.punctures().0 { 1 } else { 3 }, 0),
        Node::Point { edge, index } => {
            if edge == d.left_edge() {
                (0, index)
            } else if edge == d.core() {
                (2, index)
            } else {
                (4, index)
            }
        }
    }
}

enum End {
    FixedIn,
    FixedOut,
    Left(usize),
    Right(usize),
}

fn classify(d: Disk, n: Node) -> End {
    match n {
        Node::Point { edge, index } if edge == d.left_edge() => End::Left(index),
        Node::Point { edge, index } if edge == d.right_edge() => End::Right(index),
        _ if inside(d, 0, 0, n) => End::FixedIn,
        _ => End::FixedOut,
    }
}

/// Minimises the crossing count over all slot pairs, preferring the
/// innermost placement.
fn best_slots(emb: &Embedding, d: Disk) -> (usize, usize, usize) {
    let nl = emb.edge_count(d.left_edge());
    let nr = emb.edge_count(d.right_edge());
    let mut constant = 0usize;
    // left_out[u]: chords whose left end at u is inside iff u >= l and
    // whose other end is outside; left_in: other end inside.
    let mut left_out = vec![0i64; nl + 1];
    let mut left_in = vec![0i64; nl + 1];
    let mut right_out = vec![0i64; nr + 1];
    let mut right_in = vec![0i64; nr + 1];
    let mut cross: Vec<(usize, usize)> = Vec::new();
    for ch in &emb.chords {
        match (classify(d, ch.from), classify(d, ch.to)) {
            (End::FixedIn, End::FixedOut) | (End::FixedOut, End::FixedIn) => constant += 1,
            (End::FixedIn, End::FixedIn) | (End::FixedOut, End::FixedOut) => {}
            (End::Left(u), End::FixedOut) | (End::FixedOut, End::Left(u)) => left_out[u] += 1,
            (End::Left(u), End::FixedIn) | (End::FixedIn, End::Left(u)) => left_in[u] += 1,
            (End::Right(v), End::FixedOut) | (End::FixedOut, End::Right(v)) => right_out[v] += 1,
            (End::Right(v), End::FixedIn) | (End::FixedIn, End::Right(v)) => right_in[v] += 1,
            (End::Left(u), End::Right(v)) | (End::Right(v), End::Left(u)) => cross.push((u, v)),
            (End::Left(_), End::Left(_)) | (End::Right(_), End::Right(_)) => {}
        }
    }
    // fl[l] = #{left_out u >= l} + #{left_in u < l}
    let mut fl = vec![0i64; nl + 1];
    let total_out: i64 = left_out.iter().sum();
    let (mut below_out, mut below_in) = (0i64, 0i64);
    for l in 0..=nl {
        fl[l] = (total_out - below_out) + below_in;
        if l < nl {
            below_out += left_out[l];
            below_in += left_in[l];
        }
    }
    // fr[r] = #{right_out v < r} + #{right_in v >= r}
    let mut fr = vec![0i64; nr + 1];
    let total_in: i64 = right_in.iter().sum();
    let (mut b_out, mut b_in) = (0i64, 0i64);
    for r in 0..=nr {
        fr[r] = b_out + (total_in - b_in);
        if r < nr {
            b_out += right_out[r];
            b_in += right_in[r];
        }
    }
    // Coupled chords: cost [u >= l] xor [v < r]. Once l passes u the chord
    // costs 1 for r <= v instead of r > v.
    cross.sort();
    let mut base = fr.clone();
    let mut below = 0i64;
    let mut at = vec![0i64; nr + 1];
    for &(_, v) in &cross {
        at[v] += 1;
    }
    for (r, slot) in base.iter_mut().enumerate() {
        *slot -= below;
        below += at[r];
    }
    let mut tree = MinTree::new(&base);
    let mut ge_l = cross.len() as i64;
    let mut next = 0usize;
    let mut best = (i64::MAX, 0usize, 0usize);
    for (l, &left) in fl.iter().enumerate().take(nl + 1) {
        while next < cross.len() && cross[next].0 < l {
            tree.add(cross[next].1 + 1, nr + 1, 2);
            ge_l -= 1;
            next += 1;
        }
        let (m, r) = tree.min();
        let c = left + ge_l + m;
        if c <= best.0 {
            best = (c, l, r);
        }
    }
    ((best.0 + constant as i64) as usize, best.1, best.2)
}

/// Range add with leftmost minimum.
struct MinTree {
    size: usize,
    min: Vec<(i64, usize)>,
    lazy: Vec<i64>,
}

impl MinTree {
    fn new(values: &[i64]) -> MinTree {
        let size = values.len().next_power_of_two();
        let mut min = vec![(i64::MAX / 2, usize::MAX); 2 * size];
        for (i, v) in values.iter().enumerate() {
            min[size + i] = (*v, i);
        }
        for n in (1..size).rev() {
            min[n] = min[2 * n].min(min[2 * n + 1]);
        }
        MinTree {
            size,
            min,
            lazy: vec![0; 2 * size],
        }
    }

    fn add(&mut self, lo: usize, hi: usize, delta: i64) {
        self.add_at(1, 0, self.size, lo, hi, delta);
    }

    fn add_at(&mut self, n: usize, a: usize, b: usize, lo: usize, hi: usize, delta: i64) {
        if hi <= a || b <= lo {
            return;
        }
        if lo <= a && b <= hi {
            self.min[n].0 += delta;
            self.lazy[n] += delta;
            return;
        }
        let m = (a + b) / 2;
        self.add_at(2 * n, a, m, lo, hi, delta);
        self.add_at(2 * n + 1, m, b, lo, hi, delta);
        let (x, y) = (self.min[2 * n], self.min[2 * n + 1]);
        let best = x.min(y);
        self.min[n] = (best.0 + self.lazy[n], best.1);
    }

    fn min(&self) -> (i64, usize) {
        self.min[1]
    }
}

impl Overlay {
    pub fn build(sys: &ArcSystem) -> Result<Overlay> {
        let comps: &[Component] = &sys.components;
        let embedding = Embedding::build(comps);
        let mut slots = [(0usize, 0usize); 3];
        for d in Disk::ALL {
            let (_, l, r) = best_slots(&embedding, d);
            slots[d.slot()] = (l, r);
        }
        for d in Disk::ALL {
            let (_, r) = slots[d.slot()];
            let (l_next, _) = slots[d.next().slot()];
            if r > l_next {
                return Err(TangleError::PaperViolation(format!(
                    "boundaries of {d} and {} overlap on {}",
                    d.next(),
                    d.right_edge()
                )));
            }
        }
        let span_of = |n: Node| {
            Disk::ALL.into_iter().find(|d| {
                let (l, r) = slots[d.slot()];
                inside(*d, l, r, n)
            })
        };
        let mut events: Vec<Event> = Vec::new();
        let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
        let mut keyed: [Vec<KeyedEvent>; 3] = Default::default();
        for ch in &embedding.chords {
            let (a, b) = (span_of(ch.from), span_of(ch.to));
            if a == b {
                continue;
            }
            if let Some(d) = a {
                let id = events.len();
                events.push(Event {
                    disk: d,
                    comp: ch.comp,
                    segment: ch.segment,
                    entering: false,
                    region: ch.region,
                    position: 0,
                });
                keyed[d.slot()].push((ch.region, span_key(d, ch.from), id));
                by_comp[ch.comp].push(id);
            }
            if let Some(d) = b {
                let id = events.len();
                events.push(Event {
                    disk: d,
                    comp: ch.comp,
                    segment: ch.segment,
                    entering: true,
                    region: ch.region,
                    position: 0,
                });
                keyed[d.slot()].push((ch.region, span_key(d, ch.to), id));
                by_comp[ch.comp].push(id);
            }
        }
        let mut boundary: [Vec<usize>; 3] = Default::default();
        for d in Disk::ALL {
            let list = &mut keyed[d.slot()];
            let mut upper: Vec<_> = list.iter().filter(|e| e.0 == Region::Upper).collect();
            let mut lower: Vec<_> = list.iter().filter(|e| e.0 == Region::Lower).collect();
            upper.sort_by_key(|e| e.1);
            lower.sort_by_key(|e| std::cmp::Reverse(e.1));
            boundary[d.slot()] = upper.iter().chain(lower.iter()).map(|e| e.2).collect();
            for (pos, &id) in boundary[d.slot()].iter().enumerate() {
                events[id].position = pos;
            }
        }
        Ok(Overlay {
            embedding,
            slots,
            events,
            boundary,
            by_comp,
        })
    }

    pub fn count(&self, d: Disk) -> usize {
        self.boundary[d.slot()].len()
    }

    /// Cuts every component at its events.
    pub fn pieces(&self, sys: &ArcSystem) -> Vec<Piece> {
        let mut out = Vec::new();
        for (ci, c) in sys.components.iter().enumerate() {
            let w = c.crossings();
            let evs = &self.by_comp[ci];
            let side_at_start = |_: ()| -> Option<Disk> {
                let first = self.embedding.chords.iter().find(|ch| ch.comp == ci).map(|ch| ch.from);
                first.and_then(|n| {
                    Disk::ALL.into_iter().find(|d| {
                        let (l, r) = self.slots[d.slot()];
                        inside(*d, l, r, n)
                    })
                })
            };
            match c {
                Component::Arc { .. } => {
                    let mut inside_now = side_at_start(());
                    let mut start = None;
                    let mut from_letter = 0usize;
                    for &id in evs {
                        let e = self.events[id];
                        out.push(Piece {
                            comp: ci,
                            inside: inside_now,
                            start,
                            end: Some(id),
                            letters: w[from_letter..e.segment].to_vec(),
                        });
                        inside_now = if e.entering { Some(e.disk) } else { None };
                        start = Some(id);
                        from_letter = e.segment;
                    }
                    out.push(Piece {
                        comp: ci,
                        inside: inside_now,
                        start,
                        end: None,
                        letters: w[from_letter..].to_vec(),
                    });
                }
                Component::Closed { .. } => {
                    if evs.is_empty() {
                        out.push(Piece {
                            comp: ci,
                            inside: side_at_start(()),
                            start: None,
                            end: None,
                            letters: w.to_vec(),
                        });
                        continue;
                    }
                    let n = evs.len();
                    for k in 0..n {
                        let a = self.events[evs[k]];
                        let b = self.events[evs[(k + 1) % n]];
                        let letters: Vec<Letter> = if k + 1 < n {
                            w[a.segment..b.segment].to_vec()
                        } else {
                            w[a.segment..].iter().chain(&w[..b.segment]).copied().collect()
                        };
                        out.push(Piece {
                            comp: ci,
                            inside: if a.entering { Some(a.disk) } else { None },
                            start: Some(evs[k]),
                            end: Some(evs[(k + 1) % n]),
                            letters,
                        });
                    }
                }
            }
        }
        out
    }
}
