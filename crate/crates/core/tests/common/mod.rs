#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tangle_core::curve::{disk_boundary, Letter, Overlay};
use tangle_core::dehn::DehnParams;
use tangle_core::mapping::{apply_word, Generator, Term, TwistWord};
use tangle_core::surface::wrap;
use tangle_core::*;

pub fn puncture(k: i32) -> Puncture {
    Puncture::new(wrap(k)).unwrap()
}

/// Relabels by turning the circle `k` steps: `p_i -> p_{i+k}`, `a_i -> a_{i+k}`.
pub fn rotate(s: &ArcSystem, k: i32) -> ArcSystem {
    let letter = |x: Letter| {
        let e = wrap(x.unsigned_abs() as i32 + k) as Letter;
        if x > 0 {
            e
        } else {
            -e
        }
    };
    let components = s
        .components
        .iter()
        .map(|c| match c {
            Component::Arc {
                label,
                start,
                crossings,
                end,
            } => Component::Arc {
                label: *label,
                start: End::new(puncture(start.puncture.index() as i32 + k), start.region),
                crossings: crossings.iter().map(|x| letter(*x)).collect(),
                end: End::new(puncture(end.puncture.index() as i32 + k), end.region),
            },
            Component::Closed { label, crossings } => Component::Closed {
                label: *label,
                crossings: crossings.iter().map(|x| letter(*x)).collect(),
            },
        })
        .collect();
    ArcSystem { components }
}

fn boundary_walk(upper: &[bool], k: usize, left: Letter, right: Letter) -> Vec<Letter> {
    let n = upper.len();
    if k + 1 < n {
        if upper[k] && !upper[k + 1] {
            vec![right]
        } else {
            vec![]
        }
    } else {
        match (upper[k], upper[0]) {
            (false, true) => vec![-left],
            (true, true) => vec![right, -left],
            (false, false) => vec![-left, right],
            (true, false) => panic!("upper points come first"),
        }
    }
}

/// The full twist about `∂E1`, made by splicing a copy of `∂E1` into every
/// component at each point where it crosses `∂E1`.
pub fn full_twist_about_e1(s: &ArcSystem, sign: i32) -> ArcSystem {
    let s = s.reduce_to_minimal_position();
    let o = Overlay::build(&s).unwrap();
    let d = Disk::ALL[0];
    let list = &o.boundary[0];
    let upper: Vec<bool> = list.iter().map(|id| o.events[*id].region == Region::Upper).collect();
    let (left, right) = (d.left_edge().index() as Letter, d.right_edge().index() as Letter);
    let n = list.len();
    let around = |k: usize| -> Vec<Letter> {
        (0..n)
            .flat_map(|m| boundary_walk(&upper, (k + m) % n, left, right))
            .collect()
    };
    let mut components = Vec::new();
    for (ci, c) in s.components.iter().enumerate() {
        let mut events: Vec<_> = o.by_comp[ci]
            .iter()
            .map(|id| o.events[*id])
            .filter(|e| e.disk == d)
            .collect();
        events.sort_by_key(|e| std::cmp::Reverse(e.segment));
        let mut w = c.crossings().to_vec();
        for e in events {
            let mut lp = around(e.position);
            if e.entering != (sign > 0) {
                lp = lp.iter().rev().map(|x| -x).collect();
            }
            w.splice(e.segment..e.segment, lp);
        }
        components.push(match c {
            Component::Arc { label, start, end, .. } => Component::Arc {
                label: *label,
                start: *start,
                crossings: w,
                end: *end,
            },
            Component::Closed { label, .. } => Component::Closed {
                label: *label,
                crossings: w,
            },
        });
    }
    ArcSystem { components }.reduce_to_minimal_position()
}

/// The full twist about the boundary of a neighbourhood of `a_j`.
pub fn full_twist_about_edge(s: &ArcSystem, j: u8, sign: i32) -> ArcSystem {
    let k = j as i32 - 1;
    rotate(&full_twist_about_e1(&rotate(s, -k), sign), k)
}

/// The full twist about the curve supporting `g`: the generator's twist
/// sequence is `h⁻¹, σ, h`, so the full twist is `h⁻¹, σ², h` with `σ²`
/// made by surgery.
pub fn full_twist_of(g: Generator, s: &ArcSystem, sign: i32) -> ArcSystem {
    let seq = g.edge_twists();
    let mid = seq.len() / 2;
    let mut cur = s.clone();
    for t in &seq[..mid] {
        cur = cur.apply_twist(*t);
    }
    let core = seq[mid];
    let sign = if core.ccw { sign } else { -sign };
    cur = full_twist_about_edge(&cur, core.edge.index(), sign);
    for t in &seq[mid + 1..] {
        cur = cur.apply_twist(*t);
    }
    cur.reduce_to_minimal_position()
}

/// Arcs of the system in the pants, counted by the disks they join.
pub fn arc_type_counts(s: &ArcSystem) -> [[u64; 3]; 3] {
    let s = s.reduce_to_minimal_position();
    let o = s.overlay().unwrap();
    let mut x = [[0u64; 3]; 3];
    for p in o.pieces(&s) {
        if p.inside.is_some() {
            continue;
        }
        if let (Some(a), Some(b)) = (p.start, p.end) {
            let (i, j) = (
                o.events[a].disk.index() as usize - 1,
                o.events[b].disk.index() as usize - 1,
            );
            x[i][j] += 1;
            if i != j {
                x[j][i] += 1;
            }
        }
    }
    x
}

pub fn random_word(rng: &mut impl Rng, len: usize) -> TwistWord {
    let mut terms = Vec::new();
    for _ in 0..len {
        let g = Generator::ALL[rng.gen_range(0..6)];
        terms.push(Term::Atom(g, if rng.gen_bool(0.5) { 1 } else { -1 }));
    }
    TwistWord { terms }
}

/// A random image of the straight arcs under any generators.
pub fn random_arcs(rng: &mut impl Rng, max_len: usize) -> ArcSystem {
    let len = rng.gen_range(0..=max_len);
    apply_word(&straight_bridge_arcs(), &random_word(rng, len))
}

/// Disjoint closed curves: neighbourhood boundaries of some arcs of a
/// random arc system, some doubled, plus copies of disk boundaries moved by
/// the same word.
pub fn random_multicurve(rng: &mut impl Rng, max_len: usize) -> ArcSystem {
    let len = rng.gen_range(0..=max_len);
    let w = random_word(rng, len);
    let mut comps = Vec::new();
    let mut label = 0u32;
    for d in Disk::ALL {
        let copies = rng.gen_range(0..=2);
        for _ in 0..copies {
            comps.push(disk_boundary(d, Label::Curve(label)));
            label += 1;
        }
    }
    if comps.is_empty() {
        comps.push(disk_boundary(Disk::ALL[rng.gen_range(0..3)], Label::Curve(0)));
    }
    apply_word(&ArcSystem { components: comps }, &w)
}

pub fn random_params(rng: &mut impl Rng, bound: i64) -> DehnParams {
    let mut d = DehnParams::default();
    for i in 0..3 {
        let p = rng.gen_range(0..=bound) as u64;
        d.p[i] = p;
        if p == 0 {
            d.t[i] = rng.gen_range(0..=bound);
        } else {
            d.q[i] = rng.gen_range(0..p);
            d.t[i] = rng.gen_range(-bound..=bound);
        }
    }
    d
}

fn region_at(c: &Component, i: usize) -> Region {
    let start = match c {
        Component::Arc { start, .. } => start.region,
        Component::Closed { crossings, .. } => {
            if crossings.first().map_or(true, |x| *x > 0) {
                Region::Upper
            } else {
                Region::Lower
            }
        }
    };
    if i % 2 == 0 {
        start
    } else {
        start.other()
    }
}

/// Inserts `k` cancelling pairs at random places.
pub fn with_bigons(rng: &mut impl Rng, c: &Component, k: usize) -> Component {
    let mut c = c.clone();
    for _ in 0..k {
        let n = c.crossings().len();
        let at = rng.gen_range(0..=n);
        let e = rng.gen_range(1..=6) as Letter;
        let x = if region_at(&c, at) == Region::Upper { e } else { -e };
        match &mut c {
            Component::Arc { crossings, .. } | Component::Closed { crossings, .. } => {
                crossings.splice(at..at, [x, -x]);
            }
        }
    }
    c
}

/// Removes cancelling pairs one at a time, picking among the available ones
/// at random, until none is left.
pub fn reduce_randomly(rng: &mut impl Rng, c: &Component) -> Component {
    let mut c = c.clone();
    loop {
        let w = c.crossings();
        let n = w.len();
        let closed = !c.is_arc();
        let mut spots: Vec<usize> = (0..n.saturating_sub(1)).filter(|&i| w[i] == -w[i + 1]).collect();
        if closed && n >= 2 && w[n - 1] == -w[0] {
            spots.push(n - 1);
        }
        let Some(&i) = spots.choose(rng) else {
            return c;
        };
        match &mut c {
            Component::Arc { crossings, .. } | Component::Closed { crossings, .. } => {
                if i + 1 < n {
                    crossings.drain(i..i + 2);
                } else {
                    crossings.pop();
                    crossings.remove(0);
                }
            }
        }
    }
}
