//! The standard drawing of a multicurve from its parameters.
//!
//! Every crossing with `∂E_i` is pushed into the window (the upper half of
//! `∂E_i`). Read from left to right, the window holds four blocks: arcs of
//! `P` running to `∂E_{i-1}`, the first ends of the waves, arcs running to
//! `∂E_{i+1}`, and the second ends of the waves. Arcs to a neighbour cross
//! no edge. A wave at `E_i` drops through the gap between the other two
//! disks and comes back up through the gap just right of `E_i`.
//!
//! Inside `E_i` the `2p` window points are joined in two nested families:
//! the first `2q` points by arcs around the left puncture, the rest by
//! arcs around the right puncture. The half twist on `E_i` then moves this
//! untwisted pattern to the one with twist `t`.

use super::weights::PantsWeights;
use crate::curve::{Component, Label, Letter};
use crate::surface::Disk;

#[derive(Clone, Debug)]
struct Link {
    to: (usize, usize),
    letters: Vec<Letter>,
}

fn inv(w: &[Letter]) -> Vec<Letter> {
    crate::curve::word::inverse(w)
}

/// Closed words of the untwisted pattern with the given weights and
/// left-puncture counts `q`.
pub(crate) fn untwisted_words(w: &PantsWeights, q: [u64; 3]) -> Vec<Vec<Letter>> {
    let counts = w.boundary_counts();
    let sizes: Vec<usize> = counts.iter().map(|&c| c as usize).collect();
    let mut plink: Vec<Vec<Option<Link>>> = sizes.iter().map(|&n| vec![None; n]).collect();
    let mut elink: Vec<Vec<Option<Link>>> = sizes.iter().map(|&n| vec![None; n]).collect();

    // Block offsets in each window.
    let block = |i: usize| {
        let prev = w.get(i, (i + 2) % 3) as usize;
        let waves = w.get(i, i) as usize;
        let next = w.get(i, (i + 1) % 3) as usize;
        (0, prev, prev + waves, prev + waves + next, waves, next)
    };
    for d in Disk::ALL {
        let i = d.slot();
        let j = d.next().slot();
        let (_, x0, y0, z0, waves, next) = block(i);
        // Arcs to the next disk: innermost pairs the rightmost with the
        // leftmost point of the neighbour's first block.
        for m in 0..next {
            let a = (i, y0 + m);
            let b = (j, next - 1 - m);
            plink[a.0][a.1] = Some(Link { to: b, letters: vec![] });
            plink[b.0][b.1] = Some(Link { to: a, letters: vec![] });
        }
        let down = d.next().right_edge().index() as Letter;
        let up = d.right_edge().index() as Letter;
        let go = vec![down, -up];
        for m in 0..waves {
            let a = (i, x0 + m);
            let b = (i, z0 + waves - 1 - m);
            plink[a.0][a.1] = Some(Link {
                to: b,
                letters: go.clone(),
            });
            plink[b.0][b.1] = Some(Link {
                to: a,
                letters: inv(&go),
            });
        }
    }
    for d in Disk::ALL {
        let i = d.slot();
        let n = sizes[i];
        let k = 2 * q[i] as usize;
        let left = vec![d.left_edge().index() as Letter, -(d.core().index() as Letter)];
        let right = vec![d.core().index() as Letter, -(d.right_edge().index() as Letter)];
        for m in 0..k / 2 {
            let (a, b) = ((i, m), (i, k - 1 - m));
            elink[i][a.1] = Some(Link {
                to: b,
                letters: left.clone(),
            });
            elink[i][b.1] = Some(Link {
                to: a,
                letters: inv(&left),
            });
        }
        for m in 0..(n - k) / 2 {
            let (a, b) = ((i, k + m), (i, n - 1 - m));
            elink[i][a.1] = Some(Link {
                to: b,
                letters: right.clone(),
            });
            elink[i][b.1] = Some(Link {
                to: a,
                letters: inv(&right),
            });
        }
    }

    let mut seen: Vec<Vec<bool>> = sizes.iter().map(|&n| vec![false; n]).collect();
    let mut out = Vec::new();
    for i in 0..3 {
        for s in 0..sizes[i] {
            if seen[i][s] {
                continue;
            }
            let mut word = Vec::new();
            let mut at = (i, s);
            loop {
                seen[at.0][at.1] = true;
                let p = plink[at.0][at.1].as_ref().expect("every window point has a pants arc");
                word.extend_from_slice(&p.letters);
                let mid = p.to;
                seen[mid.0][mid.1] = true;
                let e = elink[mid.0][mid.1]
                    .as_ref()
                    .expect("every window point has an inner arc");
                word.extend_from_slice(&e.letters);
                at = e.to;
                if at == (i, s) {
                    break;
                }
            }
            out.push(word);
        }
    }
    out
}

pub(crate) fn closed(words: Vec<Vec<Letter>>) -> Vec<Component> {
    words
        .into_iter()
        .enumerate()
        .map(|(n, w)| Component::Closed {
            label: Label::Curve(n as u32),
            crossings: w,
        })
        .collect()
}
