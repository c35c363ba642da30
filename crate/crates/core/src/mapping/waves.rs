//! Wave reduction. While some arc has a wave, apply one of `D1*D2^-1`, its
//! inverse, `D3`, `D3^-1`, after some half twists on the disks, so that the
//! total number of crossings with `∂E1 ∪ ∂E2 ∪ ∂E3` drops. Half twists
//! keep that total, so they only change where the move acts. Candidates
//! are tried by the size of the twist part first and the move order second.

use serde::{Deserialize, Serialize};

use super::{apply_word, Generator, Term, TwistWord};
use crate::curve::ArcSystem;
use crate::detector::has_wave;
use crate::error::{Result, TangleError};

/// Largest total number of half twists tried before a move.
pub const MAX_TWIST_OFFSET: i32 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WaveStep {
    pub word: String,
    pub before: usize,
    pub after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WaveReport {
    pub steps: Vec<WaveStep>,
    pub result: ArcSystem,
}

/// The four moves, in the order they are tried.
pub fn wave_moves() -> Vec<TwistWord> {
    let d12 = TwistWord {
        terms: vec![Term::Atom(Generator::D1, 1), Term::Atom(Generator::D2, -1)],
    };
    let d3 = TwistWord::atom(Generator::D3, 1);
    vec![d12.clone(), d12.inverse(), d3.clone(), d3.inverse()]
}

pub fn boundary_total(s: &ArcSystem) -> Result<usize> {
    Ok(s.disk_intersections()?.iter().sum())
}

/// Twist exponents `(a, b, c)` with `|a| + |b| + |c| = r`, in a fixed order.
fn offsets(r: i32) -> Vec<[i32; 3]> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -(r - a.abs())..=(r - a.abs()) {
            let c = r - a.abs() - b.abs();
            out.push([a, b, c]);
            if c != 0 {
                out.push([a, b, -c]);
            }
        }
    }
    out
}

fn candidate(m: &TwistWord, h: [i32; 3]) -> TwistWord {
    let mut terms = m.terms.clone();
    for (g, n) in [Generator::H1, Generator::H2, Generator::H3].into_iter().zip(h) {
        if n != 0 {
            terms.push(Term::Atom(g, n));
        }
    }
    TwistWord { terms }
}

pub fn reduce_waves_by_twists(s: &ArcSystem, max_steps: usize) -> Result<WaveReport> {
    let mut cur = s.reduce_to_minimal_position();
    let mut steps = Vec::new();
    let moves = wave_moves();
    'steps: while has_wave(&cur)? {
        if steps.len() >= max_steps {
            return Err(TangleError::StepBudget(max_steps));
        }
        let before = boundary_total(&cur)?;
        for r in 0..=MAX_TWIST_OFFSET {
            let hs = offsets(r);
            for m in &moves {
                for h in &hs {
                    let word = candidate(m, *h);
                    let next = apply_word(&cur, &word).reduce_to_minimal_position();
                    let after = boundary_total(&next)?;
                    if after < before {
                        steps.push(WaveStep {
                            word: word.to_string(),
                            before,
                            after,
                        });
                        cur = next;
                        continue 'steps;
                    }
                }
            }
        }
        return Err(TangleError::PaperViolation(format!(
            "a wave persists at {before} boundary crossings and no move lowers the count"
        )));
    }
    Ok(WaveReport { steps, result: cur })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_cover_the_sphere_once() {
        for r in 0..5 {
            let hs = offsets(r);
            let mut sorted = hs.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), hs.len());
            assert!(hs.iter().all(|h| h.iter().map(|x| x.abs()).sum::<i32>() == r));
            let expected = if r == 0 { 1 } else { 4 * r * r + 2 } as usize;
            assert_eq!(hs.len(), expected);
        }
    }
}
