//! Seeded test corpora: images of the straight arcs under words in the
//! generators that preserve the trivial tangle, arcs with the wrong
//! pairing, and dense systems that are not straight.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::straight_bridge_arcs;
use crate::detector::{is_straight_collection, make_dense, Reason, Verdict};
use crate::error::Result;
use crate::mapping::{apply_word, epsilon_preserving_generators, Generator, TwistWord};
use crate::schema::{Base, Case, Provenance};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random word of the given length in the generators that
/// preserve the trivial tangle and their inverses.
pub fn random_epsilon_word(rng: &mut impl Rng, len: usize) -> TwistWord {
    let gens = epsilon_preserving_generators();
    let mut w = TwistWord::identity();
    for _ in 0..len {
        w = w.then(gens[rng.gen_range(0..gens.len())].clone());
    }
    w
}

/// Every word of exactly `len` letters, in generator order.
pub fn all_epsilon_words(len: usize) -> Vec<TwistWord> {
    let gens = epsilon_preserving_generators();
    let mut out = vec![TwistWord::identity()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|w| gens.iter().map(move |g| w.clone().then(g.clone())))
            .collect();
    }
    out
}

/// A word that moves one end of a strand into another disk, wrapped in
/// trivial-tangle moves.
pub fn random_mismatch_word(rng: &mut impl Rng, max_len: usize) -> TwistWord {
    let swap = [
        (Generator::D1, 1),
        (Generator::D1, -1),
        (Generator::D2, 1),
        (Generator::D2, -1),
    ];
    let (g, n) = swap[rng.gen_range(0..swap.len())];
    wrapped(rng, max_len, TwistWord::atom(g, n))
}

fn wrapped(rng: &mut impl Rng, max_len: usize, core: TwistWord) -> TwistWord {
    let (a, b) = (rng.gen_range(0..=max_len / 2), rng.gen_range(0..=max_len / 2));
    let outer = random_epsilon_word(rng, a);
    let inner = random_epsilon_word(rng, b);
    outer.then(core).then(inner)
}

/// A word with a full twist about a curve around punctures of two
/// different disks, which knots the strands together.
pub fn random_clasp_word(rng: &mut impl Rng, max_len: usize) -> TwistWord {
    let twist = [
        (Generator::D1, 2),
        (Generator::D1, -2),
        (Generator::D2, 2),
        (Generator::D2, -2),
    ];
    let (g, n) = twist[rng.gen_range(0..twist.len())];
    wrapped(rng, max_len, TwistWord::atom(g, n))
}

/// `count` cases cycling through trivial instances, pairing mismatches and
/// dense systems that are not straight. Deterministic in `seed`.
pub fn generate(seed: u64, count: usize, max_len: usize) -> Result<Vec<Case>> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let case = match n % 4 {
            0 | 1 => {
                let len = rng.gen_range(0..=max_len);
                Case {
                    name: format!("eps-{n:04}"),
                    base: Some(Base::Straight),
                    word: Some(random_epsilon_word(&mut rng, len).to_string()),
                    system: None,
                    expected: Some(Verdict::Trivial(Reason::StraightArcs)),
                    provenance: Provenance::EpsilonWord,
                }
            }
            2 => Case {
                name: format!("mismatch-{n:04}"),
                base: Some(Base::Straight),
                word: Some(random_mismatch_word(&mut rng, max_len).to_string()),
                system: None,
                expected: Some(Verdict::NonTrivial(Reason::PairingMismatch)),
                provenance: Provenance::PairingMismatch,
            },
            _ => dense_not_straight(&mut rng, n, max_len.min(6))?,
        };
        out.push(case);
    }
    Ok(out)
}

fn dense_not_straight(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Result<Case> {
    loop {
        let w = random_clasp_word(rng, max_len);
        let (dense, _) = make_dense(&apply_word(&straight_bridge_arcs(), &w), usize::MAX)?;
        if !is_straight_collection(&dense)? {
            return Ok(Case {
                name: format!("clasp-{n:04}"),
                base: None,
                word: None,
                system: Some(dense),
                expected: Some(Verdict::NonTrivial(Reason::DenseNotStraight)),
                provenance: Provenance::DenseNotStraight,
            });
        }
    }
}
