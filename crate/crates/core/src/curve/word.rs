//! Crossing words and their reduction.
//!
//! A path in general position with the line is recorded by the sequence of
//! edges it crosses. The letter `+k` crosses `a_k` from the upper region to
//! the lower one, `-k` crosses back. Free reduction removes bigons with the
//! line, and the end moves slide a first or last crossing across the
//! adjacent puncture.

use crate::surface::{wrap, Edge, Puncture, Region};

pub type Letter = i8;

pub fn edge_of(x: Letter) -> Edge {
    Edge::of(x.unsigned_abs() as i32)
}

pub fn inverse(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|x| -x).collect()
}

pub fn free_reduce(w: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Free and cyclic reduction of a closed word.
pub fn cyclic_reduce(w: &[Letter]) -> Vec<Letter> {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// Start of the lexicographically least rotation.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            std::cmp::Ordering::Equal => k += 1,
            std::cmp::Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            std::cmp::Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// The least rotation of a cyclic word among those starting with a positive
/// letter, so that the word is read from the upper region.
pub fn least_upper_rotation(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    let alternating = n % 2 == 0 && (0..n).all(|i| (w[i] > 0) != (w[(i + 1) % n] > 0));
    if alternating && n > 0 {
        let first = if w[0] > 0 { 0 } else { 1 };
        let pairs: Vec<(Letter, Letter)> = (0..n / 2)
            .map(|m| (w[(first + 2 * m) % n], w[(first + 2 * m + 1) % n]))
            .collect();
        let s = (first + 2 * least_rotation(&pairs)) % n;
        return w[s..].iter().chain(&w[..s]).copied().collect();
    }
    let mut best: Option<Vec<Letter>> = None;
    for s in (0..n).filter(|&s| w[s] > 0) {
        let cand: Vec<Letter> = w[s..].iter().chain(&w[..s]).copied().collect();
        if best.as_ref().map_or(true, |b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap_or_default()
}

/// Whether an upper-based cyclic word is trivial or encloses one puncture.
pub fn is_inessential_loop(w: &[Letter]) -> bool {
    match w {
        [] => true,
        [a, b] => {
            let (ea, eb) = (edge_of(*a), edge_of(*b));
            ea != eb && ea.ends().0 == eb.ends().1 || ea != eb && eb.ends().0 == ea.ends().1
        }
        _ => false,
    }
}

/// A loop around `p`, based in the upper region, turning counterclockwise.
pub fn puncture_loop(p: Puncture) -> [Letter; 2] {
    let k = p.index() as i32;
    [wrap(k - 1) as Letter, -(k as Letter)]
}

pub fn region_after(start: Region, len: usize) -> Region {
    if len % 2 == 0 {
        start
    } else {
        start.other()
    }
}

/// Checks that signs alternate as the regions force them to.
pub fn signs_consistent(start: Region, w: &[Letter]) -> bool {
    let mut r = start;
    for &x in w {
        let down = x > 0;
        if down != (r == Region::Upper) {
            return false;
        }
        r = r.other();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction_cancels_nested_pairs() {
        assert_eq!(free_reduce(&[1, -2, 2, -1, 3]), vec![3]);
    }

    #[test]
    fn cyclic_reduction_trims_ends() {
        assert_eq!(cyclic_reduce(&[2, -3, 4, -2]), vec![-3, 4]);
        assert_eq!(cyclic_reduce(&[1, -1]), Vec::<Letter>::new());
    }

    #[test]
    fn rotation_starts_upper() {
        assert_eq!(least_upper_rotation(&[4, -6, 2, -3]), vec![2, -3, 4, -6]);
    }

    #[test]
    fn peripheral_loops_detected() {
        assert!(is_inessential_loop(&[6, -1]));
        assert!(is_inessential_loop(&[1, -6]));
        assert!(!is_inessential_loop(&[6, -2]));
        let l = puncture_loop(Puncture::new(1).unwrap());
        assert!(is_inessential_loop(&l));
    }

    fn naive_upper_rotation(w: &[Letter]) -> Vec<Letter> {
        (0..w.len())
            .filter(|&s| w[s] > 0)
            .map(|s| w[s..].iter().chain(&w[..s]).copied().collect::<Vec<_>>())
            .min()
            .unwrap_or_default()
    }

    proptest::proptest! {
        #[test]
        fn fast_rotation_agrees_with_scan(pairs in proptest::collection::vec((1i8..=2, 1i8..=2), 1..12)) {
            let w: Vec<Letter> = pairs.iter().flat_map(|&(a, b)| [a, -b]).collect();
            proptest::prop_assert_eq!(least_upper_rotation(&w), naive_upper_rotation(&w));
        }
    }
}
