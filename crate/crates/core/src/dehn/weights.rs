//! Arc-type weights in the pants `P` from the three intersection numbers.

use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};

/// `x[i][j]` counts the arcs of a multicurve in `P` joining `∂E_{i+1}` to
/// `∂E_{j+1}`; the matrix is symmetric and the diagonal counts waves.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PantsWeights {
    pub x: [[u64; 3]; 3],
}

impl PantsWeights {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.x[i][j]
    }

    fn set(&mut self, i: usize, j: usize, v: u64) {
        self.x[i][j] = v;
        self.x[j][i] = v;
    }

    /// Endpoints on each boundary: `2 x_ii + x_ij + x_ik`.
    pub fn boundary_counts(&self) -> [u64; 3] {
        let mut out = [0; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = (0..3)
                .map(|j| if i == j { 2 * self.x[i][i] } else { self.x[i][j] })
                .sum();
        }
        out
    }
}

pub fn weights_from_intersections(counts: [u64; 3]) -> Result<PantsWeights> {
    if counts.iter().sum::<u64>() % 2 == 1 {
        return Err(TangleError::Parity(counts));
    }
    let mut w = PantsWeights::default();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        if counts[i] > counts[j] + counts[k] {
            w.set(i, i, (counts[i] - counts[j] - counts[k]) / 2);
            w.set(i, j, counts[j]);
            w.set(i, k, counts[k]);
            return Ok(w);
        }
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        w.set(i, j, (counts[i] + counts[j] - counts[k]) / 2);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn balanced_counts_give_a_triangle() {
        let w = weights_from_intersections([2, 2, 2]).unwrap();
        assert_eq!((w.get(0, 1), w.get(0, 2), w.get(1, 2)), (1, 1, 1));
        assert_eq!(w.get(0, 0), 0);
    }

    #[test]
    fn dominant_count_gives_waves() {
        let w = weights_from_intersections([6, 2, 2]).unwrap();
        assert_eq!((w.get(0, 0), w.get(0, 1), w.get(0, 2), w.get(1, 2)), (1, 2, 2, 0));
    }

    #[test]
    fn odd_total_is_rejected() {
        assert_eq!(
            weights_from_intersections([3, 2, 2]),
            Err(TangleError::Parity([3, 2, 2]))
        );
    }

    #[test]
    fn weights_reproduce_the_counts() {
        for a in 0..8u64 {
            for b in 0..8 {
                for c in 0..8 {
                    if (a + b + c) % 2 == 0 {
                        let w = weights_from_intersections([a, b, c]).unwrap();
                        assert_eq!(w.boundary_counts(), [a, b, c]);
                    }
                }
            }
        }
    }
}
