//! A check for bridge arcs of the trivial tangle that does not go through
//! replacement or twisting. The complement of the trivial tangle has free
//! fundamental group on the meridians `m1, m2, m3` of its strands, and
//! strand `i` lies just under the core edge of `E_i`. Reading an arc from
//! its upper germs, each crossing of a core edge contributes a meridian.
//! The arc is a bridge arc for strand `i` when it joins the two ends of
//! that strand and its reduced meridian word is a power of `m_i`.

use crate::curve::{ArcSystem, Component, Letter};

/// The reduced meridian word of a path: `+i` for `m_i`, `-i` for its
/// inverse. Crossing a core edge downwards gives the inverse meridian.
pub fn meridian_word(w: &[Letter]) -> Vec<i8> {
    let mut out: Vec<i8> = Vec::new();
    for &x in w {
        let k = x.unsigned_abs();
        if k % 2 == 0 {
            continue;
        }
        let g = (k as i8 + 1) / 2;
        let m = if x > 0 { -g } else { g };
        if out.last() == Some(&-m) {
            out.pop();
        } else {
            out.push(m);
        }
    }
    out
}

pub fn is_epsilon_bridge_arc(c: &Component) -> bool {
    let Some((p, q)) = c.endpoints() else {
        return false;
    };
    if p.disk() != q.disk() {
        return false;
    }
    let own = p.disk().slot() as i8 + 1;
    meridian_word(&c.upper_germ_word()).iter().all(|m| m.abs() == own)
}

/// Whether every arc of the system is a bridge arc of the trivial tangle.
pub fn is_epsilon_bridge_system(s: &ArcSystem) -> bool {
    s.arcs().all(is_epsilon_bridge_arc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::straight_bridge_arcs;
    use crate::mapping::{apply_word, parse_word};

    #[test]
    fn straight_arcs_are_bridge_arcs() {
        assert!(is_epsilon_bridge_system(&straight_bridge_arcs()));
    }

    #[test]
    fn meridians_cancel() {
        assert_eq!(meridian_word(&[1, 2, -1, 3]), vec![-2]);
        assert_eq!(meridian_word(&[4, 6]), Vec::<i8>::new());
    }

    #[test]
    fn full_twist_across_disks_is_not_trivial() {
        let s = apply_word(&straight_bridge_arcs(), &parse_word("D1^2").unwrap());
        assert!(!is_epsilon_bridge_system(&s));
        let t = apply_word(&straight_bridge_arcs(), &parse_word("D3 * (D1*D2^-1)^-1 * H2").unwrap());
        assert!(is_epsilon_bridge_system(&t));
    }
}
