//! The LCM set, its p-local version and the subgroup it generates.
//!
//! `x ∈ LCM(G)` when `o(hy)` divides `lcm(o(h), o(y))` for every `h ∈ ⟨x⟩`
//! and every `y ∈ G`. Quantifying over `h ∈ ⟨x⟩` is the same as quantifying
//! over all powers `xⁿ`, since `⟨x⟩` is finite.

use serde::Serialize;

use crate::arith::{lcm, p_part, prime_divisors};
use crate::error::Result;
use crate::group::{Elem, FiniteGroup};
use crate::structure::is_p_element;
use crate::subgroup::Subgroup;

/// A pair `(h, y)` with `o(hy) ∤ lcm(o(h), o(y))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LcmWitness {
    pub h: Elem,
    pub y: Elem,
    pub order_h: u64,
    pub order_y: u64,
    pub order_hy: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LcmMembership {
    pub x: Elem,
    /// The first failing pair in canonical order; `None` iff `x ∈ LCM(G)`.
    pub failure: Option<LcmWitness>,
}

impl LcmMembership {
    pub fn is_member(&self) -> bool {
        self.failure.is_none()
    }
}

fn divides_lcm(g: &FiniteGroup, h: Elem, y: Elem) -> Option<LcmWitness> {
    let (oh, oy) = (g.order_of(h), g.order_of(y));
    let ohy = g.order_of(g.mul(h, y));
    (lcm(oh, oy) % ohy != 0).then_some(LcmWitness {
        h,
        y,
        order_h: oh,
        order_y: oy,
        order_hy: ohy,
    })
}

/// Exhaustive membership test; the witness is the first failing `(h, y)`
/// with `h` ordered by element index, then `y`.
pub fn lcm_member(g: &FiniteGroup, x: Elem) -> Result<LcmMembership> {
    g.check(x)?;
    let mut powers = g.cyclic_elems(x);
    powers.sort();
    let failure = powers
        .into_iter()
        .find_map(|h| g.elems().find_map(|y| divides_lcm(g, h, y)));
    Ok(LcmMembership { x, failure })
}

// good[h]: o(hy) | lcm(o(h), o(y)) for every y in `against`.
fn good_elements(
    g: &FiniteGroup,
    against: &[Elem],
    candidates: impl Iterator<Item = Elem>,
) -> Vec<bool> {
    let mut good = vec![false; g.order()];
    for h in candidates {
        good[h.index()] = against.iter().all(|&y| divides_lcm(g, h, y).is_none());
    }
    good
}

/// `LCM(G)` in canonical element order.
pub fn lcm_set(g: &FiniteGroup) -> Vec<Elem> {
    let all: Vec<Elem> = g.elems().collect();
    let good = good_elements(g, &all, g.elems());
    g.elems()
        .filter(|&x| g.cyclic_elems(x).iter().all(|h| good[h.index()]))
        .collect()
}

/// `LC(G) = ⟨LCM(G)⟩`.
pub fn lc_subgroup(g: &FiniteGroup) -> Subgroup {
    lc_from_set(g, &lcm_set(g))
}

pub(crate) fn lc_from_set(g: &FiniteGroup, set: &[Elem]) -> Subgroup {
    g.subgroup_from_members_closure(set)
}

/// `LCM_p(G)`: the `p`-elements `x` such that `o(hy) | lcm(o(h), o(y))` for
/// all `h ∈ ⟨x⟩` and all `p`-elements `y`.
pub fn lcm_p_set(g: &FiniteGroup, p: u64) -> Vec<Elem> {
    let p_elems: Vec<Elem> = g.elems().filter(|&y| is_p_element(g, y, p)).collect();
    let good = good_elements(g, &p_elems, p_elems.iter().copied());
    p_elems
        .iter()
        .copied()
        .filter(|&x| g.cyclic_elems(x).iter().all(|h| good[h.index()]))
        .collect()
}

/// The `p`-part of `x`: the power of `x` whose order is the `p`-part of `o(x)`.
pub fn p_part_of(g: &FiniteGroup, x: Elem, p: u64) -> Elem {
    let o = g.order_of(x);
    g.pow(x, o / p_part(o, p))
}

/// `LCM(G)` assembled from the p-local sets: `x` is accepted iff the
/// `p`-part of `x` lies in `LCM_p(G)` for every prime `p | o(x)`.
pub fn lcm_set_fast(g: &FiniteGroup) -> Vec<Elem> {
    let local: Vec<(u64, Vec<bool>)> = prime_divisors(g.order() as u64)
        .into_iter()
        .map(|p| {
            let mut mask = vec![false; g.order()];
            for x in lcm_p_set(g, p) {
                mask[x.index()] = true;
            }
            (p, mask)
        })
        .collect();
    g.elems()
        .filter(|&x| {
            let o = g.order_of(x);
            local
                .iter()
                .filter(|(p, _)| o.is_multiple_of(*p))
                .all(|(p, mask)| mask[p_part_of(g, x, *p).index()])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::perm::Permutation;

    const CAP: usize = 5000;

    #[test]
    fn identity_is_member() {
        let g = symmetric(4, CAP).unwrap();
        assert!(lcm_member(&g, Elem::IDENTITY).unwrap().is_member());
    }

    #[test]
    fn reflection_of_d8_fails() {
        let g = dihedral(8, CAP).unwrap();
        let s = g.generator_elems()[1];
        let w = lcm_member(&g, s).unwrap().failure.unwrap();
        assert_eq!(w.h, s);
        assert_eq!((w.order_h, w.order_y, w.order_hy), (2, 2, 4));
        // y is a reflection with s·y a rotation of order 4.
        assert_eq!(g.order_of(g.mul(s, w.y)), 4);
    }

    #[test]
    fn rotation_of_d8_is_member() {
        let g = dihedral(8, CAP).unwrap();
        let r = g.generator_elems()[0];
        assert!(lcm_member(&g, r).unwrap().is_member());
        let lc = lc_subgroup(&g);
        assert_eq!(lc, g.closure(&[r]));
    }

    #[test]
    fn foreign_element_rejected() {
        let g = cyclic(3, CAP).unwrap();
        assert!(lcm_member(&g, Elem::from_index(9)).is_err());
    }

    #[test]
    fn abelian_groups_are_full() {
        for g in [
            cyclic(12, CAP).unwrap(),
            elementary_abelian(2, 3, CAP).unwrap(),
        ] {
            assert_eq!(lcm_set(&g).len(), g.order());
        }
    }

    #[test]
    fn a4_lc_has_order_four() {
        let g = alternating(4, CAP).unwrap();
        assert_eq!(lc_subgroup(&g).order(), 4);
        assert_eq!(lcm_set(&g).len(), 4);
        assert_eq!(lcm_set_fast(&g), lcm_set(&g));
    }

    #[test]
    fn s3_lcm_is_c3() {
        let g = symmetric(3, CAP).unwrap();
        let set = lcm_set(&g);
        let c3 = g
            .subgroup_from_perms(&[Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()])
            .unwrap();
        assert_eq!(set, c3.members());
        assert_eq!(lcm_p_set(&g, 3), c3.members());
    }

    #[test]
    fn d8_local_set() {
        let g = dihedral(8, CAP).unwrap();
        let r = g.generator_elems()[0];
        assert_eq!(lcm_p_set(&g, 2), g.closure(&[r]).members());
        assert_eq!(lcm_p_set(&g, 2), lcm_set(&g));
    }

    #[test]
    fn fast_route_on_d8_times_c3() {
        let g = crate::GroupSpec::parse("prod(Dih(8),Cyc(3))")
            .unwrap()
            .build(CAP)
            .unwrap();
        assert_eq!(lcm_set_fast(&g), lcm_set(&g));
        assert_eq!(lcm_set(&g).len(), 12);
    }
}
