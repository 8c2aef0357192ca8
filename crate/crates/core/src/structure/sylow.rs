//! Sylow subgroups, p-cores and the Fitting subgroup.

use crate::arith::{is_power_of, p_part, prime_divisors};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

pub fn is_p_element(g: &FiniteGroup, x: crate::Elem, p: u64) -> bool {
    is_power_of(g.order_of(x), p)
}

/// A Sylow `p`-subgroup; trivial when `p ∤ |G|`.
///
/// Starts from the cyclic subgroup of a `p`-element of largest order and
/// keeps adjoining a `p`-element of the normalizer lying outside the
/// current `p`-subgroup until the full `p`-part of `|G|` is reached.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Subgroup {
    let target = p_part(g.order() as u64, p) as usize;
    let start = g
        .elems()
        .filter(|&x| is_p_element(g, x, p))
        .max_by_key(|&x| (g.order_of(x), std::cmp::Reverse(x)))
        .expect("identity is a p-element");
    let mut current = g.closure(&[start]);
    while current.order() < target {
        let normalizer = g.normalizer(&current);
        let x = normalizer
            .members()
            .iter()
            .copied()
            .find(|&x| !current.contains(x) && is_p_element(g, x, p))
            .expect("a non-Sylow p-subgroup grows inside its normalizer");
        current = g.join_with(&current, &[x]);
    }
    debug_assert_eq!(current.order(), target);
    current
}

/// `O_p(G)`: the intersection of all conjugates of a Sylow `p`-subgroup.
pub fn p_core(g: &FiniteGroup, p: u64) -> Subgroup {
    let sylow = sylow_subgroup(g, p);
    let mut mask: Vec<bool> = g.elems().map(|x| sylow.contains(x)).collect();
    for t in g.elems() {
        let conj = g.conjugate_subgroup(&sylow, t);
        for (i, m) in mask.iter_mut().enumerate() {
            *m = *m && conj.contains(crate::Elem::from_index(i));
        }
    }
    g.subgroup_from_members(g.elems().filter(|x| mask[x.index()]))
}

/// `Fit(G)` as the product of the p-cores over the primes dividing `|G|`.
pub fn fitting_subgroup(g: &FiniteGroup) -> Subgroup {
    prime_divisors(g.order() as u64)
        .into_iter()
        .fold(g.trivial_subgroup(), |acc, p| g.join(&acc, &p_core(g, p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::structure::{is_nilpotent, is_normal_in};

    const CAP: usize = 5000;

    #[test]
    fn sylow_orders() {
        let s4 = symmetric(4, CAP).unwrap();
        assert_eq!(sylow_subgroup(&s4, 2).order(), 8);
        assert_eq!(sylow_subgroup(&s4, 3).order(), 3);
        assert_eq!(sylow_subgroup(&s4, 5).order(), 1);
        let d8 = dihedral(8, CAP).unwrap();
        assert_eq!(sylow_subgroup(&d8, 2), d8.whole());
        let a5 = alternating(5, CAP).unwrap();
        for (p, o) in [(2, 4), (3, 3), (5, 5)] {
            assert_eq!(sylow_subgroup(&a5, p).order(), o);
        }
        let s5 = symmetric(5, CAP).unwrap();
        assert_eq!(sylow_subgroup(&s5, 2).order(), 8);
    }

    #[test]
    fn fitting_subgroups() {
        let s4 = symmetric(4, CAP).unwrap();
        let f = fitting_subgroup(&s4);
        assert_eq!(f.order(), 4);
        assert!(is_normal_in(&s4, &f));
        assert!(is_nilpotent(&s4.restrict(&f).group));
        assert_eq!(fitting_subgroup(&symmetric(3, CAP).unwrap()).order(), 3);
        let q = dicyclic(2, CAP).unwrap();
        assert_eq!(fitting_subgroup(&q), q.whole());
        assert_eq!(fitting_subgroup(&alternating(5, CAP).unwrap()).order(), 1);
    }
}
