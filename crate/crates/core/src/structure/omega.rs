//! `Ω`/`℧` operators and regularity of p-groups.

use crate::arith::prime_power_base;
use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup};
use crate::subgroup::Subgroup;

/// The raw set `Ω_(n)` and the subgroup `Ω_n` it generates.
#[derive(Clone, Debug)]
pub struct Omega {
    pub set: Vec<Elem>,
    pub subgroup: Subgroup,
}

impl Omega {
    /// Whether `Ω_(n)` is already a subgroup.
    pub fn is_closed(&self) -> bool {
        self.set.len() == self.subgroup.order()
    }
}

/// `Ω_(n)(G) = {x : x^(p^n) = 1}` and `Ω_n(G) = ⟨Ω_(n)(G)⟩`.
pub fn omega(g: &FiniteGroup, p: u64, n: u32) -> Omega {
    let members: Vec<Elem> = g.elems().collect();
    omega_of_set(g, &members, p, n)
}

/// `Ω_(n)` of an arbitrary subset of `G`, with its generated subgroup.
pub fn omega_of_set(g: &FiniteGroup, set: &[Elem], p: u64, n: u32) -> Omega {
    let bound = p.pow(n);
    let set: Vec<Elem> = set
        .iter()
        .copied()
        .filter(|&x| bound.is_multiple_of(g.order_of(x)))
        .collect();
    let subgroup = g.closure(&set);
    Omega { set, subgroup }
}

/// `℧_n(G) = ⟨x^(p^n) : x ∈ G⟩`.
pub fn mho(g: &FiniteGroup, p: u64, n: u32) -> Subgroup {
    let e = p.pow(n);
    let powers: Vec<Elem> = g.elems().map(|x| g.pow(x, e)).collect();
    g.subgroup_from_members_closure(&powers)
}

/// `℧_1` of a subgroup `H`, as a subgroup of `G`.
pub fn mho_of(g: &FiniteGroup, h: &Subgroup, p: u64) -> Subgroup {
    let powers: Vec<Elem> = h.members().iter().map(|&x| g.pow(x, p)).collect();
    g.subgroup_from_members_closure(&powers)
}

/// Regular p-group test: for all `x, y`, `(xy)^p = x^p y^p d` with
/// `d ∈ ℧_1([H, H])`, `H = ⟨x, y⟩`.
pub fn is_regular_p_group(g: &FiniteGroup) -> Result<bool> {
    let p = match prime_power_base(g.order() as u64) {
        Some(p) => p,
        None if g.is_trivial() => return Ok(true),
        None => return Err(GroupError::NotAPGroup(g.order())),
    };
    Ok(first_regularity_failure(g, p).is_none())
}

/// The first pair `(x, y)` violating regularity, in canonical order.
pub fn first_regularity_failure(g: &FiniteGroup, p: u64) -> Option<(Elem, Elem)> {
    if g.is_abelian() {
        return None;
    }
    for x in g.elems() {
        for y in g.elems() {
            if g.commute(x, y) {
                continue;
            }
            let lhs = g.pow(g.mul(x, y), p);
            let xpyp = g.mul(g.pow(x, p), g.pow(y, p));
            let d = g.mul(g.inv(xpyp), lhs);
            if d == Elem::IDENTITY {
                continue;
            }
            let h = g.closure(&[x, y]);
            let derived = g.derived_subgroup(&h);
            if !mho_of(g, &derived, p).contains(d) {
                return Some((x, y));
            }
        }
    }
    None
}

impl FiniteGroup {
    pub(crate) fn subgroup_from_members_closure(&self, seed: &[Elem]) -> Subgroup {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for &e in seed {
            if !current.contains(e) {
                gens.push(e);
                current = self.closure(&gens);
            }
        }
        current
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    const CAP: usize = 5000;

    #[test]
    fn omega_zero_is_trivial() {
        let g = dihedral(8, CAP).unwrap();
        let o = omega(&g, 2, 0);
        assert_eq!(o.set, vec![Elem::IDENTITY]);
        assert!(o.subgroup.is_trivial());
    }

    #[test]
    fn omega_one_of_d8_is_not_closed() {
        let g = dihedral(8, CAP).unwrap();
        let o = omega(&g, 2, 1);
        assert_eq!(o.set.len(), 6);
        assert_eq!(o.subgroup.order(), 8);
        assert!(!o.is_closed());
    }

    #[test]
    fn omega_one_of_q8_is_center() {
        let q = dicyclic(2, CAP).unwrap();
        let o = omega(&q, 2, 1);
        assert_eq!(o.set.len(), 2);
        assert!(o.is_closed());
    }

    #[test]
    fn mho_examples() {
        let g = dihedral(8, CAP).unwrap();
        assert_eq!(mho(&g, 2, 0), g.whole());
        let m = mho(&g, 2, 1);
        assert_eq!(m.order(), 2);
        assert_eq!(m, g.center());
        assert!(mho(&elementary_abelian(3, 2, CAP).unwrap(), 3, 1).is_trivial());
    }

    #[test]
    fn regularity() {
        assert!(is_regular_p_group(&elementary_abelian(2, 3, CAP).unwrap()).unwrap());
        assert!(is_regular_p_group(&cyclic(9, CAP).unwrap()).unwrap());
        assert!(!is_regular_p_group(&dihedral(8, CAP).unwrap()).unwrap());
        assert!(is_regular_p_group(&heisenberg(3, CAP).unwrap()).unwrap());
        assert!(!is_regular_p_group(&wreath_cyclic(3, CAP).unwrap()).unwrap());
        assert!(matches!(
            is_regular_p_group(&symmetric(3, CAP).unwrap()),
            Err(GroupError::NotAPGroup(6))
        ));
    }
}
