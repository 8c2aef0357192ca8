//! Frobenius groups with a given kernel.

use crate::arith::prime_power_base;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

use super::lattice::all_subgroups;
use super::sylow::sylow_subgroup;

/// Finds a complement `Q` to the normal subgroup `k` (`K ∩ Q = 1`,
/// `|K|·|Q| = |G|`).
///
/// Prime-power indices are searched among the Sylow subgroups and their
/// conjugates, then cyclic candidates are tried, then (within
/// `lattice_cap`) the full subgroup lattice.
pub fn find_complement(
    g: &FiniteGroup,
    k: &Subgroup,
    lattice_cap: usize,
) -> Result<Option<Subgroup>> {
    let index = g.order() / k.order();
    let meets_trivially = |q: &Subgroup| {
        q.order() == index
            && q.members()
                .iter()
                .all(|&x| x.index() == 0 || !k.contains(x))
    };
    if index == 1 {
        return Ok(Some(g.trivial_subgroup()));
    }
    if let Some(p) = prime_power_base(index as u64) {
        let sylow = sylow_subgroup(g, p);
        if sylow.order() == index {
            for t in g.elems() {
                let q = g.conjugate_subgroup(&sylow, t);
                if meets_trivially(&q) {
                    return Ok(Some(q));
                }
            }
            return Ok(None);
        }
    }
    for x in g.elems() {
        if g.order_of(x) as usize == index {
            let q = g.closure(&[x]);
            if meets_trivially(&q) {
                return Ok(Some(q));
            }
        }
    }
    Ok(all_subgroups(g, lattice_cap)?
        .into_iter()
        .find(|q| meets_trivially(q)))
}

/// Whether `G` is a Frobenius group with kernel `k`: `k` has a complement
/// `Q` whose nonidentity elements centralize only the identity of `k`.
pub fn is_frobenius_with_kernel(g: &FiniteGroup, k: &Subgroup, lattice_cap: usize) -> Result<bool> {
    Ok(frobenius_complement(g, k, lattice_cap)?.is_some())
}

/// The complement witnessing a Frobenius structure with kernel `k`.
pub fn frobenius_complement(
    g: &FiniteGroup,
    k: &Subgroup,
    lattice_cap: usize,
) -> Result<Option<Subgroup>> {
    if !g.is_normal(k)? {
        return Err(GroupError::NotNormal);
    }
    if k.is_trivial() || k.order() == g.order() {
        return Ok(None);
    }
    let Some(q) = find_complement(g, k, lattice_cap)? else {
        return Ok(None);
    };
    let fixed_point_free = q
        .members()
        .iter()
        .skip(1)
        .all(|&x| k.members().iter().skip(1).all(|&y| !g.commute(x, y)));
    Ok(fixed_point_free.then_some(q))
}
