//! Full subgroup lattices for small groups.

use std::collections::HashSet;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

fn check_cap(g: &FiniteGroup, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(GroupError::LatticeCap {
            order: g.order(),
            cap,
        });
    }
    Ok(())
}

/// Every subgroup, sorted by order and then by member list.
///
/// Starts from the cyclic subgroups and closes under joining with a cyclic
/// subgroup; every subgroup is a join of cyclic ones.
pub fn all_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    check_cap(g, cap)?;
    let mut cyclic: Vec<Subgroup> = Vec::new();
    let mut seen: HashSet<Subgroup> = HashSet::new();
    for x in g.elems() {
        let c = g.closure(&[x]);
        if seen.insert(c.clone()) {
            cyclic.push(c);
        }
    }
    let mut found: Vec<Subgroup> = cyclic.clone();
    let mut next = 0;
    while next < found.len() {
        let h = found[next].clone();
        next += 1;
        for c in &cyclic {
            if c.is_subset_of(&h) {
                continue;
            }
            let j = g.join(&h, c);
            if seen.insert(j.clone()) {
                found.push(j);
            }
        }
    }
    found.sort_by(Subgroup::canonical_cmp);
    Ok(found)
}

pub fn normal_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(g, cap)?
        .into_iter()
        .filter(|h| g.normalized_by(h, g.generator_elems()))
        .collect())
}

/// Proper subgroups not contained in any other proper subgroup.
pub fn maximal_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    Ok(maximal_in_lattice(g, &all_subgroups(g, cap)?))
}

/// The maximal subgroups among an already computed lattice.
pub fn maximal_in_lattice(g: &FiniteGroup, lattice: &[Subgroup]) -> Vec<Subgroup> {
    let proper: Vec<&Subgroup> = lattice.iter().filter(|h| h.order() < g.order()).collect();
    proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.order() > h.order() && h.is_subset_of(k))
        })
        .map(|h| (*h).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    const CAP: usize = 5000;

    #[test]
    fn counts() {
        assert_eq!(
            all_subgroups(&cyclic(7, CAP).unwrap(), 256).unwrap().len(),
            2
        );
        assert_eq!(
            all_subgroups(&dihedral(8, CAP).unwrap(), 256)
                .unwrap()
                .len(),
            10
        );
        assert_eq!(
            all_subgroups(&symmetric(3, CAP).unwrap(), 256)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            all_subgroups(&symmetric(4, CAP).unwrap(), 256)
                .unwrap()
                .len(),
            30
        );
        assert_eq!(
            all_subgroups(&alternating(5, CAP).unwrap(), 256)
                .unwrap()
                .len(),
            59
        );
        assert_eq!(
            all_subgroups(&dicyclic(2, CAP).unwrap(), 256)
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn normal_and_maximal() {
        let s4 = symmetric(4, CAP).unwrap();
        let orders: Vec<_> = normal_subgroups(&s4, 256)
            .unwrap()
            .iter()
            .map(Subgroup::order)
            .collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let d8 = dihedral(8, CAP).unwrap();
        let max = maximal_subgroups(&d8, 256).unwrap();
        assert_eq!(max.len(), 3);
        assert!(max.iter().all(|h| h.order() == 4));
        assert_eq!(normal_subgroups(&d8, 256).unwrap().len(), 6);
    }

    #[test]
    fn cap_enforced() {
        let s5 = symmetric(5, CAP).unwrap();
        assert!(matches!(
            all_subgroups(&s5, 100),
            Err(GroupError::LatticeCap {
                order: 120,
                cap: 100
            })
        ));
    }

    #[test]
    fn deterministic_order() {
        let g = dihedral(12, CAP).unwrap();
        let a = all_subgroups(&g, 256).unwrap();
        let b = all_subgroups(&g, 256).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0].canonical_cmp(&w[1]).is_lt()));
    }
}
