//! Subgroups as explicit member sets, and the basic subgroup constructions.

use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup};
use crate::perm::Permutation;

/// A subgroup of some [`FiniteGroup`], stored as a sorted member list plus a
/// membership mask indexed by [`Elem`].
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<Elem>,
    mask: Vec<bool>,
    generators: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.mask.get(e.index()).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Order of the ambient group this subgroup lives in.
    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.members.iter().all(|&e| other.contains(e))
    }

    /// Canonical ordering: by order, then by sorted member list.
    pub fn canonical_cmp(&self, other: &Subgroup) -> std::cmp::Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }

    fn from_mask(mask: Vec<bool>, generators: Vec<Elem>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| Elem::from_index(i))
            .collect();
        Self {
            members,
            mask,
            generators,
        }
    }
}

impl FiniteGroup {
    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        Subgroup::from_mask(mask, Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(vec![true; self.order()], self.generator_elems().to_vec())
    }

    // Closure of the identity under right multiplication by `gens`.
    pub(crate) fn closure(&self, gens: &[Elem]) -> Subgroup {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut queue = VecDeque::from([Elem::IDENTITY]);
        while let Some(e) = queue.pop_front() {
            for &g in gens {
                let p = self.mul(e, g);
                if !mask[p.index()] {
                    mask[p.index()] = true;
                    queue.push_back(p);
                }
            }
        }
        let generators = gens
            .iter()
            .copied()
            .filter(|&g| g != Elem::IDENTITY)
            .collect();
        Subgroup::from_mask(mask, generators)
    }

    /// `⟨seed⟩`; the empty seed gives the trivial subgroup.
    pub fn subgroup_generated(&self, seed: &[Elem]) -> Result<Subgroup> {
        for &e in seed {
            self.check(e)?;
        }
        Ok(self.closure(seed))
    }

    pub fn subgroup_from_perms(&self, seed: &[Permutation]) -> Result<Subgroup> {
        let elems = seed
            .iter()
            .map(|p| self.element_of(p).ok_or(GroupError::NotAnElement))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&elems))
    }

    /// Wraps a set already known to be a subgroup, picking a small generating
    /// set greedily in canonical element order.
    pub(crate) fn subgroup_from_members(
        &self,
        members: impl IntoIterator<Item = Elem>,
    ) -> Subgroup {
        let mut mask = vec![false; self.order()];
        for e in members {
            mask[e.index()] = true;
        }
        mask[0] = true;
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for (i, &m) in mask.iter().enumerate() {
            let e = Elem::from_index(i);
            if m && !current.contains(e) {
                gens.push(e);
                current = self.closure(&gens);
            }
        }
        debug_assert_eq!(current.mask, mask);
        current
    }

    /// `⟨H, extra⟩` for a subgroup `H`.
    pub fn join_with(&self, h: &Subgroup, extra: &[Elem]) -> Subgroup {
        let mut gens = h.generators.clone();
        gens.extend(extra.iter().copied().filter(|&e| !h.contains(e)));
        if gens.len() == h.generators.len() {
            return h.clone();
        }
        self.closure(&gens)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.join_with(a, &b.generators)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.subgroup_from_members(a.members.iter().copied().filter(|&e| b.contains(e)))
    }

    /// Confirms that `h` is a subgroup of this group.
    pub fn validate_subgroup(&self, h: &Subgroup) -> Result<()> {
        if h.mask.len() != self.order() || !h.contains(Elem::IDENTITY) {
            return Err(GroupError::NotASubgroup);
        }
        let closed = h
            .members
            .iter()
            .all(|&a| h.generators.iter().all(|&g| h.contains(self.mul(a, g))));
        if !closed || self.closure(&h.generators) != *h {
            return Err(GroupError::NotASubgroup);
        }
        Ok(())
    }

    /// `⟨seed^G⟩`, the smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[Elem]) -> Result<Subgroup> {
        let whole = self.whole();
        self.normal_closure_within(&whole, seed)
    }

    /// The smallest subgroup containing `seed` that is normalized by `within`.
    pub fn normal_closure_within(&self, within: &Subgroup, seed: &[Elem]) -> Result<Subgroup> {
        let mut current = self.subgroup_generated(seed)?;
        loop {
            let fresh = current.generators.iter().find_map(|&s| {
                within
                    .generators
                    .iter()
                    .map(|&g| self.conj(s, g))
                    .find(|&c| !current.contains(c))
            });
            match fresh {
                Some(c) => current = self.join_with(&current, &[c]),
                None => return Ok(current),
            }
        }
    }

    /// Elements of `G` commuting with every element of `set`.
    pub fn centralizer(&self, set: &[Elem]) -> Result<Subgroup> {
        for &e in set {
            self.check(e)?;
        }
        Ok(self.subgroup_from_members(
            self.elems()
                .filter(|&g| set.iter().all(|&s| self.commute(g, s))),
        ))
    }

    /// Centralizer of `set` inside the subgroup `within`.
    pub fn centralizer_in(&self, within: &Subgroup, set: &[Elem]) -> Subgroup {
        self.subgroup_from_members(
            within
                .members
                .iter()
                .copied()
                .filter(|&g| set.iter().all(|&s| self.commute(g, s))),
        )
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(self.generator_elems())
            .expect("generators are elements")
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.subgroup_from_members(self.elems().filter(|&g| self.normalizes(g, h)))
    }

    fn normalizes(&self, g: Elem, h: &Subgroup) -> bool {
        h.generators.iter().all(|&x| h.contains(self.conj(x, g)))
    }

    /// Whether `h` is normal in the whole group.
    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        self.validate_subgroup(h)?;
        Ok(self.normalized_by(h, self.generator_elems()))
    }

    /// Whether every element of `by` normalizes `h`.
    pub fn normalized_by(&self, h: &Subgroup, by: &[Elem]) -> bool {
        by.iter().all(|&g| self.normalizes(g, h))
    }

    /// `H^g = g⁻¹Hg`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: Elem) -> Subgroup {
        let gens: Vec<Elem> = h.generators.iter().map(|&x| self.conj(x, g)).collect();
        self.closure(&gens)
    }

    /// `[A, B] = ⟨[a, b] : a ∈ A, b ∈ B⟩`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens: Vec<Elem> = Vec::new();
        let mut current = self.trivial_subgroup();
        for &x in &a.members {
            for &y in &b.members {
                let c = self.commutator(x, y);
                if !current.contains(c) {
                    gens.push(c);
                    current = self.closure(&gens);
                }
            }
        }
        current
    }

    /// The derived subgroup `H'` of a subgroup `H`: the normal closure in `H`
    /// of the commutators of its generators.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens = &h.generators;
        let mut seed = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != Elem::IDENTITY {
                    seed.push(c);
                }
            }
        }
        self.normal_closure_within(h, &seed)
            .expect("commutators are elements")
    }

    /// Lifts a subgroup to a standalone group on the same points, together
    /// with the element correspondence.
    pub fn restrict(&self, h: &Subgroup) -> Restriction {
        let gens: Vec<Permutation> = if h.generators.is_empty() {
            vec![Permutation::identity(self.degree())]
        } else {
            h.generators.iter().map(|&g| self.perm(g).clone()).collect()
        };
        let group =
            FiniteGroup::enumerate(gens, usize::MAX).expect("subgroup of an enumerated group");
        debug_assert_eq!(group.order(), h.order());
        let to_parent = group
            .permutations()
            .iter()
            .map(|p| self.element_of(p).expect("member of parent"))
            .collect();
        Restriction { group, to_parent }
    }
}

/// A subgroup re-enumerated as a group in its own right.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub group: FiniteGroup,
    to_parent: Vec<Elem>,
}

impl Restriction {
    pub fn to_parent(&self, e: Elem) -> Elem {
        self.to_parent[e.index()]
    }

    pub fn from_parent(&self, parent: &FiniteGroup, e: Elem) -> Option<Elem> {
        self.group.element_of(parent.perm(e))
    }

    /// Maps a subgroup of the restricted group back into the parent.
    pub fn lift(&self, parent: &FiniteGroup, s: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = s.generators.iter().map(|&g| self.to_parent(g)).collect();
        parent.closure(&gens)
    }

    /// Maps a parent subgroup contained in the restricted one into it.
    pub fn pull(&self, parent: &FiniteGroup, s: &Subgroup) -> Option<Subgroup> {
        let gens = s
            .generators
            .iter()
            .map(|&g| self.from_parent(parent, g))
            .collect::<Option<Vec<_>>>()?;
        Some(self.group.closure(&gens))
    }
}
