//! Quotients `G/N` realized as the action of `G` on the left cosets of `N`.

use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

/// The natural map `G → G/N`. The image is the permutation group induced on
/// the cosets `gN`, which is faithful for `G/N`.
#[derive(Clone, Debug)]
pub struct Epimorphism<'a> {
    source: &'a FiniteGroup,
    kernel: Subgroup,
    image: FiniteGroup,
    forward: Vec<Elem>,
}

/// Builds the quotient map for a normal subgroup `n`.
pub fn quotient<'a>(g: &'a FiniteGroup, n: &Subgroup) -> Result<Epimorphism<'a>> {
    if !g.is_normal(n)? {
        return Err(GroupError::NotNormal);
    }
    // Coset labels in order of first appearance.
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elems() {
        if coset[x.index()] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in n.members() {
            coset[g.mul(x, k).index()] = id;
        }
    }
    let action = |x: Elem| -> Permutation {
        let images = reps
            .iter()
            .map(|&r| coset[g.mul(x, r).index()] as u32)
            .collect();
        Permutation::from_images(images).expect("coset action is a bijection")
    };
    let gens = g.generator_elems().iter().map(|&x| action(x)).collect();
    let image = FiniteGroup::enumerate(gens, usize::MAX)?;
    debug_assert_eq!(image.order() * n.order(), g.order());
    // forward is constant on cosets; compute once per coset.
    let mut coset_image = vec![None; reps.len()];
    let forward = g
        .elems()
        .map(|x| {
            let c = coset[x.index()];
            *coset_image[c]
                .get_or_insert_with(|| image.element_of(&action(reps[c])).expect("image element"))
        })
        .collect();
    Ok(Epimorphism {
        source: g,
        kernel: n.clone(),
        image,
        forward,
    })
}

impl<'a> Epimorphism<'a> {
    pub fn source(&self) -> &'a FiniteGroup {
        self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &FiniteGroup {
        &self.image
    }

    pub fn forward(&self, x: Elem) -> Elem {
        self.forward[x.index()]
    }

    /// `φ(H)` for a subgroup `H` of the source.
    pub fn push(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = h.generators().iter().map(|&x| self.forward(x)).collect();
        self.image.closure(&gens)
    }

    /// The full preimage `φ⁻¹(S)` of a subgroup of the image.
    pub fn pullback(&self, s: &Subgroup) -> Subgroup {
        let mut gens: Vec<Elem> = self.kernel.generators().to_vec();
        for &t in s.generators() {
            let pre = self
                .source
                .elems()
                .find(|&x| self.forward(x) == t)
                .expect("forward is onto");
            gens.push(pre);
        }
        let pre = self.source.closure(&gens);
        debug_assert!(pre.members().iter().all(|&x| s.contains(self.forward(x))));
        debug_assert_eq!(pre.order(), s.order() * self.kernel.order());
        pre
    }

    /// Preimage of an arbitrary set of image elements.
    pub fn pullback_set(&self, set: &[Elem]) -> Vec<Elem> {
        let mut mark = vec![false; self.image.order()];
        for &t in set {
            mark[t.index()] = true;
        }
        self.source
            .elems()
            .filter(|&x| mark[self.forward(x).index()])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{dihedral, symmetric};

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = symmetric(3, 5000).unwrap();
        let q = quotient(&g, &g.whole()).unwrap();
        assert_eq!(q.image().order(), 1);
    }

    #[test]
    fn d8_mod_center() {
        let g = dihedral(8, 5000).unwrap();
        let z = g.center();
        let q = quotient(&g, &z).unwrap();
        assert_eq!(q.image().order(), 4);
        assert_eq!(q.image().exponent(), 2);
        for a in g.elems() {
            for b in g.elems() {
                let lhs = q.forward(g.mul(a, b));
                assert_eq!(lhs, q.image().mul(q.forward(a), q.forward(b)));
            }
        }
        assert_eq!(q.pullback(&q.image().trivial_subgroup()), z);
        assert_eq!(q.pullback(&q.image().whole()), g.whole());
    }

    #[test]
    fn non_normal_rejected() {
        let g = symmetric(3, 5000).unwrap();
        let t = g.subgroup_generated(&[g.generator_elems()[0]]).unwrap();
        assert!(matches!(quotient(&g, &t), Err(GroupError::NotNormal)));
    }
}
