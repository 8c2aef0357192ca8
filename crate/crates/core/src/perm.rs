//! Permutations on `{0, …, degree−1}`.
//!
//! Composition applies the right factor first: `compose(a, b)` maps
//! `i ↦ a(b(i))`. Every product in this crate follows that convention, so a
//! group product `g·h` is the function "first `h`, then `g`".

use std::fmt;

use num_integer::Integer;

use crate::error::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image sequence, rejecting anything that
    /// is not a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(GroupError::InvalidPermutation(
                "degree must be positive".into(),
            ));
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize).ok_or_else(|| {
                GroupError::InvalidPermutation(format!(
                    "image {i} out of range for degree {}",
                    images.len()
                ))
            })?;
            if *slot {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {i} repeated"
                )));
            }
            *slot = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p >= degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if touched[p] {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {p} appears twice"
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Self { images }
    }

    /// Nontrivial cycles in order of their smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next as u32);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Extends the permutation to `degree` points, shifting its support by
    /// `offset` and fixing everything else.
    pub fn embed(&self, degree: usize, offset: usize) -> Self {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[i + offset] = j + offset as u32;
        }
        Self { images }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then_apply(&base);
            }
            base = base.then_apply(&base);
            exp >>= 1;
        }
        acc
    }

    // Infallible composition for equal degrees; `other` is applied first.
    fn then_apply(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }
}

/// Returns `a ∘ b`, the permutation `i ↦ a(b(i))`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.degree() != b.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: a.degree(),
            found: b.degree(),
        });
    }
    Ok(a.then_apply(b))
}

pub fn element_order(g: &Permutation) -> u64 {
    g.order()
}

/// Cycle notation with 1-based points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, c: &[u32]) -> Permutation {
        Permutation::from_cycles(degree, &[c]).unwrap()
    }

    #[test]
    fn identity_composes_to_identity() {
        let e = Permutation::identity(4);
        assert!(compose(&e, &e).unwrap().is_identity());
    }

    #[test]
    fn inverse_law() {
        let a = cyc(4, &[0, 1, 2, 3]);
        assert!(compose(&a, &a.inverse()).unwrap().is_identity());
        assert!(compose(&a.inverse(), &a).unwrap().is_identity());
    }

    #[test]
    fn right_factor_applies_first() {
        // (0 1)∘(1 2): 0 -> 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0, i.e. (0 1 2).
        let a = cyc(3, &[0, 1]);
        let b = cyc(3, &[1, 2]);
        let ab = compose(&a, &b).unwrap();
        assert_eq!(ab.images(), &[1, 2, 0]);
        assert_eq!(ab.order(), 3);
        // The other convention would give (0 2 1).
        assert_eq!(compose(&b, &a).unwrap().images(), &[2, 0, 1]);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = compose(&Permutation::identity(3), &Permutation::identity(4)).unwrap_err();
        assert!(matches!(err, GroupError::DegreeMismatch { .. }));
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&Permutation::identity(5)), 1);
        assert_eq!(element_order(&cyc(4, &[0, 1, 2, 3])), 4);
        let g = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(element_order(&g), 6);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn display_is_one_based_cycle_notation() {
        let g = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(g.to_string(), "(1 2)(3 4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let g = cyc(6, &[0, 1, 2, 3, 4, 5]);
        let mut acc = Permutation::identity(6);
        for k in 0..8u64 {
            assert_eq!(g.pow(k), acc);
            acc = compose(&g, &acc).unwrap();
        }
    }
}
