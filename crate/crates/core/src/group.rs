//! Exhaustively enumerated permutation groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

// Groups up to this order get a full multiplication table on first use.
const TABLE_LIMIT: usize = 1024;

/// Handle for a group element: its position in the group's canonical
/// enumeration order. Index 0 is always the identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        Elem(i as u32)
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite permutation group with every element enumerated.
///
/// Elements are stored breadth-first by word length in the generators, ties
/// broken by generator index, so the element order (and every [`Elem`]) is a
/// deterministic function of the generator list.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_elems: Vec<Elem>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, Elem>,
    inverses: Vec<Elem>,
    orders: Vec<u64>,
    // right multiplication by generator k: right_gen[i * ngens + k] = e_i · g_k
    right_gen: Vec<u32>,
    // e_i = e_{word[i].0} · g_{word[i].1} for i > 0
    word: Vec<(u32, u32)>,
    table: OnceLock<Vec<u32>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates `⟨generators⟩`, failing once more than `cap` elements turn up.
    pub fn enumerate(generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let degree = generators.first().ok_or(GroupError::NoGenerators)?.degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let ngens = generators.len();
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, Elem::IDENTITY)]);
        let mut word = vec![(0, 0)];
        let mut right_gen = Vec::new();
        let mut next = 0;
        while next < elements.len() {
            for (k, g) in generators.iter().enumerate() {
                let product = crate::perm::compose(&elements[next], g)?;
                let id = match index.get(&product) {
                    Some(&e) => e,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::OrderCap { cap });
                        }
                        let e = Elem::from_index(elements.len());
                        index.insert(product.clone(), e);
                        elements.push(product);
                        word.push((next as u32, k as u32));
                        e
                    }
                };
                right_gen.push(id.0);
            }
            next += 1;
        }
        debug_assert_eq!(right_gen.len(), elements.len() * ngens);

        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        let generator_elems = generators.iter().map(|g| index[g]).collect();
        Ok(Self {
            degree,
            generators,
            generator_elems,
            elements,
            index,
            inverses,
            orders,
            right_gen,
            word,
            table: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_elems(&self) -> &[Elem] {
        &self.generator_elems
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn elems(&self) -> impl ExactSizeIterator<Item = Elem> + Clone {
        (0..self.order()).map(Elem::from_index)
    }

    pub fn perm(&self, e: Elem) -> &Permutation {
        &self.elements[e.index()]
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element_of(&self, p: &Permutation) -> Option<Elem> {
        self.index.get(p).copied()
    }

    pub fn contains_perm(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub(crate) fn check(&self, e: Elem) -> Result<Elem> {
        if e.index() < self.order() {
            Ok(e)
        } else {
            Err(GroupError::NotAnElement)
        }
    }

    /// The product `a·b` (apply `b` first).
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.order() <= TABLE_LIMIT {
            let n = self.order();
            let table = self.table.get_or_init(|| self.build_table());
            Elem(table[a.index() * n + b.index()])
        } else {
            let p = crate::perm::compose(self.perm(a), self.perm(b)).expect("same degree");
            self.index[&p]
        }
    }

    fn build_table(&self) -> Vec<u32> {
        let n = self.order();
        let ngens = self.generators.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u32;
            // e_j = e_parent · g, so a·e_j = (a·e_parent) · g; parents precede j.
            for j in 1..n {
                let (parent, k) = self.word[j];
                let left = row[parent as usize] as usize;
                row[j] = self.right_gen[left * ngens + k as usize];
            }
        }
        table
    }

    pub fn inv(&self, e: Elem) -> Elem {
        self.inverses[e.index()]
    }

    pub fn pow(&self, e: Elem, n: u64) -> Elem {
        let n = n % self.order_of(e);
        let mut acc = Elem::IDENTITY;
        for _ in 0..n {
            acc = self.mul(acc, e);
        }
        acc
    }

    pub fn order_of(&self, e: Elem) -> u64 {
        self.orders[e.index()]
    }

    /// The conjugate `g⁻¹·h·g`.
    pub fn conj(&self, h: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), h), g)
    }

    /// The commutator `a⁻¹·b⁻¹·a·b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Elements of `⟨x⟩` in the order `1, x, x², …`.
    pub fn cyclic_elems(&self, x: Elem) -> Vec<Elem> {
        let mut out = vec![Elem::IDENTITY];
        let mut cur = x;
        while cur != Elem::IDENTITY {
            out.push(cur);
            cur = self.mul(cur, x);
        }
        out
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, o| acc.lcm(o))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_elems;
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
}

/// Enumerates `⟨generators⟩` under the given order cap.
pub fn enumerate_group(generators: Vec<Permutation>, cap: usize) -> Result<FiniteGroup> {
    FiniteGroup::enumerate(generators, cap)
}
