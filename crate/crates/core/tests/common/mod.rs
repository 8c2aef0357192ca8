//! Brute-force oracles on raw image vectors, independent of the engine.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use lcgroup_core::{FiniteGroup, Permutation};

pub type Raw = Vec<u32>;

/// `(a∘b)(i) = a(b(i))`.
pub fn mul(a: &Raw, b: &Raw) -> Raw {
    b.iter().map(|&i| a[i as usize]).collect()
}

pub fn identity(n: usize) -> Raw {
    (0..n as u32).collect()
}

pub fn order(x: &Raw) -> u64 {
    let id = identity(x.len());
    let mut y = x.clone();
    let mut n = 1;
    while y != id {
        y = mul(&y, x);
        n += 1;
    }
    n
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Every product of generators, by repeated multiplication until stable.
pub fn closure(gens: &[Raw], degree: usize) -> BTreeSet<Raw> {
    let mut set: BTreeSet<Raw> = BTreeSet::new();
    set.insert(identity(degree));
    loop {
        let mut grown = set.clone();
        for a in &set {
            for g in gens {
                grown.insert(mul(a, g));
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

pub fn raw_elements(g: &FiniteGroup) -> Vec<Raw> {
    g.permutations()
        .iter()
        .map(|p| p.images().to_vec())
        .collect()
}

pub fn raw_generators(g: &FiniteGroup) -> Vec<Raw> {
    g.generators().iter().map(|p| p.images().to_vec()).collect()
}

fn powers(x: &Raw) -> Vec<Raw> {
    let id = identity(x.len());
    let mut out = vec![id.clone()];
    let mut y = x.clone();
    while y != id {
        out.push(y.clone());
        y = mul(&y, x);
    }
    out
}

/// `LCM(G)` straight from the definition, quantifying over all powers.
pub fn lcm_set(elements: &[Raw]) -> BTreeSet<Raw> {
    let orders: HashMap<&Raw, u64> = elements.iter().map(|x| (x, order(x))).collect();
    let good = |h: &Raw| {
        elements
            .iter()
            .all(|y| lcm(orders[h], orders[y]).is_multiple_of(order(&mul(h, y))))
    };
    elements
        .iter()
        .filter(|x| powers(x).iter().all(&good))
        .cloned()
        .collect()
}

/// Number of subsets closed under multiplication that contain the identity.
pub fn count_subgroups_by_subsets(elements: &[Raw]) -> usize {
    let n = elements.len();
    assert!(n <= 16);
    let id = identity(elements[0].len());
    let index: HashMap<&Raw, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut count = 0;
    for mask in 0u32..(1 << n) {
        if mask & (1 << index[&id]) == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let closed = members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| mask & (1 << index[&mul(&elements[a], &elements[b])]) != 0)
        });
        if closed {
            count += 1;
        }
    }
    count
}

pub fn perm(images: Raw) -> Permutation {
    Permutation::from_images(images).unwrap()
}
