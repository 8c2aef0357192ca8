//! Builders for the named group families, direct products, the cyclic
//! wreath product and regular representations of Cayley tables.

use crate::arith::is_prime;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

pub fn cyclic(n: u64, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::OutOfRange("Cyc(n) needs n >= 1".into()));
    }
    check_order(Some(n), cap)?;
    let n = n as usize;
    FiniteGroup::enumerate(vec![n_cycle(n)], cap)
}

/// The dihedral group of the given order (`order = 2n`), acting on the
/// vertices of an `n`-gon for `n ≥ 3`. Generators are the rotation `r` and
/// the reflection `s` fixing point 0.
pub fn dihedral(order: u64, cap: usize) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(GroupError::OutOfRange(format!(
            "Dih(m) needs an even order m >= 2, got {order}"
        )));
    }
    check_order(Some(order), cap)?;
    let n = (order / 2) as usize;
    let gens = match n {
        1 => vec![cycles(2, &[&[0, 1]])],
        2 => vec![
            cycles(4, &[&[0, 1], &[2, 3]]),
            cycles(4, &[&[0, 2], &[1, 3]]),
        ],
        _ => {
            let images = (0..n).map(|i| ((n - i) % n) as u32).collect();
            vec![n_cycle(n), Permutation::from_images(images)?]
        }
    };
    FiniteGroup::enumerate(gens, cap)
}

/// The dicyclic group of order `4n`, `⟨a, x | a^{2n} = 1, x² = aⁿ, a^x = a⁻¹⟩`,
/// in its regular representation. For `n` a power of two this is the
/// generalized quaternion group; `Dic(2)` is `Q8`.
pub fn dicyclic(n: u64, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::OutOfRange("Dic(n) needs n >= 1".into()));
    }
    check_order(n.checked_mul(4), cap)?;
    let n = n as usize;
    let m = 2 * n;
    // a^k x^j  <->  index 2k + j
    let table = CayleyTable::from_fn(2 * m, |u, v| {
        let (k, j) = (u / 2, u % 2);
        let (l, t) = (v / 2, v % 2);
        let (exp, xs) = if j == 0 {
            (k + l, t)
        } else if t == 0 {
            (k + m - l, 1)
        } else {
            (k + m - l + n, 0)
        };
        2 * (exp % m) + xs
    })?;
    regular_representation(&table, cap)
}

pub fn symmetric(n: u64, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::OutOfRange("Sym(n) needs n >= 1".into()));
    }
    check_order(factorial(n), cap)?;
    let n = n as usize;
    let gens = match n {
        1 => vec![Permutation::identity(1)],
        2 => vec![n_cycle(2)],
        _ => vec![cycles(n, &[&[0, 1]]), n_cycle(n)],
    };
    FiniteGroup::enumerate(gens, cap)
}

pub fn alternating(n: u64, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::OutOfRange("Alt(n) needs n >= 1".into()));
    }
    check_order(factorial(n).map(|f| (f / 2).max(1)), cap)?;
    let n = n as usize;
    let gens = if n < 3 {
        vec![Permutation::identity(n)]
    } else {
        (2..n as u32).map(|i| cycles(n, &[&[0, 1, i]])).collect()
    };
    FiniteGroup::enumerate(gens, cap)
}

/// `C_p^k` as `k` disjoint `p`-cycles.
pub fn elementary_abelian(p: u64, k: u64, cap: usize) -> Result<FiniteGroup> {
    require_prime(p)?;
    if k == 0 {
        return Err(GroupError::OutOfRange("ElemAb(p,k) needs k >= 1".into()));
    }
    check_order(u32::try_from(k).ok().and_then(|k| p.checked_pow(k)), cap)?;
    let (p, k) = (p as usize, k as usize);
    let degree = p * k;
    let gens = (0..k)
        .map(|b| {
            let block: Vec<u32> = (b * p..(b + 1) * p).map(|i| i as u32).collect();
            cycles(degree, &[&block])
        })
        .collect();
    FiniteGroup::enumerate(gens, cap)
}

/// The Heisenberg group of unitriangular 3×3 matrices over `Z/p`, from the
/// law `(a,b,c)·(a',b',c') = (a+a', b+b', c+c'+ab')`, in its regular
/// representation.
pub fn heisenberg(p: u64, cap: usize) -> Result<FiniteGroup> {
    require_prime(p)?;
    check_order(p.checked_pow(3), cap)?;
    let p = p as usize;
    let split = |u: usize| (u / (p * p), (u / p) % p, u % p);
    let table = CayleyTable::from_fn(p * p * p, |u, v| {
        let (a, b, c) = split(u);
        let (a2, b2, c2) = split(v);
        let a3 = (a + a2) % p;
        let b3 = (b + b2) % p;
        let c3 = (c + c2 + a * b2) % p;
        a3 * p * p + b3 * p + c3
    })?;
    regular_representation(&table, cap)
}

/// `C_p ≀ C_p` acting imprimitively on `p²` points: a `p`-cycle on the first
/// block of `p` points plus the cyclic shift of the `p` blocks.
pub fn wreath_cyclic(p: u64, cap: usize) -> Result<FiniteGroup> {
    require_prime(p)?;
    check_order(
        u32::try_from(p + 1).ok().and_then(|e| p.checked_pow(e)),
        cap,
    )?;
    let p = p as usize;
    let degree = p * p;
    let base: Vec<u32> = (0..p as u32).collect();
    let shift = (0..degree)
        .map(|i| (((i / p + 1) % p) * p + i % p) as u32)
        .collect();
    FiniteGroup::enumerate(
        vec![cycles(degree, &[&base]), Permutation::from_images(shift)?],
        cap,
    )
}

/// `G × H` acting on the disjoint union of the two point sets, with the
/// canonical embeddings of each factor.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    left_degree: usize,
    right_degree: usize,
}

impl DirectProduct {
    /// The image of a permutation of the left factor.
    pub fn embed_left(&self, p: &Permutation) -> Permutation {
        assert_eq!(p.degree(), self.left_degree);
        p.embed(self.left_degree + self.right_degree, 0)
    }

    /// The image of a permutation of the right factor.
    pub fn embed_right(&self, p: &Permutation) -> Permutation {
        assert_eq!(p.degree(), self.right_degree);
        p.embed(self.left_degree + self.right_degree, self.left_degree)
    }

    /// Splits a product element back into its two components.
    pub fn components(&self, p: &Permutation) -> (Permutation, Permutation) {
        let img = p.images();
        let left = img[..self.left_degree].to_vec();
        let right = img[self.left_degree..]
            .iter()
            .map(|&i| i - self.left_degree as u32)
            .collect();
        (
            Permutation::from_images(left).expect("product element"),
            Permutation::from_images(right).expect("product element"),
        )
    }
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<DirectProduct> {
    check_order((g.order() as u64).checked_mul(h.order() as u64), cap)?;
    let (dl, dr) = (g.degree(), h.degree());
    let degree = dl + dr;
    let gens = g
        .generators()
        .iter()
        .map(|p| p.embed(degree, 0))
        .chain(h.generators().iter().map(|p| p.embed(degree, dl)))
        .collect();
    Ok(DirectProduct {
        group: FiniteGroup::enumerate(gens, cap)?,
        left_degree: dl,
        right_degree: dr,
    })
}

/// A validated multiplication table on `{0, …, n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl CayleyTable {
    /// Validates the table: Latin square, two-sided identity, associativity
    /// (checked exhaustively).
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::InvalidTable(format!(
                        "row {i} is not a permutation"
                    )));
                }
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if std::mem::replace(&mut seen[row[j]], true) {
                    return Err(GroupError::InvalidTable(format!(
                        "column {j} is not a permutation"
                    )));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::InvalidTable("no identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::InvalidTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Self { table, identity })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new((0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect())
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Left multiplication by `g` as a permutation of the table indices.
    pub fn left_translation(&self, g: usize) -> Permutation {
        Permutation::from_images(self.table[g].iter().map(|&x| x as u32).collect())
            .expect("rows of a validated table are permutations")
    }
}

/// The left regular representation: `g ↦ (x ↦ g·x)` on `n` points.
pub fn regular_representation(table: &CayleyTable, cap: usize) -> Result<FiniteGroup> {
    let n = table.order();
    // Greedy generating set: take each index not yet reached.
    let mut reached = vec![false; n];
    reached[table.identity()] = true;
    let mut gens = Vec::new();
    for g in 0..n {
        if reached[g] {
            continue;
        }
        gens.push(g);
        let mut stack = vec![table.identity()];
        reached.iter_mut().for_each(|r| *r = false);
        reached[table.identity()] = true;
        while let Some(x) = stack.pop() {
            for &s in &gens {
                let y = table.product(x, s);
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    let perms = if gens.is_empty() {
        vec![Permutation::identity(n)]
    } else {
        gens.iter().map(|&g| table.left_translation(g)).collect()
    };
    FiniteGroup::enumerate(perms, cap)
}

fn n_cycle(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect())
        .expect("cycle is a bijection")
}

fn cycles(degree: usize, cs: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(degree, cs).expect("well-formed cycles")
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(GroupError::NotPrime(p))
    }
}

fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

// Rejects up front when the known order is over the cap (or overflows).
fn check_order(order: Option<u64>, cap: usize) -> Result<()> {
    match order {
        Some(o) if o <= cap as u64 => Ok(()),
        _ => Err(GroupError::OrderCap { cap }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 5000;

    #[test]
    fn documented_orders() {
        for n in 1..=12 {
            assert_eq!(cyclic(n, CAP).unwrap().order() as u64, n);
            assert_eq!(dihedral(2 * n, CAP).unwrap().order() as u64, 2 * n);
            assert_eq!(dicyclic(n, CAP).unwrap().order() as u64, 4 * n);
        }
        let fact = [1, 1, 2, 6, 24, 120, 720];
        for n in 1..=6u64 {
            assert_eq!(symmetric(n, CAP).unwrap().order() as u64, fact[n as usize]);
            assert_eq!(
                alternating(n, CAP).unwrap().order() as u64,
                (fact[n as usize] / 2).max(1)
            );
        }
        for (p, k) in [(2, 1), (2, 3), (3, 2), (5, 3)] {
            assert_eq!(
                elementary_abelian(p, k, CAP).unwrap().order() as u64,
                p.pow(k as u32)
            );
        }
        assert_eq!(heisenberg(3, CAP).unwrap().order(), 27);
        assert_eq!(heisenberg(5, CAP).unwrap().order(), 125);
        assert_eq!(wreath_cyclic(2, CAP).unwrap().order(), 8);
        assert_eq!(wreath_cyclic(3, CAP).unwrap().order(), 81);
    }

    #[test]
    fn dihedral_eight_has_exponent_four() {
        let g = dihedral(8, CAP).unwrap();
        assert_eq!(g.exponent(), 4);
        assert!(!g.is_abelian());
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q = dicyclic(2, CAP).unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(q.elems().filter(|&e| q.order_of(e) == 2).count(), 1);
        assert_eq!(q.exponent(), 4);
    }

    #[test]
    fn heisenberg_three() {
        let h = heisenberg(3, CAP).unwrap();
        assert_eq!(h.exponent(), 3);
        assert_eq!(h.center().order(), 3);
    }

    #[test]
    fn wreath_two_looks_like_d8() {
        let w = wreath_cyclic(2, CAP).unwrap();
        assert_eq!((w.order(), w.exponent(), w.is_abelian()), (8, 4, false));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(cyclic(0, CAP), Err(GroupError::OutOfRange(_))));
        assert!(matches!(dihedral(7, CAP), Err(GroupError::OutOfRange(_))));
        assert!(matches!(heisenberg(4, CAP), Err(GroupError::NotPrime(4))));
        assert!(matches!(
            wreath_cyclic(5, CAP),
            Err(GroupError::OrderCap { .. })
        ));
        assert!(matches!(
            symmetric(8, CAP),
            Err(GroupError::OrderCap { .. })
        ));
        assert!(matches!(
            symmetric(40, CAP),
            Err(GroupError::OrderCap { .. })
        ));
    }

    #[test]
    fn products() {
        let d8 = dihedral(8, CAP).unwrap();
        let c3 = cyclic(3, CAP).unwrap();
        let t = direct_product(&d8, &d8, CAP).unwrap();
        assert_eq!(t.group.order(), 64);
        let dc = direct_product(&d8, &c3, CAP).unwrap();
        assert_eq!(dc.group.order(), 24);
        assert_eq!(dc.group.exponent(), 12);
        let one = cyclic(1, CAP).unwrap();
        assert_eq!(direct_product(&one, &d8, CAP).unwrap().group.order(), 8);
        assert!(direct_product(&d8, &d8, 63).is_err());
    }

    #[test]
    fn embeddings_round_trip() {
        let d8 = dihedral(8, CAP).unwrap();
        let c3 = cyclic(3, CAP).unwrap();
        let t = direct_product(&d8, &c3, CAP).unwrap();
        for a in d8.permutations() {
            for b in c3.permutations() {
                let ab = crate::perm::compose(&t.embed_left(a), &t.embed_right(b)).unwrap();
                assert!(t.group.contains_perm(&ab));
                assert_eq!(t.components(&ab), (a.clone(), b.clone()));
            }
        }
    }

    #[test]
    fn table_validation() {
        assert!(CayleyTable::new(vec![vec![0]]).is_ok());
        assert!(CayleyTable::new(vec![]).is_err());
        assert!(CayleyTable::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        // Latin square with identity 0 that is not associative (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = CayleyTable::new(loop5).unwrap_err();
        assert!(err.to_string().contains("associative"), "{err}");
    }

    #[test]
    fn regular_representations() {
        let trivial = CayleyTable::new(vec![vec![0]]).unwrap();
        assert_eq!(regular_representation(&trivial, CAP).unwrap().order(), 1);
        let c4 = CayleyTable::from_fn(4, |a, b| (a + b) % 4).unwrap();
        let g = regular_representation(&c4, CAP).unwrap();
        assert_eq!((g.order(), g.exponent(), g.is_abelian()), (4, 4, true));
        // Faithful: distinct rows give distinct permutations.
        let perms: std::collections::HashSet<_> = (0..4).map(|x| c4.left_translation(x)).collect();
        assert_eq!(perms.len(), 4);
    }
}
