//! Central and derived series, nilpotency, solvability, supersolvability.

use crate::arith::is_prime;
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

use super::quotient::quotient;

/// The upper central series `1 = Z_0 < Z_1 < … ` up to stabilization.
#[derive(Clone, Debug)]
pub struct CentralSeries {
    pub terms: Vec<Subgroup>,
    /// Nilpotency class, present iff the last term is the whole group.
    pub class: Option<usize>,
}

impl CentralSeries {
    /// `Z_i`, clamped to the stable term for large `i`.
    pub fn term(&self, i: usize) -> &Subgroup {
        &self.terms[i.min(self.terms.len() - 1)]
    }
}

/// Iterates `Z_{i+1} = φ⁻¹(Z(G/Z_i))` for `φ: G → G/Z_i`.
pub fn upper_central_series(g: &FiniteGroup) -> CentralSeries {
    let mut terms = vec![g.trivial_subgroup()];
    loop {
        let last = terms.last().expect("nonempty");
        if last.order() == g.order() {
            break;
        }
        let q = quotient(g, last).expect("central series terms are normal");
        let next = q.pullback(&q.image().center());
        if next.order() == last.order() {
            break;
        }
        terms.push(next);
    }
    let class = (terms.last().expect("nonempty").order() == g.order()).then(|| terms.len() - 1);
    CentralSeries { terms, class }
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    upper_central_series(g).class.is_some()
}

pub fn nilpotency_class(g: &FiniteGroup) -> Option<usize> {
    upper_central_series(g).class
}

/// `G ≥ G' ≥ G'' ≥ …` until it stabilizes.
pub fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut terms = vec![g.whole()];
    loop {
        let last = terms.last().expect("nonempty");
        let next = g.derived_subgroup(last);
        if next.order() == last.order() {
            return terms;
        }
        terms.push(next);
    }
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g).last().expect("nonempty").is_trivial()
}

/// Normal subgroups of prime order, in canonical order.
pub fn prime_order_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = Vec::new();
    for x in g.elems() {
        if !is_prime(g.order_of(x)) {
            continue;
        }
        let c = g.closure(&[x]);
        if g.normalized_by(&c, g.generator_elems()) && !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort_by(Subgroup::canonical_cmp);
    out
}

/// Trivial, or has a normal subgroup `N` of prime order with `G/N`
/// supersolvable. Quotients of supersolvable groups are supersolvable, so
/// the first such `N` decides.
pub fn is_supersolvable(g: &FiniteGroup) -> bool {
    if g.is_trivial() {
        return true;
    }
    match prime_order_normal_subgroups(g).first() {
        Some(n) => {
            let q = quotient(g, n).expect("normal");
            is_supersolvable(q.image())
        }
        None => false,
    }
}
