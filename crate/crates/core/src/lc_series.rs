//! LC-series, LC-class and chief-like series invariant under an ambient group.
//!
//! `LC_0 = 1` and `LC_i/LC_(i-1) = LC(G/LC_(i-1))`. Every term is kept as a
//! subgroup of `G` via pullback.

use serde::Serialize;

use crate::arith::{is_prime, prime_power_base};
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::lcm::lc_subgroup;
use crate::structure::{is_nilpotent, nilpotency_class, quotient};
use crate::subgroup::Subgroup;

#[derive(Clone, Debug)]
pub struct LcSeriesResult {
    /// `LC_0 = 1 ≤ LC_1 ≤ …`, ending at `G` or at the last term before a stall.
    pub terms: Vec<Subgroup>,
    /// `factors_nilpotent[i]` is for `LC_(i+1)/LC_i`.
    pub factors_nilpotent: Vec<bool>,
    pub terminated_at_g: bool,
    pub lc_class: Option<usize>,
}

impl LcSeriesResult {
    /// `LC_i`, constant past the last computed term.
    pub fn term(&self, i: usize) -> &Subgroup {
        &self.terms[i.min(self.terms.len() - 1)]
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

pub fn lc_series(g: &FiniteGroup) -> LcSeriesResult {
    let mut terms = vec![g.trivial_subgroup()];
    let mut factors_nilpotent = Vec::new();
    loop {
        let last = terms.last().expect("nonempty");
        if last.order() == g.order() {
            let k = terms.len() - 1;
            return LcSeriesResult {
                terms,
                factors_nilpotent,
                terminated_at_g: true,
                lc_class: Some(k),
            };
        }
        let q = quotient(g, last).expect("LC terms are normal");
        let lc = lc_subgroup(q.image());
        if lc.is_trivial() {
            return LcSeriesResult {
                terms,
                factors_nilpotent,
                terminated_at_g: false,
                lc_class: None,
            };
        }
        factors_nilpotent.push(is_nilpotent(&q.image().restrict(&lc).group));
        let next = q.pullback(&lc);
        debug_assert_eq!(q.push(&next), lc);
        terms.push(next);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LcClassBound {
    pub p: u64,
    /// Nilpotency class.
    pub t: usize,
    pub lc_class: Option<usize>,
    /// `⌊t/(p-1)⌋ + 1`.
    pub bound: usize,
    pub holds: bool,
}

/// Compares the LC-class of a p-group with `⌊t/(p-1)⌋ + 1`, `t` the
/// nilpotency class.
pub fn lc_class_bound_check(g: &FiniteGroup) -> Result<LcClassBound> {
    let p = match prime_power_base(g.order() as u64) {
        Some(p) => p,
        None if g.is_trivial() => {
            return Ok(LcClassBound {
                p: 1,
                t: 0,
                lc_class: Some(0),
                bound: 1,
                holds: true,
            })
        }
        None => return Err(GroupError::NotAPGroup(g.order())),
    };
    let t = nilpotency_class(g).expect("p-groups are nilpotent");
    let bound = t / (p as usize - 1) + 1;
    let lc_class = lc_series(g).lc_class;
    Ok(LcClassBound {
        p,
        t,
        lc_class,
        bound,
        holds: lc_class.is_some_and(|k| k <= bound),
    })
}

/// `1 = N_0 ≤ … ≤ N_k` with every `N_i` normal in an ambient group and
/// every index `[N_(i+1) : N_i]` prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GInvariantSeries {
    pub terms: Vec<Subgroup>,
}

impl GInvariantSeries {
    pub fn trivial(h: &FiniteGroup) -> Self {
        GInvariantSeries {
            terms: vec![h.trivial_subgroup()],
        }
    }

    pub fn top(&self) -> &Subgroup {
        self.terms.last().expect("nonempty")
    }

    pub fn validate(&self, h: &FiniteGroup) -> Result<()> {
        let bad = |m: String| Err(GroupError::InvalidSeries(m));
        match self.terms.first() {
            Some(first) if first.is_trivial() => {}
            _ => return bad("series must start at the trivial subgroup".into()),
        }
        for (i, n) in self.terms.iter().enumerate() {
            h.validate_subgroup(n)?;
            if !h.normalized_by(n, h.generator_elems()) {
                return bad(format!("term {i} is not normal"));
            }
            if i > 0 {
                let prev = &self.terms[i - 1];
                if !prev.is_subset_of(n) || !is_prime((n.order() / prev.order()) as u64) {
                    return bad(format!("index of term {} in term {i} is not prime", i - 1));
                }
            }
        }
        Ok(())
    }
}

/// Builds `1 = N_0 < … < N_k = G` with each `N_i ⊲ H` and prime indices,
/// choosing at each step the first prime-order subgroup of `G/N_i` that is
/// normal in `H/N_i`. `None` when some step has no such subgroup.
pub fn find_h_supersolvable_series(
    h: &FiniteGroup,
    g: &Subgroup,
) -> Result<Option<GInvariantSeries>> {
    if !h.is_normal(g)? {
        return Err(GroupError::NotNormal);
    }
    let mut terms = vec![h.trivial_subgroup()];
    while terms.last().expect("nonempty").order() < g.order() {
        let n = terms.last().expect("nonempty");
        let q = quotient(h, n)?;
        let image = q.image();
        let top = q.push(g);
        let step = top.members().iter().find_map(|&x| {
            if !is_prime(image.order_of(x)) {
                return None;
            }
            let c = image.closure(&[x]);
            image
                .normalized_by(&c, image.generator_elems())
                .then_some(c)
        });
        match step {
            Some(c) => {
                let next = q.pullback(&c);
                terms.push(next);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(GInvariantSeries { terms }))
}

/// Whether `N_i ≤ LC_i(H)` for every term of the series.
pub fn verify_series_containment(h: &FiniteGroup, series: &GInvariantSeries) -> Result<bool> {
    series.validate(h)?;
    let lc = lc_series(h);
    Ok(series
        .terms
        .iter()
        .enumerate()
        .all(|(i, n)| n.is_subset_of(lc.term(i))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big_omega;
    use crate::constructors::*;

    const CAP: usize = 5000;

    #[test]
    fn a4_series() {
        let g = alternating(4, CAP).unwrap();
        let s = lc_series(&g);
        assert_eq!(s.orders(), vec![1, 4, 12]);
        assert_eq!(s.lc_class, Some(2));
        assert_eq!(s.factors_nilpotent, vec![true, true]);
    }

    #[test]
    fn d8_has_class_two() {
        let g = wreath_cyclic(2, CAP).unwrap();
        assert_eq!(lc_series(&g).lc_class, Some(2));
        let b = lc_class_bound_check(&g).unwrap();
        assert_eq!((b.t, b.bound, b.lc_class), (2, 3, Some(2)));
        assert!(b.holds);
    }

    #[test]
    fn a5_stalls() {
        let g = alternating(5, CAP).unwrap();
        let s = lc_series(&g);
        assert_eq!(s.orders(), vec![1]);
        assert!(!s.terminated_at_g);
        assert_eq!(s.lc_class, None);
    }

    #[test]
    fn heisenberg_is_lcm() {
        let g = heisenberg(3, CAP).unwrap();
        let b = lc_class_bound_check(&g).unwrap();
        assert_eq!(b.lc_class, Some(1));
        assert!(b.holds);
    }

    #[test]
    fn wreath_three_bound() {
        let g = wreath_cyclic(3, CAP).unwrap();
        let b = lc_class_bound_check(&g).unwrap();
        assert_eq!((b.t, b.bound), (3, 2));
        // LCM(G) has 45 elements and already generates G.
        assert_eq!(crate::lcm::lcm_set(&g).len(), 45);
        assert_eq!(b.lc_class, Some(1));
        assert!(b.holds);
    }

    #[test]
    fn bound_needs_a_p_group() {
        assert!(lc_class_bound_check(&symmetric(3, CAP).unwrap()).is_err());
        assert!(
            lc_class_bound_check(&cyclic(1, CAP).unwrap())
                .unwrap()
                .holds
        );
    }

    #[test]
    fn s3_series_over_c3() {
        let h = symmetric(3, CAP).unwrap();
        let c3 = h.closure(&[h.elems().find(|&x| h.order_of(x) == 3).unwrap()]);
        let series = find_h_supersolvable_series(&h, &c3).unwrap().unwrap();
        assert_eq!(
            series.terms.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert!(verify_series_containment(&h, &series).unwrap());
    }

    #[test]
    fn a4_over_v4_has_none() {
        let h = alternating(4, CAP).unwrap();
        let v4 = lc_subgroup(&h);
        assert_eq!(find_h_supersolvable_series(&h, &v4).unwrap(), None);
        let not_normal = h.closure(&[h.elems().find(|&x| h.order_of(x) == 3).unwrap()]);
        assert!(find_h_supersolvable_series(&h, &not_normal).is_err());
    }

    #[test]
    fn abelian_chain_length() {
        let g = cyclic(12, CAP).unwrap();
        let series = find_h_supersolvable_series(&g, &g.whole())
            .unwrap()
            .unwrap();
        assert_eq!(series.terms.len() - 1, big_omega(12) as usize);
        assert!(verify_series_containment(&g, &series).unwrap());
    }

    #[test]
    fn trivial_series_contained() {
        let g = symmetric(4, CAP).unwrap();
        assert!(verify_series_containment(&g, &GInvariantSeries::trivial(&g)).unwrap());
    }

    #[test]
    fn invalid_series_rejected() {
        let g = symmetric(3, CAP).unwrap();
        let bad = GInvariantSeries {
            terms: vec![g.whole()],
        };
        assert!(verify_series_containment(&g, &bad).is_err());
    }
}
