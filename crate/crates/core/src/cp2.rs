//! CP2 membership and the two routes to "LCM-group".
//!
//! CP2 is the class of finite groups with `o(xy) ≤ max(o(x), o(y))` for all
//! `x ≠ y`. The definitional test runs over ordered pairs. The structural
//! test uses the classification: a p-group is in CP2 iff every `Ω_(n)` is a
//! subgroup; otherwise `G` must be Frobenius of order `p^α q^β`, `p < q`,
//! with kernel `Fit(G)` of order `p^α` and a cyclic complement.

use serde::Serialize;

use crate::arith::{factorize, p_part, prime_power_base};
use crate::group::{Elem, FiniteGroup};
use crate::lcm::lcm_set;
use crate::structure::{
    fitting_subgroup, frobenius_complement, is_nilpotent, omega, sylow_subgroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cp2Counterexample {
    pub x: Elem,
    pub y: Elem,
    pub order_x: u64,
    pub order_y: u64,
    pub order_xy: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cp2Route {
    /// p-group with every `Ω_(n)` closed.
    PGroupOmega,
    /// Frobenius of order `p^α q^β` with kernel `Fit(G)` and cyclic complement.
    Frobenius,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cp2Verdict {
    /// Result of the pairwise definition.
    pub holds: bool,
    pub counterexample: Option<Cp2Counterexample>,
    /// Result of the structural classification.
    pub structural_holds: bool,
    pub structural_route: Cp2Route,
}

impl Cp2Verdict {
    pub fn routes_agree(&self) -> bool {
        self.holds == self.structural_holds
    }
}

/// First ordered pair `x ≠ y` (canonical order) with `o(xy) > max(o(x), o(y))`.
pub fn cp2_counterexample(g: &FiniteGroup) -> Option<Cp2Counterexample> {
    for x in g.elems() {
        for y in g.elems() {
            if x == y {
                continue;
            }
            let (ox, oy) = (g.order_of(x), g.order_of(y));
            let oxy = g.order_of(g.mul(x, y));
            if oxy > ox.max(oy) {
                return Some(Cp2Counterexample {
                    x,
                    y,
                    order_x: ox,
                    order_y: oy,
                    order_xy: oxy,
                });
            }
        }
    }
    None
}

/// Structural CP2 test; returns the certifying route.
pub fn cp2_structural(g: &FiniteGroup) -> Cp2Route {
    if g.is_trivial() {
        return Cp2Route::PGroupOmega;
    }
    if let Some(p) = prime_power_base(g.order() as u64) {
        let mut n = 0;
        let mut bound = 1;
        let exp = g.exponent();
        while bound < exp {
            n += 1;
            bound *= p;
            if !omega(g, p, n).is_closed() {
                return Cp2Route::None;
            }
        }
        return Cp2Route::PGroupOmega;
    }
    let primes = factorize(g.order() as u64);
    let [(p, _), _] = primes.as_slice() else {
        return Cp2Route::None;
    };
    let kernel = fitting_subgroup(g);
    if kernel.order() as u64 != p_part(g.order() as u64, *p) {
        return Cp2Route::None;
    }
    match frobenius_complement(g, &kernel, usize::MAX) {
        Ok(Some(q)) => {
            let cyclic = q
                .members()
                .iter()
                .any(|&x| g.order_of(x) as usize == q.order());
            if cyclic {
                Cp2Route::Frobenius
            } else {
                Cp2Route::None
            }
        }
        _ => Cp2Route::None,
    }
}

pub fn is_cp2(g: &FiniteGroup) -> Cp2Verdict {
    let counterexample = cp2_counterexample(g);
    let structural_route = cp2_structural(g);
    Cp2Verdict {
        holds: counterexample.is_none(),
        counterexample,
        structural_holds: structural_route != Cp2Route::None,
        structural_route,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LcmGroupVerdict {
    /// `LCM(G) = G`.
    pub by_definition: bool,
    /// `G` nilpotent with every Sylow subgroup in CP2.
    pub by_characterization: bool,
}

impl LcmGroupVerdict {
    pub fn routes_agree(&self) -> bool {
        self.by_definition == self.by_characterization
    }
}

pub fn lcm_group_routes(g: &FiniteGroup) -> LcmGroupVerdict {
    LcmGroupVerdict {
        by_definition: lcm_set(g).len() == g.order(),
        by_characterization: is_lcm_group_by_characterization(g),
    }
}

pub fn is_lcm_group_by_characterization(g: &FiniteGroup) -> bool {
    is_nilpotent(g)
        && factorize(g.order() as u64).iter().all(|&(p, _)| {
            let sylow = sylow_subgroup(g, p);
            cp2_counterexample(&g.restrict(&sylow).group).is_none()
        })
}

/// `LCM(G) = G`, decided by the definition.
pub fn is_lcm_group(g: &FiniteGroup) -> bool {
    lcm_set(g).len() == g.order()
}
