//! Minimal non-LCM groups: not an LCM-group, every proper section is.

use serde::Serialize;

use crate::arith::prime_power_base;
use crate::cp2::is_lcm_group;
use crate::error::Result;
use crate::group::{Elem, FiniteGroup};
use crate::structure::{
    all_subgroups, is_nilpotent, is_regular_p_group, maximal_in_lattice, mho, omega, quotient,
    subgroup_exponent,
};
use crate::subgroup::Subgroup;

/// A section `S/N` given by the orders and generators of `S` and `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub subgroup_order: usize,
    pub subgroup_generators: Vec<Elem>,
    pub normal_order: usize,
    pub normal_generators: Vec<Elem>,
}

impl Section {
    fn new(s: &Subgroup, n: &Subgroup) -> Self {
        Section {
            subgroup_order: s.order(),
            subgroup_generators: s.generators().to_vec(),
            normal_order: n.order(),
            normal_generators: n.generators().to_vec(),
        }
    }
}

/// Shape of a minimal non-LCM p-group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PGroupShape {
    pub p: u64,
    /// A maximal subgroup of exponent `p`.
    pub maximal_h: Option<Vec<Elem>>,
    /// An element of order `p` outside `maximal_h`.
    pub u: Option<Elem>,
    pub h_complemented: bool,
    pub omega_1_is_whole: bool,
    pub omega_set_size: usize,
    pub generating_pair: Option<(Elem, Elem)>,
    pub center_order: usize,
    pub mho_order: usize,
    pub exponent_mod_center: u64,
    /// Irregular with every proper subgroup regular; informational.
    pub minimal_irregular: bool,
}

impl PGroupShape {
    /// Conditions (1)-(4) of the structure result for p-groups.
    pub fn holds(&self, order: usize) -> bool {
        let p = self.p as usize;
        self.maximal_h.is_some()
            && self.u.is_some()
            && self.h_complemented
            && self.omega_1_is_whole
            && self.omega_set_size < order
            && self.generating_pair.is_some()
            && self.center_order == p
            && self.mho_order == p
            && self.exponent_mod_center == self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalNonNilpotent {
    pub nilpotent: bool,
    pub maximal_subgroups: usize,
    pub all_maximal_nilpotent: bool,
}

impl MinimalNonNilpotent {
    pub fn holds(&self) -> bool {
        !self.nilpotent && self.all_maximal_nilpotent
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NlcmReport {
    pub is_nlcm: bool,
    pub is_lcm_group: bool,
    /// The first proper section found that is not an LCM-group.
    pub failing_section: Option<Section>,
    pub sections_checked: usize,
    pub p_group: Option<PGroupShape>,
    pub non_p_group: Option<MinimalNonNilpotent>,
}

impl NlcmReport {
    /// Whether the structural assertions hold; vacuous unless `is_nlcm`.
    pub fn structure_holds(&self, order: usize) -> bool {
        if !self.is_nlcm {
            return true;
        }
        match (&self.p_group, &self.non_p_group) {
            (Some(shape), _) => shape.holds(order),
            (None, Some(m)) => m.holds(),
            (None, None) => false,
        }
    }
}

fn section_is_lcm(g: &FiniteGroup, s: &Subgroup, n: &Subgroup) -> Result<bool> {
    let r = g.restrict(s);
    let n_in_s = r.pull(g, n).expect("normal subgroup inside the section");
    let q = quotient(&r.group, &n_in_s)?;
    Ok(is_lcm_group(q.image()))
}

/// Decides minimality by enumerating every proper section `S/N`.
///
/// Maximal subgroups and quotients by nontrivial normal subgroups are tried
/// first, then every pair `N ⊲ S < G`.
pub fn nlcm_check(g: &FiniteGroup, lattice_cap: usize) -> Result<NlcmReport> {
    let mut report = NlcmReport {
        is_nlcm: false,
        is_lcm_group: is_lcm_group(g),
        failing_section: None,
        sections_checked: 0,
        p_group: None,
        non_p_group: None,
    };
    if report.is_lcm_group {
        return Ok(report);
    }
    let lattice = all_subgroups(g, lattice_cap)?;
    let whole = g.whole();
    let trivial = g.trivial_subgroup();
    let mut candidates: Vec<(&Subgroup, &Subgroup)> = Vec::new();
    let maximal = maximal_in_lattice(g, &lattice);
    for m in &maximal {
        candidates.push((m, &trivial));
    }
    for n in &lattice {
        if !n.is_trivial() && g.normalized_by(n, g.generator_elems()) {
            candidates.push((&whole, n));
        }
    }
    for s in lattice.iter().filter(|s| s.order() < g.order()) {
        for n in lattice.iter().filter(|n| n.is_subset_of(s)) {
            if g.normalized_by(n, s.generators()) {
                candidates.push((s, n));
            }
        }
    }
    for (s, n) in candidates {
        report.sections_checked += 1;
        if !section_is_lcm(g, s, n)? {
            report.failing_section = Some(Section::new(s, n));
            return Ok(report);
        }
    }
    report.is_nlcm = true;
    match prime_power_base(g.order() as u64) {
        Some(p) => report.p_group = Some(p_group_shape(g, p, &maximal)?),
        None => {
            report.non_p_group = Some(MinimalNonNilpotent {
                nilpotent: is_nilpotent(g),
                maximal_subgroups: maximal.len(),
                all_maximal_nilpotent: maximal.iter().all(|m| is_nilpotent(&g.restrict(m).group)),
            })
        }
    }
    Ok(report)
}

fn p_group_shape(g: &FiniteGroup, p: u64, maximal: &[Subgroup]) -> Result<PGroupShape> {
    let mut maximal_h = None;
    let mut u = None;
    let mut h_complemented = false;
    let mut generating_pair = None;
    for h in maximal.iter().filter(|h| subgroup_exponent(g, h) == p) {
        let Some(x) = g.elems().find(|&x| !h.contains(x) && g.order_of(x) == p) else {
            continue;
        };
        let hu = g.join_with(h, &[x]);
        let meet = g.intersection(h, &g.closure(&[x]));
        h_complemented = hu.order() == g.order() && meet.is_trivial();
        generating_pair = h
            .members()
            .iter()
            .find(|&&y| g.closure(&[y, x]).order() == g.order())
            .map(|&y| (y, x));
        maximal_h = Some(h.members().to_vec());
        u = Some(x);
        break;
    }
    let omega_1 = omega(g, p, 1);
    let center = g.center();
    let exponent_mod_center = quotient(g, &center)?.image().exponent();
    let minimal_irregular = !is_regular_p_group(g)?
        && maximal
            .iter()
            .map(|m| is_regular_p_group(&g.restrict(m).group))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|regular| regular);
    Ok(PGroupShape {
        p,
        maximal_h,
        u,
        h_complemented,
        omega_1_is_whole: omega_1.subgroup.order() == g.order(),
        omega_set_size: omega_1.set.len(),
        generating_pair,
        center_order: center.order(),
        mho_order: mho(g, p, 1).order(),
        exponent_mod_center,
        minimal_irregular,
    })
}
