//! Verification campaigns: one predicate per campaign, run over the corpus.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use lcgroup_core::arith::{gcd, prime_divisors, prime_power_base};
use lcgroup_core::cp2::{cp2_counterexample, is_cp2, lcm_group_routes};
use lcgroup_core::lc_series::{
    find_h_supersolvable_series, lc_class_bound_check, lc_series, verify_series_containment,
};
use lcgroup_core::lcm::{lc_subgroup, lcm_member, lcm_p_set, lcm_set, lcm_set_fast};
use lcgroup_core::nlcm::nlcm_check;
use lcgroup_core::structure::*;
use lcgroup_core::{compose, Caps, Elem, FiniteGroup, GroupError};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::corpus::{self, CorpusEntry};
use crate::report::{CampaignReport, GroupResult, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Campaign {
    LcmGroupRoutes,
    LocalAssembly,
    LocalSets,
    CoprimeProducts,
    OmegaTransfer,
    OmegaExponent,
    DirectProducts,
    FittingSylow,
    MinimalNonLcm,
    UpperCentralTerm,
    ClassBound,
    InvariantSeries,
    LcNilpotent,
    WorkedExamples,
}

impl Campaign {
    pub const ALL: [Campaign; 14] = [
        Campaign::LcmGroupRoutes,
        Campaign::LocalAssembly,
        Campaign::LocalSets,
        Campaign::CoprimeProducts,
        Campaign::OmegaTransfer,
        Campaign::OmegaExponent,
        Campaign::DirectProducts,
        Campaign::FittingSylow,
        Campaign::MinimalNonLcm,
        Campaign::UpperCentralTerm,
        Campaign::ClassBound,
        Campaign::InvariantSeries,
        Campaign::LcNilpotent,
        Campaign::WorkedExamples,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Campaign::LcmGroupRoutes => "thm-cp2",
            Campaign::LocalAssembly => "prop-equ",
            Campaign::LocalSets => "lemma-ces",
            Campaign::CoprimeProducts => "lemma-coprime",
            Campaign::OmegaTransfer => "lemma-a2",
            Campaign::OmegaExponent => "lemma-ccc",
            Campaign::DirectProducts => "prop-pro",
            Campaign::FittingSylow => "cor-42",
            Campaign::MinimalNonLcm => "thm-min",
            Campaign::UpperCentralTerm => "lemma-zp",
            Campaign::ClassBound => "thm-222",
            Campaign::InvariantSeries => "thm-5",
            Campaign::LcNilpotent => "cor-7",
            Campaign::WorkedExamples => "paper-examples",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Campaign::LcmGroupRoutes => {
                "LCM-group by definition agrees with nilpotent plus CP2 Sylows; CP2 routes agree"
            }
            Campaign::LocalAssembly => "LCM set assembled from p-local sets equals the LCM set",
            Campaign::LocalSets => "LCM_p is conjugation invariant and generates a p-group",
            Campaign::CoprimeProducts => {
                "commuting LCM elements of coprime order multiply into LCM"
            }
            Campaign::OmegaTransfer => "closed Omega_(1) and CP2 quotient give CP2",
            Campaign::OmegaExponent => {
                "Omega_(1) of the LCM set generates a subgroup of exponent p"
            }
            Campaign::DirectProducts => {
                "LCM(G) x LCM(H) inside LCM(G x H), equal for coprime exponents"
            }
            Campaign::FittingSylow => "a CP2 Sylow p-subgroup puts O_p(G) inside LCM(G)",
            Campaign::MinimalNonLcm => "minimal non-LCM groups have the predicted structure",
            Campaign::UpperCentralTerm => "Z_(p-1)(G) lies in LCM(G) for p-groups",
            Campaign::ClassBound => "LC-class of a p-group is at most floor(t/(p-1)) + 1",
            Campaign::InvariantSeries => {
                "an H-invariant prime-index series sits inside the LC-series"
            }
            Campaign::LcNilpotent => {
                "supersolvable groups and orders pq, pq^2, pqr are LC-nilpotent"
            }
            Campaign::WorkedExamples => "the worked examples on D8, D8 x D8 and A4",
        }
    }

    fn applies(self, e: &CorpusEntry) -> bool {
        match self {
            Campaign::OmegaTransfer
            | Campaign::OmegaExponent
            | Campaign::UpperCentralTerm
            | Campaign::ClassBound => e.has_tag(corpus::P_GROUP),
            Campaign::DirectProducts => e.has_tag(corpus::PRODUCT),
            Campaign::WorkedExamples => e.has_tag(corpus::WORKED_EXAMPLE),
            _ => true,
        }
    }

    fn check(self, e: &CorpusEntry, g: &FiniteGroup, caps: Caps) -> Result<Outcome, GroupError> {
        match self {
            Campaign::LcmGroupRoutes => lcm_group_routes_agree(e, g, caps),
            Campaign::LocalAssembly => Ok(local_assembly(g)),
            Campaign::LocalSets => Ok(local_sets(g)),
            Campaign::CoprimeProducts => Ok(coprime_products(g)),
            Campaign::OmegaTransfer => omega_transfer(g),
            Campaign::OmegaExponent => Ok(omega_exponent(g)),
            Campaign::DirectProducts => direct_products(e, caps),
            Campaign::FittingSylow => Ok(fitting_sylow(g)),
            Campaign::MinimalNonLcm => minimal_non_lcm(e, g, caps),
            Campaign::UpperCentralTerm => upper_central_term(g),
            Campaign::ClassBound => class_bound(e, g),
            Campaign::InvariantSeries => invariant_series(e, g),
            Campaign::LcNilpotent => Ok(lc_nilpotent(e, g)),
            Campaign::WorkedExamples => worked_example(e, g, caps),
        }
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
#[error("unknown campaign '{0}'")]
pub struct UnknownCampaign(pub String);

impl FromStr for Campaign {
    type Err = UnknownCampaign;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| UnknownCampaign(s.to_string()))
    }
}

/// A per-group result: verdict plus supporting data or failure witness.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub pass: bool,
    pub witness: Value,
}

impl Outcome {
    fn new(pass: bool, witness: Value) -> Self {
        Outcome { pass, witness }
    }
}

fn run_one(campaign: Campaign, e: &CorpusEntry, caps: Caps) -> GroupResult {
    let start = Instant::now();
    let result = e
        .spec
        .build(caps.order)
        .and_then(|g| campaign.check(e, &g, caps));
    let (verdict, witness) = match result {
        Ok(o) => (
            if o.pass { Verdict::Pass } else { Verdict::Fail },
            o.witness,
        ),
        Err(err @ (GroupError::OrderCap { .. } | GroupError::LatticeCap { .. })) => {
            (Verdict::SkippedCap, json!({ "reason": err.to_string() }))
        }
        Err(err) => (Verdict::Error, json!({ "error": err.to_string() })),
    };
    GroupResult {
        campaign: campaign.id().to_string(),
        name: e.name.clone(),
        spec: e.spec.to_string(),
        verdict,
        witness,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

fn run_pairs(pairs: Vec<(Campaign, CorpusEntry)>, caps: Caps) -> Vec<GroupResult> {
    pairs
        .par_iter()
        .map(|(c, e)| run_one(*c, e, caps))
        .collect()
}

/// Runs one campaign over the corpus entries carrying `tag`.
pub fn run_campaign(campaign: Campaign, tag: Option<&str>, caps: Caps) -> CampaignReport {
    let pairs = corpus::filtered(tag)
        .into_iter()
        .filter(|e| campaign.applies(e))
        .map(|e| (campaign, e))
        .collect();
    CampaignReport::new(campaign.id(), caps, run_pairs(pairs, caps))
}

/// Runs every campaign; results are grouped by campaign, then corpus order.
pub fn run_all(tag: Option<&str>, caps: Caps) -> CampaignReport {
    let entries = corpus::filtered(tag);
    let pairs = Campaign::ALL
        .into_iter()
        .flat_map(|c| {
            entries
                .iter()
                .filter(move |e| c.applies(e))
                .map(move |e| (c, e.clone()))
        })
        .collect();
    CampaignReport::new("all", caps, run_pairs(pairs, caps))
}

fn in_set(set: &[Elem], x: Elem) -> bool {
    set.binary_search(&x).is_ok()
}

fn prime_of(g: &FiniteGroup) -> Result<u64, GroupError> {
    prime_power_base(g.order() as u64).ok_or(GroupError::NotAPGroup(g.order()))
}

fn lcm_group_routes_agree(
    e: &CorpusEntry,
    g: &FiniteGroup,
    caps: Caps,
) -> Result<Outcome, GroupError> {
    let routes = lcm_group_routes(g);
    let cp2 = is_cp2(g);
    let mut pass = routes.routes_agree() && cp2.routes_agree();
    let mut witness = json!({ "lcm_group": routes, "cp2": cp2 });
    if e.has_tag(corpus::FROBENIUS_EXPECTED) {
        let frobenius = is_frobenius_with_kernel(g, &fitting_subgroup(g), caps.lattice)?;
        pass &= frobenius;
        witness["frobenius_with_fitting_kernel"] = json!(frobenius);
    }
    Ok(Outcome::new(pass, witness))
}

fn local_assembly(g: &FiniteGroup) -> Outcome {
    let slow = lcm_set(g);
    let fast = lcm_set_fast(g);
    let first_difference = g.elems().find(|&x| in_set(&slow, x) != in_set(&fast, x));
    Outcome::new(
        first_difference.is_none(),
        json!({ "lcm_size": slow.len(), "fast_size": fast.len(), "first_difference": first_difference }),
    )
}

fn local_sets(g: &FiniteGroup) -> Outcome {
    for p in prime_divisors(g.order() as u64) {
        let set = lcm_p_set(g, p);
        let generated = g.subgroup_generated(&set).expect("members of g");
        if prime_power_base(generated.order() as u64).is_some_and(|q| q != p) {
            return Outcome::new(
                false,
                json!({ "p": p, "generated_order": generated.order() }),
            );
        }
        for &x in &set {
            if let Some(y) = g.elems().find(|&y| !in_set(&set, g.conj(x, y))) {
                return Outcome::new(false, json!({ "p": p, "x": x, "conjugator": y }));
            }
        }
    }
    Outcome::new(true, Value::Null)
}

fn coprime_products(g: &FiniteGroup) -> Outcome {
    let set = lcm_set(g);
    let mut pairs = 0usize;
    for &x in &set {
        for &y in &set {
            if g.commute(x, y) && gcd(g.order_of(x), g.order_of(y)) == 1 {
                pairs += 1;
                if !in_set(&set, g.mul(x, y)) {
                    return Outcome::new(false, json!({ "x": x, "y": y }));
                }
            }
        }
    }
    Outcome::new(true, json!({ "pairs": pairs }))
}

fn omega_transfer(g: &FiniteGroup) -> Result<Outcome, GroupError> {
    if g.is_trivial() {
        return Ok(Outcome::new(true, Value::Null));
    }
    let p = prime_of(g)?;
    let o = omega(g, p, 1);
    let closed = o.is_closed();
    let quotient_cp2 = cp2_counterexample(quotient(g, &o.subgroup)?.image()).is_none();
    let cp2 = cp2_counterexample(g).is_none();
    Ok(Outcome::new(
        !(closed && quotient_cp2) || cp2,
        json!({ "omega_closed": closed, "quotient_cp2": quotient_cp2, "cp2": cp2 }),
    ))
}

fn omega_exponent(g: &FiniteGroup) -> Outcome {
    let Some(p) = prime_power_base(g.order() as u64) else {
        return Outcome::new(true, Value::Null);
    };
    let o = omega_of_set(g, &lcm_set(g), p, 1);
    let exponent = subgroup_exponent(g, &o.subgroup);
    Outcome::new(
        p % exponent == 0,
        json!({ "p": p, "exponent": exponent, "set_size": o.set.len(), "generated_order": o.subgroup.order() }),
    )
}

fn direct_products(e: &CorpusEntry, caps: Caps) -> Result<Outcome, GroupError> {
    let (left, right, product) = e
        .spec
        .build_factored(caps.order)?
        .ok_or_else(|| GroupError::OutOfRange(format!("{} is not a product", e.name)))?;
    let t = &product.group;
    let whole = lcm_set(t);
    let (lg, lh) = (lcm_set(&left), lcm_set(&right));
    for &a in &lg {
        for &b in &lh {
            let p = compose(
                &product.embed_left(left.perm(a)),
                &product.embed_right(right.perm(b)),
            )?;
            let x = t.element_of(&p).ok_or(GroupError::NotAnElement)?;
            if !in_set(&whole, x) {
                return Ok(Outcome::new(false, json!({ "left": a, "right": b })));
            }
        }
    }
    let coprime = gcd(left.exponent(), right.exponent()) == 1;
    let product_size = lg.len() * lh.len();
    let pass = !coprime || whole.len() == product_size;
    Ok(Outcome::new(
        pass,
        json!({ "coprime_exponents": coprime, "product_size": product_size, "lcm_size": whole.len() }),
    ))
}

fn fitting_sylow(g: &FiniteGroup) -> Outcome {
    let set = lcm_set(g);
    let mut checked = Vec::new();
    for p in prime_divisors(g.order() as u64) {
        let sylow = sylow_subgroup(g, p);
        if cp2_counterexample(&g.restrict(&sylow).group).is_some() {
            continue;
        }
        let core = p_core(g, p);
        if let Some(&x) = core.members().iter().find(|&&x| !in_set(&set, x)) {
            return Outcome::new(false, json!({ "p": p, "x": x }));
        }
        checked.push(p);
    }
    Outcome::new(true, json!({ "cp2_primes": checked }))
}

fn minimal_non_lcm(e: &CorpusEntry, g: &FiniteGroup, caps: Caps) -> Result<Outcome, GroupError> {
    let report = nlcm_check(g, caps.lattice)?;
    let expected = e.has_tag(corpus::NLCM_EXPECTED);
    let pass = report.structure_holds(g.order()) && (!expected || report.is_nlcm);
    Ok(Outcome::new(
        pass,
        serde_json::to_value(&report).expect("report serializes"),
    ))
}

fn upper_central_term(g: &FiniteGroup) -> Result<Outcome, GroupError> {
    if g.is_trivial() {
        return Ok(Outcome::new(true, Value::Null));
    }
    let p = prime_of(g)?;
    let z = upper_central_series(g).term(p as usize - 1).clone();
    for &x in z.members() {
        let m = lcm_member(g, x)?;
        if let Some(w) = m.failure {
            return Ok(Outcome::new(false, json!({ "x": x, "failure": w })));
        }
    }
    Ok(Outcome::new(true, json!({ "p": p, "z_order": z.order() })))
}

fn class_bound(e: &CorpusEntry, g: &FiniteGroup) -> Result<Outcome, GroupError> {
    let b = lc_class_bound_check(g)?;
    let mut witness = serde_json::to_value(b).expect("bound serializes");
    if e.has_tag(corpus::SHARP_BOUND) {
        witness["attains_bound"] = json!(b.lc_class == Some(b.bound));
    }
    Ok(Outcome::new(b.holds, witness))
}

fn invariant_series(e: &CorpusEntry, g: &FiniteGroup) -> Result<Outcome, GroupError> {
    let supersolvable = is_supersolvable(g);
    let whole = g.whole();
    let series = find_h_supersolvable_series(g, &whole)?;
    if supersolvable != e.has_tag(corpus::SUPERSOLVABLE_EXPECTED)
        || supersolvable != series.is_some()
    {
        return Ok(Outcome::new(
            false,
            json!({ "supersolvable": supersolvable, "series_found": series.is_some() }),
        ));
    }
    let mut checked = Vec::new();
    for target in [whole, fitting_subgroup(g), g.derived_subgroup(&g.whole())] {
        if let Some(s) = find_h_supersolvable_series(g, &target)? {
            if !verify_series_containment(g, &s)? {
                let orders: Vec<usize> = s.terms.iter().map(|t| t.order()).collect();
                return Ok(Outcome::new(false, json!({ "series_orders": orders })));
            }
            checked.push(target.order());
        }
    }
    Ok(Outcome::new(
        true,
        json!({ "supersolvable": supersolvable, "series_tops": checked }),
    ))
}

fn lc_nilpotent(e: &CorpusEntry, g: &FiniteGroup) -> Outcome {
    let s = lc_series(g);
    let lc_nilpotent = s.terminated_at_g && s.factors_nilpotent.iter().all(|&b| b);
    let required = e.has_tag(corpus::SUPERSOLVABLE_EXPECTED) || e.has_tag(corpus::SMALL_SHAPE);
    let pass = (!required || lc_nilpotent) && (!s.terminated_at_g || lc_nilpotent);
    Outcome::new(
        pass,
        json!({ "orders": s.orders(), "lc_class": s.lc_class, "lc_nilpotent": lc_nilpotent }),
    )
}

fn worked_example(e: &CorpusEntry, g: &FiniteGroup, caps: Caps) -> Result<Outcome, GroupError> {
    match e.name.as_str() {
        "Dih(8)" => Ok(d8_example(g)),
        "Alt(4)" => Ok(a4_example(g)),
        "prod(Dih(8),Dih(8))" => d8_squared_example(caps),
        _ => Ok(Outcome::new(
            true,
            json!({ "note": "no example bound to this entry" }),
        )),
    }
}

/// `LC(D8) = ⟨r⟩` with `r` the rotation generator.
pub fn d8_example(g: &FiniteGroup) -> Outcome {
    let r = g.generator_elems()[0];
    let lc = lc_subgroup(g);
    let expected = g.subgroup_generated(&[r]).expect("generator");
    Outcome::new(
        g.order_of(r) == 4 && lc == expected,
        json!({ "lc_order": lc.order(), "rotation_order": g.order_of(r) }),
    )
}

/// `LC_1(A4)` has order 4 and `LC_2(A4) = A4`; A4 is not supersolvable.
pub fn a4_example(g: &FiniteGroup) -> Outcome {
    let s = lc_series(g);
    Outcome::new(
        s.orders() == [1, 4, 12] && s.lc_class == Some(2) && !is_supersolvable(g),
        json!({ "orders": s.orders(), "lc_class": s.lc_class }),
    )
}

/// The elements `x, y` (rotation, reflection of the left factor) and
/// `a, b` (the same for the right factor) of `D8 × D8`.
pub struct D8Squared {
    pub group: FiniteGroup,
    pub x: Elem,
    pub y: Elem,
    pub a: Elem,
    pub b: Elem,
}

pub fn d8_squared(caps: Caps) -> Result<D8Squared, GroupError> {
    let spec = lcgroup_core::GroupSpec::parse("prod(Dih(8),Dih(8))")?;
    let (left, right, product) = spec.build_factored(caps.order)?.expect("a product");
    let embed = |p| product.group.element_of(&p).expect("embedded generator");
    let x = embed(product.embed_left(&left.generators()[0]));
    let y = embed(product.embed_left(&left.generators()[1]));
    let a = embed(product.embed_right(&right.generators()[0]));
    let b = embed(product.embed_right(&right.generators()[1]));
    Ok(D8Squared {
        group: product.group,
        x,
        y,
        a,
        b,
    })
}

fn d8_squared_example(caps: Caps) -> Result<Outcome, GroupError> {
    let D8Squared {
        group: t, x, y, a, ..
    } = d8_squared(caps)?;
    let xya = t.mul(t.mul(x, y), a);
    let set = lcm_set(&t);
    let in_lcm = in_set(&set, xya);
    let x_times_a = t.subgroup_generated(&[x, a])?;
    let outside = !x_times_a.contains(xya);
    let lc_strictly_larger = lc_subgroup(&t).order() > x_times_a.order();
    let n = t.subgroup_generated(&[t.mul(a, a)])?;
    let q = quotient(&t, &n)?;
    let image = q.forward(xya);
    let image_order = q.image().order_of(image);
    let image_in_lc = lc_subgroup(q.image()).contains(image);
    let shifted_order = q.image().order_of(q.forward(t.mul(xya, t.inv(y))));
    let pass = in_lcm
        && outside
        && lc_strictly_larger
        && image_order == 2
        && !image_in_lc
        && shifted_order == 4;
    Ok(Outcome::new(
        pass,
        json!({
            "xya_in_lcm": in_lcm,
            "xya_outside_x_times_a": outside,
            "lc_properly_contains_x_times_a": lc_strictly_larger,
            "image_order": image_order,
            "image_in_quotient_lc": image_in_lc,
            "image_times_y_inverse_order": shifted_order,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for c in Campaign::ALL {
            assert_eq!(c.id().parse::<Campaign>().unwrap(), c);
        }
        assert!("thm-9".parse::<Campaign>().is_err());
    }

    #[test]
    fn worked_examples_pass() {
        let r = run_campaign(Campaign::WorkedExamples, None, Caps::default());
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.groups.len(), 3);
    }

    #[test]
    fn cap_skips_instead_of_failing() {
        let caps = Caps {
            order: 30,
            lattice: 256,
        };
        let r = run_campaign(Campaign::LocalAssembly, Some(corpus::WORKED_EXAMPLE), caps);
        assert!(r.passed());
        assert_eq!(r.summary.skipped, 1);
    }
}
