//! The shipped corpus of named groups with applicability tags.

use lcgroup_core::arith::{factorize, prime_power_base};
use lcgroup_core::GroupSpec;
use serde::Serialize;

pub const P_GROUP: &str = "p-group";
pub const WORKED_EXAMPLE: &str = "paper-example";
pub const SUPERSOLVABLE_EXPECTED: &str = "supersolvable-expected";
pub const FROBENIUS_EXPECTED: &str = "frobenius-expected";
pub const NLCM_EXPECTED: &str = "nlcm-expected";
pub const PRODUCT: &str = "product";
pub const SHARP_BOUND: &str = "sharp-bound";
/// Order `pq`, `pq²` or `pqr` for distinct primes.
pub const SMALL_SHAPE: &str = "pq-shape";

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(serialize_with = "spec_text")]
    pub spec: GroupSpec,
    pub tags: Vec<&'static str>,
    /// Known order, when the spec determines it without enumeration.
    pub order: Option<u64>,
}

impl CorpusEntry {
    pub fn new(spec: GroupSpec) -> Self {
        let order = spec_order(&spec);
        let mut tags = Vec::new();
        if order.and_then(prime_power_base).is_some() {
            tags.push(P_GROUP);
        }
        if matches!(spec, GroupSpec::Prod(..)) {
            tags.push(PRODUCT);
        }
        if supersolvable(&spec) {
            tags.push(SUPERSOLVABLE_EXPECTED);
        }
        if order.is_some_and(small_shape) {
            tags.push(SMALL_SHAPE);
        }
        CorpusEntry {
            name: spec.to_string(),
            spec,
            tags,
            order,
        }
    }

    fn tag(mut self, tag: &'static str) -> Self {
        if !self.tags.contains(&tag) {
            self.tags.push(tag);
        }
        self
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(&tag)
    }
}

fn spec_text<S: serde::Serializer>(spec: &GroupSpec, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(spec)
}

fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// The order a spec describes, computed from its parameters.
pub fn spec_order(spec: &GroupSpec) -> Option<u64> {
    match spec {
        GroupSpec::Cyc(n) | GroupSpec::Dih(n) => Some(*n),
        GroupSpec::Dic(n) => n.checked_mul(4),
        GroupSpec::Sym(n) => factorial(*n),
        GroupSpec::Alt(n) => factorial(*n).map(|f| (f / 2).max(1)),
        GroupSpec::ElemAb(p, k) => p.checked_pow(u32::try_from(*k).ok()?),
        GroupSpec::Heis(p) => p.checked_pow(3),
        GroupSpec::Wr(p) => p.checked_pow(u32::try_from(p + 1).ok()?),
        GroupSpec::File(_) => None,
        GroupSpec::Prod(a, b) => spec_order(a)?.checked_mul(spec_order(b)?),
    }
}

fn supersolvable(spec: &GroupSpec) -> bool {
    match spec {
        GroupSpec::Sym(n) | GroupSpec::Alt(n) => *n <= 3,
        GroupSpec::File(_) => false,
        GroupSpec::Prod(a, b) => supersolvable(a) && supersolvable(b),
        _ => true,
    }
}

fn small_shape(order: u64) -> bool {
    let f = factorize(order);
    let exps: Vec<u32> = f.iter().map(|&(_, e)| e).collect();
    matches!(exps.as_slice(), [1, 1] | [1, 2] | [2, 1] | [1, 1, 1])
}

fn parse(text: &str) -> GroupSpec {
    GroupSpec::parse(text).expect("corpus specs parse")
}

/// The shipped corpus, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    use GroupSpec::*;
    let mut out: Vec<CorpusEntry> = Vec::new();
    out.extend((1..=24).map(|n| CorpusEntry::new(Cyc(n))));
    for n in 1..=16u64 {
        let mut e = CorpusEntry::new(Dih(2 * n));
        if n > 1 && n % 2 == 1 {
            e = e.tag(FROBENIUS_EXPECTED);
        }
        if n == 4 {
            e = e.tag(WORKED_EXAMPLE);
        }
        if n == 4 || (n > 2 && lcgroup_core::arith::is_prime(n) && n % 2 == 1) {
            e = e.tag(NLCM_EXPECTED);
        }
        out.push(e);
    }
    out.extend((2..=5).map(|n| CorpusEntry::new(Dic(n))));
    out.push(
        CorpusEntry::new(Sym(3))
            .tag(FROBENIUS_EXPECTED)
            .tag(NLCM_EXPECTED),
    );
    out.push(CorpusEntry::new(Sym(4)));
    out.push(CorpusEntry::new(Sym(5)));
    out.push(
        CorpusEntry::new(Alt(4))
            .tag(WORKED_EXAMPLE)
            .tag(FROBENIUS_EXPECTED)
            .tag(NLCM_EXPECTED),
    );
    out.push(CorpusEntry::new(Alt(5)));
    for p in [2, 3, 5] {
        out.extend((1..=3).map(|k| CorpusEntry::new(ElemAb(p, k))));
    }
    out.push(CorpusEntry::new(Heis(3)));
    out.push(CorpusEntry::new(Wr(2)).tag(SHARP_BOUND));
    out.push(CorpusEntry::new(Wr(3)).tag(SHARP_BOUND));
    out.push(CorpusEntry::new(parse("prod(Dih(8),Dih(8))")).tag(WORKED_EXAMPLE));
    for text in [
        "prod(Dih(8),Cyc(3))",
        "prod(Cyc(2),Sym(3))",
        "prod(Sym(3),Cyc(3))",
        "prod(Sym(3),Cyc(5))",
        "prod(Alt(4),Cyc(5))",
        "prod(Dic(2),Cyc(3))",
        "prod(Dih(6),Cyc(4))",
        "prod(Dih(10),Cyc(3))",
        "prod(Sym(3),Sym(3))",
        "prod(Cyc(4),Dih(8))",
        "prod(Dic(2),Cyc(2))",
        "prod(Alt(4),Cyc(2))",
        "prod(Dih(8),Cyc(5))",
        "prod(Heis(3),Cyc(3))",
        "prod(Sym(4),Cyc(5))",
    ] {
        out.push(CorpusEntry::new(parse(text)));
    }
    out
}

/// Entries carrying `tag`, or all entries when `tag` is `None`.
pub fn filtered(tag: Option<&str>) -> Vec<CorpusEntry> {
    corpus()
        .into_iter()
        .filter(|e| tag.is_none_or(|t| e.has_tag(t)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique() {
        let c = corpus();
        let mut names: Vec<&str> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
        assert!(c.len() >= 40);
    }

    #[test]
    fn orders_match_construction() {
        for e in corpus() {
            let g = e.spec.build(5000).unwrap();
            assert_eq!(Some(g.order() as u64), e.order, "{}", e.name);
        }
    }

    #[test]
    fn required_orders_present() {
        let c = corpus();
        for n in [6, 10, 12, 18, 20, 30] {
            assert!(c
                .iter()
                .any(|e| e.order == Some(n) && e.has_tag(SMALL_SHAPE)));
        }
        assert!(c.iter().filter(|e| e.has_tag(PRODUCT)).count() >= 10);
    }
}
