//! Campaign reports and their JSON form.

use lcgroup_core::Caps;
use serde::Serialize;
use serde_json::Value;

pub const ENGINE_NAME: &str = "lcgroup";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Fields excluded when comparing two reports.
pub const TIMING_FIELDS: &[&str] = &["wall_time_ms"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped: cap")]
    SkippedCap,
    #[serde(rename = "error")]
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Engine {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            name: ENGINE_NAME,
            version: ENGINE_VERSION,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupResult {
    pub campaign: String,
    pub name: String,
    pub spec: String,
    pub verdict: Verdict,
    /// Failure witness, or supporting data on success.
    pub witness: Value,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
}

impl Summary {
    pub fn of(groups: &[GroupResult]) -> Self {
        let count = |v: Verdict| groups.iter().filter(|g| g.verdict == v).count();
        Summary {
            total: groups.len(),
            passed: count(Verdict::Pass),
            failed: count(Verdict::Fail),
            skipped: count(Verdict::SkippedCap),
            errors: count(Verdict::Error),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub engine: Engine,
    pub caps: Caps,
    pub groups: Vec<GroupResult>,
    pub summary: Summary,
}

impl CampaignReport {
    pub fn new(campaign: impl Into<String>, caps: Caps, groups: Vec<GroupResult>) -> Self {
        let summary = Summary::of(&groups);
        CampaignReport {
            campaign: campaign.into(),
            engine: Engine::default(),
            caps,
            groups,
            summary,
        }
    }

    /// Passes iff nothing failed or errored.
    pub fn passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.errors == 0
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.groups {
            let verdict = serde_json::to_value(&g.verdict).expect("verdict serializes");
            let verdict = verdict.as_str().unwrap_or_default();
            out.push_str(&format!("{:<14} {:<28} {verdict}", g.campaign, g.name));
            if g.verdict != Verdict::Pass && !g.witness.is_null() {
                out.push_str(&format!("  {}", g.witness));
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{}: {} total, {} passed, {} failed, {} skipped, {} errors\n",
            self.campaign, s.total, s.passed, s.failed, s.skipped, s.errors
        ));
        out
    }
}

/// Removes every timing field, recursively.
pub fn strip_timing(value: &Value) -> Value {
    match value {
        Value::Object(map) => Value::Object(
            map.iter()
                .filter(|(k, _)| !TIMING_FIELDS.contains(&k.as_str()))
                .map(|(k, v)| (k.clone(), strip_timing(v)))
                .collect(),
        ),
        Value::Array(items) => Value::Array(items.iter().map(strip_timing).collect()),
        other => other.clone(),
    }
}
