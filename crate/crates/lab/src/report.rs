//! Report records: per-check results and the JSON output formats of the
//! CLI.

use serde::Serialize;
use zerosum_core::invariants::{InvariantReport, InvariantValue, Mode};
use zerosum_core::LengthSet;

/// How a check verifies its claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    /// Verify the displayed witnesses (factorizations, memberships).
    Witness,
    /// Exhaustive equality over the stated finite range.
    Full,
}

/// Rough runtime class, for scheduling and documentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuntimeClass {
    /// Well under a second.
    Instant,
    /// Seconds.
    Fast,
    /// Tens of seconds to minutes.
    Heavy,
    /// Opt-in only; no runtime promise.
    Long,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "status", content = "reason")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

/// One verified sub-claim: what was claimed, what was computed.
#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

impl Claim {
    pub fn compare<T: PartialEq + std::fmt::Display>(
        claim: impl Into<String>,
        expected: T,
        computed: T,
    ) -> Claim {
        Claim {
            claim: claim.into(),
            ok: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
        }
    }

    pub fn assert(claim: impl Into<String>, ok: bool) -> Claim {
        Claim {
            claim: claim.into(),
            expected: "true".into(),
            computed: ok.to_string(),
            ok,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub paper_location: String,
    pub mode: CheckMode,
    #[serde(flatten)]
    pub status: CheckStatus,
    pub claims: Vec<Claim>,
    /// Sub-claims that were deliberately not run, with reasons.
    pub skipped_claims: Vec<String>,
    pub runtime_ms: u128,
}

impl CheckReport {
    /// Status is pass iff every sub-claim verified; a failing report keeps
    /// the first mismatch at the head of its claim list for display.
    pub fn passed(&self) -> bool {
        matches!(self.status, CheckStatus::Pass)
    }

    pub fn first_failure(&self) -> Option<&Claim> {
        self.claims.iter().find(|c| !c.ok)
    }
}

/// One text line per report: id, status, claim counts, first failure.
pub fn render_table(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = match &r.status {
            CheckStatus::Pass => "PASS".to_string(),
            CheckStatus::Fail => "FAIL".to_string(),
            CheckStatus::Skipped(reason) => format!("SKIP ({reason})"),
        };
        let ok = r.claims.iter().filter(|c| c.ok).count();
        out.push_str(&format!(
            "{:24} {:4} {:>3}/{:<3} claims {:>8} ms  {}\n",
            r.check_id,
            status,
            ok,
            r.claims.len(),
            r.runtime_ms,
            r.paper_location,
        ));
        if let Some(fail) = r.first_failure() {
            out.push_str(&format!(
                "{:24}      first mismatch: {} (expected {}, computed {})\n",
                "", fail.claim, fail.expected, fail.computed
            ));
        }
        for s in &r.skipped_claims {
            out.push_str(&format!("{:24}      skipped: {}\n", "", s));
        }
    }
    out
}

/// JSON record for `lengths` results.
#[derive(Clone, Debug, Serialize)]
pub struct LengthsRecord {
    pub group: String,
    pub sequence: String,
    pub length_set: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catenary: Option<u64>,
}

/// JSON shape of an invariant report.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantRecord {
    pub invariant: String,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<String>,
    pub value: serde_json::Value,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
}

impl From<&InvariantReport> for InvariantRecord {
    fn from(r: &InvariantReport) -> Self {
        let value = match &r.value {
            InvariantValue::Integer(v) => serde_json::json!(v),
            InvariantValue::Rational(q) => {
                if q.is_integer() {
                    serde_json::json!(q.to_integer())
                } else {
                    serde_json::json!(format!("{}/{}", q.numer(), q.denom()))
                }
            }
            InvariantValue::IntegerSet(v) => serde_json::json!(v),
            InvariantValue::Undefined => serde_json::Value::Null,
        };
        let (mode, bound) = match r.mode {
            Mode::Exact => ("exact".to_string(), None),
            Mode::Bounded(b) => ("bounded".to_string(), Some(b)),
        };
        InvariantRecord {
            invariant: r.invariant.to_string(),
            group: r.group.clone(),
            subset: r.subset.clone(),
            value,
            mode,
            bound,
        }
    }
}

/// JSON shape of an AMP descriptor.
#[derive(Clone, Debug, Serialize)]
pub struct AmpRecord {
    pub d: u64,
    pub period: Vec<u64>,
    pub ell: u64,
    pub offset: u64,
}

impl From<&zerosum_core::structure::AmpDescriptor> for AmpRecord {
    fn from(a: &zerosum_core::structure::AmpDescriptor) -> Self {
        AmpRecord {
            d: a.difference,
            period: a.period.clone(),
            ell: a.length,
            offset: a.offset,
        }
    }
}

pub fn lengths_json(l: &LengthSet) -> Vec<u64> {
    l.values().to_vec()
}
