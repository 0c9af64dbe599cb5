//! Verification reports and their JSON / text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::ideal::MonomialIdeal;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

/// What the check asserts: a containment, or that a containment fails.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    #[default]
    Holds,
    NonContainment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub instance: BTreeMap<String, String>,
    pub verdict: Verdict,
    #[serde(default)]
    pub expect: Expectation,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn new(theorem_id: impl Into<String>) -> Self {
        VerificationReport {
            theorem_id: theorem_id.into(),
            instance: BTreeMap::new(),
            verdict: Verdict::Pass,
            expect: Expectation::Holds,
            lhs: Vec::new(),
            rhs: Vec::new(),
            witness: None,
            reason: None,
            error: None,
            millis: 0,
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.instance.insert(key.to_string(), value.to_string());
        self
    }

    pub fn sides(mut self, lhs: &MonomialIdeal, rhs: &MonomialIdeal) -> Self {
        self.lhs = lhs.generator_strings();
        self.rhs = rhs.generator_strings();
        self
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness.into());
        self
    }

    pub fn skip(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Skip;
        self.reason = Some(reason.into());
        self
    }

    pub fn errored(mut self, err: &crate::Error) -> Self {
        self.verdict = Verdict::Fail;
        self.error = Some(err.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ring: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            count: 100,
            ring: None,
            n: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub format_version: u32,
    pub suite: String,
    pub config: SuiteConfig,
    pub results: Vec<VerificationReport>,
    pub totals: Totals,
}

impl SuiteReport {
    pub fn new(suite: &str, config: SuiteConfig, results: Vec<VerificationReport>) -> Self {
        let mut totals = Totals::default();
        for r in &results {
            match r.verdict {
                Verdict::Pass => totals.pass += 1,
                Verdict::Fail => totals.fail += 1,
                Verdict::Skip => totals.skip += 1,
            }
        }
        SuiteReport {
            format_version: FORMAT_VERSION,
            suite: suite.to_string(),
            config,
            results,
            totals,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.totals.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The JSON value with every timing field zeroed.
    pub fn without_timings(&self) -> serde_json::Value {
        let mut copy = self.clone();
        for r in &mut copy.results {
            r.millis = 0;
        }
        serde_json::to_value(copy).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let verdict = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skip => "SKIP",
            };
            let inst: Vec<String> = r.instance.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = write!(out, "{verdict} {} [{}]", r.theorem_id, inst.join("; "));
            if r.expect == Expectation::NonContainment {
                out.push_str(" expect=non-containment");
            }
            if let Some(w) = &r.witness {
                let _ = write!(out, " witness={w}");
            }
            if let Some(reason) = &r.reason {
                let _ = write!(out, " reason={reason}");
            }
            if let Some(e) = &r.error {
                let _ = write!(out, " error={e}");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{}: {} pass, {} fail, {} skip",
            self.suite, self.totals.pass, self.totals.fail, self.totals.skip
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_match_results() {
        let results = vec![
            VerificationReport::new("a"),
            VerificationReport::new("b").fail("x*z"),
            VerificationReport::new("c").skip("n < 2"),
            VerificationReport::new("d"),
        ];
        let rep = SuiteReport::new("demo", SuiteConfig::default(), results);
        assert_eq!(rep.totals, Totals { pass: 2, fail: 1, skip: 1 });
        assert!(rep.has_failures());
    }

    #[test]
    fn json_schema_round_trip() {
        let rep = SuiteReport::new(
            "demo",
            SuiteConfig::default(),
            vec![VerificationReport::new("a").with("t", "1/2").fail("x")],
        );
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["format_version"], 1);
        assert_eq!(v["results"][0]["verdict"], "FAIL");
        assert_eq!(v["results"][0]["witness"], "x");
        assert_eq!(v["results"][0]["expect"], "holds");
        assert!(v["results"][0].get("reason").is_none());
        let back: SuiteReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep);
    }
}
