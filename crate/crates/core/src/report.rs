//! Check items and suite reports shared by the verification suites, with
//! JSON as the contract and a markdown rendering for review.

use serde::Serialize;
use serde_json::Value;

/// One verified statement. Informational items record measured facts that
/// are not part of the pass/fail contract, such as a disagreement with a
/// published label.
#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub id: String,
    pub claim: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    pub details: Value,
}

impl CheckItem {
    pub fn new(id: impl Into<String>, claim: impl Into<String>, passed: bool, details: Value) -> Self {
        CheckItem {
            id: id.into(),
            claim: claim.into(),
            passed,
            informational: false,
            details,
        }
    }

    pub fn informational(
        id: impl Into<String>,
        claim: impl Into<String>,
        holds: bool,
        details: Value,
    ) -> Self {
        CheckItem {
            informational: true,
            ..CheckItem::new(id, claim, holds, details)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub items: Vec<CheckItem>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, seed: u64, samples: usize) -> Self {
        SuiteReport {
            suite: suite.into(),
            seed,
            samples,
            passed: true,
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, item: CheckItem) {
        if !item.passed && !item.informational {
            self.passed = false;
        }
        self.items.push(item);
    }

    pub fn extend(&mut self, items: impl IntoIterator<Item = CheckItem>) {
        for item in items {
            self.push(item);
        }
    }

    pub fn item(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items
            .iter()
            .filter(|i| !i.passed && !i.informational)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "# Suite `{}`\n\nseed {}, samples {}, result **{}**\n\n| id | claim | result |\n|---|---|---|\n",
            self.suite,
            self.seed,
            self.samples,
            if self.passed { "pass" } else { "FAIL" }
        );
        for i in &self.items {
            let status = match (i.passed, i.informational) {
                (true, false) => "pass",
                (false, false) => "FAIL",
                (true, true) => "holds (info)",
                (false, true) => "does not hold (info)",
            };
            out.push_str(&format!(
                "| `{}` | {} | {} |\n",
                i.id,
                i.claim.replace('|', "\\|"),
                status
            ));
        }
        out
    }
}
