//! Serializable reports and error records.

use std::collections::BTreeMap;

use esemig_core::battery::{Battery, Leg, Verdict};
use esemig_core::classify::{ClassificationFlags, ClassificationReport};
use esemig_core::{Magma, Subset};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::format::MagmaFile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureId {
    pub name: String,
    /// SHA-256 of the structure's canonical JSON.
    pub hash: String,
}

impl StructureId {
    pub fn of(name: impl Into<String>, file: &MagmaFile) -> Self {
        let canonical = serde_json::to_string(file).expect("serializable");
        Self {
            name: name.into(),
            hash: format!("{:x}", Sha256::digest(canonical.as_bytes())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryResult {
    pub verdict: Verdict,
    #[serde(flatten)]
    pub battery: Battery,
    /// The legs responsible for a failure.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Leg>,
}

impl From<Battery> for BatteryResult {
    fn from(battery: Battery) -> Self {
        let failures = battery.offending_legs().into_iter().cloned().collect();
        Self {
            verdict: battery.verdict(),
            battery,
            failures,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSummary {
    pub order: usize,
    pub idempotents: Vec<String>,
    pub center: Vec<String>,
    pub central_idempotents: Vec<String>,
    pub kernel: Vec<String>,
    pub flags: ClassificationFlags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grouplike_identity: Option<String>,
    pub bi_identities: usize,
}

pub fn labels(m: &Magma, s: &Subset) -> Vec<String> {
    m.labels(&s.to_vec())
}

impl ClassificationSummary {
    pub fn new(m: &Magma, r: &ClassificationReport) -> Self {
        Self {
            order: m.order(),
            idempotents: labels(m, &r.idempotents),
            center: labels(m, &r.center),
            central_idempotents: labels(m, &r.central_idempotents),
            kernel: labels(m, &r.kernel),
            flags: r.flags(),
            grouplike_identity: r.grouplike_identity.map(|e| m.name(e).to_string()),
            bi_identities: r.bi_identity_count,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationSummary>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
    pub batteries: Vec<BatteryResult>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            structure: None,
            classification: None,
            details: BTreeMap::new(),
            batteries: Vec::new(),
            verdict: Verdict::Skipped,
            timing_ms: None,
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.details.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable"),
        );
        self
    }

    pub fn battery(&mut self, b: Battery) -> &mut Self {
        self.batteries.push(b.into());
        self.verdict = fold(self.batteries.iter().map(|b| b.verdict));
        self
    }
}

/// Combined verdict; `skipped` only when nothing ran.
pub fn fold(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
    vs.into_iter().fold(Verdict::Skipped, Verdict::combine)
}

/// Rows of labels for a table.
pub fn table_rows(m: &Magma) -> Vec<Vec<String>> {
    let n = m.order();
    (0..n)
        .map(|x| (0..n).map(|y| m.name(m.op(x, y)).to_string()).collect())
        .collect()
}

/// The machine-readable record printed for an error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorRecord {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    pub exit_code: i32,
}

#[cfg(test)]
mod tests {
    use super::*;
    use esemig_core::gallery;

    #[test]
    fn report_round_trip() {
        let mut r = Report::new("classify");
        let mut b = Battery::equivalence("demo");
        b.push(Leg::new("x", true)).push(Leg::new("y", false));
        r.battery(b).detail("n", 3);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.batteries[0].failures.len(), 1);
        let s = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn structure_hash_is_stable() {
        let f = MagmaFile::from_semigroup(&gallery::klein_grouplike());
        let a = StructureId::of("k", &f);
        assert_eq!(a, StructureId::of("k", &f.clone()));
        assert_eq!(a.hash.len(), 64);
    }
}
