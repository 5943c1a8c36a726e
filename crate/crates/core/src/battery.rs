//! Structured results for theorem batteries and law checks.

use serde::{Deserialize, Serialize};

/// Outcome of a check, distinguishing exhaustive proof from sampled evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ProvedPass,
    SampledPass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        matches!(self, Verdict::ProvedPass | Verdict::SampledPass)
    }

    /// Folds verdicts: any fail wins, then sampled, then proved. Skips are neutral.
    pub fn combine(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Skipped, v) | (v, Skipped) => v,
            (SampledPass, _) | (_, SampledPass) => SampledPass,
            (ProvedPass, ProvedPass) => ProvedPass,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BatteryKind {
    /// Every leg must have the same truth value.
    Equivalence,
    /// Every leg must hold.
    Identities,
}

/// One condition of a battery, with the first violating tuple when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leg {
    pub label: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// Not evaluated; ignored by consistency checks.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
}

impl Leg {
    pub fn new(label: impl Into<String>, holds: bool) -> Self {
        Self {
            label: label.into(),
            holds,
            witness: None,
            skipped: false,
        }
    }

    pub fn skipped(label: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            holds: true,
            witness: Some(vec![reason.into()]),
            skipped: true,
        }
    }

    /// A leg that holds iff `witness` is `None`.
    pub fn from_witness(label: impl Into<String>, witness: Option<Vec<String>>) -> Self {
        Self {
            label: label.into(),
            holds: witness.is_none(),
            witness,
            skipped: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Battery {
    pub name: String,
    pub kind: BatteryKind,
    pub evidence: Evidence,
    pub legs: Vec<Leg>,
}

impl Battery {
    pub fn new(name: impl Into<String>, kind: BatteryKind, evidence: Evidence) -> Self {
        Self {
            name: name.into(),
            kind,
            evidence,
            legs: Vec::new(),
        }
    }

    pub fn equivalence(name: impl Into<String>) -> Self {
        Self::new(name, BatteryKind::Equivalence, Evidence::Exhaustive)
    }

    pub fn identities(name: impl Into<String>) -> Self {
        Self::new(name, BatteryKind::Identities, Evidence::Exhaustive)
    }

    pub fn sampled(mut self) -> Self {
        self.evidence = Evidence::Sampled;
        self
    }

    /// One leg per instance battery, holding when that battery is consistent
    /// and naming its offending legs otherwise.
    pub fn aggregate(
        name: impl Into<String>,
        items: impl IntoIterator<Item = (String, Battery)>,
    ) -> Self {
        let mut out = Self::identities(name);
        for (label, b) in items {
            if b.evidence == Evidence::Sampled {
                out.evidence = Evidence::Sampled;
            }
            let bad: Vec<String> = b.offending_legs().iter().map(|l| l.label.clone()).collect();
            out.legs.push(Leg::from_witness(
                format!("{label}: {}", b.name),
                (!bad.is_empty()).then_some(bad),
            ));
        }
        out
    }

    pub fn push(&mut self, leg: Leg) -> &mut Self {
        self.legs.push(leg);
        self
    }

    pub fn leg(&self, label: &str) -> Option<&Leg> {
        self.legs.iter().find(|l| l.label == label)
    }

    pub fn holds(&self, label: &str) -> Option<bool> {
        self.leg(label).map(|l| l.holds)
    }

    /// The shared truth value of an equivalence battery, if its legs agree.
    pub fn common_value(&self) -> Option<bool> {
        let mut legs = self.evaluated();
        let first = legs.next()?.holds;
        legs.all(|l| l.holds == first).then_some(first)
    }

    fn evaluated(&self) -> impl Iterator<Item = &Leg> + '_ {
        self.legs.iter().filter(|l| !l.skipped)
    }

    pub fn consistent(&self) -> bool {
        match self.kind {
            BatteryKind::Equivalence => {
                self.evaluated().next().is_none() || self.common_value().is_some()
            }
            BatteryKind::Identities => self.evaluated().all(|l| l.holds),
        }
    }

    pub fn verdict(&self) -> Verdict {
        if !self.legs.is_empty() && self.evaluated().next().is_none() {
            return Verdict::Skipped;
        }
        match (self.consistent(), self.evidence) {
            (false, _) => Verdict::Fail,
            (true, Evidence::Exhaustive) => Verdict::ProvedPass,
            (true, Evidence::Sampled) => Verdict::SampledPass,
        }
    }

    /// Legs that break consistency: failing identities, or the minority side
    /// of a split equivalence.
    pub fn offending_legs(&self) -> Vec<&Leg> {
        match self.kind {
            BatteryKind::Identities => self.evaluated().filter(|l| !l.holds).collect(),
            BatteryKind::Equivalence => {
                let total = self.evaluated().count();
                let trues = self.evaluated().filter(|l| l.holds).count();
                let minority = trues * 2 < total;
                if self.consistent() {
                    Vec::new()
                } else {
                    self.evaluated().filter(|l| l.holds == minority).collect()
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equivalence_consistency() {
        let mut b = Battery::equivalence("t");
        b.push(Leg::new("a", false)).push(Leg::new("b", false));
        assert_eq!(b.common_value(), Some(false));
        assert_eq!(b.verdict(), Verdict::ProvedPass);
        b.push(Leg::new("c", true));
        assert_eq!(b.verdict(), Verdict::Fail);
        assert_eq!(b.offending_legs()[0].label, "c");
    }

    #[test]
    fn identities_need_every_leg() {
        let mut b = Battery::identities("t").sampled();
        b.push(Leg::from_witness("x", None));
        assert_eq!(b.verdict(), Verdict::SampledPass);
        b.push(Leg::from_witness("y", Some(vec!["1".into()])));
        assert_eq!(b.verdict(), Verdict::Fail);
    }

    #[test]
    fn verdict_folding() {
        use Verdict::*;
        assert_eq!(ProvedPass.combine(SampledPass), SampledPass);
        assert_eq!(Skipped.combine(ProvedPass), ProvedPass);
        assert_eq!(SampledPass.combine(Fail), Fail);
        assert_eq!(Skipped.combine(Skipped), Skipped);
    }
}
