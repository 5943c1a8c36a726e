//! The acceptance suite: every criterion enumerates its own instances.

use std::time::Instant;

use esemig_core::battery::{Battery, Leg, Verdict};
use esemig_core::classify::classify;
use esemig_core::enumerate::{
    enumerate_odot, identical_batteries, identical_characterization, identical_set_equality,
    EnumerationQuery, Method, Mode, Table, RAW_LIMIT_DEFAULT,
};
use esemig_core::factor::projection_theorem_check;
use esemig_core::gallery::{self, KLEIN_LABELS};
use esemig_core::joined::{
    grouplike_battery, ideal_subgroup_battery, image_ideal_battery, image_structure_battery,
    join_law_witness, joiner_identities, verify_join_law, LawMode,
};
use esemig_core::quotient::{decompose_class_united, quotient_isomorphism};
use esemig_core::rational::{rat, Rational, RationalJoined, Sampling};
use esemig_core::{Group, JoinedStructure, Result, Side, Subset};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::{fold, BatteryResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub order_max: usize,
    pub budget: usize,
    pub seed: u64,
    pub raw_limit: usize,
    #[serde(skip)]
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            order_max: 3,
            budget: 10_000,
            seed: 0,
            raw_limit: RAW_LIMIT_DEFAULT,
            timing: false,
        }
    }
}

impl SuiteConfig {
    fn sampling(&self) -> Sampling {
        Sampling {
            seed: self.seed,
            budget: self.budget,
        }
    }

    /// Raw scans up to here, generator mode above.
    fn raw_max(&self) -> usize {
        self.order_max.min(self.raw_limit)
    }

    fn generator_max(&self) -> usize {
        self.order_max.max(4)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub verdict: Verdict,
    pub batteries: Vec<BatteryResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub criteria: Vec<CriterionReport>,
    pub verdict: Verdict,
}

/// Left group-e-semigroup operations on one catalog group.
pub struct Instances {
    pub name: String,
    pub group: Group,
    pub method: Method,
    pub tables: Vec<Table>,
}

impl Instances {
    fn joined(&self, t: &Table) -> Result<JoinedStructure> {
        let dot = self.group.as_magma().clone();
        let odot = dot.with_table(t.clone())?;
        JoinedStructure::new(dot, odot, self.group.identity())
    }

    fn label(&self, t: &Table) -> String {
        format!("{} {t:?}", self.name)
    }
}

pub fn left_instances(config: &SuiteConfig) -> Result<Vec<Instances>> {
    gallery::group_catalog(config.generator_max())
        .into_par_iter()
        .map(|(name, group)| {
            let method = if group.order() <= config.raw_max() {
                Method::RawTable
            } else {
                Method::ViaF
            };
            let q = EnumerationQuery::new(
                group.as_magma().clone(),
                group.identity(),
                Mode::Left,
                method,
            )
            .raw_limit(config.raw_limit);
            let tables = enumerate_odot(&q)?.tables;
            Ok(Instances {
                name,
                group,
                method,
                tables,
            })
        })
        .collect()
}

/// One leg per battery name: all instances consistent, else the first
/// offending instance and legs.
pub fn summarize(name: &str, items: Vec<(String, Battery)>) -> Battery {
    let mut names: Vec<String> = Vec::new();
    for (_, b) in &items {
        if !names.contains(&b.name) {
            names.push(b.name.clone());
        }
    }
    let mut out = Battery::identities(name);
    for bname in names {
        let of_kind: Vec<&(String, Battery)> =
            items.iter().filter(|(_, b)| b.name == bname).collect();
        let bad = of_kind
            .iter()
            .find(|(_, b)| !b.consistent())
            .map(|(label, b)| {
                let mut w = vec![label.clone()];
                w.extend(b.offending_legs().iter().map(|l| l.label.clone()));
                w
            });
        out.push(Leg::from_witness(
            format!("{bname} ({} instances)", of_kind.len()),
            bad,
        ));
    }
    out
}

fn expect(label: impl Into<String>, actual: bool, expected: bool) -> Leg {
    let label = label.into();
    if actual == expected {
        Leg::new(label, true)
    } else {
        Leg::from_witness(
            label,
            Some(vec![format!("expected {expected}, got {actual}")]),
        )
    }
}

fn gallery_fidelity() -> Result<Vec<Battery>> {
    let mut b = Battery::identities("gallery classification");
    for n in 2..=6 {
        let r = classify(&gallery::min_semigroup(n)?);
        b.push(expect(
            format!("min_semigroup({n}) homogroup"),
            r.is_homogroup,
            true,
        ))
        .push(expect(
            format!("min_semigroup({n}) grouplike"),
            r.is_grouplike(),
            false,
        ))
        .push(expect(
            format!("min_semigroup({n}) kernel = {{0}}"),
            r.kernel == Subset::singleton(n, 0),
            true,
        ));
    }
    for n in 3..=6 {
        let r = classify(&gallery::omega_grouplike(n)?);
        b.push(expect(
            format!("omega_grouplike({n}) grouplike"),
            r.is_grouplike(),
            true,
        ))
        .push(expect(
            format!("omega_grouplike({n}) unipotent"),
            r.is_unipotent,
            false,
        ));
    }
    let k = gallery::klein_grouplike();
    let r = classify(&k);
    b.push(expect("klein_grouplike grouplike", r.is_grouplike(), true))
        .push(expect("klein_grouplike unipotent", r.is_unipotent, true))
        .push(expect(
            "klein_grouplike square-group",
            r.has_square_group_property(),
            true,
        ))
        .push(expect(
            "klein_grouplike kernel = {e, a}",
            k.labels(&r.kernel.to_vec()) == [KLEIN_LABELS[0], KLEIN_LABELS[1]],
            true,
        ));
    for n in 2..=7 {
        let j = gallery::zn_min_joined(n)?;
        let r = classify(&j.odot_semigroup()?);
        b.push(expect(
            format!("zn_min_joined({n}) two-sided 0-join law"),
            verify_join_law(&j, Side::Both, LawMode::Plain).holds,
            true,
        ))
        .push(expect(
            format!("zn_min_joined({n}) group-0-homogroup"),
            r.is_homogroup,
            true,
        ))
        .push(expect(
            format!("zn_min_joined({n}) group-0-grouplike"),
            r.is_grouplike(),
            false,
        ));
    }
    let mut consistency = Battery::identities("classification consistency");
    for (name, s) in [
        ("klein_grouplike".to_string(), k),
        (
            "omega_grouplike(4)".to_string(),
            gallery::omega_grouplike(4)?,
        ),
        ("min_semigroup(4)".to_string(), gallery::min_semigroup(4)?),
    ] {
        consistency.push(Leg::new(
            format!("{name} square-group characterizations agree"),
            classify(&s).square_group_consistent(),
        ));
    }
    Ok(vec![b, consistency])
}

fn structure_batteries(all: &[Instances]) -> Result<Vec<Battery>> {
    all.iter()
        .map(|inst| {
            let items = inst
                .tables
                .par_iter()
                .map(|t| {
                    let j = inst.joined(t)?;
                    let label = inst.label(t);
                    Ok(vec![
                        (label.clone(), ideal_subgroup_battery(&j)?),
                        (label.clone(), grouplike_battery(&j)?),
                        (label.clone(), image_structure_battery(&j)?),
                        (label.clone(), image_ideal_battery(&j)?),
                        (label, joiner_identities(&j)?),
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(summarize(
                &format!("{} left structures ({})", inst.name, inst.method),
                items.into_iter().flatten().collect(),
            ))
        })
        .collect()
}

fn set_equality(config: &SuiteConfig) -> Result<Vec<Battery>> {
    let expected = |name: &str| match name {
        "Z1" => Some(1),
        "Z2" => Some(3),
        "Z3" => Some(4),
        "Klein" => Some(17),
        _ => None,
    };
    let mut out = Vec::new();
    for (name, g) in gallery::group_catalog(config.generator_max()) {
        let r = identical_set_equality(&g, config.raw_max())?;
        let mut b = r.battery.clone();
        b.name = format!("{name} {}", b.name);
        if let Some(count) = expected(&name) {
            if let Some(raw) = &r.raw {
                b.push(expect(
                    format!("raw set has {count} operations"),
                    raw.len() == count,
                    true,
                ));
            }
            b.push(expect(
                format!("generated set has {count} operations"),
                r.associative_idempotent.len() == count && r.strong_decomposers.len() == count,
                true,
            ));
        }
        out.push(b);
        let ib = identical_batteries(&g, config.raw_max())?;
        let mut summary = summarize(
            &format!("{name} identical structures"),
            [ib.characterization, ib.consequences]
                .into_iter()
                .map(|b| (name.clone(), b))
                .collect(),
        );
        for leg in ib.counts.legs {
            summary.push(leg);
        }
        out.push(summary);
    }
    let j = gallery::zn_min_joined(5)?;
    let mut excl = Battery::identities("zn_min_joined(5) exclusion");
    excl.push(expect(
        "identical characterization agrees on false",
        identical_characterization(&j)?.common_value() == Some(false),
        true,
    ));
    out.push(excl);
    Ok(out)
}

fn projections(all: &[Instances]) -> Result<Vec<Battery>> {
    all.iter()
        .map(|inst| {
            let items = inst
                .tables
                .par_iter()
                .map(|t| {
                    Ok((
                        inst.label(t),
                        projection_theorem_check(&inst.joined(t)?)?.battery,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(summarize(
                &format!("{} joiner projections", inst.name),
                items,
            ))
        })
        .collect()
}

fn quotients(all: &[Instances]) -> Result<Vec<Battery>> {
    let mut out: Vec<Battery> = all
        .iter()
        .map(|inst| {
            let items = inst
                .tables
                .par_iter()
                .map(|t| {
                    let j = inst.joined(t)?;
                    let mut v = vec![(inst.label(t), quotient_isomorphism(&j)?.battery)];
                    let identical =
                        join_law_witness(j.dot(), j.odot(), j.e(), Side::Left, LawMode::Identical)
                            .is_none();
                    if identical {
                        let mut b = Battery::identities("class decomposition");
                        b.push(Leg::from_witness(
                            "(G,(.)) decomposes over its class group",
                            decompose_class_united(&j.odot_semigroup()?)
                                .err()
                                .map(|e| vec![e.to_string()]),
                        ));
                        v.push((inst.label(t), b));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(summarize(
                &format!("{} quotients", inst.name),
                items.into_iter().flatten().collect(),
            ))
        })
        .collect::<Result<_>>()?;
    let mut b = Battery::identities("gallery class decompositions");
    let k = decompose_class_united(&gallery::klein_grouplike())?;
    b.push(expect(
        "klein_grouplike class group has order 2",
        k.class_group.order() == 2,
        true,
    ))
    .push(expect(
        "klein_grouplike choice is {e, a}",
        k.choice == [0, 1],
        true,
    ))
    .push(expect(
        "min_semigroup(5) is not class united",
        decompose_class_united(&gallery::min_semigroup(5)?).is_err(),
        true,
    ));
    out.push(b);
    Ok(out)
}

pub fn rational_bs() -> Vec<Rational> {
    vec![rat(1, 1), rat(2, 1), rat(3, 2), rat(-1, 1)]
}

fn rational(config: &SuiteConfig) -> Result<Vec<Battery>> {
    rational_bs()
        .into_par_iter()
        .map(|b| Ok(RationalJoined::b_joined(b, config.sampling())?.battery()))
        .collect()
}

fn counterexamples() -> Result<Vec<Battery>> {
    let k = gallery::klein_group();
    let mut out = Vec::new();
    for (name, right) in [("x (.) y = x", false), ("x (.) y = y", true)] {
        let odot = k.with_rule(|x, y| if right { y } else { x });
        let j = JoinedStructure::new(k.as_magma().clone(), odot, k.identity())?;
        let left_law = verify_join_law(&j, Side::Left, LawMode::Plain).holds;
        let right_law = verify_join_law(&j, Side::Right, LawMode::Plain).holds;
        let homogroup = classify(&j.odot_semigroup()?).is_homogroup;
        let mut b = Battery::identities(format!("Klein, {name}"));
        b.push(expect("left e-join law", left_law, !right))
            .push(expect("right e-join law", right_law, right))
            .push(expect("two-sided", left_law && right_law, false))
            .push(expect("(K,(.)) homogroup", homogroup, false));
        out.push(b);
    }
    Ok(out)
}

/// Sample budget for the repeat run; the full run is already criterion 6.
const REPEAT_BUDGET: usize = 1_000;

fn determinism(config: &SuiteConfig) -> Result<Vec<Battery>> {
    let mut b = Battery::identities("repeatability");
    let short = SuiteConfig {
        budget: config.budget.min(REPEAT_BUDGET),
        ..*config
    };
    let first = rational(&short)?;
    let second = rational(&short)?;
    b.push(Leg::new(
        "sampled batteries repeat exactly",
        first == second,
    ));
    for n in 1..=config.raw_max() {
        let g = gallery::cyclic(n)?;
        let q = EnumerationQuery::new(g.as_magma().clone(), 0, Mode::Left, Method::RawTable)
            .raw_limit(config.raw_limit);
        b.push(Leg::new(
            format!("Z{n} parallel and serial enumeration agree"),
            enumerate_odot(&q)? == enumerate_odot(&q.clone().serial())?,
        ));
    }
    Ok(vec![b])
}

pub const CRITERIA: [&str; 8] = [
    "gallery fidelity",
    "ideal-subgroup, grouplike, e(.)S and joiner-map batteries",
    "identical set equality",
    "joiner projection",
    "quotient isomorphism",
    "rational b-grouplikes",
    "projection counterexamples",
    "determinism",
];

pub fn run(config: &SuiteConfig) -> Result<SuiteReport> {
    let instances = left_instances(config)?;
    let criteria = (1..=CRITERIA.len() as u32)
        .into_par_iter()
        .map(|id| {
            let start = Instant::now();
            let batteries = match id {
                1 => gallery_fidelity(),
                2 => structure_batteries(&instances),
                3 => set_equality(config),
                4 => projections(&instances),
                5 => quotients(&instances),
                6 => rational(config),
                7 => counterexamples(),
                _ => determinism(config),
            }?;
            let batteries: Vec<BatteryResult> = batteries.into_iter().map(Into::into).collect();
            Ok(CriterionReport {
                id,
                name: CRITERIA[id as usize - 1].to_string(),
                verdict: fold(batteries.iter().map(|b| b.verdict)),
                batteries,
                timing_ms: config.timing.then(|| start.elapsed().as_millis() as u64),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        config: *config,
        verdict: fold(criteria.iter().map(|c| c.verdict)),
        criteria,
    })
}
