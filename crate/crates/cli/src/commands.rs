//! One function per subcommand, each returning a report.

use std::path::Path;

use esemig_core::battery::{Battery, Leg};
use esemig_core::classify::{classify, zeroids};
use esemig_core::enumerate::{enumerate_odot, EnumerationQuery, Method, Mode, RAW_LIMIT_DEFAULT};
use esemig_core::factor::projection_theorem_check;
use esemig_core::gallery::{build, Builder, GalleryItem};
use esemig_core::joined::{join_law_witness, josemig_failure, LawMode};
use esemig_core::quotient::quotient_isomorphism;
use esemig_core::rational::Sampling;
use esemig_core::{AlgebraError, JoinedStructure, Magma, Semigroup, Side};

use crate::format::MagmaFile;
use crate::report::{labels, table_rows, ClassificationSummary, Report, StructureId};
use crate::{CliError, CliResult};

fn structure_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn associativity_leg(label: &str, m: &Magma) -> Leg {
    Leg::from_witness(
        label,
        m.associativity_counterexample()
            .map(|(x, y, z)| m.labels(&[x, y, z])),
    )
}

pub fn classify_file(path: &Path, op: Option<&str>) -> CliResult<Report> {
    let file = MagmaFile::load(path)?;
    let m = file.magma_named(op)?;
    let s = Semigroup::new(m)?;
    let mut report = Report::new("classify");
    report.structure = Some(StructureId::of(structure_name(path), &file));
    Ok(classify_semigroup(report, &s))
}

pub fn classify_semigroup(mut report: Report, s: &Semigroup) -> Report {
    let r = classify(s);
    report.classification = Some(ClassificationSummary::new(s, &r));
    let mut b = Battery::equivalence("square-group characterizations");
    b.push(Leg::new("S·S is a subgroup", r.square_group_direct))
        .push(Leg::new(
            "homogroup, unique central idempotent e, exy = xy",
            r.square_group_conditions,
        ))
        .push(Leg::new(
            "grouplike with bi-identity",
            r.square_group_grouplike,
        ));
    report.battery(b);
    if r.is_homogroup {
        let mut z = Battery::identities("homogroup kernel");
        z.push(Leg::new("zeroids form the kernel", zeroids(s) == r.kernel));
        report.battery(z);
    }
    report.detail("zeroids", labels(s, &zeroids(s)));
    report
}

fn load_joined(path: &Path, e: Option<&str>) -> CliResult<(MagmaFile, JoinedStructure)> {
    let file = MagmaFile::load(path)?;
    let j = file.joined(e)?;
    Ok((file, j))
}

fn joined_report(command: &str, path: &Path, file: &MagmaFile, j: &JoinedStructure) -> Report {
    let mut report = Report::new(command);
    report.structure = Some(StructureId::of(structure_name(path), file));
    report.detail("e", j.names()[j.e()].clone());
    report
}

pub fn verify_file(path: &Path, e: Option<&str>, mode: Mode) -> CliResult<Report> {
    let (file, j) = load_joined(path, e)?;
    let mut report = joined_report("verify", path, &file, &j);
    report.detail("mode", mode.as_str());
    let mut b = Battery::identities(format!("{mode} e-semig"));
    b.push(associativity_leg("first operation associative", j.dot()))
        .push(associativity_leg("second operation associative", j.odot()));
    let names = |xs: &[usize]| j.dot().labels(xs);
    match mode {
        Mode::Josemig => {
            b.push(Leg::from_witness(
                "left e-join law at every joiner",
                josemig_failure(j.dot(), j.odot(), Side::Left).map(|(e, w)| names(&[e, w.x, w.y])),
            ));
        }
        _ => {
            let (side, law) = match mode {
                Mode::Left => (Side::Left, LawMode::Plain),
                Mode::Right => (Side::Right, LawMode::Plain),
                Mode::TwoSided => (Side::Both, LawMode::Plain),
                _ => (Side::Both, LawMode::Identical),
            };
            let w = join_law_witness(j.dot(), j.odot(), j.e(), side, law);
            if let Some(w) = w {
                report.detail("counterexample_side", w.side);
            }
            let label = match law {
                LawMode::Plain => "e-join law",
                LawMode::Identical => "identical e-join law",
            };
            b.push(Leg::from_witness(label, w.map(|w| names(&[w.x, w.y]))));
        }
    }
    report.battery(b);
    Ok(report)
}

pub fn quotient_file(path: &Path, e: Option<&str>) -> CliResult<Report> {
    let (file, j) = load_joined(path, e)?;
    let mut report = joined_report("quotient", path, &file, &j);
    let r = quotient_isomorphism(&j)?;
    let d = &r.diagram;
    let classes: Vec<Vec<String>> = d
        .partition
        .classes
        .iter()
        .map(|c| labels(j.dot(), c))
        .collect();
    report
        .detail("classes", classes)
        .detail("quotient_elements", d.table.names())
        .detail("quotient_table", table_rows(&d.table))
        .detail("lambda", j.dot().labels(&d.lambda));
    if let Some(delta) = &r.delta {
        report.detail("delta", labels(j.dot(), delta));
    }
    report.battery(r.battery);
    Ok(report)
}

pub fn factorize_file(path: &Path, e: Option<&str>) -> CliResult<Report> {
    let (file, j) = load_joined(path, e)?;
    let mut report = joined_report("factorize", path, &file, &j);
    let r = projection_theorem_check(&j)?;
    report
        .detail("delta", labels(j.dot(), &r.delta))
        .detail("omega", labels(j.dot(), &r.omega))
        .detail(
            "p_omega",
            j.dot().labels(j.left_joiner().mapping.as_slice()),
        );
    report.battery(r.battery);
    Ok(report)
}

pub struct EnumerateArgs<'a> {
    pub group: &'a str,
    pub e: Option<&'a str>,
    pub mode: Mode,
    pub method: Method,
    pub raw_limit: usize,
    pub long_run: bool,
    pub dump: bool,
}

fn base_of(item: GalleryItem) -> CliResult<(Magma, Option<usize>)> {
    Ok(match item {
        GalleryItem::Group(g) => {
            let e = g.identity();
            (g.into_magma(), Some(e))
        }
        GalleryItem::Semigroup(s) => (s.into_magma(), None),
        GalleryItem::Magma(m) => (m, None),
        _ => {
            return Err(CliError::Usage(
                "enumeration needs a finite single-operation base".into(),
            ))
        }
    })
}

pub fn enumerate(args: &EnumerateArgs<'_>) -> CliResult<Report> {
    if args.raw_limit > RAW_LIMIT_DEFAULT && !args.long_run {
        return Err(AlgebraError::SizeLimit(format!(
            "raw limit {} needs --long-run",
            args.raw_limit
        ))
        .into());
    }
    let builder: Builder = args.group.parse()?;
    let (base, identity) = base_of(build(&builder, Sampling::default())?)?;
    let e = match (args.e, identity) {
        (Some(label), _) => base
            .index_of(label)
            .ok_or_else(|| AlgebraError::InvalidParameter(format!("unknown element `{label}`")))?,
        (None, Some(e)) => e,
        (None, None) => {
            return Err(CliError::Usage(
                "--e is required for non-group bases".into(),
            ))
        }
    };
    let q =
        EnumerationQuery::new(base.clone(), e, args.mode, args.method).raw_limit(args.raw_limit);
    let r = enumerate_odot(&q)?;
    let mut report = Report::new("enumerate");
    report
        .detail("base", builder.to_string())
        .detail("e", base.name(e))
        .detail("mode", args.mode.as_str())
        .detail("method", args.method.as_str())
        .detail("count", r.tables.len());
    if let Some(raw) = &r.raw {
        report.detail("raw_count", raw.len());
    }
    if let Some(generated) = &r.generated {
        report.detail("generated_count", generated.len());
    }
    if args.dump {
        let dump: Vec<Vec<Vec<String>>> = r
            .tables
            .iter()
            .map(|t| {
                table_rows(
                    &base
                        .with_table(t.clone())
                        .expect("enumerated tables are valid"),
                )
            })
            .collect();
        report.detail("tables", dump);
    }
    let mut b = Battery::identities("enumeration");
    b.push(Leg::new(
        "every table satisfies the mode",
        r.tables
            .iter()
            .all(|t| esemig_core::enumerate::satisfies(&base, t, e, args.mode)),
    ));
    if let Some(agree) = r.methods_agree() {
        b.push(Leg::new("raw and generated sets agree", agree));
    }
    report.battery(b);
    Ok(report)
}

pub enum GalleryOutput {
    File(MagmaFile),
    Report(Box<Report>),
}

pub fn gallery(name: &str, sampling: Sampling) -> CliResult<GalleryOutput> {
    let builder: Builder = name.parse()?;
    Ok(match build(&builder, sampling)? {
        GalleryItem::Magma(m) => GalleryOutput::File(MagmaFile::from_magma("dot", &m)),
        GalleryItem::Semigroup(s) => GalleryOutput::File(MagmaFile::from_semigroup(&s)),
        GalleryItem::Group(g) => GalleryOutput::File(MagmaFile::from_semigroup(g.as_semigroup())),
        GalleryItem::Joined(j) => GalleryOutput::File(MagmaFile::from_joined(&j)),
        GalleryItem::Rational(r) => {
            let mut report = Report::new("gallery");
            report.detail("builder", builder.to_string());
            let mut b = Battery::identities(builder.to_string()).sampled();
            b.push(Leg::from_witness("associative", r.associativity_witness()))
                .push(Leg::from_witness("commutative", r.commutativity_witness()));
            report.battery(b);
            GalleryOutput::Report(Box::new(report))
        }
        GalleryItem::RationalJoined(r) => {
            let mut report = Report::new("gallery");
            report.detail("builder", builder.to_string());
            report.battery(r.battery());
            GalleryOutput::Report(Box::new(report))
        }
    })
}
