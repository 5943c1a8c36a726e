//! Exhaustive enumeration of second operations and of endofunctions on small
//! carriers, and the set equalities characterising identical structures.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::battery::{Battery, Leg};
use crate::classify::classify;
use crate::error::{AlgebraError, Result};
use crate::function::{f_multiplication, EndoFunction, FunctionAnalyzer, Predicate};
use crate::joined::{is_josemig, join_law_witness, require_left_e_semig, JoinedStructure, LawMode};
use crate::magma::{Group, Magma, Semigroup};
use crate::Side;

pub const RAW_LIMIT_DEFAULT: usize = 3;
/// Raw scans beyond this order are refused outright.
pub const RAW_LIMIT_MAX: usize = 4;
pub const GENERATOR_LIMIT: usize = 6;

/// A row-major operation table.
pub type Table = Vec<usize>;

/// Which laws an enumerated operation must satisfy besides associativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Left,
    Right,
    TwoSided,
    /// Both identical laws.
    Identical,
    /// The left law at every joiner.
    Josemig,
}

impl Mode {
    pub const ALL: [Mode; 5] = [
        Mode::Left,
        Mode::Right,
        Mode::TwoSided,
        Mode::Identical,
        Mode::Josemig,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Left => "left",
            Mode::Right => "right",
            Mode::TwoSided => "two-sided",
            Mode::Identical => "identical",
            Mode::Josemig => "josemig",
        }
    }

    fn law(self) -> (Side, LawMode) {
        match self {
            Mode::Left | Mode::Josemig => (Side::Left, LawMode::Plain),
            Mode::Right => (Side::Right, LawMode::Plain),
            Mode::TwoSided => (Side::Both, LawMode::Plain),
            Mode::Identical => (Side::Both, LawMode::Identical),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| AlgebraError::InvalidParameter(format!("unknown mode `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    RawTable,
    ViaF,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::RawTable => "raw-table",
            Method::ViaF => "via-f",
            Method::Both => "both",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        [Method::RawTable, Method::ViaF, Method::Both]
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| AlgebraError::InvalidParameter(format!("unknown method `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationQuery {
    pub base: Magma,
    pub e: usize,
    pub mode: Mode,
    pub method: Method,
    pub raw_limit: usize,
    pub parallel: bool,
}

impl EnumerationQuery {
    pub fn new(base: Magma, e: usize, mode: Mode, method: Method) -> Self {
        Self {
            base,
            e,
            mode,
            method,
            raw_limit: RAW_LIMIT_DEFAULT,
            parallel: true,
        }
    }

    pub fn raw_limit(mut self, limit: usize) -> Self {
        self.raw_limit = limit;
        self
    }

    pub fn serial(mut self) -> Self {
        self.parallel = false;
        self
    }
}

/// Canonically ordered tables; with both methods, each method's set as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub tables: Vec<Table>,
    pub raw: Option<Vec<Table>>,
    pub generated: Option<Vec<Table>>,
}

impl Enumeration {
    /// `Some(equal)` when both methods ran.
    pub fn methods_agree(&self) -> Option<bool> {
        Some(self.raw.as_ref()? == self.generated.as_ref()?)
    }
}

pub fn enumerate_odot(q: &EnumerationQuery) -> Result<Enumeration> {
    let n = q.base.order();
    if q.e >= n {
        return Err(AlgebraError::ElementOutOfRange {
            index: q.e,
            order: n,
        });
    }
    if let Some((x, y, z)) = q.base.associativity_counterexample() {
        return Err(AlgebraError::Precondition(format!(
            "base operation is not associative at ({x}, {y}, {z})"
        )));
    }
    if q.method == Method::Both && q.mode != Mode::Identical {
        return Err(AlgebraError::MethodIncompatible(format!(
            "f-multiplications do not exhaust {} structures; compare methods in identical mode",
            q.mode
        )));
    }
    let raw = match q.method {
        Method::RawTable | Method::Both => Some(raw_scan(q)?),
        Method::ViaF => None,
    };
    let generated = match q.method {
        Method::ViaF | Method::Both => Some(generate_via_f(q)?),
        Method::RawTable => None,
    };
    let tables = raw
        .clone()
        .or_else(|| generated.clone())
        .expect("one method ran");
    Ok(Enumeration {
        tables,
        raw,
        generated,
    })
}

/// Associativity plus the mode's laws on a complete table.
pub fn satisfies(base: &Magma, table: &[usize], e: usize, mode: Mode) -> bool {
    let n = base.order();
    let full: Vec<usize> = table.to_vec();
    check_known(base, &full, n, e, mode)
}

const UNSET: usize = usize::MAX;

/// False iff some constraint whose cells are all filled is violated.
fn check_known(base: &Magma, t: &[usize], n: usize, e: usize, mode: Mode) -> bool {
    let get = |x: usize, y: usize| {
        let v = t[x * n + y];
        (v != UNSET).then_some(v)
    };
    for x in 0..n {
        for y in 0..n {
            let Some(a) = get(x, y) else { continue };
            for z in 0..n {
                let lhs = get(a, z);
                let rhs = get(y, z).and_then(|c| get(x, c));
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    let (side, law) = mode.law();
    let joiners = if mode == Mode::Josemig {
        0..n
    } else {
        e..e + 1
    };
    for j in joiners {
        for x in 0..n {
            for y in 0..n {
                let Some(m) = get(x, y) else { continue };
                let xy = base.op(x, y);
                let check = |l: Option<usize>, r: Option<usize>| match (l, r) {
                    (Some(l), Some(r)) => l == r && (law == LawMode::Plain || r == m),
                    _ => true,
                };
                if matches!(side, Side::Left | Side::Both) && !check(get(j, xy), get(j, m)) {
                    return false;
                }
                if matches!(side, Side::Right | Side::Both) && !check(get(xy, j), get(m, j)) {
                    return false;
                }
            }
        }
    }
    true
}

fn raw_scan(q: &EnumerationQuery) -> Result<Vec<Table>> {
    let n = q.base.order();
    if q.raw_limit > RAW_LIMIT_MAX {
        return Err(AlgebraError::SizeLimit(format!(
            "raw limit {} exceeds the maximum {RAW_LIMIT_MAX}",
            q.raw_limit
        )));
    }
    if n > q.raw_limit {
        return Err(AlgebraError::SizeLimit(format!(
            "raw table scan limited to order {}, got {n}",
            q.raw_limit
        )));
    }
    let mut out = if q.parallel {
        let prefixes: Vec<Vec<usize>> = EndoFunction::all(n)
            .map(|f| f.as_slice().to_vec())
            .collect();
        prefixes
            .par_iter()
            .flat_map_iter(|p| search_from(q, p))
            .collect()
    } else {
        search_from(q, &[])
    };
    out.sort();
    out.dedup();
    Ok(out)
}

fn search_from(q: &EnumerationQuery, prefix: &[usize]) -> Vec<Table> {
    let n = q.base.order();
    let mut t = vec![UNSET; n * n];
    let mut out = Vec::new();
    search(q, &mut t, 0, prefix, &mut out);
    out
}

fn search(
    q: &EnumerationQuery,
    t: &mut Vec<usize>,
    k: usize,
    prefix: &[usize],
    out: &mut Vec<Table>,
) {
    let n = q.base.order();
    if k == n * n {
        out.push(t.clone());
        return;
    }
    let range = if k < prefix.len() {
        prefix[k]..prefix[k] + 1
    } else {
        0..n
    };
    for v in range {
        t[k] = v;
        if check_known(&q.base, t, n, q.e, q.mode) {
            search(q, t, k + 1, prefix, out);
        }
    }
    t[k] = UNSET;
}

fn generate_via_f(q: &EnumerationQuery) -> Result<Vec<Table>> {
    let n = q.base.order();
    if n > GENERATOR_LIMIT {
        return Err(AlgebraError::SizeLimit(format!(
            "f-multiplication generator limited to order {GENERATOR_LIMIT}, got {n}"
        )));
    }
    let group = Group::from_magma(q.base.clone())
        .ok()
        .filter(|g| g.identity() == q.e);
    let candidates: Vec<EndoFunction> = match (&group, q.mode) {
        (Some(g), Mode::Identical) => enumerate_functions(g, &[Predicate::StrongDecomposer])?,
        _ => EndoFunction::all(n).collect(),
    };
    let mut out: Vec<Table> = candidates
        .par_iter()
        .map(|f| f_multiplication(&q.base, f).table().to_vec())
        .filter(|t| satisfies(&q.base, t, q.e, q.mode))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every endofunction satisfying all predicates, in lexicographic order.
pub fn enumerate_functions(g: &Group, preds: &[Predicate]) -> Result<Vec<EndoFunction>> {
    enumerate_functions_with(&FunctionAnalyzer::on_group(g), preds)
}

pub fn enumerate_functions_with(
    an: &FunctionAnalyzer<'_>,
    preds: &[Predicate],
) -> Result<Vec<EndoFunction>> {
    let n = an.base().order();
    if n > GENERATOR_LIMIT {
        return Err(AlgebraError::SizeLimit(format!(
            "function scan limited to order {GENERATOR_LIMIT}, got {n}"
        )));
    }
    let all: Vec<EndoFunction> = EndoFunction::all(n).collect();
    let keep: Vec<Result<bool>> = all.par_iter().map(|f| an.holds_all(preds, f)).collect();
    let mut out = Vec::new();
    for (f, k) in all.into_iter().zip(keep) {
        if k? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Every `f` with `._f` equal to `table`. Values outside `S·S` are free.
pub fn f_multiplication_preimages(base: &Magma, table: &[usize]) -> Vec<EndoFunction> {
    let n = base.order();
    let mut fixed: Vec<Option<usize>> = vec![None; n];
    for x in 0..n {
        for y in 0..n {
            let slot = &mut fixed[base.op(x, y)];
            let v = table[x * n + y];
            match slot {
                Some(w) if *w != v => return Vec::new(),
                _ => *slot = Some(v),
            }
        }
    }
    let mut out = vec![Vec::with_capacity(n)];
    for slot in &fixed {
        let choices: Vec<usize> = match slot {
            Some(v) => vec![*v],
            None => (0..n).collect(),
        };
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                choices.iter().map(move |&c| {
                    let mut p = p.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|m| EndoFunction::new(m).expect("in range"))
        .collect()
}

/// The characterising sets of identical structures on a group with joiner
/// its identity.
#[derive(Clone, Debug)]
pub struct SetEqualityReport {
    /// Identical operations by raw definition; `None` when over the raw limit.
    pub raw: Option<Vec<Table>>,
    /// `{._f : f associative and idempotent}`.
    pub associative_idempotent: Vec<Table>,
    /// Two-sided structures that are f-multiplications.
    pub joined_f_multiplications: Vec<Table>,
    /// `{._f : f a strong decomposer}`.
    pub strong_decomposers: Vec<Table>,
    pub battery: Battery,
}

pub fn identical_set_equality(g: &Group, raw_limit: usize) -> Result<SetEqualityReport> {
    let n = g.order();
    if n > GENERATOR_LIMIT {
        return Err(AlgebraError::SizeLimit(format!(
            "set equality limited to order {GENERATOR_LIMIT}, got {n}"
        )));
    }
    let base = g.as_magma();
    let e = g.identity();
    let raw = if n <= raw_limit.min(RAW_LIMIT_MAX) {
        let q = EnumerationQuery::new(base.clone(), e, Mode::Identical, Method::RawTable)
            .raw_limit(raw_limit);
        Some(enumerate_odot(&q)?.tables)
    } else {
        None
    };
    let table_set = |fs: Vec<EndoFunction>| {
        let mut ts: Vec<Table> = fs
            .iter()
            .map(|f| f_multiplication(base, f).table().to_vec())
            .collect();
        ts.sort();
        ts.dedup();
        ts
    };
    let associative_idempotent = table_set(enumerate_functions(
        g,
        &[Predicate::Associative, Predicate::Idempotent],
    )?);
    let strong_decomposers = table_set(enumerate_functions(g, &[Predicate::StrongDecomposer])?);
    let all_f = table_set(EndoFunction::all(n).collect());
    let f_unique = all_f.len() == n.pow(n as u32);
    let joined_f_multiplications: Vec<Table> = all_f
        .into_iter()
        .filter(|t| satisfies(base, t, e, Mode::TwoSided))
        .collect();

    let mut b = Battery::identities("identical set equality");
    match &raw {
        Some(r) => b.push(Leg::new(
            "raw = {._f : f associative, idempotent}",
            *r == associative_idempotent,
        )),
        None => b.push(Leg::skipped(
            "raw = {._f : f associative, idempotent}",
            format!("order {n} exceeds raw limit {raw_limit}"),
        )),
    };
    b.push(Leg::new(
        "{._f : f associative, idempotent} = two-sided ∩ {._f}",
        associative_idempotent == joined_f_multiplications,
    ))
    .push(Leg::new(
        "{._f : f associative, idempotent} = {._f : f strong decomposer}",
        associative_idempotent == strong_decomposers,
    ))
    .push(Leg::new("._f determines f", f_unique));
    Ok(SetEqualityReport {
        raw,
        associative_idempotent,
        joined_f_multiplications,
        strong_decomposers,
        battery: b,
    })
}

fn left_periodic(base: &Magma, f: &EndoFunction, e: usize) -> bool {
    base.elements()
        .all(|x| f.apply(base.op(e, x)) == f.apply(x))
}

/// Equivalent characterisations of a left identical structure among left
/// e-semigs: the left identical law; `(.) = ._f` for a left e-periodic `f`;
/// `(.) = ._{J_e}`; the same with `f` also idempotent; `J_e` the only such
/// `f`. Group and left e-unital bases add the f-grouplike and strongly
/// associative forms.
pub fn identical_characterization(j: &JoinedStructure) -> Result<Battery> {
    let odot = require_left_e_semig(j)?;
    let base = j.dot();
    let e = j.e();
    let jl = j.left_joiner().mapping;
    let fs = f_multiplication_preimages(base, odot.table());
    let periodic: Vec<&EndoFunction> = fs.iter().filter(|f| left_periodic(base, f, e)).collect();
    let mut b = Battery::equivalence("identical characterization");
    b.push(Leg::new(
        "(a) left identical",
        join_law_witness(base, &odot, e, Side::Left, LawMode::Identical).is_none(),
    ))
    .push(Leg::new(
        "(b) (.) = ._f, f left e-periodic",
        periodic.len() == 1,
    ))
    .push(Leg::new(
        "(c) (.) = ._J_e",
        f_multiplication(base, &jl).table() == odot.table(),
    ))
    .push(Leg::new(
        "(d) (.) = ._f, f left e-periodic and idempotent",
        periodic.iter().filter(|f| f.is_idempotent()).count() == 1,
    ))
    .push(Leg::new(
        "(e) J_e is the only f with (.) = ._f",
        fs == vec![jl],
    ));
    if let Ok(sg) = Semigroup::new(base.clone()) {
        let an = FunctionAnalyzer::on_semigroup(&sg);
        if base.elements().all(|x| base.op(e, x) == x) {
            let strong = fs
                .iter()
                .filter(|f| {
                    an.holds(&Predicate::StronglyAssociative, f)
                        .unwrap_or(false)
                })
                .count();
            b.push(Leg::new(
                "(.) = ._f, f unique strongly associative",
                strong == 1,
            ));
        }
        if j.dot_group().is_some() {
            let assoc = fs
                .iter()
                .any(|f| an.holds(&Predicate::Associative, f).unwrap_or(false));
            b.push(Leg::new(
                "(G,(.)) is an f-grouplike",
                assoc && classify(&odot).is_grouplike(),
            ));
        }
    }
    Ok(b)
}

/// Consequences of being identical: `(.) = ._{J_e}`, josemig, and for a
/// group first operation a unipotent class-united grouplike at `e (.) e`.
pub fn identical_consequences(j: &JoinedStructure) -> Result<Battery> {
    let odot = require_left_e_semig(j)?;
    if let Some(w) = join_law_witness(j.dot(), &odot, j.e(), Side::Left, LawMode::Identical) {
        return Err(AlgebraError::Precondition(format!(
            "left identical law fails at ({}, {})",
            w.x, w.y
        )));
    }
    let jl = j.left_joiner().mapping;
    let mut b = Battery::identities("identical consequences");
    b.push(Leg::new(
        "(.) = ._J_e",
        f_multiplication(j.dot(), &jl).table() == odot.table(),
    ))
    .push(Leg::from_witness(
        "left josemig",
        is_josemig(j, Side::Left)?.map(|(e, w)| j.dot().labels(&[e, w.x, w.y])),
    ));
    if j.dot_group().is_some() {
        let r = classify(&odot);
        b.push(Leg::new("(G,(.)) is a unipotent grouplike", r.is_unipotent))
            .push(Leg::new(
                "grouplike identity is e(.)e",
                r.grouplike_identity == Some(odot.op(j.e(), j.e())),
            ))
            .push(Leg::new(
                "(G,(.)) is class united",
                r.has_square_group_property(),
            ));
    }
    Ok(b)
}

/// Identical characterization on every left structure, consequences on
/// every identical one, and the count correspondence with strongly
/// associative left e-periodic functions.
#[derive(Clone, Debug)]
pub struct IdenticalReport {
    pub left_count: usize,
    pub identical_count: usize,
    pub characterization: Battery,
    pub consequences: Battery,
    pub counts: Battery,
}

pub fn identical_batteries(g: &Group, raw_limit: usize) -> Result<IdenticalReport> {
    let n = g.order();
    let base = g.as_magma();
    let e = g.identity();
    let method = if n <= raw_limit.min(RAW_LIMIT_MAX) {
        Method::RawTable
    } else {
        Method::ViaF
    };
    let run = |mode| {
        enumerate_odot(&EnumerationQuery::new(base.clone(), e, mode, method).raw_limit(raw_limit))
    };
    let left = run(Mode::Left)?.tables;
    let identical = run(Mode::Identical)?.tables;
    let joined = |t: &Table| JoinedStructure::new(base.clone(), base.with_table(t.clone())?, e);
    let label = |t: &Table| format!("{t:?}");
    let characterization = Battery::aggregate(
        "identical characterization",
        left.iter()
            .map(|t| Ok((label(t), identical_characterization(&joined(t)?)?)))
            .collect::<Result<Vec<_>>>()?,
    );
    let consequences = Battery::aggregate(
        "identical consequences",
        identical
            .iter()
            .map(|t| Ok((label(t), identical_consequences(&joined(t)?)?)))
            .collect::<Result<Vec<_>>>()?,
    );
    let functions = enumerate_functions(
        g,
        &[
            Predicate::StronglyAssociative,
            Predicate::Periodic(Side::Left, vec![e]),
        ],
    )?;
    let mut images: Vec<Table> = functions
        .iter()
        .map(|f| f_multiplication(base, f).table().to_vec())
        .collect();
    images.sort();
    images.dedup();
    let mut counts = Battery::identities("identical correspondence");
    counts
        .push(Leg::new(
            "|identical| = |strongly associative, left e-periodic|",
            identical.len() == functions.len(),
        ))
        .push(Leg::new(
            "f -> ._f is injective on that set",
            images.len() == functions.len(),
        ))
        .push(Leg::new(
            "identical = {._f} over that set",
            images == identical,
        ));
    Ok(IdenticalReport {
        left_count: left.len(),
        identical_count: identical.len(),
        characterization,
        consequences,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn query(g: &Group, mode: Mode, method: Method) -> EnumerationQuery {
        EnumerationQuery::new(g.as_magma().clone(), g.identity(), mode, method)
    }

    #[test]
    fn identical_counts_small_cyclic() {
        for (n, count) in [(1, 1), (2, 3), (3, 4)] {
            let g = gallery::cyclic(n).unwrap();
            let r = enumerate_odot(&query(&g, Mode::Identical, Method::Both)).unwrap();
            assert_eq!(r.tables.len(), count);
            assert_eq!(r.methods_agree(), Some(true));
        }
    }

    #[test]
    fn z2_identical_tables() {
        let g = gallery::cyclic(2).unwrap();
        let r = enumerate_odot(&query(&g, Mode::Identical, Method::RawTable)).unwrap();
        assert_eq!(
            r.tables,
            vec![vec![0, 0, 0, 0], vec![0, 1, 1, 0], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn klein_generator_count() {
        let k = gallery::klein_group();
        let r = enumerate_odot(&query(&k, Mode::Identical, Method::ViaF)).unwrap();
        assert_eq!(r.tables.len(), 17);
        assert!(r
            .tables
            .contains(&gallery::klein_grouplike().table().to_vec()));
    }

    #[test]
    fn raw_limits_and_method_checks() {
        let k = gallery::klein_group();
        let err = enumerate_odot(&query(&k, Mode::Identical, Method::RawTable)).unwrap_err();
        assert!(matches!(err, AlgebraError::SizeLimit(_)));
        let err =
            enumerate_odot(&query(&k, Mode::Identical, Method::RawTable).raw_limit(5)).unwrap_err();
        assert!(matches!(err, AlgebraError::SizeLimit(_)));
        let z2 = gallery::cyclic(2).unwrap();
        let err = enumerate_odot(&query(&z2, Mode::Left, Method::Both)).unwrap_err();
        assert!(matches!(err, AlgebraError::MethodIncompatible(_)));
    }

    #[test]
    fn mode_containment_on_z3() {
        let g = gallery::cyclic(3).unwrap();
        let set = |m| {
            enumerate_odot(&query(&g, m, Method::RawTable))
                .unwrap()
                .tables
        };
        let (l, r, two, ident, jose) = (
            set(Mode::Left),
            set(Mode::Right),
            set(Mode::TwoSided),
            set(Mode::Identical),
            set(Mode::Josemig),
        );
        assert!(ident.iter().all(|t| two.contains(t) && jose.contains(t)));
        assert!(two.iter().all(|t| l.contains(t) && r.contains(t)));
        assert!(jose.iter().all(|t| l.contains(t)));
        assert!(l.contains(&vec![0, 0, 0, 1, 1, 1, 2, 2, 2]));
    }

    #[test]
    fn parallel_matches_serial() {
        let g = gallery::cyclic(3).unwrap();
        for mode in Mode::ALL {
            let q = query(&g, mode, Method::RawTable);
            assert_eq!(
                enumerate_odot(&q).unwrap(),
                enumerate_odot(&q.clone().serial()).unwrap()
            );
        }
    }

    #[test]
    fn function_enumeration() {
        let k = gallery::klein_group();
        let sd = enumerate_functions(&k, &[Predicate::StrongDecomposer]).unwrap();
        assert_eq!(sd.len(), 17);
        assert!(sd.contains(&gallery::klein_function()));
        let z3 = gallery::cyclic(3).unwrap();
        let sa = enumerate_functions(
            &z3,
            &[
                Predicate::StronglyAssociative,
                Predicate::Periodic(Side::Left, vec![0]),
            ],
        )
        .unwrap();
        assert_eq!(sa.len(), 4);
        assert_eq!(enumerate_functions(&z3, &[]).unwrap().len(), 27);
    }

    #[test]
    fn preimages() {
        let k = gallery::klein_group();
        let t = gallery::klein_grouplike();
        assert_eq!(
            f_multiplication_preimages(k.as_magma(), t.table()),
            vec![gallery::klein_function()]
        );
        let z = gallery::zn_min_joined(5).unwrap();
        assert!(f_multiplication_preimages(z.dot(), z.odot().table()).is_empty());
        // min on {0, 1, 2} has S·S = S, but the left-zero band on Z1 x ... is
        // simplest: a non-surjective base leaves values free.
        let zero = Magma::from_fn(Magma::default_names(2), |_, _| 0).unwrap();
        assert_eq!(f_multiplication_preimages(&zero, &[1, 1, 1, 1]).len(), 2);
    }

    #[test]
    fn set_equality_small() {
        for (n, count) in [(1, 1), (2, 3), (3, 4)] {
            let r = identical_set_equality(&gallery::cyclic(n).unwrap(), 3).unwrap();
            assert_eq!(r.raw.as_ref().unwrap().len(), count);
            assert_eq!(r.battery.common_value(), Some(true));
        }
        let r = identical_set_equality(&gallery::klein_group(), 3).unwrap();
        assert!(r.raw.is_none());
        assert_eq!(r.associative_idempotent.len(), 17);
        assert!(r.battery.legs[0].skipped);
        assert!(r.battery.consistent());
    }

    #[test]
    fn identical_batteries_pass() {
        for g in [gallery::cyclic(3).unwrap(), gallery::klein_group()] {
            let r = identical_batteries(&g, 3).unwrap();
            assert!(
                r.characterization.consistent(),
                "{:?}",
                r.characterization.offending_legs()
            );
            assert!(
                r.consequences.consistent(),
                "{:?}",
                r.consequences.offending_legs()
            );
            assert!(r.counts.consistent());
        }
    }

    #[test]
    fn zn_min_is_not_identical() {
        let j = gallery::zn_min_joined(5).unwrap();
        let b = identical_characterization(&j).unwrap();
        assert_eq!(b.common_value(), Some(false));
        assert!(identical_consequences(&j).is_err());
    }
}
