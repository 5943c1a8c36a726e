//! Two-operation structures `(S, ., e, (.))` and the e-join laws
//! `e (.) xy = e (.) (x (.) y)` (left) and `xy (.) e = (x (.) y) (.) e` (right).

use serde::{Deserialize, Serialize};

use crate::battery::{Battery, Leg};
use crate::classify::{
    center, central_idempotents, classify, is_ideal, kernel, local_submonoid, maximal_subgroup,
    principal_ideal, principal_right_ideal,
};
use crate::error::{AlgebraError, Result};
use crate::function::EndoFunction;
use crate::magma::{Group, Magma, Semigroup};
use crate::subset::Subset;
use crate::Side;

/// One carrier, two operation tables and a distinguished joiner `e`.
///
/// Both tables share the labels of `dot`. When `dot` is a group, `e` must be
/// its identity. Associativity of the tables is checked separately so that a
/// non-associative `odot` can still be diagnosed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JoinedStructure {
    dot: Magma,
    odot: Magma,
    e: usize,
}

impl JoinedStructure {
    pub fn new(dot: Magma, odot: Magma, e: usize) -> Result<Self> {
        let n = dot.order();
        if odot.order() != n {
            return Err(AlgebraError::OrderMismatch(n, odot.order()));
        }
        if e >= n {
            return Err(AlgebraError::ElementOutOfRange { index: e, order: n });
        }
        if let Ok(g) = Group::from_magma(dot.clone()) {
            if g.identity() != e {
                return Err(AlgebraError::JoinerNotIdentity {
                    joiner: e,
                    identity: g.identity(),
                });
            }
        }
        let odot = dot.with_table(odot.table().to_vec())?;
        Ok(Self { dot, odot, e })
    }

    pub fn dot(&self) -> &Magma {
        &self.dot
    }

    pub fn odot(&self) -> &Magma {
        &self.odot
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn order(&self) -> usize {
        self.dot.order()
    }

    pub fn names(&self) -> &[String] {
        self.dot.names()
    }

    pub fn dot_group(&self) -> Option<Group> {
        Group::from_magma(self.dot.clone()).ok()
    }

    pub fn odot_semigroup(&self) -> Result<Semigroup> {
        Semigroup::new(self.odot.clone())
    }

    /// `dot` and `odot` coincide.
    pub fn is_trivial(&self) -> bool {
        self.dot == self.odot
    }

    pub fn left_joiner(&self) -> JoinerMap {
        JoinerMap {
            side: Side::Left,
            mapping: EndoFunction::from_fn(self.order(), |x| self.odot.op(self.e, x))
                .expect("table entries are in range"),
        }
    }

    pub fn right_joiner(&self) -> JoinerMap {
        JoinerMap {
            side: Side::Right,
            mapping: EndoFunction::from_fn(self.order(), |x| self.odot.op(x, self.e))
                .expect("table entries are in range"),
        }
    }

    /// `e (.) G`.
    pub fn left_image(&self) -> Subset {
        self.left_joiner().mapping.image()
    }

    fn label(&self, xs: &[usize]) -> Vec<String> {
        self.dot.labels(xs)
    }
}

/// `J_e(x) = e (.) x` (left) or `J^e(x) = x (.) e` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinerMap {
    pub side: Side,
    pub mapping: EndoFunction,
}

impl JoinerMap {
    pub fn apply(&self, x: usize) -> usize {
        self.mapping.apply(x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawMode {
    Plain,
    /// Additionally `= x (.) y`.
    Identical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinCounterexample {
    pub side: Side,
    pub x: usize,
    pub y: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinVerdict {
    pub holds: bool,
    pub counterexample: Option<JoinCounterexample>,
}

/// First `(x, y)` violating the join law at joiner `e`, using the raw
/// unchained form so a non-associative `odot` is still evaluated faithfully.
pub fn join_law_witness(
    dot: &Magma,
    odot: &Magma,
    e: usize,
    side: Side,
    mode: LawMode,
) -> Option<JoinCounterexample> {
    let n = dot.order();
    let one_side = |left: bool| {
        for x in 0..n {
            for y in 0..n {
                let xy = dot.op(x, y);
                let xoy = odot.op(x, y);
                let (a, b) = if left {
                    (odot.op(e, xy), odot.op(e, xoy))
                } else {
                    (odot.op(xy, e), odot.op(xoy, e))
                };
                if a != b || (mode == LawMode::Identical && b != xoy) {
                    return Some(JoinCounterexample {
                        side: if left { Side::Left } else { Side::Right },
                        x,
                        y,
                    });
                }
            }
        }
        None
    };
    match side {
        Side::Left => one_side(true),
        Side::Right => one_side(false),
        Side::Both => one_side(true).or_else(|| one_side(false)),
    }
}

pub fn verify_join_law(j: &JoinedStructure, side: Side, mode: LawMode) -> JoinVerdict {
    let counterexample = join_law_witness(&j.dot, &j.odot, j.e, side, mode);
    JoinVerdict {
        holds: counterexample.is_none(),
        counterexample,
    }
}

/// First joiner `e` (with its counterexample) at which the law fails.
pub fn josemig_failure(
    dot: &Magma,
    odot: &Magma,
    side: Side,
) -> Option<(usize, JoinCounterexample)> {
    dot.elements()
        .find_map(|e| join_law_witness(dot, odot, e, side, LawMode::Plain).map(|w| (e, w)))
}

/// The join law holds at every joiner. Both operations must be associative.
pub fn is_josemig(j: &JoinedStructure, side: Side) -> Result<Option<(usize, JoinCounterexample)>> {
    require_associative(j)?;
    Ok(josemig_failure(&j.dot, &j.odot, side))
}

fn require_associative(j: &JoinedStructure) -> Result<()> {
    if let Some((x, y, z)) = j.dot.associativity_counterexample() {
        return Err(AlgebraError::Precondition(format!(
            "first operation is not associative at ({x}, {y}, {z})"
        )));
    }
    if let Some((x, y, z)) = j.odot.associativity_counterexample() {
        return Err(AlgebraError::Precondition(format!(
            "second operation is not associative at ({x}, {y}, {z})"
        )));
    }
    Ok(())
}

/// Both operations associative and the join law on `side`.
pub fn is_e_semig(j: &JoinedStructure, side: Side) -> bool {
    j.dot.is_associative()
        && j.odot.is_associative()
        && join_law_witness(&j.dot, &j.odot, j.e, side, LawMode::Plain).is_none()
}

/// Checks the left e-semig condition and returns `(S, (.))`.
pub fn require_left_e_semig(j: &JoinedStructure) -> Result<Semigroup> {
    require_associative(j)?;
    if let Some(w) = join_law_witness(&j.dot, &j.odot, j.e, Side::Left, LawMode::Plain) {
        return Err(AlgebraError::Precondition(format!(
            "left e-join law fails at ({}, {})",
            w.x, w.y
        )));
    }
    j.odot_semigroup()
}

/// Checks the left group-e-semigroup condition and returns `(G, .)`, `(G, (.))`.
pub fn require_left_group_e_semigroup(j: &JoinedStructure) -> Result<(Group, Semigroup)> {
    let odot = require_left_e_semig(j)?;
    let g = j
        .dot_group()
        .ok_or_else(|| AlgebraError::Precondition("first operation is not a group".into()))?;
    Ok((g, odot))
}

fn require_left_monoid_e_semigroup(j: &JoinedStructure) -> Result<Semigroup> {
    let odot = require_left_e_semig(j)?;
    if j.dot.identity() != Some(j.e) {
        return Err(AlgebraError::Precondition(
            "e is not the identity of the first operation".into(),
        ));
    }
    Ok(odot)
}

/// `e (.) G` together with its subgroup and inverse-law verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EOdotG {
    pub image: Subset,
    /// `e (.) e`.
    pub unit: usize,
    pub is_subgroup: bool,
    /// First `x` violating `(e (.) x)^-1 = e (.) x^-1 = e (.) (e (.) x)^-1`,
    /// inverses on the left taken in the group `e (.) G`.
    pub inverse_law_witness: Option<usize>,
}

pub fn e_odot_g(j: &JoinedStructure) -> Result<EOdotG> {
    let g = j
        .dot_group()
        .ok_or_else(|| AlgebraError::Precondition("first operation is not a group".into()))?;
    let odot = &j.odot;
    let jl = j.left_joiner();
    let image = jl.mapping.image();
    let unit = odot.op(j.e, j.e);
    let is_subgroup = odot.subgroup_identity(&image) == Some(unit);
    let inverse_law_witness = g.elements().find(|&x| {
        if !is_subgroup {
            return true;
        }
        let t = jl.apply(x);
        let in_sub = image
            .iter()
            .find(|&s| odot.op(t, s) == unit && odot.op(s, t) == unit);
        let a = jl.apply(g.inv(x));
        let b = jl.apply(g.inv(t));
        in_sub != Some(a) || a != b
    });
    Ok(EOdotG {
        image,
        unit,
        is_subgroup,
        inverse_law_witness,
    })
}

/// Equivalence of: (a) `e (.) G` is an ideal subgroup; (b) `e (.) e` is central;
/// (c) `(G, (.))` is a homogroup; (d) `e (.) G` is the largest subgroup
/// containing `e (.) e` and the least ideal. Requires a left group-e-semigroup.
pub fn ideal_subgroup_battery(j: &JoinedStructure) -> Result<Battery> {
    let (_, odot) = require_left_group_e_semigroup(j)?;
    let image = j.left_image();
    let unit = odot.op(j.e, j.e);
    let ideal_subgroup =
        odot.subgroup_identity(&image).is_some() && is_ideal(&odot, &image, Side::Both);
    let report = classify(&odot);
    let largest_and_least = image == maximal_subgroup(&odot, unit) && image == kernel(&odot);
    let mut b = Battery::equivalence("ideal-subgroup equivalence");
    b.push(Leg::new("(a) e(.)G is an ideal subgroup", ideal_subgroup))
        .push(Leg::new(
            "(b) e(.)e in Z(G,(.))",
            center(&odot).contains(unit),
        ))
        .push(Leg::new(
            "(b') e(.)e in Zt(G,(.))",
            central_idempotents(&odot).contains(unit),
        ))
        .push(Leg::new("(c) (G,(.)) is a homogroup", report.is_homogroup))
        .push(Leg::new(
            "(d) e(.)G is the largest subgroup at e(.)e and the least ideal",
            largest_and_least,
        ));
    Ok(b)
}

/// Equivalence of: (a) `(G, (.))` is a grouplike; (b) `e (.) e` is an identity
/// of the semigroup `Zt(G, (.))`; (c) `Zt(G, (.)) = {e (.) e}`.
pub fn grouplike_battery(j: &JoinedStructure) -> Result<Battery> {
    let (_, odot) = require_left_group_e_semigroup(j)?;
    let unit = odot.op(j.e, j.e);
    let zt = central_idempotents(&odot);
    let unit_is_identity = zt.contains(unit)
        && zt
            .iter()
            .all(|d| odot.op(unit, d) == d && odot.op(d, unit) == d);
    let mut b = Battery::equivalence("grouplike criterion");
    b.push(Leg::new(
        "(a) (G,(.)) is a grouplike",
        classify(&odot).is_grouplike(),
    ))
    .push(Leg::new(
        "(b) e(.)e is an identity of Zt(G,(.))",
        unit_is_identity,
    ))
    .push(Leg::new(
        "(c) Zt(G,(.)) = {e(.)e}",
        zt == Subset::singleton(j.order(), unit),
    ));
    Ok(b)
}

/// Unconditional facts about `e (.) S` in a left monoid-e-semigroup.
pub fn image_structure_battery(j: &JoinedStructure) -> Result<Battery> {
    let odot = require_left_monoid_e_semigroup(j)?;
    let image = j.left_image();
    let unit = odot.op(j.e, j.e);
    let dot = &j.dot;
    let right_periodic = dot
        .elements()
        .all(|x| odot.op(j.e, dot.op(x, j.e)) == odot.op(j.e, x));
    let right_unital = odot.is_closed(&image) && image.iter().all(|x| odot.op(x, unit) == x);
    let two_sided_unital = odot.is_closed(&image)
        && image
            .iter()
            .all(|x| odot.op(x, unit) == x && odot.op(unit, x) == x);
    let mut b = Battery::identities("e(.)S structure");
    b.push(Leg::new(
        "(a) right e-periodic => e(.)S right e(.)e-unital",
        !right_periodic || right_unital,
    ))
    .push(Leg::new(
        "(b) e(.)S is a right ideal",
        is_ideal(&odot, &image, Side::Right),
    ))
    .push(Leg::new(
        "(b) e(.)S is the least right ideal containing e(.)e",
        image == principal_right_ideal(&odot, unit),
    ))
    .push(Leg::new(
        "(b) e(.)S is an e(.)e-unital submonoid",
        two_sided_unital,
    ))
    .push(Leg::new(
        "(b) e(.)S is the largest e(.)e-unital submonoid",
        image == local_submonoid(&odot, unit),
    ));
    Ok(b)
}

/// Equivalence of (b1) ideal, (b2) central `e (.) e`, (b3) left ideal,
/// (b4) least ideal containing `e (.) e` and largest unital submonoid.
pub fn image_ideal_battery(j: &JoinedStructure) -> Result<Battery> {
    let odot = require_left_monoid_e_semigroup(j)?;
    let image = j.left_image();
    let unit = odot.op(j.e, j.e);
    let mut b = Battery::equivalence("e(.)S ideal equivalence");
    b.push(Leg::new(
        "(b1) e(.)S is an ideal",
        is_ideal(&odot, &image, Side::Both),
    ))
    .push(Leg::new(
        "(b2) e(.)e in Z(S,(.))",
        center(&odot).contains(unit),
    ))
    .push(Leg::new(
        "(b3) e(.)S is a left ideal",
        is_ideal(&odot, &image, Side::Left),
    ))
    .push(Leg::new(
        "(b4) e(.)S is the least ideal at e(.)e and the largest unital submonoid",
        image == principal_ideal(&odot, unit) && image == local_submonoid(&odot, unit),
    ));
    Ok(b)
}

/// First tuple of length `len <= max_len` violating
/// `e (.) (x1 ... xn) = e (.) x1 (.) ... (.) xn`.
pub fn join_chain_witness(j: &JoinedStructure, max_len: usize) -> Option<Vec<usize>> {
    let n = j.order();
    for len in 1..=max_len {
        let total = n.pow(len as u32);
        for mut k in 0..total {
            let mut xs = vec![0; len];
            for slot in xs.iter_mut().rev() {
                *slot = k % n;
                k /= n;
            }
            let prod = xs[1..].iter().fold(xs[0], |acc, &x| j.dot.op(acc, x));
            let chain = xs.iter().fold(j.e, |acc, &x| j.odot.op(acc, x));
            if j.odot.op(j.e, prod) != chain {
                return Some(xs);
            }
        }
    }
    None
}

type BinaryRule<'a> = dyn Fn(usize, usize) -> usize + 'a;

/// Joiner-map identities for a left e-semig: commutation of `J_e` and `J^e`,
/// the periodicity-conditional canceler and homomorphism claims, and, when
/// `e` is the identity of the first operation, the seven-way chain
/// `J(xy) = J(x(.)y) = J(x)(.)J(y) = J(J(x)y) = J(xJ(y)) = J(J(x)(.)y) = J(x(.)J(y))`.
pub fn joiner_identities(j: &JoinedStructure) -> Result<Battery> {
    let odot = require_left_e_semig(j)?;
    let dot = &j.dot;
    let n = j.order();
    let e = j.e;
    let jl = j.left_joiner();
    let jr = j.right_joiner();
    let jm = |x| jl.apply(x);
    let pair_witness = |pred: &dyn Fn(usize, usize) -> bool| {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| !pred(x, y))
            .map(|(x, y)| j.label(&[x, y]))
    };
    let single_witness =
        |pred: &dyn Fn(usize) -> bool| (0..n).find(|&x| !pred(x)).map(|x| j.label(&[x]));
    let right_periodic = (0..n).all(|x| jm(dot.op(x, e)) == jm(x));
    let left_periodic = (0..n).all(|x| jm(dot.op(e, x)) == jm(x));
    let jl_jr_eq_jl = (0..n).all(|x| jm(jr.apply(x)) == jm(x));

    let mut b = Battery::identities("joiner-map identities");
    b.push(Leg::from_witness(
        "J_e J^e = J^e J_e",
        single_witness(&|x| jm(jr.apply(x)) == jr.apply(jm(x))),
    ));
    b.push(Leg::new(
        "J_e right e-periodic <=> J_e J^e = J_e",
        right_periodic == jl_jr_eq_jl,
    ));
    let cond = |hyp: bool, w: Option<Vec<String>>| if hyp { w } else { None };
    let tag = |hyp: bool, s: &str| {
        if hyp {
            s.to_string()
        } else {
            format!("{s} (vacuous)")
        }
    };
    b.push(Leg::from_witness(
        tag(right_periodic, "(A) J_e: (S,.) -> (S,(.)) homomorphism"),
        cond(
            right_periodic,
            pair_witness(&|x, y| jm(dot.op(x, y)) == odot.op(jm(x), jm(y))),
        ),
    ));
    b.push(Leg::from_witness(
        tag(right_periodic, "(A) J_e endomorphism of (S,(.))"),
        cond(
            right_periodic,
            pair_witness(&|x, y| jm(odot.op(x, y)) == odot.op(jm(x), jm(y))),
        ),
    ));
    b.push(Leg::from_witness(
        tag(right_periodic, "(A) J_e right canceler on (S,(.))"),
        cond(
            right_periodic,
            pair_witness(&|x, y| jm(odot.op(x, jm(y))) == jm(odot.op(x, y))),
        ),
    ));
    b.push(Leg::from_witness(
        tag(right_periodic, "(A) J_e right canceler on (S,.)"),
        cond(
            right_periodic,
            pair_witness(&|x, y| jm(dot.op(x, jm(y))) == jm(dot.op(x, y))),
        ),
    ));
    b.push(Leg::from_witness(
        tag(left_periodic, "(B) J_e left canceler on (S,.)"),
        cond(
            left_periodic,
            pair_witness(&|x, y| jm(dot.op(jm(x), y)) == jm(dot.op(x, y))),
        ),
    ));
    b.push(Leg::from_witness(
        tag(left_periodic, "(B) J_e left canceler on (S,(.))"),
        cond(
            left_periodic,
            pair_witness(&|x, y| jm(odot.op(jm(x), y)) == jm(odot.op(x, y))),
        ),
    ));
    b.push(Leg::from_witness(
        "join chain up to length 4",
        join_chain_witness(j, 4).map(|xs| j.label(&xs)),
    ));

    if dot.identity() == Some(e) {
        b.push(Leg::new("(C) J_e left e-periodic", left_periodic));
        b.push(Leg::new("(C) J_e right e-periodic", right_periodic));
        let chain: [(&str, &BinaryRule); 6] = [
            ("(C) J(xy) = J(x(.)y)", &|x, y| jm(odot.op(x, y))),
            ("(C) J(xy) = J(x)(.)J(y)", &|x, y| odot.op(jm(x), jm(y))),
            ("(C) J(xy) = J(J(x)y)", &|x, y| jm(dot.op(jm(x), y))),
            ("(C) J(xy) = J(xJ(y))", &|x, y| jm(dot.op(x, jm(y)))),
            ("(C) J(xy) = J(J(x)(.)y)", &|x, y| jm(odot.op(jm(x), y))),
            ("(C) J(xy) = J(x(.)J(y))", &|x, y| jm(odot.op(x, jm(y)))),
        ];
        for (label, rhs) in chain {
            b.push(Leg::from_witness(
                label,
                pair_witness(&|x, y| jm(dot.op(x, y)) == rhs(x, y)),
            ));
        }
    }
    Ok(b)
}

/// A left e-semig with `(.) != .` whose second operation has `e` as a left
/// identity. None is expected to exist.
pub fn nontrivial_left_unital(j: &JoinedStructure) -> bool {
    is_e_semig(j, Side::Left) && !j.is_trivial() && j.dot.elements().all(|x| j.odot.op(j.e, x) == x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn projection_structure(g: &Group, right: bool) -> JoinedStructure {
        let odot = g.with_rule(|x, y| if right { y } else { x });
        JoinedStructure::new(g.as_magma().clone(), odot, g.identity()).unwrap()
    }

    #[test]
    fn klein_joined_identical_both_sides() {
        let j = gallery::klein_joined();
        assert!(verify_join_law(&j, Side::Both, LawMode::Identical).holds);
        assert_eq!(is_josemig(&j, Side::Both).unwrap(), None);
    }

    #[test]
    fn zn_min_plain_but_not_identical() {
        let j = gallery::zn_min_joined(5).unwrap();
        assert!(verify_join_law(&j, Side::Both, LawMode::Plain).holds);
        let v = verify_join_law(&j, Side::Both, LawMode::Identical);
        assert!(!v.holds);
        let w = v.counterexample.unwrap();
        assert_eq!((w.side, w.x, w.y), (Side::Left, 1, 1));
    }

    #[test]
    fn left_projection_is_left_only() {
        let k = gallery::klein_group();
        let j = projection_structure(&k, false);
        assert!(verify_join_law(&j, Side::Left, LawMode::Plain).holds);
        assert!(!verify_join_law(&j, Side::Right, LawMode::Plain).holds);
        assert_eq!(is_josemig(&j, Side::Left).unwrap(), None);
        assert!(is_josemig(&j, Side::Both).unwrap().is_some());
        let r = projection_structure(&k, true);
        assert!(!verify_join_law(&r, Side::Left, LawMode::Plain).holds);
        assert!(verify_join_law(&r, Side::Right, LawMode::Plain).holds);
    }

    #[test]
    fn joiner_must_be_group_identity() {
        let g = gallery::cyclic(3).unwrap();
        let err = JoinedStructure::new(g.as_magma().clone(), g.as_magma().clone(), 1).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::JoinerNotIdentity {
                joiner: 1,
                identity: 0
            }
        );
    }

    #[test]
    fn e_odot_g_examples() {
        let k = e_odot_g(&gallery::klein_joined()).unwrap();
        assert_eq!(k.image.to_vec(), vec![0, 1]);
        assert!(k.is_subgroup && k.inverse_law_witness.is_none());
        assert_eq!(k.unit, 0);
        let z = e_odot_g(&gallery::zn_min_joined(5).unwrap()).unwrap();
        assert_eq!(z.image.to_vec(), vec![0]);
        assert!(z.is_subgroup);
        let min = gallery::min_semigroup(3).unwrap();
        let j = JoinedStructure::new(min.as_magma().clone(), min.as_magma().clone(), 0).unwrap();
        assert!(matches!(e_odot_g(&j), Err(AlgebraError::Precondition(_))));
    }

    #[test]
    fn ideal_subgroup_on_gallery() {
        let b = ideal_subgroup_battery(&gallery::klein_joined()).unwrap();
        assert_eq!(b.common_value(), Some(true));
        for n in [5, 7] {
            let b = ideal_subgroup_battery(&gallery::zn_min_joined(n).unwrap()).unwrap();
            assert_eq!(b.common_value(), Some(true));
        }
        let left = projection_structure(&gallery::klein_group(), false);
        assert_eq!(
            ideal_subgroup_battery(&left).unwrap().common_value(),
            Some(false)
        );
        let right = projection_structure(&gallery::klein_group(), true);
        assert!(ideal_subgroup_battery(&right).is_err());
    }

    #[test]
    fn grouplike_on_gallery() {
        let b = grouplike_battery(&gallery::klein_joined()).unwrap();
        assert_eq!(b.common_value(), Some(true));
        let b = grouplike_battery(&gallery::zn_min_joined(5).unwrap()).unwrap();
        assert_eq!(b.common_value(), Some(false));
        let b = grouplike_battery(&gallery::zn_min_joined(1).unwrap()).unwrap();
        assert_eq!(b.common_value(), Some(true));
    }

    #[test]
    fn image_and_joiner_identities_on_gallery() {
        for j in [gallery::klein_joined(), gallery::zn_min_joined(5).unwrap()] {
            assert!(image_structure_battery(&j).unwrap().consistent());
            assert!(image_ideal_battery(&j).unwrap().consistent());
            let l = joiner_identities(&j).unwrap();
            assert!(l.consistent(), "{:?}", l.offending_legs());
            assert_eq!(l.legs.len(), 17);
        }
    }

    #[test]
    fn joiner_identities_on_semigroup_first_operation() {
        // (min, left-zero) with e = 0 is a left e-semig whose first operation
        // has no identity, so only the periodicity-conditional legs apply.
        let min = gallery::min_semigroup(3).unwrap();
        let lz = min.with_rule(|x, _| x);
        let j = JoinedStructure::new(min.as_magma().clone(), lz, 0).unwrap();
        let b = joiner_identities(&j).unwrap();
        assert!(b.consistent(), "{:?}", b.offending_legs());
        assert!(b.legs.iter().all(|l| !l.label.starts_with("(C)")));
    }

    #[test]
    fn chain_and_left_unital() {
        let j = gallery::klein_joined();
        assert_eq!(join_chain_witness(&j, 4), None);
        assert!(!nontrivial_left_unital(&j));
        let k = gallery::klein_group();
        let trivial = JoinedStructure::new(k.as_magma().clone(), k.as_magma().clone(), 0).unwrap();
        assert!(trivial.is_trivial() && !nontrivial_left_unital(&trivial));
    }
}
