//! The e-congruence `x ~ y iff e (.) x = e (.) y`, its quotient, the maps
//! `π`, `λ`, `φ` relating the quotient to `e (.) S`, and the class-group
//! decomposition of semigroups whose square is a group.

use crate::battery::{Battery, Leg};
use crate::classify::classify;
use crate::error::{AlgebraError, Result};
use crate::factor::cosets;
use crate::function::{conjugates, EndoFunction};
use crate::joined::{require_left_e_semig, JoinedStructure};
use crate::magma::{Group, Magma, Semigroup};
use crate::subset::Subset;
use crate::Side;

/// Classes in order of least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub classes: Vec<Subset>,
    pub class_of: Vec<usize>,
}

impl Partition {
    /// Classes of equal key value.
    pub fn by_key(n: usize, key: impl Fn(usize) -> usize) -> Self {
        let mut classes: Vec<Subset> = Vec::new();
        let mut keys: Vec<usize> = Vec::new();
        let mut class_of = vec![0; n];
        for (x, slot) in class_of.iter_mut().enumerate() {
            let k = key(x);
            let c = match keys.iter().position(|&v| v == k) {
                Some(c) => c,
                None => {
                    keys.push(k);
                    classes.push(Subset::empty(n));
                    keys.len() - 1
                }
            };
            classes[c].insert(x);
            *slot = c;
        }
        Self { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c].first().expect("classes are non-empty")
    }

    /// Labels `[x]` from each class's least element.
    pub fn labels(&self, names: &[String]) -> Vec<String> {
        (0..self.len())
            .map(|c| format!("[{}]", names[self.representative(c)]))
            .collect()
    }

    /// The induced operation on classes, or the first pair of pairs that
    /// breaks compatibility.
    pub fn induced(&self, m: &Magma) -> Result<Magma> {
        let n = m.order();
        for x in 0..n {
            for x2 in 0..n {
                if self.class_of[x] != self.class_of[x2] {
                    continue;
                }
                for y in 0..n {
                    for y2 in 0..n {
                        if self.class_of[y] == self.class_of[y2]
                            && self.class_of[m.op(x, y)] != self.class_of[m.op(x2, y2)]
                        {
                            return Err(AlgebraError::IllDefinedQuotient { x, x2, y, y2 });
                        }
                    }
                }
            }
        }
        let k = self.len();
        let table = (0..k * k)
            .map(|i| {
                let (a, b) = (self.representative(i / k), self.representative(i % k));
                self.class_of[m.op(a, b)]
            })
            .collect();
        Magma::new(self.labels(m.names()), table)
    }
}

/// Classes of equal `J_e` (left) or `J^e` (right) value.
pub fn e_congruence(j: &JoinedStructure, side: Side) -> Partition {
    let map = match side {
        Side::Right => j.right_joiner().mapping,
        _ => j.left_joiner().mapping,
    };
    Partition::by_key(j.order(), |x| map.apply(x))
}

/// `S/~_e` with `π: S -> S/~`, `λ: [x] -> e (.) x` and `φ: e (.) S -> S/~`.
#[derive(Clone, Debug)]
pub struct QuotientDiagram {
    pub partition: Partition,
    pub table: Magma,
    pub pi: Vec<usize>,
    pub lambda: Vec<usize>,
    /// Defined on `e (.) S` only.
    pub phi: Vec<Option<usize>>,
    pub image: Subset,
    /// For a group first operation: the quotient of `.` coincides with that of `(.)`.
    pub operations_coincide: Option<bool>,
    pub identities: Battery,
}

fn right_e_periodic(j: &JoinedStructure) -> bool {
    let jl = j.left_joiner();
    j.dot()
        .elements()
        .all(|x| jl.apply(j.dot().op(x, j.e())) == jl.apply(x))
}

pub fn quotient(j: &JoinedStructure) -> Result<QuotientDiagram> {
    require_left_e_semig(j)?;
    if !right_e_periodic(j) {
        return Err(AlgebraError::Precondition(
            "J_e is not right e-periodic".into(),
        ));
    }
    let n = j.order();
    let jl = j.left_joiner().mapping;
    let partition = e_congruence(j, Side::Left);
    let table = partition.induced(j.odot())?;
    let pi = partition.class_of.clone();
    let lambda: Vec<usize> = (0..partition.len())
        .map(|c| jl.apply(partition.representative(c)))
        .collect();
    let image = jl.image();
    let phi: Vec<Option<usize>> = (0..n).map(|t| image.contains(t).then(|| pi[t])).collect();
    let operations_coincide = j.dot_group().map(|_| {
        partition
            .induced(j.dot())
            .is_ok_and(|d| d.table() == table.table())
    });

    let k = partition.len();
    let label = |xs: &[usize]| j.dot().labels(xs);
    let class_label = |c: usize| vec![table.name(c).to_string()];
    let mut b = Battery::identities("quotient diagram");
    b.push(Leg::from_witness(
        "π λ = id",
        (0..k).find(|&c| pi[lambda[c]] != c).map(class_label),
    ))
    .push(Leg::from_witness(
        "φ λ = id",
        (0..k).find(|&c| phi[lambda[c]] != Some(c)).map(class_label),
    ))
    .push(Leg::from_witness(
        "λ φ = id on e(.)S",
        image
            .iter()
            .find(|&t| phi[t].map(|c| lambda[c]) != Some(t))
            .map(|t| label(&[t])),
    ))
    .push(Leg::from_witness(
        "λ π = J_e",
        (0..n)
            .find(|&x| lambda[pi[x]] != jl.apply(x))
            .map(|x| label(&[x])),
    ))
    .push(Leg::from_witness(
        "φ J_e = π",
        (0..n)
            .find(|&x| phi[jl.apply(x)] != Some(pi[x]))
            .map(|x| label(&[x])),
    ))
    .push(Leg::new(
        "each class meets e(.)S once",
        partition
            .classes
            .iter()
            .all(|c| c.intersection(&image).len() == 1),
    ));
    if let Some(same) = operations_coincide {
        b.push(Leg::new("quotients of . and (.) coincide", same));
    }
    Ok(QuotientDiagram {
        partition,
        table,
        pi,
        lambda,
        phi,
        image,
        operations_coincide,
        identities: b,
    })
}

/// `λ` as an isomorphism `S/~_e -> e (.) S`, plus the monoid and group
/// refinements when the first operation has identity `e` or is a group.
#[derive(Clone, Debug)]
pub struct IsomorphismReport {
    pub diagram: QuotientDiagram,
    /// `J_e^*(G)` for a group first operation.
    pub delta: Option<Subset>,
    pub battery: Battery,
}

pub fn quotient_isomorphism(j: &JoinedStructure) -> Result<IsomorphismReport> {
    let d = quotient(j)?;
    let odot = j.odot();
    let k = d.partition.len();
    let mut b = Battery::identities("quotient isomorphism");
    let injective = {
        let mut seen = d.lambda.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == k
    };
    b.push(Leg::new("λ is injective", injective))
        .push(Leg::new(
            "λ maps onto e(.)S",
            Subset::from_indices(j.order(), d.lambda.iter().copied()) == d.image,
        ))
        .push(Leg::from_witness(
            "λ is a homomorphism",
            (0..k * k)
                .map(|i| (i / k, i % k))
                .find(|&(a, c)| d.lambda[d.table.op(a, c)] != odot.op(d.lambda[a], d.lambda[c]))
                .map(|(a, c)| vec![d.table.name(a).to_string(), d.table.name(c).to_string()]),
        ));
    for leg in &d.identities.legs {
        b.push(leg.clone());
    }
    if j.dot().identity() == Some(j.e()) {
        let class_e = d.pi[j.e()];
        let unit = odot.op(j.e(), j.e());
        b.push(Leg::new(
            "[e] is the identity of the quotient",
            d.table.identity() == Some(class_e),
        ))
        .push(Leg::new(
            "e(.)e is the identity of e(.)S",
            d.image
                .iter()
                .all(|t| odot.op(unit, t) == t && odot.op(t, unit) == t),
        ))
        .push(Leg::new("λ[e] = e(.)e", d.lambda[class_e] == unit));
    }
    let mut delta = None;
    if let Some(g) = j.dot_group() {
        let jl = j.left_joiner().mapping;
        let dl = conjugates(&g, &jl).star.image();
        let mut classes = d.partition.classes.clone();
        classes.sort();
        let mut cs = cosets(&g, &dl);
        cs.sort();
        b.push(Leg::new(
            "Δ_e is a normal subgroup",
            g.is_normal_subgroup(&dl),
        ))
        .push(Leg::new("classes are the cosets of Δ_e", classes == cs))
        .push(Leg::new("|G/~_e| · |Δ_e| = |G|", k * dl.len() == g.order()));
        delta = Some(dl);
    }
    Ok(IsomorphismReport {
        diagram: d,
        delta,
        battery: b,
    })
}

/// Classes of `x ~ y iff ex = ey`, their group, and the choice of the
/// kernel element in each class, with `xy = φ(A_x A_y)`.
#[derive(Clone, Debug)]
pub struct ClassDecomposition {
    pub idempotent: usize,
    pub partition: Partition,
    pub class_group: Group,
    pub choice: Vec<usize>,
}

impl ClassDecomposition {
    pub fn choice_function(&self) -> EndoFunction {
        EndoFunction::new(self.choice.clone()).expect("choices are elements")
    }
}

pub fn decompose_class_united(s: &Semigroup) -> Result<ClassDecomposition> {
    let report = classify(s);
    let e = match report.grouplike_identity {
        Some(e) if report.square_group_direct => e,
        _ => {
            return Err(AlgebraError::Precondition(
                "S·S is not a group, so the semigroup is not class united".into(),
            ))
        }
    };
    let n = s.order();
    let partition = Partition::by_key(n, |x| s.op(e, x));
    let class_group = Group::from_magma(partition.induced(s)?)?;
    let kern = report.kernel;
    let choice: Vec<usize> = partition
        .classes
        .iter()
        .map(|c| {
            let hit = c.intersection(&kern);
            let mut hits = hit.iter();
            match (hits.next(), hits.next()) {
                (Some(k), None) => Ok(k),
                _ => Err(AlgebraError::Precondition(
                    "a class does not meet the kernel exactly once".into(),
                )),
            }
        })
        .collect::<Result<_>>()?;
    for x in 0..n {
        for y in 0..n {
            let c = class_group.op(partition.class_of[x], partition.class_of[y]);
            if choice[c] != s.op(x, y) {
                return Err(AlgebraError::Precondition(format!(
                    "reconstruction fails at ({x}, {y})"
                )));
            }
        }
    }
    Ok(ClassDecomposition {
        idempotent: e,
        partition,
        class_group,
        choice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn class_vecs(p: &Partition) -> Vec<Vec<usize>> {
        p.classes.iter().map(Subset::to_vec).collect()
    }

    #[test]
    fn congruence_examples() {
        let k = gallery::klein_joined();
        assert_eq!(
            class_vecs(&e_congruence(&k, Side::Left)),
            vec![vec![0, 2], vec![1, 3]]
        );
        let z = gallery::zn_min_joined(5).unwrap();
        assert_eq!(e_congruence(&z, Side::Left).len(), 1);
    }

    #[test]
    fn klein_quotient() {
        let d = quotient(&gallery::klein_joined()).unwrap();
        assert_eq!(d.table.order(), 2);
        assert_eq!(d.table.names(), &["[e]", "[a]"]);
        assert_eq!(d.lambda, vec![0, 1]);
        assert_eq!(d.operations_coincide, Some(true));
        assert_eq!(d.identities.common_value(), Some(true));
    }

    #[test]
    fn trivial_group_quotient() {
        let d = quotient(&gallery::zn_min_joined(1).unwrap()).unwrap();
        assert_eq!(d.table.order(), 1);
    }

    #[test]
    fn isomorphism_reports() {
        let r = quotient_isomorphism(&gallery::klein_joined()).unwrap();
        assert_eq!(r.delta.as_ref().unwrap().to_vec(), vec![0, 2]);
        assert_eq!(
            r.battery.common_value(),
            Some(true),
            "{:?}",
            r.battery.offending_legs()
        );
        let r = quotient_isomorphism(&gallery::zn_min_joined(5).unwrap()).unwrap();
        assert_eq!(r.diagram.table.order(), 1);
        assert!(r.delta.unwrap().is_full());
        assert_eq!(r.battery.common_value(), Some(true));
    }

    #[test]
    fn ill_defined_quotient_has_witness() {
        // ~ from x -> x / 2 on Z4 is not compatible with x (.) y = x + y.
        let g = gallery::cyclic(4).unwrap();
        let p = Partition::by_key(4, |x| x / 2);
        let err = p.induced(g.as_magma()).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::IllDefinedQuotient {
                x: 0,
                x2: 1,
                y: 0,
                y2: 1
            }
        );
    }

    #[test]
    fn class_decompositions() {
        let d = decompose_class_united(&gallery::klein_grouplike()).unwrap();
        assert_eq!(d.class_group.order(), 2);
        assert_eq!(class_vecs(&d.partition), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(d.choice, vec![0, 1]);
        let g = gallery::cyclic(3).unwrap();
        let d = decompose_class_united(g.as_semigroup()).unwrap();
        assert_eq!(d.partition.len(), 3);
        assert_eq!(d.choice, vec![0, 1, 2]);
        let min = gallery::min_semigroup(5).unwrap();
        assert!(matches!(
            decompose_class_united(&min),
            Err(AlgebraError::Precondition(_))
        ));
    }
}
