//! Idempotents, center, ideals and the kernel of a finite semigroup, and the
//! ladder homogroup ⊇ grouplike ⊇ unipotent grouplike, plus the square-group
//! property.

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::magma::{Magma, Semigroup};
use crate::subset::Subset;
use crate::Side;

pub fn idempotents(s: &Magma) -> Subset {
    Subset::from_indices(s.order(), s.elements().filter(|&x| s.op(x, x) == x))
}

pub fn center(s: &Magma) -> Subset {
    Subset::from_indices(
        s.order(),
        s.elements()
            .filter(|&x| s.elements().all(|y| s.op(x, y) == s.op(y, x))),
    )
}

pub fn central_idempotents(s: &Magma) -> Subset {
    idempotents(s).intersection(&center(s))
}

/// `S¹ x S¹`.
pub fn principal_ideal(s: &Magma, x: usize) -> Subset {
    let mut out = Subset::singleton(s.order(), x);
    for a in s.elements() {
        let ax = s.op(a, x);
        out.insert(ax);
        out.insert(s.op(x, a));
        for b in s.elements() {
            out.insert(s.op(ax, b));
        }
    }
    out
}

/// `x S¹`.
pub fn principal_right_ideal(s: &Magma, x: usize) -> Subset {
    let mut out = Subset::singleton(s.order(), x);
    for a in s.elements() {
        out.insert(s.op(x, a));
    }
    out
}

/// The minimal two-sided ideal: the intersection of all principal ideals.
pub fn kernel(s: &Semigroup) -> Subset {
    s.elements()
        .map(|x| principal_ideal(s, x))
        .reduce(|mut acc, p| {
            acc.intersect_with(&p);
            acc
        })
        .expect("carrier is nonempty")
}

/// `S A ⊆ A` (left), `A S ⊆ A` (right), or both. Empty sets are not ideals.
pub fn is_ideal(s: &Magma, a: &Subset, side: Side) -> bool {
    if a.is_empty() {
        return false;
    }
    let left = || {
        a.iter()
            .all(|x| s.elements().all(|y| a.contains(s.op(y, x))))
    };
    let right = || {
        a.iter()
            .all(|x| s.elements().all(|y| a.contains(s.op(x, y))))
    };
    match side {
        Side::Left => left(),
        Side::Right => right(),
        Side::Both => left() && right(),
    }
}

/// Elements divisible on both sides by every element: `∀s ∃u,v: su = x = vs`.
pub fn zeroids(s: &Magma) -> Subset {
    let n = s.order();
    Subset::from_indices(
        n,
        s.elements().filter(|&x| {
            s.elements().all(|a| {
                s.elements().any(|u| s.op(a, u) == x) && s.elements().any(|v| s.op(v, a) == x)
            })
        }),
    )
}

/// The maximal subgroup with identity `i`; empty when `i` is not idempotent.
pub fn maximal_subgroup(s: &Magma, i: usize) -> Subset {
    let n = s.order();
    if s.op(i, i) != i {
        return Subset::empty(n);
    }
    let local = |x: usize| s.op(i, x) == x && s.op(x, i) == x;
    Subset::from_indices(
        n,
        s.elements().filter(|&x| {
            local(x)
                && s.elements()
                    .any(|y| local(y) && s.op(x, y) == i && s.op(y, x) == i)
        }),
    )
}

/// `i S i`: the largest subset on which `i` is a two-sided identity.
pub fn local_submonoid(s: &Magma, i: usize) -> Subset {
    Subset::from_indices(s.order(), s.elements().map(|x| s.op(s.op(i, x), i)))
}

/// Elements `e` with `e(xy) = xy` for all `x, y`.
pub fn bi_identities(s: &Magma) -> Subset {
    let all = Subset::full(s.order());
    let square = s.subset_product(&all, &all);
    Subset::from_indices(
        s.order(),
        s.elements()
            .filter(|&e| square.iter().all(|t| s.op(e, t) == t)),
    )
}

/// Every two-sided ideal that is a monoid, with its identity, by subset scan.
pub fn ideal_submonoids(s: &Magma) -> Result<Vec<(Subset, usize)>> {
    let n = s.order();
    if n > 16 {
        return Err(AlgebraError::SizeLimit(format!(
            "ideal submonoid scan limited to order 16, got {n}"
        )));
    }
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let m = Subset::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
        if !is_ideal(s, &m, Side::Both) {
            continue;
        }
        let id = m
            .iter()
            .find(|&i| m.iter().all(|x| s.op(i, x) == x && s.op(x, i) == x));
        if let Some(id) = id {
            out.push((m, id));
        }
    }
    out.sort();
    Ok(out)
}

/// Structural summary of a finite semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub idempotents: Subset,
    pub center: Subset,
    pub central_idempotents: Subset,
    pub kernel: Subset,
    pub is_homogroup: bool,
    /// The kernel and its identity, when the kernel is a group.
    pub ideal_subgroup: Option<(Subset, usize)>,
    /// The unique central idempotent of a grouplike.
    pub grouplike_identity: Option<usize>,
    pub is_unipotent: bool,
    /// `S·S` is a subgroup, checked directly.
    pub square_group_direct: bool,
    /// Homogroup with a unique central idempotent `e` and `exy = xy`.
    pub square_group_conditions: bool,
    /// A grouplike whose identity `e` satisfies `exy = xy`.
    pub square_group_grouplike: bool,
    pub bi_identity_witness: Option<usize>,
    pub bi_identity_count: usize,
}

impl ClassificationReport {
    pub fn is_grouplike(&self) -> bool {
        self.grouplike_identity.is_some()
    }

    pub fn has_square_group_property(&self) -> bool {
        self.square_group_direct
    }

    /// The three characterisations of the square-group property agree.
    pub fn square_group_consistent(&self) -> bool {
        self.square_group_direct == self.square_group_conditions
            && self.square_group_direct == self.square_group_grouplike
    }

    pub fn flags(&self) -> ClassificationFlags {
        ClassificationFlags {
            homogroup: self.is_homogroup,
            grouplike: self.is_grouplike(),
            unipotent: self.is_unipotent,
            square_group: self.has_square_group_property(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationFlags {
    pub homogroup: bool,
    pub grouplike: bool,
    pub unipotent: bool,
    pub square_group: bool,
}

/// `∀x ∃y: xy = yx = e`.
fn solvable_at(s: &Magma, e: usize) -> bool {
    s.elements()
        .all(|x| s.elements().any(|y| s.op(x, y) == e && s.op(y, x) == e))
}

pub fn classify(s: &Semigroup) -> ClassificationReport {
    let n = s.order();
    let its = idempotents(s);
    let z = center(s);
    let zt = its.intersection(&z);
    let kern = kernel(s);
    let kernel_identity = s.subgroup_identity(&kern);
    let is_homogroup = kernel_identity.is_some();

    let grouplike_identity = match zt.to_vec().as_slice() {
        [e] if solvable_at(s, *e) => Some(*e),
        _ => None,
    };
    let is_unipotent = grouplike_identity.is_some() && its.len() == 1;

    let all = Subset::full(n);
    let square = s.subset_product(&all, &all);
    let square_group_direct = s.subgroup_identity(&square).is_some();

    let bis = bi_identities(s);
    let square_group_conditions = match zt.to_vec().as_slice() {
        [e] => is_homogroup && bis.contains(*e),
        _ => false,
    };
    let square_group_grouplike = grouplike_identity.is_some_and(|e| bis.contains(e));

    ClassificationReport {
        idempotents: its,
        center: z,
        central_idempotents: zt,
        ideal_subgroup: kernel_identity.map(|i| (kern.clone(), i)),
        kernel: kern,
        is_homogroup,
        grouplike_identity,
        is_unipotent,
        square_group_direct,
        square_group_conditions,
        square_group_grouplike,
        bi_identity_witness: bis.first(),
        bi_identity_count: bis.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn min_semigroup_is_homogroup_not_grouplike() {
        let s = gallery::min_semigroup(5).unwrap();
        let r = classify(&s);
        assert!(r.idempotents.is_full());
        assert!(r.central_idempotents.is_full());
        assert_eq!(r.kernel.to_vec(), vec![0]);
        assert!(r.is_homogroup);
        assert!(!r.is_grouplike());
        assert!(r.square_group_consistent());
    }

    #[test]
    fn omega_grouplike_not_unipotent() {
        let s = gallery::omega_grouplike(3).unwrap();
        assert_eq!(idempotents(&s).to_vec(), vec![0, 1, 2]);
        assert_eq!(central_idempotents(&s).to_vec(), vec![0]);
        let r = classify(&gallery::omega_grouplike(4).unwrap());
        assert!(r.is_grouplike() && !r.is_unipotent);
        assert_eq!(r.grouplike_identity, Some(0));
    }

    #[test]
    fn klein_grouplike_classification() {
        let s = gallery::klein_grouplike();
        let r = classify(&s);
        assert_eq!(r.kernel.to_vec(), vec![0, 1]);
        assert_eq!(r.idempotents.to_vec(), vec![0]);
        assert!(r.is_grouplike() && r.is_unipotent && r.has_square_group_property());
        assert!(r.square_group_consistent());
        assert_eq!(r.bi_identity_witness, Some(0));
        assert_eq!(r.ideal_subgroup, Some((Subset::from_indices(4, [0, 1]), 0)));
    }

    #[test]
    fn groups_are_their_own_kernel() {
        for g in [
            gallery::klein_group(),
            gallery::cyclic(5).unwrap(),
            gallery::symmetric3(),
        ] {
            assert!(kernel(&g).is_full());
            assert_eq!(idempotents(&g).to_vec(), vec![g.identity()]);
            let r = classify(&g);
            assert!(r.is_unipotent && r.has_square_group_property());
        }
    }

    #[test]
    fn ideal_examples() {
        let m = gallery::min_semigroup(5).unwrap();
        assert!(is_ideal(&m, &Subset::from_indices(5, [0, 1]), Side::Both));
        let k = gallery::klein_group();
        assert!(!is_ideal(&k, &Subset::from_indices(4, [0, 1]), Side::Both));
        let kg = gallery::klein_grouplike();
        assert!(is_ideal(&kg, &Subset::from_indices(4, [0, 1]), Side::Both));
        assert!(!is_ideal(&kg, &Subset::empty(4), Side::Left));
    }

    #[test]
    fn left_zero_band_kernel_is_everything() {
        let lz =
            Semigroup::new(Magma::from_fn(Magma::default_names(3), |x, _| x).unwrap()).unwrap();
        let r = classify(&lz);
        assert!(r.kernel.is_full());
        assert!(!r.is_homogroup);
        assert!(r.center.is_empty());
        assert!(zeroids(&lz).is_empty());
    }

    #[test]
    fn maximal_subgroup_of_grouplike() {
        let kg = gallery::klein_grouplike();
        assert_eq!(maximal_subgroup(&kg, 0).to_vec(), vec![0, 1]);
        assert!(maximal_subgroup(&kg, 1).is_empty());
        assert_eq!(local_submonoid(&kg, 0).to_vec(), vec![0, 1]);
    }
}
