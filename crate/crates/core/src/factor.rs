//! Direct factorizations `G = Δ·Ω`, their coordinate projections, and the
//! projection form of the left joiner map.

use rayon::prelude::*;

use crate::battery::{Battery, Leg};
use crate::function::{conjugates, EndoFunction, FunctionAnalyzer, Predicate};
use crate::joined::{require_left_group_e_semigroup, JoinedStructure};
use crate::magma::Group;
use crate::subset::Subset;

/// `x = p_delta(x) · p_omega(x)` with the factors unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub delta: Subset,
    pub omega: Subset,
    pub p_delta: EndoFunction,
    pub p_omega: EndoFunction,
}

/// `Some` with the projections iff every element is `a b` for exactly one
/// pair `(a, b) ∈ A × B`.
pub fn is_direct(g: &Group, a: &Subset, b: &Subset) -> Option<Factorization> {
    let n = g.order();
    if a.len() * b.len() != n {
        return None;
    }
    let mut rep: Vec<Option<(usize, usize)>> = vec![None; n];
    for x in a.iter() {
        for y in b.iter() {
            let slot = &mut rep[g.op(x, y)];
            if slot.is_some() {
                return None;
            }
            *slot = Some((x, y));
        }
    }
    let rep: Vec<(usize, usize)> = rep.into_iter().collect::<Option<_>>()?;
    Some(Factorization {
        delta: a.clone(),
        omega: b.clone(),
        p_delta: EndoFunction::new(rep.iter().map(|r| r.0).collect()).expect("in range"),
        p_omega: EndoFunction::new(rep.iter().map(|r| r.1).collect()).expect("in range"),
    })
}

/// All subgroups by order then elements, found by closing under
/// single-element extensions.
pub fn subgroups(g: &Group) -> Vec<Subset> {
    let n = g.order();
    let trivial = Subset::singleton(n, g.identity());
    let mut found = vec![trivial.clone()];
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for x in g.elements().filter(|&x| !h.contains(x)) {
            let mut gens = h.clone();
            gens.insert(x);
            let k = g.generate(&gens);
            if !found.contains(&k) {
                found.push(k.clone());
                frontier.push(k);
            }
        }
    }
    found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    found
}

pub fn normal_subgroups(g: &Group) -> Vec<Subset> {
    subgroups(g)
        .into_iter()
        .filter(|h| g.is_normal_subgroup(h))
        .collect()
}

/// Left cosets `xH`, ordered by least element.
pub fn cosets(g: &Group, h: &Subset) -> Vec<Subset> {
    let n = g.order();
    let mut out: Vec<Subset> = Vec::new();
    for x in g.elements() {
        if out.iter().any(|c| c.contains(x)) {
            continue;
        }
        out.push(Subset::from_indices(n, h.iter().map(|d| g.op(x, d))));
    }
    out
}

/// Every choice of one representative per coset.
pub fn transversals(g: &Group, h: &Subset) -> Vec<Subset> {
    let n = g.order();
    let cs: Vec<Vec<usize>> = cosets(g, h).iter().map(Subset::to_vec).collect();
    let mut out = vec![Vec::new()];
    for c in &cs {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                c.iter().map(move |&r| {
                    let mut p = prefix.clone();
                    p.push(r);
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|t| Subset::from_indices(n, t))
        .collect()
}

/// `P_Ω` for every normal `Δ` and transversal `Ω`, each re-verified as a
/// direct factorization.
pub fn strong_decomposer_projections(g: &Group) -> Vec<Factorization> {
    let mut out: Vec<Factorization> = normal_subgroups(g)
        .par_iter()
        .flat_map_iter(|d| {
            transversals(g, d)
                .into_iter()
                .filter_map(|t| is_direct(g, d, &t))
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_by(|a, b| a.p_omega.cmp(&b.p_omega));
    out
}

/// `Δ = J_e^*(G)`, `Ω = J_e(G)` and the battery of projection claims.
#[derive(Clone, Debug)]
pub struct ProjectionReport {
    pub delta: Subset,
    pub omega: Subset,
    pub lower_image: Subset,
    pub battery: Battery,
}

pub fn projection_theorem_check(j: &JoinedStructure) -> crate::Result<ProjectionReport> {
    let (g, _) = require_left_group_e_semigroup(j)?;
    let jl = j.left_joiner().mapping;
    let conj = conjugates(&g, &jl);
    let delta = conj.star.image();
    let lower_image = conj.lower.image();
    let omega = jl.image();
    let an = FunctionAnalyzer::on_group(&g);
    let label = |xs: Vec<usize>| j.dot().labels(&xs);
    let direct = is_direct(&g, &delta, &omega);
    let mut b = Battery::identities("joiner projection");
    b.push(Leg::from_witness(
        "J_e is a strong decomposer",
        an.witness(&Predicate::StrongDecomposer, &jl)?.map(label),
    ))
    .push(Leg::new(
        "Δ is a normal subgroup",
        g.is_normal_subgroup(&delta),
    ))
    .push(Leg::new("G = Δ·Ω is direct", direct.is_some()))
    .push(Leg::new(
        "G = Ω·Δ is direct",
        is_direct(&g, &omega, &delta).is_some(),
    ))
    .push(Leg::new(
        "J_e = P_Ω",
        direct.as_ref().is_some_and(|f| f.p_omega == jl),
    ))
    .push(Leg::new("J_e^*(G) = J_e_*(G)", delta == lower_image));
    Ok(ProjectionReport {
        delta,
        omega,
        lower_image,
        battery: b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn klein_direct_product() {
        let k = gallery::klein_group();
        let a = Subset::from_indices(4, [0, 2]);
        let b = Subset::from_indices(4, [0, 1]);
        let f = is_direct(&k, &a, &b).unwrap();
        assert_eq!(f.p_omega, gallery::klein_function());
        assert_eq!(f.p_delta.as_slice(), &[0, 0, 2, 2]);
    }

    #[test]
    fn trivial_and_failing_factorizations() {
        let g = gallery::cyclic(4).unwrap();
        let f = is_direct(&g, &Subset::singleton(4, 0), &Subset::full(4)).unwrap();
        assert_eq!(f.p_omega, EndoFunction::identity(4));
        let h = Subset::from_indices(4, [0, 2]);
        assert!(is_direct(&g, &h, &h).is_none());
    }

    #[test]
    fn normal_subgroup_counts() {
        assert_eq!(normal_subgroups(&gallery::klein_group()).len(), 5);
        assert_eq!(normal_subgroups(&gallery::cyclic(3).unwrap()).len(), 2);
        let z4 = normal_subgroups(&gallery::cyclic(4).unwrap());
        assert_eq!(
            z4.iter().map(Subset::to_vec).collect::<Vec<_>>(),
            vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]
        );
        let s3 = gallery::symmetric3();
        assert_eq!(subgroups(&s3).len(), 6);
        assert_eq!(normal_subgroups(&s3).len(), 3);
    }

    #[test]
    fn projections_are_idempotent_with_image_omega() {
        let k = gallery::klein_group();
        let all = strong_decomposer_projections(&k);
        assert_eq!(all.len(), 17);
        for f in &all {
            assert!(f.p_omega.is_idempotent());
            assert_eq!(f.p_omega.image(), f.omega);
            assert_eq!(f.p_delta, conjugates(&k, &f.p_omega).star);
        }
    }

    #[test]
    fn projection_check_on_gallery() {
        let r = projection_theorem_check(&gallery::klein_joined()).unwrap();
        assert_eq!(r.delta.to_vec(), vec![0, 2]);
        assert_eq!(r.omega.to_vec(), vec![0, 1]);
        assert!(r.battery.holds("J_e = P_Ω").unwrap());
        assert_eq!(r.battery.common_value(), Some(true));
        let r = projection_theorem_check(&gallery::zn_min_joined(5).unwrap()).unwrap();
        assert!(r.delta.is_full());
        assert_eq!(r.omega.to_vec(), vec![0]);
        assert_eq!(r.battery.common_value(), Some(true));
    }
}
