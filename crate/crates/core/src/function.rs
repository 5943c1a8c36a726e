//! Endofunctions of finite groups and semigroups: conjugates, the decomposer
//! and canceler families, associativity, periodicity and f-multiplication.

use crate::error::{AlgebraError, Result};
use crate::magma::{Group, Magma, Semigroup};
use crate::subset::Subset;
use crate::Side;

/// A total self-map of a carrier `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoFunction {
    map: Vec<usize>,
}

impl EndoFunction {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        if let Some(&v) = map.iter().find(|&&v| v >= n) {
            return Err(AlgebraError::ElementOutOfRange { index: v, order: n });
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, c: usize) -> Self {
        Self { map: vec![c; n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new((0..n).map(f).collect())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EndoFunction) -> EndoFunction {
        EndoFunction {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn image(&self) -> Subset {
        Subset::from_indices(self.map.len(), self.map.iter().copied())
    }

    pub fn image_of(&self, a: &Subset) -> Subset {
        Subset::from_indices(self.map.len(), a.iter().map(|x| self.map[x]))
    }

    pub fn is_idempotent(&self) -> bool {
        self.map.iter().all(|&y| self.map[y] == y)
    }

    /// All `n^n` functions in lexicographic order of their value lists.
    pub fn all(n: usize) -> impl Iterator<Item = EndoFunction> {
        let total = (n as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
        (0..total).map(move |mut k| {
            let mut map = vec![0; n];
            for slot in map.iter_mut().rev() {
                *slot = (k % n as u64) as usize;
                k /= n as u64;
            }
            EndoFunction { map }
        })
    }
}

/// `f^*` and `f_*`, defined by `x = f^*(x) f(x) = f(x) f_*(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatePair {
    pub star: EndoFunction,
    pub lower: EndoFunction,
}

pub fn conjugates(g: &Group, f: &EndoFunction) -> ConjugatePair {
    let star = g.elements().map(|x| g.op(x, g.inv(f.apply(x)))).collect();
    let lower = g.elements().map(|x| g.op(g.inv(f.apply(x)), x)).collect();
    ConjugatePair {
        star: EndoFunction { map: star },
        lower: EndoFunction { map: lower },
    }
}

/// Named predicates on endofunctions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    RightDecomposer,
    LeftDecomposer,
    Decomposer,
    RightStrongDecomposer,
    LeftStrongDecomposer,
    StrongDecomposer,
    RightCanceler,
    LeftCanceler,
    Canceler,
    Associative,
    StronglyAssociative,
    Idempotent,
    /// `f(p x) = f(x)` (left), `f(x p) = f(x)` (right) for every period `p`.
    Periodic(Side, Vec<usize>),
}

impl Predicate {
    pub fn requires_group(&self) -> bool {
        use Predicate::*;
        matches!(
            self,
            RightDecomposer
                | LeftDecomposer
                | Decomposer
                | RightStrongDecomposer
                | LeftStrongDecomposer
                | StrongDecomposer
        )
    }

    pub fn name(&self) -> String {
        use Predicate::*;
        match self {
            RightDecomposer => "right decomposer".into(),
            LeftDecomposer => "left decomposer".into(),
            Decomposer => "decomposer".into(),
            RightStrongDecomposer => "right strong decomposer".into(),
            LeftStrongDecomposer => "left strong decomposer".into(),
            StrongDecomposer => "strong decomposer".into(),
            RightCanceler => "right canceler".into(),
            LeftCanceler => "left canceler".into(),
            Canceler => "canceler".into(),
            Associative => "associative".into(),
            StronglyAssociative => "strongly associative".into(),
            Idempotent => "idempotent".into(),
            Periodic(side, periods) => format!("{side:?}-periodic at {periods:?}").to_lowercase(),
        }
    }
}

/// Evaluates predicates against a fixed base, optionally a group.
#[derive(Clone, Copy, Debug)]
pub struct FunctionAnalyzer<'a> {
    base: &'a Magma,
    group: Option<&'a Group>,
}

impl<'a> FunctionAnalyzer<'a> {
    pub fn on_semigroup(base: &'a Semigroup) -> Self {
        Self {
            base: base.as_magma(),
            group: None,
        }
    }

    pub fn on_group(group: &'a Group) -> Self {
        Self {
            base: group.as_magma(),
            group: Some(group),
        }
    }

    pub fn base(&self) -> &'a Magma {
        self.base
    }

    /// First violating tuple in lexicographic order, or `None` when `p` holds.
    pub fn witness(&self, p: &Predicate, f: &EndoFunction) -> Result<Option<Vec<usize>>> {
        let m = self.base;
        let n = m.order();
        if f.len() != n {
            return Err(AlgebraError::OrderMismatch(f.len(), n));
        }
        let op = |x, y| m.op(x, y);
        let fx = |x| f.apply(x);
        let pairs = |pred: &dyn Fn(usize, usize) -> bool| {
            for x in 0..n {
                for y in 0..n {
                    if !pred(x, y) {
                        return Some(vec![x, y]);
                    }
                }
            }
            None
        };
        let group = if p.requires_group() {
            Some(self.group.ok_or_else(|| {
                AlgebraError::Precondition(format!("{} needs a group base", p.name()))
            })?)
        } else {
            None
        };
        let conj = group.map(|g| conjugates(g, f));
        use Predicate::*;
        let w = match p {
            RightDecomposer => {
                let c = conj.as_ref().expect("group checked");
                pairs(&|x, y| fx(op(c.star.apply(x), fx(y))) == fx(y))
            }
            LeftDecomposer => {
                let c = conj.as_ref().expect("group checked");
                pairs(&|x, y| fx(op(fx(x), c.lower.apply(y))) == fx(x))
            }
            RightStrongDecomposer => {
                let c = conj.as_ref().expect("group checked");
                pairs(&|x, y| fx(op(c.star.apply(x), y)) == fx(y))
            }
            LeftStrongDecomposer => {
                let c = conj.as_ref().expect("group checked");
                pairs(&|x, y| fx(op(x, c.lower.apply(y))) == fx(x))
            }
            Decomposer => self
                .witness(&RightDecomposer, f)?
                .or(self.witness(&LeftDecomposer, f)?),
            StrongDecomposer => self
                .witness(&RightStrongDecomposer, f)?
                .or(self.witness(&LeftStrongDecomposer, f)?),
            RightCanceler => pairs(&|x, y| fx(op(x, fx(y))) == fx(op(x, y))),
            LeftCanceler => pairs(&|x, y| fx(op(fx(x), y)) == fx(op(x, y))),
            Canceler => self
                .witness(&RightCanceler, f)?
                .or(self.witness(&LeftCanceler, f)?),
            Associative | StronglyAssociative => {
                let strong = matches!(p, StronglyAssociative);
                let mut found = None;
                'outer: for x in 0..n {
                    for y in 0..n {
                        let xy = op(x, y);
                        for z in 0..n {
                            let lhs = fx(op(x, fx(op(y, z))));
                            let rhs = fx(op(fx(xy), z));
                            if lhs != rhs || (strong && lhs != fx(op(xy, z))) {
                                found = Some(vec![x, y, z]);
                                break 'outer;
                            }
                        }
                    }
                }
                found
            }
            Idempotent => (0..n).find(|&x| fx(fx(x)) != fx(x)).map(|x| vec![x]),
            Periodic(side, periods) => {
                let mut found = None;
                'per: for &p in periods {
                    if p >= n {
                        return Err(AlgebraError::ElementOutOfRange { index: p, order: n });
                    }
                    for x in 0..n {
                        let left_ok = fx(op(p, x)) == fx(x);
                        let right_ok = fx(op(x, p)) == fx(x);
                        let ok = match side {
                            Side::Left => left_ok,
                            Side::Right => right_ok,
                            Side::Both => left_ok && right_ok,
                        };
                        if !ok {
                            found = Some(vec![p, x]);
                            break 'per;
                        }
                    }
                }
                found
            }
        };
        Ok(w)
    }

    pub fn holds(&self, p: &Predicate, f: &EndoFunction) -> Result<bool> {
        Ok(self.witness(p, f)?.is_none())
    }

    pub fn holds_all(&self, ps: &[Predicate], f: &EndoFunction) -> Result<bool> {
        for p in ps {
            if !self.holds(p, f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The full flag set, in the order of `Predicate` variants; decomposer
    /// flags are absent on non-group bases.
    pub fn flags(&self, f: &EndoFunction) -> Result<Vec<(Predicate, bool)>> {
        use Predicate::*;
        let mut all = vec![
            RightCanceler,
            LeftCanceler,
            Canceler,
            Associative,
            StronglyAssociative,
            Idempotent,
        ];
        if self.group.is_some() {
            all.splice(
                0..0,
                [
                    RightDecomposer,
                    LeftDecomposer,
                    Decomposer,
                    RightStrongDecomposer,
                    LeftStrongDecomposer,
                    StrongDecomposer,
                ],
            );
        }
        all.into_iter()
            .map(|p| {
                let h = self.holds(&p, f)?;
                Ok((p, h))
            })
            .collect()
    }
}

/// `x ._f y = f(x y)`. Associativity is not assumed.
pub fn f_multiplication(base: &Magma, f: &EndoFunction) -> Magma {
    base.with_rule(|x, y| f.apply(base.op(x, y)))
}

/// Results of the functional equations `f(exy) = f(e f(xy))` and
/// `f(exy) = f(e f(xy)) = f(xy)`, next to their functional-composition forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalEquations {
    pub surjective_base: bool,
    /// First `(x, y)` violating `f(exy) = f(e f(xy))`.
    pub join_eq: Option<(usize, usize)>,
    /// First `(x, y)` violating `f(exy) = f(e f(xy)) = f(xy)`.
    pub identical_eq: Option<(usize, usize)>,
    /// `f_e ∘ f = f_e` with `f_e(t) = f(et)`.
    pub fe_absorbs_f: bool,
    /// `f_e ∘ f = f_e = f`.
    pub fe_absorbs_f_and_equals_f: bool,
    /// `f` is left e-periodic and idempotent.
    pub periodic_and_idempotent: bool,
}

impl FunctionalEquations {
    /// The composition forms imply the equations, and on surjective bases the
    /// converses hold as well.
    pub fn consistent(&self) -> bool {
        let join = self.join_eq.is_none();
        let ident = self.identical_eq.is_none();
        let forward = (!self.fe_absorbs_f || join) && (!self.fe_absorbs_f_and_equals_f || ident);
        if !self.surjective_base {
            return forward;
        }
        forward
            && join == self.fe_absorbs_f
            && ident == self.fe_absorbs_f_and_equals_f
            && ident == self.periodic_and_idempotent
    }
}

pub fn functional_eq_checks(base: &Semigroup, f: &EndoFunction, e: usize) -> FunctionalEquations {
    let n = base.order();
    let fx = |x| f.apply(x);
    let fe = |t| fx(base.op(e, t));
    let mut join_eq = None;
    let mut identical_eq = None;
    for x in 0..n {
        for y in 0..n {
            let xy = base.op(x, y);
            let lhs = fx(base.op(e, xy));
            let mid = fx(base.op(e, fx(xy)));
            if join_eq.is_none() && lhs != mid {
                join_eq = Some((x, y));
            }
            if identical_eq.is_none() && (lhs != mid || mid != fx(xy)) {
                identical_eq = Some((x, y));
            }
        }
    }
    let fe_absorbs_f = (0..n).all(|t| fe(fx(t)) == fe(t));
    let fe_is_f = (0..n).all(|t| fe(t) == fx(t));
    FunctionalEquations {
        surjective_base: base.is_surjective(),
        join_eq,
        identical_eq,
        fe_absorbs_f,
        fe_absorbs_f_and_equals_f: fe_absorbs_f && fe_is_f,
        periodic_and_idempotent: fe_is_f && f.is_idempotent(),
    }
}
