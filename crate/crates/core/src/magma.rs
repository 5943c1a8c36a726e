//! Operation tables over dense element indices.
//!
//! Elements are `0..n` with a separate label list. Tables are row-major with
//! the left operand selecting the row, so `op(x, y) == table[x * n + y]`.

use std::collections::HashSet;
use std::ops::Deref;

use crate::error::{AlgebraError, Result};
use crate::subset::Subset;

/// A finite carrier with one binary operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Magma {
    names: Vec<String>,
    table: Vec<usize>,
}

impl Magma {
    pub fn new(names: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let mut seen = HashSet::with_capacity(n);
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(AlgebraError::DuplicateLabel(name.clone()));
            }
        }
        if table.len() != n * n {
            return Err(AlgebraError::TableShape {
                expected: n * n,
                found: table.len(),
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(AlgebraError::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: table[pos],
                order: n,
            });
        }
        Ok(Self { names, table })
    }

    /// Labels `0, 1, .., n - 1`.
    pub fn default_names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    pub fn from_fn(names: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = names.len();
        let table = (0..n * n).map(|i| op(i / n, i % n)).collect();
        Self::new(names, table)
    }

    /// Same carrier and labels, different table.
    pub fn with_table(&self, table: Vec<usize>) -> Result<Self> {
        Self::new(self.names.clone(), table)
    }

    /// Same carrier and labels, table given by a rule.
    pub fn with_rule(&self, op: impl Fn(usize, usize) -> usize) -> Self {
        let n = self.order();
        let table = (0..n * n).map(|i| op(i / n, i % n)).collect();
        Self::new(self.names.clone(), table).expect("rule must stay inside the carrier")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.names.len() + y]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn labels(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| self.names[x].clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// First `(x, y, z)` in lexicographic order with `(xy)z != x(yz)`.
    pub fn associativity_counterexample(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_counterexample().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (x + 1..n).all(|y| self.op(x, y) == self.op(y, x)))
    }

    /// `{a * b : a in A, b in B}`.
    pub fn subset_product(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.order());
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.op(x, y));
            }
        }
        out
    }

    /// `SS == S`.
    pub fn is_surjective(&self) -> bool {
        let all = Subset::full(self.order());
        self.subset_product(&all, &all).is_full()
    }

    /// The opposite operation `x *' y = y * x`.
    pub fn opposite(&self) -> Magma {
        self.with_rule(|x, y| self.op(y, x))
    }

    pub fn is_closed(&self, a: &Subset) -> bool {
        a.iter()
            .all(|x| a.iter().all(|y| a.contains(self.op(x, y))))
    }

    /// If `a` is a subgroup under this operation, returns its identity.
    pub fn subgroup_identity(&self, a: &Subset) -> Option<usize> {
        if a.is_empty() || !self.is_closed(a) {
            return None;
        }
        let id = a
            .iter()
            .find(|&i| a.iter().all(|x| self.op(i, x) == x && self.op(x, i) == x))?;
        a.iter()
            .all(|x| a.iter().any(|y| self.op(x, y) == id && self.op(y, x) == id))
            .then_some(id)
    }

    /// The two-sided identity, if there is one.
    pub fn identity(&self) -> Option<usize> {
        self.elements().find(|&i| {
            self.elements()
                .all(|x| self.op(i, x) == x && self.op(x, i) == x)
        })
    }

    pub fn is_idempotent_element(&self, x: usize) -> bool {
        self.op(x, x) == x
    }
}

/// A magma whose operation is associative. Construction checks every triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semigroup {
    magma: Magma,
}

impl Semigroup {
    pub fn new(magma: Magma) -> Result<Self> {
        match magma.associativity_counterexample() {
            Some((x, y, z)) => Err(AlgebraError::NotAssociative(x, y, z)),
            None => Ok(Self { magma }),
        }
    }

    pub fn as_magma(&self) -> &Magma {
        &self.magma
    }

    pub fn into_magma(self) -> Magma {
        self.magma
    }
}

impl Deref for Semigroup {
    type Target = Magma;

    fn deref(&self) -> &Magma {
        &self.magma
    }
}

/// A semigroup with a two-sided identity and two-sided inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Group {
    semigroup: Semigroup,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    pub fn new(semigroup: Semigroup) -> Result<Self> {
        let identity = semigroup.identity().ok_or(AlgebraError::NoIdentity)?;
        let inverse = semigroup
            .elements()
            .map(|x| {
                semigroup
                    .elements()
                    .find(|&y| semigroup.op(x, y) == identity && semigroup.op(y, x) == identity)
                    .ok_or(AlgebraError::NoInverse(x))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            semigroup,
            identity,
            inverse,
        })
    }

    pub fn from_magma(magma: Magma) -> Result<Self> {
        Self::new(Semigroup::new(magma)?)
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn as_semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    pub fn into_magma(self) -> Magma {
        self.semigroup.into_magma()
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &Subset) -> Subset {
        let mut h = Subset::singleton(self.order(), self.identity);
        let mut frontier: Vec<usize> = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for g in gens.iter() {
                let y = self.op(x, g);
                if !h.contains(y) {
                    h.insert(y);
                    frontier.push(y);
                }
            }
        }
        h
    }

    pub fn is_subgroup(&self, h: &Subset) -> bool {
        self.subgroup_identity(h) == Some(self.identity)
    }

    /// `g h g^-1 ⊆ h` for every `g`.
    pub fn is_normal_subgroup(&self, h: &Subset) -> bool {
        self.is_subgroup(h)
            && self.elements().all(|g| {
                h.iter()
                    .all(|x| h.contains(self.op(self.op(g, x), self.inv(g))))
            })
    }
}

impl Deref for Group {
    type Target = Semigroup;

    fn deref(&self) -> &Semigroup {
        &self.semigroup
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Group {
        Group::from_magma(Magma::from_fn(Magma::default_names(n), |x, y| (x + y) % n).unwrap())
            .unwrap()
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(
            Magma::new(vec![], vec![]).unwrap_err(),
            AlgebraError::EmptyCarrier
        );
        assert!(matches!(
            Magma::new(vec!["a".into(), "a".into()], vec![0; 4]),
            Err(AlgebraError::DuplicateLabel(_))
        ));
        assert!(matches!(
            Magma::new(Magma::default_names(2), vec![0; 3]),
            Err(AlgebraError::TableShape { .. })
        ));
        assert_eq!(
            Magma::new(Magma::default_names(2), vec![0, 0, 2, 0]).unwrap_err(),
            AlgebraError::EntryOutOfRange {
                row: 1,
                col: 0,
                value: 2,
                order: 2
            }
        );
    }

    #[test]
    fn non_associative_table_refuses_promotion() {
        // 0*0 = 1, every other product 0: (0*0)*1 = 0 but 0*(0*1) = 1.
        let m = Magma::new(Magma::default_names(2), vec![1, 0, 0, 0]).unwrap();
        assert_eq!(m.associativity_counterexample(), Some((0, 0, 1)));
        assert_eq!(
            Semigroup::new(m).unwrap_err(),
            AlgebraError::NotAssociative(0, 0, 1)
        );
    }

    #[test]
    fn cyclic_group_structure() {
        let g = z(4);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 3);
        assert_eq!(g.inv(2), 2);
        assert!(g.is_surjective());
        assert!(g.is_commutative());
        let h = g.generate(&Subset::singleton(4, 2));
        assert_eq!(h.to_vec(), vec![0, 2]);
        assert!(g.is_normal_subgroup(&h));
        assert!(!g.is_subgroup(&Subset::from_indices(4, [0, 1])));
    }

    #[test]
    fn group_needs_identity_and_inverses() {
        let min = Magma::from_fn(Magma::default_names(3), |x, y| x.min(y)).unwrap();
        assert_eq!(
            Group::from_magma(min).unwrap_err(),
            AlgebraError::NoInverse(0)
        );
        let left_zero = Magma::from_fn(Magma::default_names(2), |x, _| x).unwrap();
        assert_eq!(
            Group::from_magma(left_zero).unwrap_err(),
            AlgebraError::NoIdentity
        );
    }

    #[test]
    fn subset_product_of_minima() {
        let min = Magma::from_fn(Magma::default_names(5), |x, y| x.min(y)).unwrap();
        let a = Subset::from_indices(5, [2, 3]);
        let b = Subset::from_indices(5, [1, 4]);
        assert_eq!(min.subset_product(&a, &b).to_vec(), vec![1, 2, 3]);
        assert!(min.subset_product(&Subset::empty(5), &b).is_empty());
    }
}
