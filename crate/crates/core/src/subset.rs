use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of a finite carrier `{0, .., n - 1}`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a subset from element indices; indices `>= n` are ignored.
    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for i in indices {
            if i < n {
                s.bits.insert(i);
            }
        }
        s
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        Self::from_indices(n, [x])
    }

    /// Size of the underlying carrier.
    pub fn carrier_len(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn insert(&mut self, x: usize) {
        self.bits.insert(x);
    }

    pub fn remove(&mut self, x: usize) {
        self.bits.set(x, false);
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Subset { bits }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Subset { bits }
    }

    pub fn union_with(&mut self, other: &Subset) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        self.bits.intersect_with(&other.bits);
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Subsets order by their sorted element lists, so `{0, 3} < {1}`.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = Subset::from_indices(5, [1, 3, 9]);
        assert_eq!(s.to_vec(), vec![1, 3]);
        assert_eq!(s.len(), 2);
        s.insert(0);
        s.remove(3);
        assert_eq!(s.to_vec(), vec![0, 1]);
        assert_eq!(s.first(), Some(0));
        assert!(Subset::full(4).is_full());
        assert!(Subset::empty(4).is_empty());
        assert!(Subset::full(0).is_full());
    }

    #[test]
    fn set_algebra() {
        let a = Subset::from_indices(6, [0, 2, 4]);
        let b = Subset::from_indices(6, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(Subset::from_indices(6, [0, 3]) < Subset::from_indices(6, [1]));
    }
}
