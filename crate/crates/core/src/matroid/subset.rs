use std::fmt;

use fixedbitset::FixedBitSet;

use crate::element::ElementId;

/// A subset of the ground set `{0, …, m-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSubset {
    bits: FixedBitSet,
}

impl GroundSubset {
    pub fn empty(m: usize) -> Self {
        GroundSubset {
            bits: FixedBitSet::with_capacity(m),
        }
    }

    pub fn full(m: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(m);
        bits.insert_range(..);
        GroundSubset { bits }
    }

    pub fn from_elements<I: IntoIterator<Item = ElementId>>(m: usize, it: I) -> Self {
        let mut s = GroundSubset::empty(m);
        for e in it {
            s.insert(e);
        }
        s
    }

    /// Size of the ambient ground set.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    #[inline]
    pub fn contains(&self, e: ElementId) -> bool {
        self.bits.contains(e.0)
    }

    #[inline]
    pub fn insert(&mut self, e: ElementId) {
        self.bits.insert(e.0);
    }

    #[inline]
    pub fn remove(&mut self, e: ElementId) {
        self.bits.set(e.0, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.bits.ones().map(ElementId)
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &GroundSubset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn with(&self, e: ElementId) -> Self {
        let mut s = self.clone();
        s.insert(e);
        s
    }

    pub fn without(&self, e: ElementId) -> Self {
        let mut s = self.clone();
        s.remove(e);
        s
    }

    /// `self - out + inn`.
    pub fn swapped(&self, out: ElementId, inn: ElementId) -> Self {
        let mut s = self.clone();
        s.remove(out);
        s.insert(inn);
        s
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
