use std::fmt;

use serde::Serialize;

/// Largest carrier supported anywhere in the crate.
pub const MAX_ORDER: usize = 64;

/// A subset of a carrier `0..parent_order`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    parent_order: usize,
    bits: u64,
}

impl ElementSet {
    pub fn empty(parent_order: usize) -> Self {
        assert!(parent_order <= MAX_ORDER, "carrier of size {parent_order} exceeds {MAX_ORDER}");
        ElementSet { parent_order, bits: 0 }
    }

    /// `{0}`.
    pub fn zero(parent_order: usize) -> Self {
        let mut s = Self::empty(parent_order);
        s.insert(0);
        s
    }

    pub fn full(parent_order: usize) -> Self {
        assert!(parent_order <= MAX_ORDER, "carrier of size {parent_order} exceeds {MAX_ORDER}");
        let bits = if parent_order == 64 { u64::MAX } else { (1u64 << parent_order) - 1 };
        ElementSet { parent_order, bits }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(parent_order: usize, members: I) -> Self {
        let mut s = Self::empty(parent_order);
        for m in members {
            s.insert(m);
        }
        s
    }

    /// Builds the set of all `x` for which `pred(x)` holds.
    pub fn filter(parent_order: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        Self::from_members(parent_order, (0..parent_order).filter(|&x| pred(x)))
    }

    pub fn from_bits(parent_order: usize, bits: u64) -> Self {
        let full = Self::full(parent_order).bits;
        assert!(bits & !full == 0, "bits outside the carrier");
        ElementSet { parent_order, bits }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.parent_order, "element {x} outside carrier of size {}", self.parent_order);
        let fresh = self.bits & (1 << x) == 0;
        self.bits |= 1 << x;
        fresh
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.parent_order && self.bits & (1 << x) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// True for `{0}` (and for the empty set, which never arises from closures).
    pub fn is_trivial(&self) -> bool {
        self.bits & !1 == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.parent_order)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.parent_order, other.parent_order);
        ElementSet { parent_order: self.parent_order, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.parent_order, other.parent_order);
        ElementSet { parent_order: self.parent_order, bits: self.bits & other.bits }
    }

    /// Members in strictly increasing order.
    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl IntoIterator for &ElementSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let x = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(x)
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
