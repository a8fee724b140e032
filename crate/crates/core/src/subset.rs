//! Subsets of a ground set of at most 16 points, packed into one word.

use crate::error::{Error, Result};
use std::fmt;

pub const MAX_POINTS: usize = 16;

/// A subset of the points `0..n`.
///
/// Ordering compares the packed encoding first, which is the canonical
/// order used for open families and reports.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subset {
    bits: u16,
    n: u8,
}

#[inline]
fn mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl Subset {
    pub fn empty(n: usize) -> Subset {
        debug_assert!((1..=MAX_POINTS).contains(&n));
        Subset { bits: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Subset {
        debug_assert!((1..=MAX_POINTS).contains(&n));
        Subset {
            bits: mask(n) as u16,
            n: n as u8,
        }
    }

    pub fn singleton(n: usize, point: usize) -> Subset {
        assert!(point < n, "point {point} outside 0..{n}");
        Subset {
            bits: 1 << point,
            n: n as u8,
        }
    }

    pub fn from_bits(n: usize, bits: u32) -> Result<Subset> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(Error::PointCount(n));
        }
        if bits & !mask(n) != 0 {
            return Err(Error::SubsetOutOfRange(bits, n));
        }
        Ok(Subset {
            bits: bits as u16,
            n: n as u8,
        })
    }

    /// Caller guarantees `bits` fits in `n` points.
    #[inline]
    pub(crate) fn raw(n: usize, bits: u32) -> Subset {
        debug_assert!(bits & !mask(n) == 0);
        Subset {
            bits: bits as u16,
            n: n as u8,
        }
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(n: usize, points: I) -> Result<Subset> {
        let mut bits = 0u32;
        for p in points {
            if p >= n {
                return Err(Error::SubsetOutOfRange(1 << p.min(31), n));
            }
            bits |= 1 << p;
        }
        Subset::from_bits(n, bits)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits as u32
    }

    #[inline]
    pub fn index(self) -> usize {
        self.bits as usize
    }

    #[inline]
    pub fn n(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn contains(self, point: usize) -> bool {
        point < self.n() && self.bits & (1 << point) != 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits() == mask(self.n())
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.bits & other.bits == 0
    }

    #[inline]
    pub fn meets(self, other: Subset) -> bool {
        self.bits & other.bits != 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn complement(self) -> Subset {
        Subset {
            bits: !self.bits & mask(self.n()) as u16,
            n: self.n,
        }
    }

    pub fn with(self, point: usize) -> Subset {
        Subset::singleton(self.n(), point).union(self)
    }

    pub fn points(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.n()).filter(move |&i| bits & (1 << i) != 0)
    }

    /// Every subset of `0..n`, in ascending encoding order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> + Clone {
        (0..=mask(n)).map(move |b| Subset::raw(n, b))
    }

    /// Every subset of `self` (including `∅` and `self`), ascending.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        Subset::all(self.n()).filter(move |s| s.is_subset_of(self))
    }

    /// Every superset of `self` within the ground set, ascending.
    pub fn supersets(self) -> impl Iterator<Item = Subset> {
        Subset::all(self.n()).filter(move |s| self.is_subset_of(*s))
    }

    pub fn display_with(self, labels: &[String]) -> String {
        let names: Vec<&str> = self.points().map(|p| labels[p].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Serializes as the ascending list of member indices.
impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.points())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", pts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_out_of_range_bits() {
        assert!(Subset::from_bits(3, 0b1000).is_err());
        assert!(Subset::from_bits(0, 0).is_err());
        assert!(Subset::from_bits(17, 0).is_err());
        assert_eq!(Subset::from_bits(16, 0xffff).unwrap(), Subset::full(16));
    }

    #[test]
    fn displays_indices_and_labels() {
        let s = Subset::from_points(4, [0, 2]).unwrap();
        assert_eq!(s.to_string(), "{0,2}");
        let labels: Vec<String> = ["k", "l", "m", "n"].iter().map(|s| s.to_string()).collect();
        assert_eq!(s.display_with(&labels), "{k,m}");
        assert_eq!(Subset::empty(4).display_with(&labels), "{}");
    }

    #[test]
    fn powerset_iteration_counts() {
        assert_eq!(Subset::all(4).count(), 16);
        let s = Subset::from_points(4, [1, 3]).unwrap();
        assert_eq!(s.subsets().count(), 4);
        assert_eq!(s.supersets().count(), 4);
    }

    proptest! {
        #[test]
        fn complement_laws(n in 1usize..=16, raw in any::<u32>()) {
            let a = Subset::from_bits(n, raw & ((1u32 << n) - 1)).unwrap();
            prop_assert_eq!(a.complement().complement(), a);
            prop_assert_eq!(a.union(a.complement()), Subset::full(n));
            prop_assert!(a.intersection(a.complement()).is_empty());
            prop_assert!(a.points().all(|p| p < n));
        }
    }
}
