//! Families of subsets over a fixed ground set, stored as a membership
//! bitmap indexed by subset encoding.

use crate::subset::Subset;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Family {
    n: usize,
    words: Vec<u64>,
}

impl Family {
    pub fn empty(n: usize) -> Family {
        let slots = 1usize << n;
        Family {
            n,
            words: vec![0; slots.div_ceil(64)],
        }
    }

    pub fn from_predicate(n: usize, mut pred: impl FnMut(Subset) -> bool) -> Family {
        let mut fam = Family::empty(n);
        for s in Subset::all(n) {
            if pred(s) {
                fam.insert(s);
            }
        }
        fam
    }

    pub fn from_members<I: IntoIterator<Item = Subset>>(n: usize, members: I) -> Family {
        let mut fam = Family::empty(n);
        for s in members {
            fam.insert(s);
        }
        fam
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, s: Subset) {
        let i = s.index();
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, s: Subset) -> bool {
        let i = s.index();
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending encoding order.
    pub fn members(&self) -> impl Iterator<Item = Subset> + '_ {
        Subset::all(self.n).filter(move |s| self.contains(*s))
    }

    pub fn to_vec(&self) -> Vec<Subset> {
        self.members().collect()
    }

    /// The family of complements.
    pub fn dual(&self) -> Family {
        Family::from_predicate(self.n, |s| self.contains(s.complement()))
    }

    /// Table of `⋂ { M ∈ family : A ⊆ M }` for every `A`, with the full set
    /// standing in for an empty intersection. Computed by a superset sweep.
    pub fn meet_above(&self) -> Vec<u16> {
        let full = Subset::full(self.n).bits() as u16;
        let size = 1usize << self.n;
        let mut table: Vec<u16> = (0..size)
            .map(|i| {
                if self.contains(Subset::raw(self.n, i as u32)) {
                    i as u16
                } else {
                    full
                }
            })
            .collect();
        for bit in 0..self.n {
            for i in (0..size).rev() {
                if i & (1 << bit) == 0 {
                    table[i] &= table[i | (1 << bit)];
                }
            }
        }
        table
    }

    /// Table of `⋃ { M ∈ family : M ⊆ A }` for every `A`. Computed by a
    /// subset sweep.
    pub fn join_below(&self) -> Vec<u16> {
        let size = 1usize << self.n;
        let mut table: Vec<u16> = (0..size)
            .map(|i| {
                if self.contains(Subset::raw(self.n, i as u32)) {
                    i as u16
                } else {
                    0
                }
            })
            .collect();
        for bit in 0..self.n {
            for i in 0..size {
                if i & (1 << bit) != 0 {
                    table[i] |= table[i & !(1 << bit)];
                }
            }
        }
        table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, pts: &[usize]) -> Subset {
        Subset::from_points(n, pts.iter().copied()).unwrap()
    }

    #[test]
    fn sweeps_match_direct_scans() {
        let n = 4;
        let fam = Family::from_members(n, [s(n, &[0]), s(n, &[0, 2]), s(n, &[1, 2]), s(n, &[0, 1, 2, 3])]);
        let meet = fam.meet_above();
        let join = fam.join_below();
        for a in Subset::all(n) {
            let direct_meet = fam
                .members()
                .filter(|m| a.is_subset_of(*m))
                .fold(Subset::full(n), |acc, m| acc.intersection(m));
            let direct_join = fam
                .members()
                .filter(|m| m.is_subset_of(a))
                .fold(Subset::empty(n), |acc, m| acc.union(m));
            assert_eq!(meet[a.index()] as u32, direct_meet.bits(), "meet {a}");
            assert_eq!(join[a.index()] as u32, direct_join.bits(), "join {a}");
        }
    }

    #[test]
    fn dual_and_counts() {
        let n = 3;
        let fam = Family::from_members(n, [Subset::empty(n), s(n, &[0])]);
        assert_eq!(fam.len(), 2);
        let dual = fam.dual();
        assert!(dual.contains(Subset::full(n)));
        assert!(dual.contains(s(n, &[1, 2])));
        assert_eq!(dual.to_vec(), vec![s(n, &[1, 2]), Subset::full(n)]);
    }
}
