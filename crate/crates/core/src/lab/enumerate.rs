//! All topologies on `n` labeled points, by two independent routes, plus
//! canonical forms up to homeomorphism and map enumeration.

use crate::error::{Error, Result};
use crate::maps::{FiniteMap, MapRef};
use crate::profile::SpaceProfile;
use crate::space::{default_labels, permute_subset, Space};
use crate::subset::Subset;
use crate::tags::MapPropertyTag;
use std::collections::BTreeSet;

pub const MAX_ENUMERATION_POINTS: usize = 5;
pub const MAX_NAIVE_POINTS: usize = 4;

/// Filters every family of subsets containing `∅` and `X` for closure
/// under pairwise union and intersection.
pub fn topologies_naive(n: usize) -> Result<Vec<Space>> {
    if !(1..=MAX_NAIVE_POINTS).contains(&n) {
        return Err(Error::BoundExceeded(n, MAX_NAIVE_POINTS));
    }
    let size = 1usize << n;
    let full = size - 1;
    // Free slots: every subset except ∅ and X.
    let free: Vec<usize> = (1..full).collect();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << free.len()) {
        let mut member = vec![false; size];
        member[0] = true;
        member[full] = true;
        for (i, &s) in free.iter().enumerate() {
            if code & (1 << i) != 0 {
                member[s] = true;
            }
        }
        let closed = (0..size).all(|u| {
            !member[u] || (0..size).all(|v| !member[v] || (member[u | v] && member[u & v]))
        });
        if closed {
            let opens = (0..size)
                .filter(|&s| member[s])
                .map(|s| Subset::raw(n, s as u32))
                .collect();
            out.push(Space::trusted(default_labels(n), opens));
        }
    }
    out.sort_by(space_order);
    Ok(out)
}

/// Enumerates reflexive transitive relations and takes their up-sets as
/// the open sets.
pub fn topologies_preorder(n: usize) -> Result<Vec<Space>> {
    if !(1..=MAX_ENUMERATION_POINTS).contains(&n) {
        return Err(Error::BoundExceeded(n, MAX_ENUMERATION_POINTS));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << pairs.len()) {
        // above[a] = points b with a ≤ b (including a).
        let mut above: Vec<u32> = (0..n).map(|a| 1 << a).collect();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if code & (1 << i) != 0 {
                above[a] |= 1 << b;
            }
        }
        let transitive = (0..n).all(|a| {
            (0..n)
                .filter(|&b| above[a] & (1 << b) != 0)
                .all(|b| above[b] & !above[a] == 0)
        });
        if !transitive {
            continue;
        }
        let opens = Subset::all(n)
            .filter(|u| u.points().all(|a| above[a] & !u.bits() == 0))
            .collect();
        out.push(Space::trusted(default_labels(n), opens));
    }
    out.sort_by(space_order);
    Ok(out)
}

fn space_order(a: &Space, b: &Space) -> std::cmp::Ordering {
    (a.n(), a.opens()).cmp(&(b.n(), b.opens()))
}

/// Labeled topologies on `n` points in canonical order; with
/// `up_to_homeo`, one permutation-minimal representative per class.
pub fn enumerate_topologies(n: usize, up_to_homeo: bool) -> Result<Vec<Space>> {
    let all = topologies_preorder(n)?;
    if !up_to_homeo {
        return Ok(all);
    }
    let forms: BTreeSet<CanonicalForm> = all.iter().map(canonical_form).collect();
    Ok(forms.into_iter().map(|f| f.to_space()).collect())
}

/// Every labeled topology with `1..=bound` points, smallest first.
pub fn spaces_up_to(bound: usize) -> Vec<Space> {
    (1..=bound)
        .flat_map(|n| topologies_preorder(n).expect("bound checked by caller"))
        .collect()
}

/// Sorted opens encoding minimized over all relabelings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    pub n: usize,
    pub opens: Vec<u16>,
}

impl CanonicalForm {
    pub fn to_space(&self) -> Space {
        let opens = self.opens.iter().map(|&b| Subset::raw(self.n, b as u32)).collect();
        Space::trusted(default_labels(self.n), opens)
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

pub fn canonical_form(space: &Space) -> CanonicalForm {
    let n = space.n();
    permutations(n)
        .iter()
        .map(|perm| {
            let mut opens: Vec<u16> = space
                .opens()
                .iter()
                .map(|&u| permute_subset(u, perm).bits() as u16)
                .collect();
            opens.sort_unstable();
            CanonicalForm { n, opens }
        })
        .min()
        .expect("at least one permutation")
}

/// All assignments `domain → codomain` in lexicographic order (first
/// point most significant) passing every filter.
pub fn enumerate_maps(domain: &Space, codomain: &Space, filters: &[MapPropertyTag]) -> Vec<FiniteMap> {
    let (d, c) = (SpaceProfile::new(domain), SpaceProfile::new(codomain));
    assignments(domain.n(), codomain.n())
        .filter(|a| filters.iter().all(|t| MapRef::new(&d, &c, a).property(*t)))
        .map(|a| FiniteMap::from_assignment(domain.clone(), codomain.clone(), a).expect("in range"))
        .collect()
}

pub fn assignments(dom_n: usize, cod_n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = cod_n.pow(dom_n as u32);
    (0..total).map(move |mut code| {
        let mut a = vec![0; dom_n];
        for slot in a.iter_mut().rev() {
            *slot = code % cod_n;
            code /= cod_n;
        }
        a
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tags::MapPropertyTag::*;

    #[test]
    fn labeled_counts() {
        for (n, count) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
            let naive = topologies_naive(n).unwrap();
            let pre = topologies_preorder(n).unwrap();
            assert_eq!(naive.len(), count);
            assert_eq!(naive, pre);
        }
        assert!(topologies_naive(5).is_err());
        assert!(topologies_preorder(6).is_err());
    }

    #[test]
    fn homeomorphism_classes() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_topologies(n, true).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 3, 9, 33]);
    }

    #[test]
    fn canonical_form_examples() {
        let d = Space::discrete(2);
        assert_eq!(canonical_form(&d), canonical_form(&d.permute(&[1, 0])));
        let a = Space::new(default_labels(2), &[Subset::empty(2), Subset::singleton(2, 0), Subset::full(2)]).unwrap();
        let b = Space::new(default_labels(2), &[Subset::empty(2), Subset::singleton(2, 1), Subset::full(2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&d));
    }

    #[test]
    fn canonical_form_is_invariant_and_idempotent() {
        for s in spaces_up_to(4) {
            let f = canonical_form(&s);
            assert_eq!(canonical_form(&f.to_space()), f);
            for perm in permutations(s.n()) {
                assert_eq!(canonical_form(&s.permute(&perm)), f);
            }
        }
    }

    #[test]
    fn map_enumeration() {
        let two = Space::discrete(2);
        assert_eq!(enumerate_maps(&two, &two, &[]).len(), 4);
        assert_eq!(enumerate_maps(&two, &two, &[Surjective]).len(), 2);

        let sierpinski = Space::new(default_labels(2), &[Subset::empty(2), Subset::singleton(2, 0), Subset::full(2)]).unwrap();
        let continuous = enumerate_maps(&sierpinski, &sierpinski, &[Continuous]);
        // Direct check: f is continuous iff f⁻¹({a}) is open.
        let expected: Vec<Vec<usize>> = assignments(2, 2)
            .filter(|a| {
                let pre = crate::maps::preimage(a, Subset::singleton(2, 0));
                sierpinski.is_open(pre)
            })
            .collect();
        let got: Vec<Vec<usize>> = continuous.iter().map(|f| f.assignment().to_vec()).collect();
        assert_eq!(got, expected);
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }
}
