//! Finite topological spaces: validation, closure and interior, minimal open
//! neighbourhoods, subspaces, and the JSON space document.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::subset::{Subset, MAX_POINTS};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A validated finite topology. `opens` is sorted ascending by encoding and
/// duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Space {
    labels: Vec<String>,
    opens: Vec<Subset>,
    open_set: Family,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// Checks the topology axioms for `family` over `n` points.
pub fn validate_topology(n: usize, family: &[Subset]) -> Result<Space> {
    Space::new(default_labels(n), family)
}

impl Space {
    pub fn new(labels: Vec<String>, family: &[Subset]) -> Result<Space> {
        let n = labels.len();
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(Error::PointCount(n));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicatePoint(l.clone()));
            }
        }
        let mut opens = Vec::with_capacity(family.len());
        for s in family {
            if s.n() != n {
                return Err(Error::SubsetOutOfRange(s.bits(), n));
            }
            opens.push(*s);
        }
        opens.sort();
        opens.dedup();
        let open_set = Family::from_members(n, opens.iter().copied());
        for bound in [Subset::empty(n), Subset::full(n)] {
            if !open_set.contains(bound) {
                return Err(Error::MissingEmptyOrFull(bound));
            }
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                if !open_set.contains(u.union(v)) {
                    return Err(Error::NotUnionClosed(u, v));
                }
            }
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                if !open_set.contains(u.intersection(v)) {
                    return Err(Error::NotIntersectionClosed(u, v));
                }
            }
        }
        Ok(Space {
            labels,
            opens,
            open_set,
        })
    }

    /// Builds a space from a family already known to be a topology.
    pub(crate) fn trusted(labels: Vec<String>, mut opens: Vec<Subset>) -> Space {
        opens.sort();
        opens.dedup();
        let open_set = Family::from_members(labels.len(), opens.iter().copied());
        let space = Space {
            labels,
            opens,
            open_set,
        };
        debug_assert!(Space::new(space.labels.clone(), &space.opens).is_ok());
        space
    }

    pub fn discrete(n: usize) -> Space {
        Space::trusted(default_labels(n), Subset::all(n).collect())
    }

    pub fn indiscrete(n: usize) -> Space {
        Space::trusted(default_labels(n), vec![Subset::empty(n), Subset::full(n)])
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn open_family(&self) -> &Family {
        &self.open_set
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.n())
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n())
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.open_set.contains(a)
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.open_set.contains(a.complement())
    }

    /// Closed sets in canonical order.
    pub fn closeds(&self) -> Vec<Subset> {
        let mut c: Vec<Subset> = self.opens.iter().map(|u| u.complement()).collect();
        c.sort();
        c
    }

    pub fn point(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Parses a set literal of comma-separated labels; `""` is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<Subset> {
        let mut s = self.empty();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            s = s.with(self.point(part)?);
        }
        Ok(s)
    }

    pub fn subset_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = self.empty();
        for l in labels {
            s = s.with(self.point(l.as_ref())?);
        }
        Ok(s)
    }

    pub fn show(&self, a: Subset) -> String {
        a.display_with(&self.labels)
    }

    /// Relabels points: point `i` of `self` becomes point `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Space {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        let opens = self.opens.iter().map(|&u| permute_subset(u, perm)).collect();
        Space::trusted(labels, opens)
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Space> {
        Space::new(labels, &self.opens)
    }

    pub fn to_doc(&self, name: &str) -> SpaceDoc {
        SpaceDoc {
            name: name.to_string(),
            points: self.labels.clone(),
            opens: self
                .opens
                .iter()
                .map(|u| u.points().map(|p| self.labels[p].clone()).collect())
                .collect(),
        }
    }

    pub fn from_doc(doc: &SpaceDoc) -> Result<Space> {
        let n = doc.points.len();
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(Error::PointCount(n));
        }
        let mut index = HashMap::new();
        for (i, l) in doc.points.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicatePoint(l.clone()));
            }
        }
        let mut family = Vec::with_capacity(doc.opens.len());
        for open in &doc.opens {
            let mut bits = 0u32;
            for l in open {
                let p = index
                    .get(l.as_str())
                    .ok_or_else(|| Error::UnknownLabel(l.clone()))?;
                bits |= 1 << p;
            }
            family.push(Subset::raw(n, bits));
        }
        Space::new(doc.points.clone(), &family)
    }

    pub fn from_json(text: &str) -> Result<Space> {
        let doc: SpaceDoc =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        Space::from_doc(&doc)
    }

    pub fn to_json(&self, name: &str) -> String {
        serde_json::to_string(&self.to_doc(name)).expect("space documents always serialize")
    }
}

pub(crate) fn permute_subset(a: Subset, perm: &[usize]) -> Subset {
    let bits = a.points().fold(0u32, |acc, p| acc | (1 << perm[p]));
    Subset::raw(a.n(), bits)
}

/// JSON form of a space: `points` fixes index order, `opens` lists labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    #[serde(default)]
    pub name: String,
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

/// Smallest closed superset of `a`.
pub fn closure(space: &Space, a: Subset) -> Subset {
    space
        .opens()
        .iter()
        .map(|u| u.complement())
        .filter(|c| a.is_subset_of(*c))
        .fold(space.full(), Subset::intersection)
}

/// Largest open subset of `a`.
pub fn interior(space: &Space, a: Subset) -> Subset {
    space
        .opens()
        .iter()
        .filter(|u| u.is_subset_of(a))
        .fold(space.empty(), |acc, u| acc.union(*u))
}

/// Smallest open superset of `a`; exists because finite topologies are
/// closed under arbitrary intersection.
pub fn min_open(space: &Space, a: Subset) -> Subset {
    space
        .opens()
        .iter()
        .filter(|u| a.is_subset_of(**u))
        .fold(space.full(), |acc, u| acc.intersection(*u))
}

/// Subspace topology on `carrier`, reindexed over the carrier's points in
/// ascending order. Labels follow their points.
pub fn subspace(space: &Space, carrier: Subset) -> Result<Space> {
    if carrier.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let pts: Vec<usize> = carrier.points().collect();
    let m = pts.len();
    let compress = |a: Subset| {
        let bits = pts
            .iter()
            .enumerate()
            .filter(|(_, &p)| a.contains(p))
            .fold(0u32, |acc, (i, _)| acc | (1 << i));
        Subset::raw(m, bits)
    };
    let labels = pts.iter().map(|&p| space.labels()[p].clone()).collect();
    let opens = space
        .opens()
        .iter()
        .map(|&u| compress(u.intersection(carrier)))
        .collect();
    Ok(Space::trusted(labels, opens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(space: &Space, text: &str) -> Subset {
        space.parse_set(text).unwrap()
    }

    #[test]
    fn example_1_8_is_valid() {
        let x = fixtures::example_1_8();
        assert_eq!(x.opens().len(), 7);
        assert_eq!(x.labels(), ["k", "l", "m", "n"]);
    }

    #[test]
    fn indiscrete_is_valid() {
        let n = 3;
        let s = validate_topology(n, &[Subset::empty(n), Subset::full(n)]).unwrap();
        assert_eq!(s.opens().len(), 2);
    }

    #[test]
    fn reports_missing_union_with_witness() {
        let n = 3;
        let k = Subset::singleton(n, 0);
        let l = Subset::singleton(n, 1);
        let err = validate_topology(n, &[Subset::empty(n), k, l, Subset::full(n)]).unwrap_err();
        assert_eq!(err, Error::NotUnionClosed(k, l));
        let labels = vec!["k".to_string(), "l".into(), "m".into()];
        assert!(err.render(&labels).contains("{k} ∪ {l}"));
    }

    #[test]
    fn reports_missing_intersection() {
        let n = 3;
        let a = Subset::from_points(n, [0, 1]).unwrap();
        let b = Subset::from_points(n, [1, 2]).unwrap();
        let err = validate_topology(n, &[Subset::empty(n), a, b, Subset::full(n)]).unwrap_err();
        assert_eq!(err, Error::NotIntersectionClosed(a, b));
        let err = validate_topology(n, &[Subset::full(n)]).unwrap_err();
        assert!(matches!(err, Error::MissingEmptyOrFull(_)));
    }

    #[test]
    fn closure_interior_min_open_examples() {
        let x = fixtures::example_1_8();
        assert_eq!(closure(&x, set(&x, "k")), set(&x, "k,m,n"));
        assert_eq!(closure(&x, x.empty()), x.empty());
        assert_eq!(interior(&x, set(&x, "k,l,n")), set(&x, "k,l"));
        assert_eq!(interior(&x, x.full()), x.full());
        assert_eq!(interior(&x, set(&x, "m,n")), x.empty());
        assert_eq!(min_open(&x, set(&x, "k,n")), x.full());
        assert_eq!(min_open(&x, set(&x, "k,m")), set(&x, "k,m"));
        assert_eq!(min_open(&x, x.empty()), x.empty());

        let y = fixtures::example_2_9();
        assert_eq!(closure(&y, set(&y, "l")), set(&y, "l,m"));
    }

    #[test]
    fn subspace_examples() {
        let x = fixtures::example_1_8();
        let y = subspace(&x, set(&x, "k,l")).unwrap();
        assert_eq!(y.labels(), ["k", "l"]);
        assert_eq!(y.opens(), Space::discrete(2).opens());
        assert_eq!(subspace(&x, x.full()).unwrap(), x);
        assert_eq!(subspace(&x, x.empty()), Err(Error::EmptyCarrier));

        let z = fixtures::example_2_9();
        let w = subspace(&z, set(&z, "l,m")).unwrap();
        assert_eq!(w.opens(), Space::indiscrete(2).opens());
    }

    #[test]
    fn document_errors() {
        let dup = r#"{"name":"d","points":["a","a"],"opens":[[],["a"]]}"#;
        assert_eq!(Space::from_json(dup), Err(Error::DuplicatePoint("a".into())));
        let unknown = r#"{"name":"u","points":["a","b"],"opens":[[],["z"],["a","b"]]}"#;
        assert_eq!(Space::from_json(unknown), Err(Error::UnknownLabel("z".into())));
        assert!(matches!(Space::from_json("{"), Err(Error::Document(_))));
    }

    #[test]
    fn document_shape_is_stable() {
        let x = fixtures::example_1_8();
        assert_eq!(
            x.to_json("example-1.8"),
            r#"{"name":"example-1.8","points":["k","l","m","n"],"opens":[[],["k"],["l"],["k","l"],["k","m"],["k","l","m"],["k","l","m","n"]]}"#
        );
    }

    #[test]
    fn permutation_moves_labels_with_points() {
        let x = fixtures::example_2_9();
        let p = x.permute(&[2, 0, 1]);
        assert_eq!(p.labels(), ["l", "m", "k"]);
        assert!(p.is_open(p.parse_set("k").unwrap()));
        assert!(p.is_open(p.parse_set("l,m").unwrap()));
    }
}
