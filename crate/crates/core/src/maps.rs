//! Functions between finite spaces and their SC*-related properties.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::profile::SpaceProfile;
use crate::space::{Space, SpaceDoc};
use crate::subset::Subset;
use crate::tags::MapPropertyTag;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// A total function between two spaces, as a point-to-point table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMap {
    domain: Space,
    codomain: Space,
    assign: Vec<usize>,
}

impl FiniteMap {
    /// Builds a map from a label table; every domain point needs an entry.
    pub fn validate(domain: Space, codomain: Space, table: &BTreeMap<String, String>) -> Result<FiniteMap> {
        for key in table.keys() {
            domain.point(key)?;
        }
        let mut assign = Vec::with_capacity(domain.n());
        for label in domain.labels() {
            let target = table
                .get(label)
                .ok_or_else(|| Error::MissingAssignment(label.clone()))?;
            let idx = codomain
                .point(target)
                .map_err(|_| Error::UnknownCodomainPoint(target.clone()))?;
            assign.push(idx);
        }
        Ok(FiniteMap { domain, codomain, assign })
    }

    pub fn from_assignment(domain: Space, codomain: Space, assign: Vec<usize>) -> Result<FiniteMap> {
        if assign.len() != domain.n() {
            let missing = domain.labels()[assign.len().min(domain.n() - 1)].clone();
            return Err(Error::MissingAssignment(missing));
        }
        if let Some(&bad) = assign.iter().find(|&&y| y >= codomain.n()) {
            return Err(Error::UnknownCodomainPoint(format!("#{bad}")));
        }
        Ok(FiniteMap { domain, codomain, assign })
    }

    pub fn identity(space: &Space) -> FiniteMap {
        FiniteMap {
            domain: space.clone(),
            codomain: space.clone(),
            assign: (0..space.n()).collect(),
        }
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    pub fn image(&self, a: Subset) -> Subset {
        image(&self.assign, self.codomain.n(), a)
    }

    pub fn preimage(&self, b: Subset) -> Subset {
        preimage(&self.assign, b)
    }

    pub fn property(&self, tag: MapPropertyTag) -> bool {
        let (d, c) = (SpaceProfile::new(&self.domain), SpaceProfile::new(&self.codomain));
        MapRef::new(&d, &c, &self.assign).property(tag)
    }

    pub fn classify(&self) -> PropertyVector {
        let (d, c) = (SpaceProfile::new(&self.domain), SpaceProfile::new(&self.codomain));
        MapRef::new(&d, &c, &self.assign).classify()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FiniteMap) -> Result<FiniteMap> {
        if g.domain != self.codomain {
            return Err(Error::Document("composition requires matching spaces".into()));
        }
        Ok(FiniteMap {
            domain: self.domain.clone(),
            codomain: g.codomain.clone(),
            assign: self.assign.iter().map(|&y| g.assign[y]).collect(),
        })
    }

    pub fn to_doc(&self, domain_name: &str, codomain_name: &str) -> MapDoc {
        MapDoc {
            domain: SpaceRef::Inline(self.domain.to_doc(domain_name)),
            codomain: SpaceRef::Inline(self.codomain.to_doc(codomain_name)),
            map: self
                .domain
                .labels()
                .iter()
                .zip(&self.assign)
                .map(|(l, &y)| (l.clone(), self.codomain.labels()[y].clone()))
                .collect(),
        }
    }

    /// Parses a map document; file references resolve against `base`.
    pub fn from_doc(doc: &MapDoc, base: Option<&Path>) -> Result<FiniteMap> {
        let domain = doc.domain.resolve(base)?;
        let codomain = doc.codomain.resolve(base)?;
        FiniteMap::validate(domain, codomain, &doc.map)
    }

    pub fn from_json(text: &str, base: Option<&Path>) -> Result<FiniteMap> {
        let doc: MapDoc = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        FiniteMap::from_doc(&doc, base)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Inline(SpaceDoc),
    File(String),
}

impl SpaceRef {
    pub fn resolve(&self, base: Option<&Path>) -> Result<Space> {
        match self {
            SpaceRef::Inline(doc) => Space::from_doc(doc),
            SpaceRef::File(name) => {
                let path = match base {
                    Some(dir) => dir.join(name),
                    None => Path::new(name).to_path_buf(),
                };
                let text = std::fs::read_to_string(&path).map_err(|e| Error::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                Space::from_json(&text)
            }
        }
    }
}

/// JSON form of a map: spaces inline or by file reference, plus the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub domain: SpaceRef,
    pub codomain: SpaceRef,
    pub map: BTreeMap<String, String>,
}

#[inline]
pub fn image(assign: &[usize], cod_n: usize, a: Subset) -> Subset {
    let bits = a.points().fold(0u32, |acc, x| acc | (1 << assign[x]));
    Subset::raw(cod_n, bits)
}

#[inline]
pub fn preimage(assign: &[usize], b: Subset) -> Subset {
    let bits = assign
        .iter()
        .enumerate()
        .filter(|(_, &y)| b.contains(y))
        .fold(0u32, |acc, (x, _)| acc | (1 << x));
    Subset::raw(assign.len(), bits)
}

/// Borrowed view of a map over cached space profiles; all property
/// predicates live here so sweeps can reuse profiles.
#[derive(Clone, Copy)]
pub struct MapRef<'a> {
    pub dom: &'a SpaceProfile,
    pub cod: &'a SpaceProfile,
    pub assign: &'a [usize],
}

/// Failure of an "envelope" condition: the set `I`, the domain set `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnvelopeGap {
    pub target: Subset,
    pub hull: Subset,
}

impl<'a> MapRef<'a> {
    pub fn new(dom: &'a SpaceProfile, cod: &'a SpaceProfile, assign: &'a [usize]) -> MapRef<'a> {
        debug_assert_eq!(assign.len(), dom.n());
        MapRef { dom, cod, assign }
    }

    #[inline]
    pub fn image(&self, a: Subset) -> Subset {
        image(self.assign, self.cod.n(), a)
    }

    #[inline]
    pub fn preimage(&self, b: Subset) -> Subset {
        preimage(self.assign, b)
    }

    fn images_satisfy(&self, sources: &Family, mut ok: impl FnMut(Subset) -> bool) -> bool {
        sources.members().all(|a| ok(self.image(a)))
    }

    fn preimages_satisfy(&self, targets: &Family, mut ok: impl FnMut(Subset) -> bool) -> bool {
        targets.members().all(|b| ok(self.preimage(b)))
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.dom.full()).is_full()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u32;
        for &y in self.assign {
            if seen & (1 << y) != 0 {
                return false;
            }
            seen |= 1 << y;
        }
        true
    }

    /// For every `x` and every SC*-neighbourhood `N` of `f(x)`,
    /// `SC*-cl(f⁻¹(N))` is an SC*-neighbourhood of `x`.
    pub fn is_almost_scstar_irresolute(&self) -> bool {
        self.cod.subsets().all(|nb| {
            let nbhd_of = self.cod.scstar_open_join(nb);
            let pulled = self.dom.scstar_open_join(self.dom.scstar_closure(self.preimage(nb)));
            (0..self.dom.n()).all(|x| !nbhd_of.contains(self.assign[x]) || pulled.contains(x))
        })
    }

    pub fn property(&self, tag: MapPropertyTag) -> bool {
        use MapPropertyTag::*;
        let (d, c) = (self.dom, self.cod);
        match tag {
            Continuous => self.preimages_satisfy(c.open_family(), |a| d.is_open(a)),
            OpenMap => self.images_satisfy(d.open_family(), |b| c.is_open(b)),
            ClosedMap => self.images_satisfy(d.closed_family(), |b| c.is_closed(b)),
            Surjective => self.is_surjective(),
            Injective => self.is_injective(),
            RMap => self.preimages_satisfy(c.regular_open_family(), |a| d.is_regular_open(a)),
            CompletelyContinuous => self.preimages_satisfy(c.open_family(), |a| d.is_regular_open(a)),
            RcContinuous => self.preimages_satisfy(&c.regular_open_family().dual(), |a| d.is_regular_closed(a)),
            StronglyScstarOpen | PreScstarOpen => {
                self.images_satisfy(d.scstar_open_family(), |b| c.is_scstar_open(b))
            }
            StronglyScstarClosed => self.images_satisfy(d.scstar_closed_family(), |b| c.is_scstar_closed(b)),
            AlmostScstarIrresolute => self.is_almost_scstar_irresolute(),
            ScstarClosedMap => self.images_satisfy(d.closed_family(), |b| c.is_scstar_closed(b)),
            ScstargClosedMap => self.images_satisfy(d.closed_family(), |b| {
                c.gen_class(b, crate::tags::GenClassTag::ScstargClosed)
            }),
            GscstarClosedMap => self.images_satisfy(d.closed_family(), |b| c.is_gscstar_closed(b)),
            QuasiScstarClosed => self.images_satisfy(d.scstar_closed_family(), |b| c.is_closed(b)),
            ScstarScstargClosed => self.images_satisfy(d.scstar_closed_family(), |b| {
                c.gen_class(b, crate::tags::GenClassTag::ScstargClosed)
            }),
            ScstarGscstarClosed => self.images_satisfy(d.scstar_closed_family(), |b| c.is_gscstar_closed(b)),
            AlmostGscstarClosed => {
                self.images_satisfy(&d.regular_open_family().dual(), |b| c.is_gscstar_closed(b))
            }
            ScstarGscstarContinuous => {
                self.preimages_satisfy(c.scstar_closed_family(), |a| d.is_gscstar_closed(a))
            }
            ScstarIrresolute => self.preimages_satisfy(c.scstar_open_family(), |a| d.is_scstar_open(a)),
            ScstarOpenMap => self.images_satisfy(d.open_family(), |b| c.is_scstar_open(b)),
        }
    }

    pub fn classify(&self) -> PropertyVector {
        let mut bits = 0u32;
        for (i, &t) in MapPropertyTag::ALL.iter().enumerate() {
            if self.property(t) {
                bits |= 1 << i;
            }
        }
        PropertyVector { bits }
    }

    /// For every `I ⊆ Y` accepted by `targets` and every `M ∈ hulls` with
    /// `f⁻¹(I) ⊆ M`, some `N ∈ envelopes` has `I ⊆ N` and `f⁻¹(N) ⊆ M`.
    pub fn envelope_condition(
        &self,
        targets: impl Fn(Subset) -> bool,
        hulls: &Family,
        envelopes: &Family,
    ) -> std::result::Result<(), EnvelopeGap> {
        let env: Vec<Subset> = envelopes.to_vec();
        let hull_list: Vec<Subset> = hulls.to_vec();
        for i in self.cod.subsets().filter(|s| targets(*s)) {
            let pre = self.preimage(i);
            for &m in hull_list.iter().filter(|m| pre.is_subset_of(**m)) {
                let ok = env
                    .iter()
                    .any(|n| i.is_subset_of(*n) && self.preimage(*n).is_subset_of(m));
                if !ok {
                    return Err(EnvelopeGap { target: i, hull: m });
                }
            }
        }
        Ok(())
    }

    /// `∀ N ∈ SC*O(Y): f⁻¹(N) ⊆ SC*-int(SC*-cl(f⁻¹(N)))`.
    pub fn scstar_interior_condition(&self) -> bool {
        self.cod.scstar_open_family().members().all(|n| {
            let pre = self.preimage(n);
            pre.is_subset_of(self.dom.scstar_interior(self.dom.scstar_closure(pre)))
        })
    }

    /// `∀ M ∈ SC*O(X): f(SC*-cl(M)) ⊆ SC*-cl(f(M))`.
    pub fn closure_image_condition(&self) -> bool {
        self.dom.scstar_open_family().members().all(|m| {
            self.image(self.dom.scstar_closure(m))
                .is_subset_of(self.cod.scstar_closure(self.image(m)))
        })
    }

    /// Lemma pair for almost-SC*-irresolute ⇔ the interior condition.
    pub fn lemma_3_4(&self) -> (bool, bool) {
        (self.is_almost_scstar_irresolute(), self.scstar_interior_condition())
    }

    /// Lemma pair for almost-gSC*-closed ⇔ the regular-open envelope
    /// condition with gSC*-open envelopes.
    pub fn lemma_5_5(&self) -> (bool, bool) {
        let gopen = self.cod.gen_family(crate::tags::GenClassTag::GscstarOpen);
        (
            self.property(MapPropertyTag::AlmostGscstarClosed),
            self.envelope_condition(|_| true, self.dom.regular_open_family(), &gopen).is_ok(),
        )
    }

    /// Lemma pair for almost-gSC*-closed ⇒ closed sets have SC*-open
    /// envelopes inside regular-open hulls.
    pub fn lemma_5_6(&self) -> (bool, bool) {
        (
            self.property(MapPropertyTag::AlmostGscstarClosed),
            self.envelope_condition(
                |g| self.cod.is_closed(g),
                self.dom.regular_open_family(),
                self.cod.scstar_open_family(),
            )
            .is_ok(),
        )
    }
}

impl FiniteMap {
    pub fn lemma_3_4_check(&self) -> (bool, bool) {
        let (d, c) = (SpaceProfile::new(&self.domain), SpaceProfile::new(&self.codomain));
        MapRef::new(&d, &c, &self.assign).lemma_3_4()
    }

    pub fn lemma_5_5_check(&self) -> (bool, bool) {
        let (d, c) = (SpaceProfile::new(&self.domain), SpaceProfile::new(&self.codomain));
        MapRef::new(&d, &c, &self.assign).lemma_5_5()
    }

    pub fn lemma_5_6_check(&self) -> (bool, bool) {
        let (d, c) = (SpaceProfile::new(&self.domain), SpaceProfile::new(&self.codomain));
        MapRef::new(&d, &c, &self.assign).lemma_5_6()
    }
}

/// Every map property of one map, packed one bit per tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct PropertyVector {
    bits: u32,
}

impl PropertyVector {
    pub fn get(&self, tag: MapPropertyTag) -> bool {
        let i = MapPropertyTag::ALL.iter().position(|t| *t == tag).unwrap();
        self.bits & (1 << i) != 0
    }

    pub fn all(&self, tags: &[MapPropertyTag]) -> bool {
        tags.iter().all(|t| self.get(*t))
    }

    pub fn entries(&self) -> Vec<(MapPropertyTag, bool)> {
        MapPropertyTag::ALL.iter().map(|&t| (t, self.get(t))).collect()
    }
}

impl Serialize for PropertyVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(MapPropertyTag::ALL.len()))?;
        for (t, b) in self.entries() {
            map.serialize_entry(t.name(), &b)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lab::enumerate::spaces_up_to;
    use MapPropertyTag::*;

    fn table(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn validation_errors() {
        let x = fixtures::example_2_9();
        let t = Space::discrete(1);
        let ok = FiniteMap::validate(x.clone(), t.clone(), &table(&[("k", "a"), ("l", "a"), ("m", "a")]));
        assert!(ok.is_ok());
        let missing = FiniteMap::validate(x.clone(), t.clone(), &table(&[("k", "a"), ("l", "a")]));
        assert_eq!(missing, Err(Error::MissingAssignment("m".into())));
        let unknown = FiniteMap::validate(x, t, &table(&[("k", "a"), ("l", "z"), ("m", "a")]));
        assert_eq!(unknown, Err(Error::UnknownCodomainPoint("z".into())));
    }

    #[test]
    fn image_preimage_examples() {
        let x = fixtures::example_2_9();
        let y = Space::discrete(2);
        let f = FiniteMap::validate(x.clone(), y.clone(), &table(&[("k", "a"), ("l", "a"), ("m", "b")])).unwrap();
        assert_eq!(f.preimage(y.parse_set("a").unwrap()), x.parse_set("k,l").unwrap());
        let id = FiniteMap::identity(&x);
        for a in Subset::all(3) {
            assert_eq!(id.image(a), a);
        }
        let c = FiniteMap::validate(x.clone(), y.clone(), &table(&[("k", "b"), ("l", "b"), ("m", "b")])).unwrap();
        assert_eq!(c.image(x.parse_set("k,m").unwrap()), y.parse_set("b").unwrap());
    }

    #[test]
    fn identity_properties() {
        for s in [fixtures::example_1_8(), fixtures::example_2_9(), Space::indiscrete(2)] {
            let v = FiniteMap::identity(&s).classify();
            assert!(v.get(Continuous));
            assert!(v.get(ScstarIrresolute));
            assert!(v.get(Surjective) && v.get(Injective));
            assert!(v.get(OpenMap) && v.get(ClosedMap));
            assert!(v.get(StronglyScstarClosed) && v.get(StronglyScstarOpen));
            assert_eq!(FiniteMap::identity(&s).lemma_3_4_check(), (true, true));
        }
    }

    #[test]
    fn maps_into_indiscrete_are_continuous() {
        let x = fixtures::example_1_8();
        let y = Space::indiscrete(2);
        for assign in [[0, 0, 1, 1], [1, 0, 1, 0], [0, 0, 0, 0]] {
            let f = FiniteMap::from_assignment(x.clone(), y.clone(), assign.to_vec()).unwrap();
            assert!(f.property(Continuous));
        }
    }

    #[test]
    fn non_surjective_is_flagged() {
        let x = Space::discrete(2);
        let f = FiniteMap::from_assignment(x.clone(), x, vec![0, 0]).unwrap();
        let v = f.classify();
        assert!(!v.get(Surjective));
        assert_eq!(v.get(Continuous), f.property(Continuous));
    }

    #[test]
    fn constant_map_lemma_sides_agree() {
        let x = fixtures::example_2_9();
        let f = FiniteMap::from_assignment(x.clone(), x, vec![1, 1, 1]).unwrap();
        let (l, r) = f.lemma_3_4_check();
        assert_eq!(l, r);
    }

    #[test]
    fn preimage_distributes() {
        for d in spaces_up_to(2) {
            for c in spaces_up_to(2) {
                let n = c.n();
                for code in 0..n.pow(d.n() as u32) {
                    let assign: Vec<usize> = (0..d.n()).map(|i| code / n.pow(i as u32) % n).collect();
                    for a in Subset::all(n) {
                        let pa = preimage(&assign, a);
                        assert_eq!(preimage(&assign, a.complement()), pa.complement());
                        for b in Subset::all(n) {
                            assert_eq!(preimage(&assign, a.union(b)), pa.union(preimage(&assign, b)));
                            assert_eq!(
                                preimage(&assign, a.intersection(b)),
                                pa.intersection(preimage(&assign, b))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn document_round_trip_and_file_refs() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("y.json"), fixtures::example_2_9().to_json("y")).unwrap();
        let text = r#"{"domain":{"name":"s","points":["a","b"],"opens":[[],["a"],["a","b"]]},"codomain":"y.json","map":{"a":"k","b":"l"}}"#;
        let f = FiniteMap::from_json(text, Some(dir.path())).unwrap();
        assert_eq!(f.assignment(), [0, 1]);
        let doc = f.to_doc("s", "y");
        let again = FiniteMap::from_doc(&doc, None).unwrap();
        assert_eq!(again, f);
    }
}
