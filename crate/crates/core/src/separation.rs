//! Space-level separation axioms and the alternative characterizations of
//! SC*-regularity.
//!
//! Each predicate is a literal evaluation of its quantified definition over
//! the finite families computed by [`SpaceProfile`]. Failing predicates
//! return a [`Failure`] naming the instance that could not be separated.

use crate::family::Family;
use crate::profile::SpaceProfile;
use crate::subset::Subset;
use crate::tags::{AltAxiomTag, AxiomTag, KernelClassTag, VariantTag};
use serde::ser::SerializeMap;
use serde::Serialize;

/// A failing instance, rendered with point labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure(pub String);

pub type Verdict = Result<(), Failure>;

fn fail(msg: String) -> Verdict {
    Err(Failure(msg))
}

/// Members of a family with a join table for point-separation queries.
struct Sep {
    members: Vec<Subset>,
    join: Vec<u16>,
}

impl Sep {
    fn new(fam: &Family) -> Sep {
        Sep {
            members: fam.to_vec(),
            join: fam.join_below(),
        }
    }

    /// Some member `V` with `x ∈ V ⊆ s`.
    fn has_nbhd_inside(&self, x: usize, s: Subset) -> bool {
        self.join[s.index()] & (1 << x) != 0
    }

    fn supersets_of(&self, a: Subset) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied().filter(move |m| a.is_subset_of(*m))
    }

    /// Some member `V` with `a ⊆ V ⊆ s`.
    fn has_between(&self, a: Subset, s: Subset) -> bool {
        self.members.iter().any(|m| a.is_subset_of(*m) && m.is_subset_of(s))
    }
}

/// `∃ U ∈ fam_f, V ∈ fam_x` disjoint with `F ⊆ U` and `x ∈ V`.
fn separates(fam_f: &Sep, fam_x: &Sep, f: Subset, x: usize) -> bool {
    fam_f
        .supersets_of(f)
        .any(|u| !u.contains(x) && fam_x.has_nbhd_inside(x, u.complement()))
}

/// Every `F` selected by `targets` is separated from each `x ∉ F` by
/// disjoint members of `fam` (`F ⊆ U`, `x ∈ V`).
fn point_set_regularity(p: &SpaceProfile, targets: &Family, fam: &Family) -> Verdict {
    let sep = Sep::new(fam);
    for f in targets.members() {
        for x in f.complement().points() {
            if !separates(&sep, &sep, f, x) {
                return fail(format!(
                    "{} and point {} have no disjoint separating sets",
                    p.space().show(f),
                    p.space().labels()[x]
                ));
            }
        }
    }
    Ok(())
}

fn weakly_regular(p: &SpaceProfile) -> Verdict {
    let s = p.space();
    for u in p.regular_open_family().members() {
        for x in u.points() {
            let ok = s
                .opens()
                .iter()
                .any(|v| v.contains(x) && p.closure(*v).is_subset_of(u));
            if !ok {
                return fail(format!(
                    "no open V with {} ∈ V ⊆ cl(V) ⊆ {}",
                    s.labels()[x],
                    s.show(u)
                ));
            }
        }
    }
    Ok(())
}

fn scstar_t1(p: &SpaceProfile) -> Verdict {
    for x in 0..p.n() {
        let single = Subset::singleton(p.n(), x);
        if !p.is_scstar_closed(single) {
            return fail(format!("{} is not SC*-closed", p.space().show(single)));
        }
    }
    Ok(())
}

fn scstar_t1_pointwise(p: &SpaceProfile) -> Verdict {
    let sep = Sep::new(p.scstar_open_family());
    for x in 0..p.n() {
        for y in (0..p.n()).filter(|&y| y != x) {
            let others = Subset::singleton(p.n(), y).complement();
            if !sep.has_nbhd_inside(x, others) {
                return fail(format!(
                    "every SC*-open set containing {} contains {}",
                    p.space().labels()[x],
                    p.space().labels()[y]
                ));
            }
        }
    }
    Ok(())
}

fn hausdorff(p: &SpaceProfile, fam: &Family, what: &str) -> Verdict {
    let sep = Sep::new(fam);
    for x in 0..p.n() {
        for y in x + 1..p.n() {
            if !separates(&sep, &sep, Subset::singleton(p.n(), y), x) {
                return fail(format!(
                    "{} and {} have no disjoint {what} neighbourhoods",
                    p.space().labels()[x],
                    p.space().labels()[y]
                ));
            }
        }
    }
    Ok(())
}

fn classical_t1(p: &SpaceProfile) -> Verdict {
    for x in 0..p.n() {
        let single = Subset::singleton(p.n(), x);
        if !p.is_closed(single) {
            return fail(format!("{} is not closed", p.space().show(single)));
        }
    }
    Ok(())
}

/// Disjoint closed sets are contained in disjoint SC*-open sets.
fn scstar_normal(p: &SpaceProfile) -> Verdict {
    let sep = Sep::new(p.scstar_open_family());
    let closed = p.closed_family().to_vec();
    for (i, &a) in closed.iter().enumerate() {
        for &b in &closed[i..] {
            if !a.is_disjoint(b) {
                continue;
            }
            let ok = sep
                .supersets_of(a)
                .any(|u| u.is_disjoint(b) && sep.has_between(b, u.complement()));
            if !ok {
                return fail(format!(
                    "closed {} and {} have no disjoint SC*-open hulls",
                    p.space().show(a),
                    p.space().show(b)
                ));
            }
        }
    }
    Ok(())
}

/// Closed `J ⊆` open `I` admits SC*-open `M` with `J ⊆ M ⊆ SC*-cl(M) ⊆ I`.
fn scstar_normal_shrinking(p: &SpaceProfile) -> Verdict {
    let sep = Sep::new(p.scstar_open_family());
    for j in p.closed_family().members() {
        for &i in p.space().opens() {
            if !j.is_subset_of(i) {
                continue;
            }
            let ok = sep.supersets_of(j).any(|m| p.scstar_closure(m).is_subset_of(i));
            if !ok {
                return fail(format!(
                    "no SC*-open M with {} ⊆ M ⊆ SC*-cl(M) ⊆ {}",
                    p.space().show(j),
                    p.space().show(i)
                ));
            }
        }
    }
    Ok(())
}

pub fn check_axiom(p: &SpaceProfile, tag: AxiomTag) -> Verdict {
    use AxiomTag::*;
    let opens = p.open_family();
    match tag {
        Regular => point_set_regularity(p, p.closed_family(), opens),
        GRegular => point_set_regularity(p, p.closed_family(), &p.gen_family(crate::tags::GenClassTag::GOpen)),
        ScstarRegular => point_set_regularity(p, p.closed_family(), p.scstar_open_family()),
        AlphaRegular => point_set_regularity(p, p.closed_family(), &p.kernel_family(KernelClassTag::AlphaOpen)),
        SoftlyRegular => point_set_regularity(p, &p.kernel_family(KernelClassTag::PiClosed), opens),
        AlmostRegular => point_set_regularity(p, &p.kernel_family(KernelClassTag::RegularClosed), opens),
        StronglyRgRegular => {
            point_set_regularity(p, &p.gen_family(crate::tags::GenClassTag::RgClosed), opens)
        }
        WeaklyRegular => weakly_regular(p),
        ScstarT1 => scstar_t1(p),
        ScstarT2 => hausdorff(p, p.scstar_open_family(), "SC*-open"),
        ScstarT3 => check_axiom(p, ScstarRegular).and_then(|_| check_axiom(p, ScstarT1)),
        ScstarNormal => scstar_normal(p),
        // Every cover of a finite space is finite.
        ScstarCompact => Ok(()),
    }
}

pub fn check_alternate(p: &SpaceProfile, tag: AltAxiomTag) -> Verdict {
    match tag {
        AltAxiomTag::ScstarT1Pointwise => scstar_t1_pointwise(p),
        AltAxiomTag::ScstarNormalShrinking => scstar_normal_shrinking(p),
        AltAxiomTag::ClassicalT1 => classical_t1(p),
        AltAxiomTag::ClassicalT2 => hausdorff(p, p.open_family(), "open"),
    }
}

pub fn axiom(p: &SpaceProfile, tag: AxiomTag) -> bool {
    check_axiom(p, tag).is_ok()
}

pub fn alternate(p: &SpaceProfile, tag: AltAxiomTag) -> bool {
    check_alternate(p, tag).is_ok()
}

fn label(p: &SpaceProfile, x: usize) -> &str {
    &p.space().labels()[x]
}

/// `∀x, ∀ open M ∋ x, ∃ N ∈ SC*O: x ∈ N ⊆ SC*-cl(N) ⊆ M`.
fn t2_10_ii(p: &SpaceProfile) -> Verdict {
    let scstar_opens = p.scstar_open_family().to_vec();
    for &m in p.space().opens() {
        for x in m.points() {
            let ok = scstar_opens
                .iter()
                .any(|n| n.contains(x) && p.scstar_closure(*n).is_subset_of(m));
            if !ok {
                return fail(format!("no SC*-open N with {} ∈ N ⊆ SC*-cl(N) ⊆ {}", label(p, x), p.space().show(m)));
            }
        }
    }
    Ok(())
}

/// Every closed `F` equals `⋂ { SC*-cl(N) : F ⊆ N ∈ SC*O }`.
fn closed_sets_are_hull_intersections(p: &SpaceProfile) -> Verdict {
    let scstar_opens = p.scstar_open_family().to_vec();
    for f in p.closed_family().members() {
        let meet = scstar_opens
            .iter()
            .filter(|n| f.is_subset_of(**n))
            .fold(p.full(), |acc, n| acc.intersection(p.scstar_closure(*n)));
        if meet != f {
            return fail(format!(
                "closed {} but the SC*-hull intersection is {}",
                p.space().show(f),
                p.space().show(meet)
            ));
        }
    }
    Ok(())
}

/// `∀J, ∀ open M` meeting `J`, `∃ N ∈ SC*O` meeting `J` with `SC*-cl(N) ⊆ M`.
fn t2_10_iv(p: &SpaceProfile) -> Verdict {
    let scstar_opens = p.scstar_open_family().to_vec();
    for j in p.subsets() {
        for &m in p.space().opens() {
            if !j.meets(m) {
                continue;
            }
            let ok = scstar_opens
                .iter()
                .any(|n| n.meets(j) && p.scstar_closure(*n).is_subset_of(m));
            if !ok {
                return fail(format!(
                    "J = {} and open M = {} admit no SC*-open N",
                    p.space().show(j),
                    p.space().show(m)
                ));
            }
        }
    }
    Ok(())
}

/// `∀ J ≠ ∅, ∀ closed F` with `J ∩ F = ∅`, `∃` disjoint `N ∈ fam_n`,
/// `W ∈ fam_w` with `J ∩ N ≠ ∅` and `F ⊆ W`.
fn set_separation(p: &SpaceProfile, fam_n: &Family, fam_w: &Family, what: &str) -> Verdict {
    let ns = fam_n.to_vec();
    let ws = Sep::new(fam_w);
    for j in p.subsets().filter(|j| !j.is_empty()) {
        for f in p.closed_family().members() {
            if !j.is_disjoint(f) {
                continue;
            }
            let ok = ns
                .iter()
                .any(|n| n.meets(j) && ws.has_between(f, n.complement()));
            if !ok {
                return fail(format!(
                    "J = {} and closed F = {} admit no {what}",
                    p.space().show(j),
                    p.space().show(f)
                ));
            }
        }
    }
    Ok(())
}

/// Separation by SC*-open sets whose SC*-closures are disjoint.
fn t2_11(p: &SpaceProfile) -> Verdict {
    let scstar_opens = p.scstar_open_family().to_vec();
    for f in p.closed_family().members() {
        for x in f.complement().points() {
            let ok = scstar_opens.iter().filter(|m| m.contains(x)).any(|m| {
                let cm = p.scstar_closure(*m);
                scstar_opens
                    .iter()
                    .any(|n| f.is_subset_of(*n) && cm.is_disjoint(p.scstar_closure(*n)))
            });
            if !ok {
                return fail(format!(
                    "{} and point {} have no SC*-open sets with disjoint SC*-closures",
                    p.space().show(f),
                    label(p, x)
                ));
            }
        }
    }
    Ok(())
}

/// SC*-open `M ∋ x` and gSC*-open `N ⊇ F`, disjoint.
fn t4_12_ii(p: &SpaceProfile) -> Verdict {
    let m_fam = Sep::new(p.scstar_open_family());
    let n_fam = Sep::new(&p.gen_family(crate::tags::GenClassTag::GscstarOpen));
    for f in p.closed_family().members() {
        for x in f.complement().points() {
            if !separates(&n_fam, &m_fam, f, x) {
                return fail(format!(
                    "{} and point {} have no SC*-open / gSC*-open separation",
                    p.space().show(f),
                    label(p, x)
                ));
            }
        }
    }
    Ok(())
}

pub fn check_variant(p: &SpaceProfile, v: VariantTag) -> Verdict {
    use VariantTag::*;
    match v {
        Def21 => check_axiom(p, AxiomTag::ScstarRegular),
        T210Ii => t2_10_ii(p),
        T210Iii | T412Iv => closed_sets_are_hull_intersections(p),
        T210Iv => t2_10_iv(p),
        T210V => set_separation(p, p.scstar_open_family(), p.scstar_open_family(), "disjoint SC*-open N, W"),
        T211 => t2_11(p),
        T412Ii => t4_12_ii(p),
        T412Iii => set_separation(
            p,
            p.scstar_open_family(),
            &p.gen_family(crate::tags::GenClassTag::GscstarOpen),
            "SC*-open M and gSC*-open N",
        ),
    }
}

pub fn scstar_regular_variant(p: &SpaceProfile, v: VariantTag) -> bool {
    check_variant(p, v).is_ok()
}

/// Every axiom, characterization, and companion form of one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVector {
    pub axioms: Vec<(AxiomTag, bool)>,
    pub variants: Vec<(VariantTag, bool)>,
    pub alternates: Vec<(AltAxiomTag, bool)>,
}

impl AxiomVector {
    pub fn axiom(&self, tag: AxiomTag) -> bool {
        self.axioms.iter().find(|(t, _)| *t == tag).map(|(_, b)| *b).unwrap()
    }

    pub fn variant(&self, tag: VariantTag) -> bool {
        self.variants.iter().find(|(t, _)| *t == tag).map(|(_, b)| *b).unwrap()
    }

    pub fn alternate(&self, tag: AltAxiomTag) -> bool {
        self.alternates.iter().find(|(t, _)| *t == tag).map(|(_, b)| *b).unwrap()
    }

    pub fn entries(&self) -> Vec<(&'static str, bool)> {
        self.axioms
            .iter()
            .map(|(t, b)| (t.name(), *b))
            .chain(self.variants.iter().map(|(t, b)| (t.name(), *b)))
            .chain(self.alternates.iter().map(|(t, b)| (t.name(), *b)))
            .collect()
    }
}

/// Serializes as a flat tag → boolean map in declaration order.
impl Serialize for AxiomVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries = self.entries();
        let mut map = s.serialize_map(Some(entries.len()))?;
        for (k, v) in entries {
            map.serialize_entry(k, &v)?;
        }
        map.end()
    }
}

pub fn classify_space(p: &SpaceProfile) -> AxiomVector {
    AxiomVector {
        axioms: AxiomTag::ALL.iter().map(|&t| (t, axiom(p, t))).collect(),
        variants: VariantTag::ALL.iter().map(|&t| (t, scstar_regular_variant(p, t))).collect(),
        alternates: AltAxiomTag::ALL.iter().map(|&t| (t, alternate(p, t))).collect(),
    }
}
