//! Registered statements. Each one is a list of named clauses; a clause
//! evaluates a single instance (space, map, or composable pair) and
//! reports whether its hypotheses applied and whether its conclusion held.

use crate::error::{Error, Result};
use crate::gen_sets::{lemma_1_6_violations, lemma_1_7_violations};
use crate::lab::sweep::{ComposeCase, MapCase, Outcome, SpaceCase};
use crate::maps::EnvelopeGap;
use crate::separation::check_axiom;
use crate::space::subspace;
use crate::subset::Subset;
use crate::tags::{AltAxiomTag, AxiomTag, GenClassTag, MapPropertyTag, VariantTag};
use std::sync::OnceLock;

use AxiomTag::*;
use MapPropertyTag::*;

macro_rules! theorem_ids {
    ($($variant:ident => $text:literal),+ $(,)?) => {
        /// Identifier of a registered statement.
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
        pub enum TheoremId {
            $($variant),+
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),+];

            pub fn name(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $text),+
                }
            }
        }

        impl std::str::FromStr for TheoremId {
            type Err = Error;

            fn from_str(s: &str) -> Result<TheoremId> {
                match s {
                    $($text => Ok(TheoremId::$variant),)+
                    _ => Err(Error::UnknownTheorem(s.to_string())),
                }
            }
        }

        impl std::fmt::Display for TheoremId {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

theorem_ids! {
    R1_4 => "R1.4",
    L1_6 => "L1.6",
    L1_7 => "L1.7",
    R2_4 => "R2.4",
    T2_10 => "T2.10",
    T2_11 => "T2.11",
    T2_13 => "T2.13",
    T2_14 => "T2.14",
    T2_15 => "T2.15",
    T3_3 => "T3.3",
    L3_4 => "L3.4",
    T3_5 => "T3.5",
    T3_6 => "T3.6",
    T3_7 => "T3.7",
    R4_4 => "R4.4",
    T4_5 => "T4.5",
    P4_7 => "P4.7",
    P4_8 => "P4.8",
    P4_10 => "P4.10",
    T4_11 => "T4.11",
    T4_12 => "T4.12",
    T4_14 => "T4.14",
    T4_16 => "T4.16",
    T5_1 => "T5.1",
    L5_2 => "L5.2",
    T5_3 => "T5.3",
    C5_4 => "C5.4",
    L5_5 => "L5.5",
    L5_6 => "L5.6",
    T5_7 => "T5.7",
}

pub type SpaceFn = fn(&SpaceCase) -> Outcome;
pub type MapFn = fn(&MapCase) -> Outcome;
pub type ComposeFn = fn(&ComposeCase) -> Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Space,
    Map,
    Composition,
}

pub enum Clauses {
    Space(Vec<(&'static str, SpaceFn)>),
    Map(Vec<(&'static str, MapFn)>),
    Composition(Vec<(&'static str, ComposeFn)>),
}

pub struct Theorem {
    pub id: TheoremId,
    pub summary: &'static str,
    pub clauses: Clauses,
    /// Readings chosen where the statement leaves a notion open.
    pub formalization: &'static [&'static str],
}

impl Theorem {
    pub fn level(&self) -> Level {
        match self.clauses {
            Clauses::Space(_) => Level::Space,
            Clauses::Map(_) => Level::Map,
            Clauses::Composition(_) => Level::Composition,
        }
    }

    pub fn clause_names(&self) -> Vec<&'static str> {
        match &self.clauses {
            Clauses::Space(c) => c.iter().map(|x| x.0).collect(),
            Clauses::Map(c) => c.iter().map(|x| x.0).collect(),
            Clauses::Composition(c) => c.iter().map(|x| x.0).collect(),
        }
    }
}

pub fn registry() -> &'static [Theorem] {
    static REGISTRY: OnceLock<Vec<Theorem>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn theorem(id: TheoremId) -> &'static Theorem {
    registry().iter().find(|t| t.id == id).expect("every id is registered")
}

fn sp(name: &'static str, f: SpaceFn) -> (&'static str, SpaceFn) {
    (name, f)
}

fn mp(name: &'static str, f: MapFn) -> (&'static str, MapFn) {
    (name, f)
}

fn cp(name: &'static str, f: ComposeFn) -> (&'static str, ComposeFn) {
    (name, f)
}

fn axiom_failure(c: &SpaceCase, tag: AxiomTag) -> String {
    match check_axiom(&c.profile, tag) {
        Ok(()) => format!("{tag} holds"),
        Err(e) => format!("{tag} fails: {}", e.0),
    }
}

/// Space-level arrow between two axioms.
fn arrow(c: &SpaceCase, from: AxiomTag, to: AxiomTag) -> Outcome {
    Outcome::implies(c.axiom(from), c.axiom(to), || {
        format!("{from} holds but {}", axiom_failure(c, to))
    })
}

fn variant_agrees(c: &SpaceCase, v: VariantTag) -> Outcome {
    let (base, other) = (c.variant(VariantTag::Def21), c.variant(v));
    Outcome::equiv(base, other, || format!("def-2.1 = {base}, {v} = {other}"))
}

/// Subset-level clause: `hyp(A) ⇒ concl(A)` for every subset.
fn per_subset(c: &SpaceCase, hyp: GenOrClosed, concl: GenOrClosed) -> Outcome {
    Outcome::all(c.profile.subsets().map(|a| {
        Outcome::implies(hyp.holds(c, a), concl.holds(c, a), || {
            format!("{} is {} but not {}", c.show(a), hyp.name(), concl.name())
        })
    }))
}

fn per_subset_equiv(c: &SpaceCase, left: GenOrClosed, right: GenOrClosed) -> Outcome {
    Outcome::all(c.profile.subsets().map(|a| {
        let (l, r) = (left.holds(c, a), right.holds(c, a));
        Outcome::equiv(l, r, || {
            format!("{}: {} = {l}, {} = {r}", c.show(a), left.name(), right.name())
        })
    }))
}

#[derive(Clone, Copy)]
enum GenOrClosed {
    Closed,
    Gen(GenClassTag),
}

impl GenOrClosed {
    fn holds(self, c: &SpaceCase, a: Subset) -> bool {
        match self {
            GenOrClosed::Closed => c.profile.is_closed(a),
            GenOrClosed::Gen(t) => c.profile.gen_class(a, t),
        }
    }

    fn name(self) -> &'static str {
        match self {
            GenOrClosed::Closed => "closed",
            GenOrClosed::Gen(t) => t.name(),
        }
    }
}

fn lemma_clause(c: &SpaceCase, clause: &str, which: fn(&crate::profile::SpaceProfile) -> Vec<crate::gen_sets::Violation>) -> Outcome {
    match which(&c.profile).into_iter().find(|v| v.clause == clause) {
        None => Outcome::Holds,
        Some(v) => Outcome::Fails(format!(
            "clause {clause} fails at J = {} (witness {})",
            c.show(v.set),
            c.show(v.witness)
        )),
    }
}

fn hereditary(c: &SpaceCase) -> Outcome {
    if !c.axiom(ScstarRegular) {
        return Outcome::Vacuous;
    }
    for carrier in Subset::all(c.n()).filter(|y| !y.is_empty()) {
        let sub = subspace(c.space(), carrier).expect("nonempty carrier");
        let sc = SpaceCase::new(&sub);
        if let Err(e) = check_axiom(&sc.profile, ScstarRegular) {
            return Outcome::Fails(format!("subspace on {}: {}", c.show(carrier), e.0));
        }
    }
    Outcome::Holds
}

fn space_theorems() -> Vec<Theorem> {
    use GenClassTag as G;
    use GenOrClosed::{Closed, Gen};
    vec![
        Theorem {
            id: TheoremId::R1_4,
            summary: "closed ⇒ SC*-closed ⇔ SC*g-closed ⇔ gSC*-closed, and each ⇒ g-closed",
            clauses: Clauses::Space(vec![
                sp("closed=>scstar-closed", |c| per_subset(c, Closed, Gen(G::ScstarClosed))),
                sp("scstar-closed<=>scstarg-closed", |c| {
                    per_subset_equiv(c, Gen(G::ScstarClosed), Gen(G::ScstargClosed))
                }),
                sp("scstarg-closed<=>gscstar-closed", |c| {
                    per_subset_equiv(c, Gen(G::ScstargClosed), Gen(G::GscstarClosed))
                }),
                sp("closed=>g-closed", |c| per_subset(c, Closed, Gen(G::GClosed))),
                sp("scstar-closed=>g-closed", |c| per_subset(c, Gen(G::ScstarClosed), Gen(G::GClosed))),
                sp("gscstar-closed=>g-closed", |c| per_subset(c, Gen(G::GscstarClosed), Gen(G::GClosed))),
            ]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::L1_6,
            summary: "SC*-closure: point characterization, fixpoints, monotone, idempotent, SC*-closed values",
            clauses: Clauses::Space(vec![
                sp("i", |c| lemma_clause(c, "i", lemma_1_6_violations)),
                sp("ii", |c| lemma_clause(c, "ii", lemma_1_6_violations)),
                sp("iii", |c| lemma_clause(c, "iii", lemma_1_6_violations)),
                sp("iv", |c| lemma_clause(c, "iv", lemma_1_6_violations)),
                sp("v", |c| lemma_clause(c, "v", lemma_1_6_violations)),
            ]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::L1_7,
            summary: "J is gSC*-open iff every closed F ⊆ J lies in SC*-int(J)",
            clauses: Clauses::Space(vec![
                sp("forward", |c| lemma_clause(c, "forward", lemma_1_7_violations)),
                sp("backward", |c| lemma_clause(c, "backward", lemma_1_7_violations)),
            ]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::R2_4,
            summary: "regularity hierarchy arrows",
            clauses: Clauses::Space(vec![
                sp("strongly-rg-regular=>regular", |c| arrow(c, StronglyRgRegular, Regular)),
                sp("regular=>alpha-regular", |c| arrow(c, Regular, AlphaRegular)),
                sp("alpha-regular=>scstar-regular", |c| arrow(c, AlphaRegular, ScstarRegular)),
                sp("regular=>softly-regular", |c| arrow(c, Regular, SoftlyRegular)),
                sp("softly-regular=>almost-regular", |c| arrow(c, SoftlyRegular, AlmostRegular)),
                sp("almost-regular=>weakly-regular", |c| arrow(c, AlmostRegular, WeaklyRegular)),
            ]),
            formalization: &["alpha-regular: closed F and x ∉ F separated by disjoint alpha-open sets"],
        },
        Theorem {
            id: TheoremId::T2_10,
            summary: "five characterizations of SC*-regularity agree",
            clauses: Clauses::Space(vec![
                sp("def-2.1<=>t2.10-ii", |c| variant_agrees(c, VariantTag::T210Ii)),
                sp("def-2.1<=>t2.10-iii", |c| variant_agrees(c, VariantTag::T210Iii)),
                sp("def-2.1<=>t2.10-iv", |c| variant_agrees(c, VariantTag::T210Iv)),
                sp("def-2.1<=>t2.10-v", |c| variant_agrees(c, VariantTag::T210V)),
            ]),
            formalization: &["t2.10-v quantifies over nonempty J"],
        },
        Theorem {
            id: TheoremId::T2_11,
            summary: "SC*-regular iff separable by SC*-open sets with disjoint SC*-closures",
            clauses: Clauses::Space(vec![sp("def-2.1<=>t2.11", |c| variant_agrees(c, VariantTag::T211))]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::T2_13,
            summary: "SC*-T3 ⇒ SC*-T2",
            clauses: Clauses::Space(vec![
                sp("scstar-t3=>scstar-t2", |c| arrow(c, ScstarT3, ScstarT2)),
                sp("scstar-t1<=>scstar-t1-pointwise", |c| {
                    let (a, b) = (c.axiom(ScstarT1), c.alternate(AltAxiomTag::ScstarT1Pointwise));
                    Outcome::equiv(a, b, || format!("scstar-t1 = {a}, scstar-t1-pointwise = {b}"))
                }),
            ]),
            formalization: &[
                "scstar-t1: every singleton is SC*-closed",
                "scstar-t2: distinct points have disjoint SC*-open neighbourhoods",
            ],
        },
        Theorem {
            id: TheoremId::T2_14,
            summary: "SC*-regularity passes to every subspace",
            clauses: Clauses::Space(vec![sp("hereditary", hereditary)]),
            formalization: &["subspaces on every nonempty carrier, with the relative topology"],
        },
        Theorem {
            id: TheoremId::T2_15,
            summary: "SC*-compact Hausdorff ⇒ SC*-T3",
            clauses: Clauses::Space(vec![
                sp("scstar-compact+scstar-t2=>scstar-t3", |c| {
                    Outcome::implies(c.axiom(ScstarCompact) && c.axiom(ScstarT2), c.axiom(ScstarT3), || {
                        format!("scstar-t2 holds but {}", axiom_failure(c, ScstarT3))
                    })
                }),
                sp("scstar-compact+t2=>scstar-t3", |c| {
                    Outcome::implies(
                        c.axiom(ScstarCompact) && c.alternate(AltAxiomTag::ClassicalT2),
                        c.axiom(ScstarT3),
                        || format!("t2 holds but {}", axiom_failure(c, ScstarT3)),
                    )
                }),
            ]),
            formalization: &[
                "Hausdorff read as scstar-t2; the classical t2 reading is a separate clause",
                "scstar-compact holds in every finite space",
            ],
        },
        Theorem {
            id: TheoremId::T4_12,
            summary: "further characterizations of SC*-regularity via gSC*-open sets",
            clauses: Clauses::Space(vec![
                sp("def-2.1<=>t4.12-ii", |c| variant_agrees(c, VariantTag::T412Ii)),
                sp("def-2.1<=>t4.12-iii", |c| variant_agrees(c, VariantTag::T412Iii)),
                sp("def-2.1<=>t4.12-iv", |c| variant_agrees(c, VariantTag::T412Iv)),
            ]),
            formalization: &["t4.12-iii quantifies over nonempty J"],
        },
        Theorem {
            id: TheoremId::L5_2,
            summary: "J is gSC*-open iff every closed F ⊆ J lies in SC*-int(J)",
            clauses: Clauses::Space(vec![
                sp("forward", |c| lemma_clause(c, "forward", lemma_1_7_violations)),
                sp("backward", |c| lemma_clause(c, "backward", lemma_1_7_violations)),
            ]),
            formalization: &[],
        },
    ]
}

fn gap_detail(m: &MapCase, gap: Option<EnvelopeGap>) -> String {
    match gap {
        Some(g) => format!(
            "I = {}, M = {} has no envelope",
            m.cod.show(g.target),
            m.dom.show(g.hull)
        ),
        None => "envelope condition holds".to_string(),
    }
}

fn names(tags: &[MapPropertyTag]) -> String {
    tags.iter().map(|t| t.name()).collect::<Vec<_>>().join("+")
}

/// `f` has every tag in `hyp` and the domain/codomain axiom premise holds
/// ⇒ the axiom conclusion holds on the other side.
fn transfer(m: &MapCase, hyp: &[MapPropertyTag], premise: (Side, AxiomTag), concl: (Side, AxiomTag)) -> Outcome {
    let side = |s: Side| match s {
        Side::Domain => m.dom,
        Side::Codomain => m.cod,
    };
    let applicable = m.has_all(hyp) && side(premise.0).axiom(premise.1);
    Outcome::implies(applicable, side(concl.0).axiom(concl.1), || {
        format!(
            "{} with {} {}; {} {}",
            names(hyp),
            premise.0.name(),
            premise.1,
            concl.0.name(),
            axiom_failure(side(concl.0), concl.1)
        )
    })
}

#[derive(Clone, Copy)]
enum Side {
    Domain,
    Codomain,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Domain => "domain",
            Side::Codomain => "codomain",
        }
    }
}

fn map_arrow(m: &MapCase, from: MapPropertyTag, to: MapPropertyTag) -> Outcome {
    Outcome::implies(m.has(from), m.has(to), || format!("{from} but not {to}"))
}

fn envelope_equiv(m: &MapCase, prop: MapPropertyTag, gap: std::result::Result<(), EnvelopeGap>) -> Outcome {
    let (a, b) = (m.has(prop), gap.is_ok());
    Outcome::equiv(a, b, || format!("{prop} = {a}; {}", gap_detail(m, gap.err())))
}

fn map_theorems() -> Vec<Theorem> {
    use Side::{Codomain, Domain};
    vec![
        Theorem {
            id: TheoremId::T3_3,
            summary: "strongly-SC*-closed iff every I ⊆ Y has SC*-open envelopes inside SC*-open hulls",
            clauses: Clauses::Map(vec![mp("strongly-scstar-closed<=>envelope", |m| {
                let f = m.map();
                let gap = f.envelope_condition(|_| true, m.dom.profile.scstar_open_family(), m.cod.profile.scstar_open_family());
                envelope_equiv(m, StronglyScstarClosed, gap)
            })]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::L3_4,
            summary: "almost-SC*-irresolute iff f⁻¹(N) ⊆ SC*-int(SC*-cl(f⁻¹(N))) for SC*-open N",
            clauses: Clauses::Map(vec![mp("(i)<=>(ii)", |m| {
                let (a, b) = m.map().lemma_3_4();
                Outcome::equiv(a, b, || format!("almost-scstar-irresolute = {a}, interior condition = {b}"))
            })]),
            formalization: &["SC*-neighbourhood of x: a set containing an SC*-open set that contains x"],
        },
        Theorem {
            id: TheoremId::T3_5,
            summary: "almost-SC*-irresolute iff f(SC*-cl(M)) ⊆ SC*-cl(f(M)) for SC*-open M",
            clauses: Clauses::Map(vec![mp("almost-scstar-irresolute<=>closure-image", |m| {
                let (a, b) = (m.has(AlmostScstarIrresolute), m.map().closure_image_condition());
                Outcome::equiv(a, b, || format!("almost-scstar-irresolute = {a}, closure-image condition = {b}"))
            })]),
            formalization: &[
                "inclusion read as f(SC*-cl(M)) ⊆ SC*-cl(f(M)); the form SC*-cl(M) ⊆ SC*-cl(f(M)) compares subsets of different spaces and is not evaluated",
            ],
        },
        Theorem {
            id: TheoremId::T3_6,
            summary: "SC*-normal domain, surjective strongly-SC*-open continuous almost-SC*-irresolute f ⇒ SC*-regular codomain",
            clauses: Clauses::Map(vec![
                mp("scstar-normal=>scstar-regular", |m| {
                    transfer(
                        m,
                        &[Surjective, StronglyScstarOpen, Continuous, AlmostScstarIrresolute],
                        (Domain, ScstarNormal),
                        (Codomain, ScstarRegular),
                    )
                }),
                mp("scstar-normal-shrinking=>scstar-regular", |m| {
                    let hyp = [Surjective, StronglyScstarOpen, Continuous, AlmostScstarIrresolute];
                    let applicable = m.has_all(&hyp) && m.dom.alternate(AltAxiomTag::ScstarNormalShrinking);
                    Outcome::implies(applicable, m.cod.axiom(ScstarRegular), || {
                        format!(
                            "{} with domain scstar-normal-shrinking; codomain {}",
                            names(&hyp),
                            axiom_failure(m.cod, ScstarRegular)
                        )
                    })
                }),
            ]),
            formalization: &[
                "scstar-normal: disjoint closed sets lie in disjoint SC*-open sets",
                "scstar-normal-shrinking: closed J ⊆ open I admits SC*-open M with J ⊆ M ⊆ SC*-cl(M) ⊆ I",
            ],
        },
        Theorem {
            id: TheoremId::T3_7,
            summary: "strongly-SC*-closed continuous f from an SC*-regular space ⇒ SC*-regular codomain",
            clauses: Clauses::Map(vec![mp("scstar-regular transfer", |m| {
                transfer(m, &[StronglyScstarClosed, Continuous], (Domain, ScstarRegular), (Codomain, ScstarRegular))
            })]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::R4_4,
            summary: "closed ⇒ SC*-closed ⇒ gSC*-closed functions; SC*-gSC*-closed ⇒ gSC*-closed",
            clauses: Clauses::Map(vec![
                mp("closed-map=>scstar-closed-map", |m| map_arrow(m, ClosedMap, ScstarClosedMap)),
                mp("scstar-closed-map=>gscstar-closed-map", |m| map_arrow(m, ScstarClosedMap, GscstarClosedMap)),
                mp("scstar-gscstar-closed=>gscstar-closed-map", |m| {
                    map_arrow(m, ScstarGscstarClosed, GscstarClosedMap)
                }),
            ]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::T4_5,
            summary: "surjective f is gSC*-closed (SC*-gSC*-closed) iff gSC*-open envelopes exist inside open (SC*-open) hulls",
            clauses: Clauses::Map(vec![
                mp("gscstar-closed-map<=>envelope(open hulls)", |m| {
                    if !m.has(Surjective) {
                        return Outcome::Vacuous;
                    }
                    let env = m.cod.profile.gen_family(GenClassTag::GscstarOpen);
                    let gap = m.map().envelope_condition(|_| true, m.dom.profile.open_family(), &env);
                    envelope_equiv(m, GscstarClosedMap, gap)
                }),
                mp("scstar-gscstar-closed<=>envelope(scstar-open hulls)", |m| {
                    if !m.has(Surjective) {
                        return Outcome::Vacuous;
                    }
                    let env = m.cod.profile.gen_family(GenClassTag::GscstarOpen);
                    let gap = m.map().envelope_condition(|_| true, m.dom.profile.scstar_open_family(), &env);
                    envelope_equiv(m, ScstarGscstarClosed, gap)
                }),
            ]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::P4_7,
            summary: "closed F ⊆ Y gets an SC*-open envelope inside open (SC*-open) hulls",
            clauses: Clauses::Map(vec![
                mp("gscstar-closed-map=>closed-envelope(open hulls)", |m| {
                    if !m.has_all(&[Surjective, GscstarClosedMap]) {
                        return Outcome::Vacuous;
                    }
                    let cod = &m.cod.profile;
                    let gap = m.map().envelope_condition(
                        |g| cod.is_closed(g),
                        m.dom.profile.open_family(),
                        cod.scstar_open_family(),
                    );
                    Outcome::implies(true, gap.is_ok(), || gap_detail(m, gap.err()))
                }),
                mp("scstar-gscstar-closed=>closed-envelope(scstar-open hulls)", |m| {
                    if !m.has_all(&[Surjective, ScstarGscstarClosed]) {
                        return Outcome::Vacuous;
                    }
                    let cod = &m.cod.profile;
                    let gap = m.map().envelope_condition(
                        |g| cod.is_closed(g),
                        m.dom.profile.scstar_open_family(),
                        cod.scstar_open_family(),
                    );
                    Outcome::implies(true, gap.is_ok(), || gap_detail(m, gap.err()))
                }),
            ]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::P4_8,
            summary: "continuous SC*-gSC*-closed f maps gSC*-closed sets to gSC*-closed sets",
            clauses: Clauses::Map(vec![mp("gscstar-closed images", |m| {
                if !m.has_all(&[Continuous, ScstarGscstarClosed]) {
                    return Outcome::Vacuous;
                }
                let f = m.map();
                let bad = m
                    .dom
                    .profile
                    .subsets()
                    .find(|j| m.dom.profile.is_gscstar_closed(*j) && !m.cod.profile.is_gscstar_closed(f.image(*j)));
                Outcome::implies(true, bad.is_none(), || {
                    let j = bad.unwrap();
                    format!("J = {} is gSC*-closed but f(J) = {} is not", m.dom.show(j), m.cod.show(f.image(j)))
                })
            })]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::P4_10,
            summary: "open SC*-irresolute bijection pulls gSC*-closed sets back to gSC*-closed sets",
            clauses: Clauses::Map(vec![mp("gscstar-closed preimages", |m| {
                if !m.has_all(&[OpenMap, ScstarIrresolute, Injective, Surjective]) {
                    return Outcome::Vacuous;
                }
                let f = m.map();
                let bad = m
                    .cod
                    .profile
                    .subsets()
                    .find(|i| m.cod.profile.is_gscstar_closed(*i) && !m.dom.profile.is_gscstar_closed(f.preimage(*i)));
                Outcome::implies(true, bad.is_none(), || {
                    let i = bad.unwrap();
                    format!("I = {} is gSC*-closed but f⁻¹(I) = {} is not", m.cod.show(i), m.dom.show(f.preimage(i)))
                })
            })]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::T4_14,
            summary: "continuous SC*-open gSC*-closed surjection from a regular space ⇒ SC*-regular codomain",
            clauses: Clauses::Map(vec![mp("regular=>scstar-regular", |m| {
                transfer(
                    m,
                    &[Continuous, ScstarOpenMap, GscstarClosedMap, Surjective],
                    (Domain, Regular),
                    (Codomain, ScstarRegular),
                )
            })]),
            formalization: &["SC*-open function: images of open sets are SC*-open"],
        },
        Theorem {
            id: TheoremId::T4_16,
            summary: "continuous pre-SC*-open SC*-gSC*-closed surjection preserves SC*-regularity",
            clauses: Clauses::Map(vec![mp("scstar-regular transfer", |m| {
                transfer(
                    m,
                    &[Continuous, PreScstarOpen, ScstarGscstarClosed, Surjective],
                    (Domain, ScstarRegular),
                    (Codomain, ScstarRegular),
                )
            })]),
            formalization: &["pre-SC*-open: images of SC*-open sets are SC*-open"],
        },
        Theorem {
            id: TheoremId::T5_1,
            summary: "continuous quasi-SC*-closed gSC*-closed surjection from an SC*-regular space ⇒ regular codomain",
            clauses: Clauses::Map(vec![
                mp("scstar-regular=>regular", |m| {
                    transfer(
                        m,
                        &[Continuous, QuasiScstarClosed, GscstarClosedMap, Surjective],
                        (Domain, ScstarRegular),
                        (Codomain, Regular),
                    )
                }),
                mp("scstar-regular=>scstar-regular", |m| {
                    transfer(
                        m,
                        &[Continuous, QuasiScstarClosed, GscstarClosedMap, Surjective],
                        (Domain, ScstarRegular),
                        (Codomain, ScstarRegular),
                    )
                }),
            ]),
            formalization: &["conclusion read as regular; the SC*-regular reading is a separate clause"],
        },
        Theorem {
            id: TheoremId::T5_3,
            summary: "closed SC*-gSC*-continuous injection into an SC*-regular space ⇒ SC*-regular domain",
            clauses: Clauses::Map(vec![mp("scstar-regular pullback", |m| {
                transfer(
                    m,
                    &[ClosedMap, ScstarGscstarContinuous, Injective],
                    (Codomain, ScstarRegular),
                    (Domain, ScstarRegular),
                )
            })]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::C5_4,
            summary: "closed SC*-irresolute injection into an SC*-regular space ⇒ SC*-regular domain",
            clauses: Clauses::Map(vec![
                mp("scstar-regular pullback", |m| {
                    transfer(
                        m,
                        &[ClosedMap, ScstarIrresolute, Injective],
                        (Codomain, ScstarRegular),
                        (Domain, ScstarRegular),
                    )
                }),
                mp("scstar-irresolute=>scstar-gscstar-continuous", |m| {
                    map_arrow(m, ScstarIrresolute, ScstarGscstarContinuous)
                }),
            ]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::L5_5,
            summary: "almost-gSC*-closed iff gSC*-open envelopes exist inside regular-open hulls",
            clauses: Clauses::Map(vec![mp("almost-gscstar-closed<=>envelope", |m| {
                let (a, b) = m.map().lemma_5_5();
                Outcome::equiv(a, b, || format!("almost-gscstar-closed = {a}, envelope condition = {b}"))
            })]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::L5_6,
            summary: "almost-gSC*-closed ⇒ closed sets get SC*-open envelopes inside regular-open hulls",
            clauses: Clauses::Map(vec![mp("almost-gscstar-closed=>closed-envelope", |m| {
                let (a, b) = m.map().lemma_5_6();
                Outcome::implies(a, b, || "closed-set envelope condition fails".to_string())
            })]),
            formalization: &[],
        },
        Theorem {
            id: TheoremId::T5_7,
            summary: "continuous almost-gSC*-closed surjection from a regular space ⇒ SC*-regular codomain",
            clauses: Clauses::Map(vec![mp("regular=>scstar-regular", |m| {
                transfer(
                    m,
                    &[Surjective, Continuous, AlmostGscstarClosed],
                    (Domain, Regular),
                    (Codomain, ScstarRegular),
                )
            })]),
            formalization: &[],
        },
    ]
}

fn composition_theorems() -> Vec<Theorem> {
    vec![Theorem {
        id: TheoremId::T4_11,
        summary: "gSC*-closedness of g, f and g ∘ f",
        clauses: Clauses::Composition(vec![
            cp("(i)", |c| {
                let hyp = c.f.has(Continuous) && c.f.has(Surjective) && c.h.has(GscstarClosedMap);
                Outcome::implies(hyp, c.g.has(GscstarClosedMap), || {
                    "f continuous surjective, g∘f gSC*-closed, g not gSC*-closed".to_string()
                })
            }),
            cp("(ii)", |c| {
                let hyp = c.h.has(GscstarClosedMap) && c.g.has(Continuous) && c.g.has(ScstarGscstarClosed);
                Outcome::implies(hyp, c.h.has(GscstarClosedMap), String::new)
            }),
            cp("(ii) with f gscstar-closed", |c| {
                let hyp = c.f.has(GscstarClosedMap) && c.g.has(Continuous) && c.g.has(ScstarGscstarClosed);
                Outcome::implies(hyp, c.h.has(GscstarClosedMap), || {
                    "f gSC*-closed, g continuous and SC*-gSC*-closed, g∘f not gSC*-closed".to_string()
                })
            }),
            cp("(iii)", |c| {
                let hyp = c.h.has(ClosedMap) && c.g.has(GscstarClosedMap);
                Outcome::implies(hyp, c.h.has(GscstarClosedMap), || {
                    "g∘f closed, g gSC*-closed, g∘f not gSC*-closed".to_string()
                })
            }),
        ]),
        formalization: &[
            "(ii) is evaluated as stated, where the hypothesis repeats the conclusion",
            "(ii) with f gscstar-closed replaces the repeated hypothesis by f gSC*-closed",
        ],
    }]
}

fn build() -> Vec<Theorem> {
    let mut all: Vec<Theorem> = space_theorems()
        .into_iter()
        .chain(map_theorems())
        .chain(composition_theorems())
        .collect();
    all.sort_by_key(|t| t.id);
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_id_registered_once() {
        let reg = registry();
        assert_eq!(reg.len(), TheoremId::ALL.len());
        for id in TheoremId::ALL {
            assert_eq!(reg.iter().filter(|t| t.id == *id).count(), 1, "{id}");
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), *id);
        }
        assert!(matches!("T9.9".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn clause_names_unique() {
        for t in registry() {
            let names = t.clause_names();
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), names.len(), "{}", t.id);
        }
    }
}
