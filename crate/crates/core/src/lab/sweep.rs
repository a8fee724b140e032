//! Exhaustive sweeps of registered statements over every space, map, or
//! composable map pair within a point bound.
//!
//! Work units (one space, one ordered space pair, or one space triple) run
//! in parallel; each yields a per-clause tally and the tallies are merged
//! in canonical unit order, so the first counterexample and every count
//! are independent of the worker count.

use crate::error::{Error, Result};
use crate::lab::enumerate::{assignments, spaces_up_to, MAX_ENUMERATION_POINTS};
use crate::lab::registry::{registry, theorem, Clauses, Level, TheoremId};
use crate::maps::{FiniteMap, MapDoc, MapRef};
use crate::profile::SpaceProfile;
use crate::separation::{classify_space, AxiomVector};
use crate::space::{Space, SpaceDoc};
use crate::subset::{Subset, MAX_POINTS};
use crate::tags::{AltAxiomTag, AxiomTag, MapPropertyTag, VariantTag};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cell::Cell;
use std::sync::OnceLock;
use std::time::Instant;

/// Largest codomain/domain size accepted for map-level sweeps.
pub const MAX_MAP_POINTS: usize = 4;
/// Largest space size accepted for composition sweeps.
pub const MAX_COMPOSE_POINTS: usize = 3;

/// Result of one clause on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Hypotheses not met.
    Vacuous,
    Holds,
    Fails(String),
}

impl Outcome {
    pub fn implies(hyp: bool, concl: bool, detail: impl FnOnce() -> String) -> Outcome {
        match (hyp, concl) {
            (false, _) => Outcome::Vacuous,
            (true, true) => Outcome::Holds,
            (true, false) => Outcome::Fails(detail()),
        }
    }

    pub fn equiv(left: bool, right: bool, detail: impl FnOnce() -> String) -> Outcome {
        if left == right {
            Outcome::Holds
        } else {
            Outcome::Fails(detail())
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Fails(_))
    }

    /// Combines per-element outcomes: the first failure wins, otherwise
    /// `Holds` if any element was applicable.
    pub fn all<I: IntoIterator<Item = Outcome>>(items: I) -> Outcome {
        let mut any = false;
        for o in items {
            match o {
                Outcome::Fails(_) => return o,
                Outcome::Holds => any = true,
                Outcome::Vacuous => {}
            }
        }
        if any {
            Outcome::Holds
        } else {
            Outcome::Vacuous
        }
    }
}

/// One enumerated space with its cached profile; the axiom vector is
/// computed on first use.
pub struct SpaceCase {
    pub profile: SpaceProfile,
    axioms: OnceLock<AxiomVector>,
}

impl SpaceCase {
    pub fn new(space: &Space) -> SpaceCase {
        SpaceCase {
            profile: SpaceProfile::new(space),
            axioms: OnceLock::new(),
        }
    }

    pub fn space(&self) -> &Space {
        self.profile.space()
    }

    pub fn n(&self) -> usize {
        self.profile.n()
    }

    pub fn axioms(&self) -> &AxiomVector {
        self.axioms.get_or_init(|| classify_space(&self.profile))
    }

    pub fn axiom(&self, tag: AxiomTag) -> bool {
        self.axioms().axiom(tag)
    }

    pub fn variant(&self, tag: VariantTag) -> bool {
        self.axioms().variant(tag)
    }

    pub fn alternate(&self, tag: AltAxiomTag) -> bool {
        self.axioms().alternate(tag)
    }

    pub fn show(&self, a: Subset) -> String {
        self.space().show(a)
    }

    pub fn doc(&self) -> SpaceDoc {
        self.space().to_doc("")
    }
}

/// One map between two cases; properties are evaluated once on demand.
pub struct MapCase<'a> {
    pub dom: &'a SpaceCase,
    pub cod: &'a SpaceCase,
    assign: [usize; MAX_POINTS],
    known: Cell<u32>,
    value: Cell<u32>,
}

impl<'a> MapCase<'a> {
    pub fn new(dom: &'a SpaceCase, cod: &'a SpaceCase, assign: &[usize]) -> MapCase<'a> {
        let mut a = [0; MAX_POINTS];
        a[..assign.len()].copy_from_slice(assign);
        MapCase {
            dom,
            cod,
            assign: a,
            known: Cell::new(0),
            value: Cell::new(0),
        }
    }

    pub fn assign(&self) -> &[usize] {
        &self.assign[..self.dom.n()]
    }

    pub fn map(&self) -> MapRef<'_> {
        MapRef::new(&self.dom.profile, &self.cod.profile, self.assign())
    }

    pub fn has(&self, tag: MapPropertyTag) -> bool {
        let bit = 1u32 << (tag as u32);
        if self.known.get() & bit == 0 {
            if self.map().property(tag) {
                self.value.set(self.value.get() | bit);
            }
            self.known.set(self.known.get() | bit);
        }
        self.value.get() & bit != 0
    }

    pub fn has_all(&self, tags: &[MapPropertyTag]) -> bool {
        tags.iter().all(|t| self.has(*t))
    }

    pub fn doc(&self) -> MapDoc {
        self.finite().to_doc("", "")
    }

    fn finite(&self) -> FiniteMap {
        FiniteMap::from_assignment(self.dom.space().clone(), self.cod.space().clone(), self.assign().to_vec())
            .expect("assignment in range")
    }
}

/// A composable pair `f: X → Y`, `g: Y → Z` with `h = g ∘ f`.
pub struct ComposeCase<'a> {
    pub f: &'a MapCase<'a>,
    pub g: &'a MapCase<'a>,
    pub h: MapCase<'a>,
}

/// Serialized instance carried by a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Instance {
    Space { space: SpaceDoc },
    Map { map: MapDoc },
    Composition { f: MapDoc, g: MapDoc },
}

/// A replayable counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub theorem: String,
    pub clause: String,
    pub instance: Instance,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Counterexample,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Counterexample => "counterexample",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClauseReport {
    pub clause: String,
    pub verdict: Verdict,
    /// Instances on which the clause's hypotheses held.
    pub applicable: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub bound: usize,
    pub verdict: Verdict,
    pub instances: u64,
    pub clauses: Vec<ClauseReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub formalization: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

impl TheoremReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &Witness> {
        self.clauses.iter().filter_map(|c| c.counterexample.as_ref())
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SweepOptions {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Record wall-clock seconds in reports.
    pub timings: bool,
}

impl SweepOptions {
    pub fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(job()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w.max(1))
                    .build()
                    .map_err(|e| Error::Document(format!("thread pool: {e}")))?;
                Ok(pool.install(job))
            }
        }
    }
}

/// Per-clause result of one work unit (or of a merged sweep).
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub applicable: u64,
    pub failure: Option<(Instance, String)>,
}

#[derive(Clone, Debug)]
pub(crate) struct Summary {
    pub instances: u64,
    pub tallies: Vec<Tally>,
}

impl Summary {
    pub(crate) fn new(clauses: usize) -> Summary {
        Summary {
            instances: 0,
            tallies: vec![Tally::default(); clauses],
        }
    }

    pub(crate) fn record(&mut self, i: usize, outcome: Outcome, instance: impl FnOnce() -> Instance) {
        let t = &mut self.tallies[i];
        match outcome {
            Outcome::Vacuous => {}
            Outcome::Holds => t.applicable += 1,
            Outcome::Fails(detail) => {
                t.applicable += 1;
                if t.failure.is_none() {
                    t.failure = Some((instance(), detail));
                }
            }
        }
    }

    /// Merges unit summaries in the given (canonical) order.
    pub(crate) fn merge(clauses: usize, units: Vec<Summary>) -> Summary {
        let mut out = Summary::new(clauses);
        for u in units {
            out.instances += u.instances;
            for (acc, t) in out.tallies.iter_mut().zip(u.tallies) {
                acc.applicable += t.applicable;
                if acc.failure.is_none() {
                    acc.failure = t.failure;
                }
            }
        }
        out
    }
}

/// Every labeled space with at most `bound` points, profiled.
pub struct Universe {
    cases: Vec<SpaceCase>,
}

impl Universe {
    pub fn new(bound: usize) -> Result<Universe> {
        if !(1..=MAX_ENUMERATION_POINTS).contains(&bound) {
            return Err(Error::BoundExceeded(bound, MAX_ENUMERATION_POINTS));
        }
        let spaces = spaces_up_to(bound);
        let cases = spaces.par_iter().map(SpaceCase::new).collect();
        Ok(Universe { cases })
    }

    /// Cases with at most `bound` points (a prefix, since enumeration is
    /// ordered by size).
    pub fn up_to(&self, bound: usize) -> &[SpaceCase] {
        let end = self.cases.partition_point(|c| c.n() <= bound);
        &self.cases[..end]
    }
}

pub(crate) type SpaceCheck<'c> = &'c (dyn Fn(&SpaceCase) -> Outcome + Sync);
pub(crate) type MapCheck<'c> = &'c (dyn Fn(&MapCase) -> Outcome + Sync);
pub(crate) type ComposeCheck<'c> = &'c (dyn Fn(&ComposeCase) -> Outcome + Sync);

pub(crate) fn sweep_spaces(cases: &[SpaceCase], clauses: &[SpaceCheck]) -> Summary {
    let units: Vec<Summary> = cases
        .par_iter()
        .map(|c| {
            let mut s = Summary::new(clauses.len());
            s.instances = 1;
            for (i, check) in clauses.iter().enumerate() {
                s.record(i, check(c), || Instance::Space { space: c.doc() });
            }
            s
        })
        .collect();
    Summary::merge(clauses.len(), units)
}

pub(crate) fn sweep_maps(cases: &[SpaceCase], clauses: &[MapCheck]) -> Summary {
    let pairs: Vec<(usize, usize)> = (0..cases.len())
        .flat_map(|i| (0..cases.len()).map(move |j| (i, j)))
        .collect();
    let units: Vec<Summary> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (dom, cod) = (&cases[i], &cases[j]);
            let mut s = Summary::new(clauses.len());
            for a in assignments(dom.n(), cod.n()) {
                let m = MapCase::new(dom, cod, &a);
                s.instances += 1;
                for (k, check) in clauses.iter().enumerate() {
                    s.record(k, check(&m), || Instance::Map { map: m.doc() });
                }
            }
            s
        })
        .collect();
    Summary::merge(clauses.len(), units)
}

pub(crate) fn sweep_compositions(cases: &[SpaceCase], clauses: &[ComposeCheck]) -> Summary {
    let k = cases.len();
    let triples: Vec<(usize, usize, usize)> = (0..k)
        .flat_map(|x| (0..k).flat_map(move |y| (0..k).map(move |z| (x, y, z))))
        .collect();
    let units: Vec<Summary> = triples
        .par_iter()
        .map(|&(x, y, z)| {
            let (cx, cy, cz) = (&cases[x], &cases[y], &cases[z]);
            let fs: Vec<MapCase> = assignments(cx.n(), cy.n()).map(|a| MapCase::new(cx, cy, &a)).collect();
            let gs: Vec<MapCase> = assignments(cy.n(), cz.n()).map(|a| MapCase::new(cy, cz, &a)).collect();
            let mut s = Summary::new(clauses.len());
            let mut h = vec![0; cx.n()];
            for f in &fs {
                for g in &gs {
                    for (p, slot) in h.iter_mut().enumerate() {
                        *slot = g.assign()[f.assign()[p]];
                    }
                    let case = ComposeCase {
                        f,
                        g,
                        h: MapCase::new(cx, cz, &h),
                    };
                    s.instances += 1;
                    for (i, check) in clauses.iter().enumerate() {
                        s.record(i, check(&case), || Instance::Composition { f: f.doc(), g: g.doc() });
                    }
                }
            }
            s
        })
        .collect();
    Summary::merge(clauses.len(), units)
}

pub fn default_bound(level: Level) -> usize {
    match level {
        Level::Space => 4,
        Level::Map | Level::Composition => 3,
    }
}

pub fn max_bound(level: Level) -> usize {
    match level {
        Level::Space => MAX_ENUMERATION_POINTS,
        Level::Map => MAX_MAP_POINTS,
        Level::Composition => MAX_COMPOSE_POINTS,
    }
}

fn check_bound(level: Level, bound: usize) -> Result<()> {
    let max = max_bound(level);
    if bound == 0 || bound > max {
        return Err(Error::BoundExceeded(bound, max));
    }
    Ok(())
}

pub(crate) fn build_report(
    id: &str,
    bound: usize,
    names: &[&'static str],
    summary: Summary,
    formalization: &[&'static str],
    seconds: Option<f64>,
) -> TheoremReport {
    let clauses: Vec<ClauseReport> = names
        .iter()
        .zip(summary.tallies)
        .map(|(name, t)| ClauseReport {
            clause: name.to_string(),
            verdict: if t.failure.is_some() {
                Verdict::Counterexample
            } else {
                Verdict::Verified
            },
            applicable: t.applicable,
            counterexample: t.failure.map(|(instance, detail)| Witness {
                theorem: id.to_string(),
                clause: name.to_string(),
                instance,
                detail,
            }),
        })
        .collect();
    let verdict = if clauses.iter().any(|c| c.verdict == Verdict::Counterexample) {
        Verdict::Counterexample
    } else {
        Verdict::Verified
    };
    TheoremReport {
        id: id.to_string(),
        bound,
        verdict,
        instances: summary.instances,
        clauses,
        formalization: formalization.iter().map(|s| s.to_string()).collect(),
        seconds,
    }
}

fn run_theorem(id: TheoremId, bound: usize, universe: &Universe, opts: &SweepOptions) -> Result<TheoremReport> {
    let th = theorem(id);
    check_bound(th.level(), bound)?;
    let cases = universe.up_to(bound);
    let start = Instant::now();
    let (names, summary): (Vec<&'static str>, Summary) = opts.run(|| match &th.clauses {
        Clauses::Space(cl) => {
            let checks: Vec<SpaceCheck> = cl.iter().map(|c| &c.1 as SpaceCheck).collect();
            (th.clause_names(), sweep_spaces(cases, &checks))
        }
        Clauses::Map(cl) => {
            let checks: Vec<MapCheck> = cl.iter().map(|c| &c.1 as MapCheck).collect();
            (th.clause_names(), sweep_maps(cases, &checks))
        }
        Clauses::Composition(cl) => {
            let checks: Vec<ComposeCheck> = cl.iter().map(|c| &c.1 as ComposeCheck).collect();
            (th.clause_names(), sweep_compositions(cases, &checks))
        }
    })?;
    let seconds = opts.timings.then(|| start.elapsed().as_secs_f64());
    Ok(build_report(id.name(), bound, &names, summary, th.formalization, seconds))
}

/// Sweeps one registered statement; `bound` defaults by level.
pub fn verify_theorem(id: TheoremId, bound: Option<usize>, opts: &SweepOptions) -> Result<TheoremReport> {
    let level = theorem(id).level();
    let bound = bound.unwrap_or_else(|| default_bound(level));
    check_bound(level, bound)?;
    let universe = opts.run(|| Universe::new(bound))??;
    run_theorem(id, bound, &universe, opts)
}

/// Sweeps every registered statement in registry order. A given `bound`
/// is capped at each level's maximum.
pub fn verify_all(bound: Option<usize>, opts: &SweepOptions) -> Result<Vec<TheoremReport>> {
    let bound_for = |level: Level| bound.map_or(default_bound(level), |b| b.min(max_bound(level)));
    let widest = [Level::Space, Level::Map, Level::Composition]
        .into_iter()
        .map(bound_for)
        .max()
        .unwrap_or(1);
    let universe = opts.run(|| Universe::new(widest))??;
    registry()
        .iter()
        .map(|th| run_theorem(th.id, bound_for(th.level()), &universe, opts))
        .collect()
}

/// Re-evaluates a counterexample's clause on its serialized instance.
pub fn replay(w: &Witness) -> Result<Outcome> {
    let id: TheoremId = w.theorem.parse()?;
    let th = theorem(id);
    let unknown = || Error::Document(format!("{} has no clause named {:?}", w.theorem, w.clause));
    match (&th.clauses, &w.instance) {
        (Clauses::Space(cl), Instance::Space { space }) => {
            let check = cl.iter().find(|c| c.0 == w.clause).ok_or_else(unknown)?.1;
            Ok(check(&SpaceCase::new(&Space::from_doc(space)?)))
        }
        (Clauses::Map(cl), Instance::Map { map }) => {
            let check = cl.iter().find(|c| c.0 == w.clause).ok_or_else(unknown)?.1;
            let f = FiniteMap::from_doc(map, None)?;
            let (d, c) = (SpaceCase::new(f.domain()), SpaceCase::new(f.codomain()));
            Ok(check(&MapCase::new(&d, &c, f.assignment())))
        }
        (Clauses::Composition(cl), Instance::Composition { f, g }) => {
            let check = cl.iter().find(|c| c.0 == w.clause).ok_or_else(unknown)?.1;
            let (f, g) = (FiniteMap::from_doc(f, None)?, FiniteMap::from_doc(g, None)?);
            let h = f.then(&g)?;
            let (x, y, z) = (SpaceCase::new(f.domain()), SpaceCase::new(g.domain()), SpaceCase::new(g.codomain()));
            let (fc, gc) = (MapCase::new(&x, &y, f.assignment()), MapCase::new(&y, &z, g.assignment()));
            let case = ComposeCase {
                f: &fc,
                g: &gc,
                h: MapCase::new(&x, &z, h.assignment()),
            };
            Ok(check(&case))
        }
        _ => Err(Error::Document(format!(
            "instance kind does not match the level of {}",
            w.theorem
        ))),
    }
}
