//! Ad hoc implication search: "every instance with all hypothesis tags
//! also has the conclusion tag", swept over every space, subset, or map
//! within a bound.

use crate::error::{Error, Result};
use crate::lab::sweep::{
    build_report, max_bound, sweep_maps, sweep_spaces, Instance, MapCase, Outcome, SpaceCase, Summary, SweepOptions,
    TheoremReport, Universe,
};
use crate::lab::registry::Level;
use crate::profile::SpaceProfile;
use crate::separation::{alternate, axiom, scstar_regular_variant};
use crate::subset::Subset;
use crate::tags::{AltAxiomTag, AxiomTag, GenClassTag, KernelClassTag, MapPropertyTag, VariantTag};
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Any registered predicate name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    /// Every subset is open.
    Discrete,
    Axiom(AxiomTag),
    Variant(VariantTag),
    Alternate(AltAxiomTag),
    Open,
    Closed,
    Kernel(KernelClassTag),
    Gen(GenClassTag),
    Map(MapPropertyTag),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum TagLevel {
    Space,
    Subset,
    Map,
}

impl Tag {
    fn level(self) -> TagLevel {
        match self {
            Tag::Discrete | Tag::Axiom(_) | Tag::Variant(_) | Tag::Alternate(_) => TagLevel::Space,
            Tag::Open | Tag::Closed | Tag::Kernel(_) | Tag::Gen(_) => TagLevel::Subset,
            Tag::Map(_) => TagLevel::Map,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tag::Discrete => "discrete",
            Tag::Open => "open",
            Tag::Closed => "closed",
            Tag::Axiom(t) => t.name(),
            Tag::Variant(t) => t.name(),
            Tag::Alternate(t) => t.name(),
            Tag::Kernel(t) => t.name(),
            Tag::Gen(t) => t.name(),
            Tag::Map(t) => t.name(),
        }
    }

    fn space_holds(self, p: &SpaceProfile) -> bool {
        match self {
            Tag::Discrete => p.open_family().len() == 1 << p.n(),
            Tag::Axiom(t) => axiom(p, t),
            Tag::Variant(t) => scstar_regular_variant(p, t),
            Tag::Alternate(t) => alternate(p, t),
            _ => unreachable!("not a space tag"),
        }
    }

    fn subset_holds(self, p: &SpaceProfile, a: Subset) -> bool {
        match self {
            Tag::Open => p.is_open(a),
            Tag::Closed => p.is_closed(a),
            Tag::Kernel(t) => p.kernel_class(a, t),
            Tag::Gen(t) => p.gen_class(a, t),
            _ => unreachable!("not a subset tag"),
        }
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tag> {
        let s = s.trim();
        match s {
            "discrete" => return Ok(Tag::Discrete),
            "open" => return Ok(Tag::Open),
            "closed" => return Ok(Tag::Closed),
            _ => {}
        }
        s.parse()
            .map(Tag::Axiom)
            .or_else(|_| s.parse().map(Tag::Variant))
            .or_else(|_| s.parse().map(Tag::Alternate))
            .or_else(|_| s.parse().map(Tag::Kernel))
            .or_else(|_| s.parse().map(Tag::Gen))
            .or_else(|_| s.parse().map(Tag::Map))
            .map_err(|_| Error::UnknownTag(s.to_string()))
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchQuery {
    pub hypothesis: Vec<Tag>,
    pub conclusion: Tag,
    pub bound: usize,
}

impl SearchQuery {
    /// Parses comma-separated hypothesis tags and one conclusion tag.
    pub fn parse(from: &str, to: &str, bound: usize) -> Result<SearchQuery> {
        let hypothesis = from
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Tag>>>()?;
        Ok(SearchQuery {
            hypothesis,
            conclusion: to.parse()?,
            bound,
        })
    }

    pub fn id(&self) -> String {
        let hyp: Vec<&str> = self.hypothesis.iter().map(|t| t.name()).collect();
        format!("{}=>{}", hyp.join(","), self.conclusion)
    }

    /// The level of the conclusion; space tags may also constrain subset
    /// queries, every other mix is rejected.
    fn level(&self) -> Result<TagLevel> {
        let level = self.conclusion.level().max(
            self.hypothesis.iter().map(|t| t.level()).max().unwrap_or(TagLevel::Space),
        );
        for t in self.hypothesis.iter().chain([&self.conclusion]) {
            let ok = t.level() == level || (level == TagLevel::Subset && t.level() == TagLevel::Space);
            if !ok {
                return Err(Error::MixedLevels(format!("{t} cannot be combined with {}-level tags", level_name(level))));
            }
        }
        Ok(level)
    }
}

fn level_name(l: TagLevel) -> &'static str {
    match l {
        TagLevel::Space => "space",
        TagLevel::Subset => "subset",
        TagLevel::Map => "map",
    }
}

fn space_check(q: &SearchQuery, c: &SpaceCase) -> Outcome {
    let p = &c.profile;
    let hyp = q.hypothesis.iter().all(|t| t.space_holds(p));
    Outcome::implies(hyp, q.conclusion.space_holds(p), || format!("{} fails", q.conclusion))
}

fn subset_check(q: &SearchQuery, c: &SpaceCase) -> Outcome {
    let p = &c.profile;
    let (space_tags, set_tags): (Vec<Tag>, Vec<Tag>) =
        q.hypothesis.iter().partition(|t| t.level() == TagLevel::Space);
    if !space_tags.iter().all(|t| t.space_holds(p)) {
        return Outcome::Vacuous;
    }
    Outcome::all(p.subsets().map(|a| {
        let hyp = set_tags.iter().all(|t| t.subset_holds(p, a));
        Outcome::implies(hyp, q.conclusion.subset_holds(p, a), || {
            format!("{} is not {}", c.show(a), q.conclusion)
        })
    }))
}

fn map_check(q: &SearchQuery, m: &MapCase) -> Outcome {
    let tag = |t: &Tag| match t {
        Tag::Map(t) => *t,
        _ => unreachable!("level checked"),
    };
    let hyp = q.hypothesis.iter().all(|t| m.has(tag(t)));
    Outcome::implies(hyp, m.has(tag(&q.conclusion)), || format!("not {}", q.conclusion))
}

fn sweep_query(q: &SearchQuery, cases: &[SpaceCase], level: TagLevel) -> Summary {
    match level {
        TagLevel::Map => sweep_maps(cases, &[&|m: &MapCase| map_check(q, m)]),
        TagLevel::Space => sweep_spaces(cases, &[&|c: &SpaceCase| space_check(q, c)]),
        TagLevel::Subset => {
            let units: Vec<Summary> = cases
                .par_iter()
                .map(|c| {
                    let mut s = Summary::new(1);
                    s.instances = 1 << c.n();
                    s.record(0, subset_check(q, c), || Instance::Space { space: c.doc() });
                    s
                })
                .collect();
            Summary::merge(1, units)
        }
    }
}

/// Searches for the first instance (in canonical order) satisfying every
/// hypothesis but not the conclusion.
pub fn check_implication(q: &SearchQuery, opts: &SweepOptions) -> Result<TheoremReport> {
    let level = q.level()?;
    let max = max_bound(if level == TagLevel::Map { Level::Map } else { Level::Space });
    if q.bound == 0 || q.bound > max {
        return Err(Error::BoundExceeded(q.bound, max));
    }
    let start = Instant::now();
    let summary = opts.run(|| -> Result<Summary> {
        let universe = Universe::new(q.bound)?;
        Ok(sweep_query(q, universe.up_to(q.bound), level))
    })??;
    let seconds = opts.timings.then(|| start.elapsed().as_secs_f64());
    Ok(build_report(&q.id(), q.bound, &["implication"], summary, &[], seconds))
}
