//! Fixture claims compared against engine output, plus monitored operator
//! properties over every small space.

use crate::error::Result;
use crate::fixtures;
use crate::lab::enumerate::spaces_up_to;
use crate::lab::registry::TheoremId;
use crate::lab::sweep::{verify_theorem, SweepOptions, TheoremReport};
use crate::profile::SpaceProfile;
use crate::separation::check_axiom;
use crate::space::Space;
use crate::subset::Subset;
use crate::tags::{AxiomTag, GenClassTag};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "AGREE")]
    Agree,
    #[serde(rename = "DISAGREE")]
    Disagree,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Agree => "AGREE",
            Status::Disagree => "DISAGREE",
        }
    }
}

/// One claim about a fixture (or about every small space).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub fixture: String,
    pub claim: String,
    pub expected: String,
    pub engine: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// A monitored operator property: violation count over every space in
/// scope and the first violation found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub operator: &'static str,
    pub property: &'static str,
    pub max_points: usize,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub formalizations: Vec<String>,
    pub rows: Vec<ReportRow>,
    pub observations: Vec<Observation>,
}

impl DiscrepancyReport {
    pub fn disagreements(&self) -> usize {
        self.rows.iter().filter(|r| r.status == Status::Disagree).count()
    }

    /// One JSON object per line: the formalization header, each row, then
    /// each observation.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        let header = serde_json::json!({ "formalizations": self.formalizations });
        out.push_str(&header.to_string());
        out.push('\n');
        for r in &self.rows {
            out.push_str(&serde_json::to_string(r).expect("rows serialize"));
            out.push('\n');
        }
        for o in &self.observations {
            out.push_str(&serde_json::to_string(o).expect("observations serialize"));
            out.push('\n');
        }
        out
    }
}

const FORMALIZATIONS: &[&str] = &[
    "alpha-regular: closed F and x ∉ F separated by disjoint alpha-open sets",
    "scstar-t1: every singleton is SC*-closed",
    "scstar-t2: distinct points have disjoint SC*-open neighbourhoods",
    "scstar-normal: disjoint closed sets lie in disjoint SC*-open sets",
    "Hausdorff read as scstar-t2",
    "example-2.7 carried on points {k,l,m,n}",
];

fn row(fixture: &str, claim: String, expected: String, engine: String, witness: Option<String>) -> ReportRow {
    let status = if expected == engine {
        Status::Agree
    } else {
        Status::Disagree
    };
    ReportRow {
        fixture: fixture.to_string(),
        claim,
        expected,
        engine,
        status,
        witness: if status == Status::Disagree { witness } else { None },
    }
}

fn show_list(space: &Space, sets: &[Subset]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| space.show(*s)).collect();
    parts.join(" ")
}

/// Compares a claimed list of sets with the engine's list.
fn list_row(fixture: &str, space: &Space, what: &str, claimed: &[&str], engine: Vec<Subset>) -> ReportRow {
    let mut expected: Vec<Subset> = claimed
        .iter()
        .map(|s| space.parse_set(s).expect("claimed sets use fixture labels"))
        .collect();
    expected.sort();
    let missing: Vec<Subset> = expected.iter().copied().filter(|s| !engine.contains(s)).collect();
    let extra: Vec<Subset> = engine.iter().copied().filter(|s| !expected.contains(s)).collect();
    let witness = format!(
        "missing {}; extra {}",
        show_list(space, &missing),
        show_list(space, &extra)
    );
    row(
        fixture,
        format!("{what} sets"),
        show_list(space, &expected),
        show_list(space, &engine),
        Some(witness),
    )
}

fn axiom_row(fixture: &str, p: &SpaceProfile, tag: AxiomTag, claimed: bool) -> ReportRow {
    let verdict = check_axiom(p, tag);
    row(
        fixture,
        tag.name().to_string(),
        claimed.to_string(),
        verdict.is_ok().to_string(),
        Some(match verdict {
            Err(f) => f.0,
            Ok(()) => format!("{tag} holds"),
        }),
    )
}

fn set_row(fixture: &str, set: &str, what: &str, engine: bool, claimed: bool) -> ReportRow {
    row(
        fixture,
        format!("{set} is {what}"),
        claimed.to_string(),
        engine.to_string(),
        Some(format!("{set} checked directly")),
    )
}

fn family_list(p: &SpaceProfile, tag: Option<GenClassTag>) -> Vec<Subset> {
    p.subsets()
        .filter(|a| match tag {
            None => p.is_closed(*a),
            Some(t) => p.gen_class(*a, t),
        })
        .collect()
}

fn example_1_8_rows(rows: &mut Vec<ReportRow>) {
    let s = fixtures::example_1_8();
    let p = SpaceProfile::new(&s);
    let f = "example-1.8";
    let all: Vec<String> = Subset::all(4).map(|a| s.show(a).trim_matches(['{', '}']).to_string()).collect();
    let all: Vec<&str> = all.iter().map(String::as_str).collect();
    rows.push(list_row(f, &s, "closed", &["", "n", "l,n", "m,n", "k,m,n", "l,m,n", "k,l,m,n"], family_list(&p, None)));
    rows.push(list_row(
        f,
        &s,
        "g-closed",
        &["", "k,l,m,n", "n", "k,n", "l,n", "m,n", "k,l,n", "k,m,n", "l,m,n"],
        family_list(&p, Some(GenClassTag::GClosed)),
    ));
    rows.push(list_row(f, &s, "scstar-closed", &all, family_list(&p, Some(GenClassTag::ScstarClosed))));
    rows.push(list_row(f, &s, "gscstar-closed", &all, family_list(&p, Some(GenClassTag::GscstarClosed))));
    rows.push(list_row(f, &s, "scstarg-closed", &all, family_list(&p, Some(GenClassTag::ScstargClosed))));
}

fn axiom_claims(rows: &mut Vec<ReportRow>, fixture: &str, space: Space, claims: &[(AxiomTag, bool)]) -> SpaceProfile {
    let p = SpaceProfile::new(&space);
    for &(tag, claimed) in claims {
        rows.push(axiom_row(fixture, &p, tag, claimed));
    }
    p
}

fn fixture_rows(rows: &mut Vec<ReportRow>) {
    use AxiomTag::*;
    example_1_8_rows(rows);

    let p = axiom_claims(rows, "example-2.5", fixtures::example_2_5(), &[(Regular, true), (GRegular, true), (ScstarRegular, true)]);
    let s = p.space();
    rows.push(set_row("example-2.5", "{k}", "closed", p.is_closed(s.parse_set("k").unwrap()), true));
    rows.push(set_row("example-2.5", "{k,m,n}", "open", p.is_open(s.parse_set("k,m,n").unwrap()), true));
    rows.push(set_row("example-2.5", "{l}", "open", p.is_open(s.parse_set("l").unwrap()), true));

    axiom_claims(
        rows,
        "example-2.6",
        fixtures::example_2_6(),
        &[(WeaklyRegular, true), (AlmostRegular, false), (SoftlyRegular, false)],
    );
    axiom_claims(rows, "example-2.7", fixtures::example_2_7(), &[(AlmostRegular, true), (StronglyRgRegular, false)]);
    axiom_claims(rows, "example-2.8", fixtures::example_2_8(), &[(Regular, true)]);

    let p = axiom_claims(rows, "example-2.9", fixtures::example_2_9(), &[(Regular, true), (StronglyRgRegular, false)]);
    let s = p.space();
    let l = s.parse_set("l").unwrap();
    rows.push(set_row("example-2.9", "{l}", "rg-closed", p.gen_class(l, GenClassTag::RgClosed), true));
    let m = s.point("m").unwrap();
    let separable = s
        .opens()
        .iter()
        .any(|u| l.is_subset_of(*u) && s.opens().iter().any(|v| v.contains(m) && u.is_disjoint(*v)));
    rows.push(row(
        "example-2.9",
        "{l} and m are separated by disjoint open sets".to_string(),
        "false".to_string(),
        separable.to_string(),
        Some("open sets scanned directly".to_string()),
    ));
}

/// Every clause of a swept statement becomes one row claiming it holds.
fn sweep_rows(rows: &mut Vec<ReportRow>, report: &TheoremReport) {
    let scope = format!("all spaces with at most {} points", report.bound);
    for c in &report.clauses {
        rows.push(row(
            &scope,
            format!("{} {}", report.id, c.clause),
            "verified".to_string(),
            c.verdict.name().to_string(),
            c.counterexample
                .as_ref()
                .map(|w| format!("{} on {}", w.detail, serde_json::to_string(&w.instance).unwrap())),
        ));
    }
}

type Op = fn(&SpaceProfile, Subset) -> Subset;

const CLOSURES: &[(&str, Op, &str, Op)] = &[
    ("cl", SpaceProfile::closure, "int", SpaceProfile::interior),
    ("s-cl", SpaceProfile::semi_closure, "s-int", SpaceProfile::semi_interior),
    ("cstar-cl", SpaceProfile::cstar_closure, "cstar-int", SpaceProfile::cstar_interior),
    ("scstar-cl", SpaceProfile::scstar_closure, "scstar-int", SpaceProfile::scstar_interior),
];

struct Monitor {
    operator: &'static str,
    property: &'static str,
    violations: u64,
    witness: Option<String>,
}

impl Monitor {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(what());
            }
        }
    }
}

/// Extensivity (intensivity), monotonicity, idempotence and duality of each
/// closure/interior pair over every subset of every space.
pub fn operator_observations(max_points: usize) -> Vec<Observation> {
    let mut monitors: Vec<Monitor> = Vec::new();
    for &(cl_name, _, int_name, _) in CLOSURES {
        for (op, prop) in [
            (cl_name, "extensive"),
            (cl_name, "monotone"),
            (cl_name, "idempotent"),
            (int_name, "intensive"),
            (int_name, "monotone"),
            (int_name, "idempotent"),
            (cl_name, "dual"),
        ] {
            monitors.push(Monitor {
                operator: op,
                property: prop,
                violations: 0,
                witness: None,
            });
        }
    }
    for space in spaces_up_to(max_points) {
        let p = SpaceProfile::new(&space);
        let where_ = |a: Subset| format!("A = {} in {}", space.show(a), space.to_json(""));
        for (k, &(_, cl, _, int)) in CLOSURES.iter().enumerate() {
            let m = &mut monitors[k * 7..k * 7 + 7];
            for a in p.subsets() {
                let (c, i) = (cl(&p, a), int(&p, a));
                m[0].check(a.is_subset_of(c), || where_(a));
                m[3].check(i.is_subset_of(a), || where_(a));
                for b in a.supersets() {
                    m[1].check(c.is_subset_of(cl(&p, b)), || format!("{} ⊆ {}", where_(a), space.show(b)));
                    m[4].check(i.is_subset_of(int(&p, b)), || format!("{} ⊆ {}", where_(a), space.show(b)));
                }
                m[2].check(cl(&p, c) == c, || where_(a));
                m[5].check(int(&p, i) == i, || where_(a));
                m[6].check(c == int(&p, a.complement()).complement(), || where_(a));
            }
        }
    }
    monitors
        .into_iter()
        .map(|m| Observation {
            operator: m.operator,
            property: m.property,
            max_points,
            violations: m.violations,
            witness: m.witness,
        })
        .collect()
}

/// Every fixture claim, the closed-set and regularity hierarchies, and the
/// SC*-closure lemma over small spaces, plus operator observations.
pub fn paper_report(opts: &SweepOptions) -> Result<DiscrepancyReport> {
    let mut rows = Vec::new();
    fixture_rows(&mut rows);
    for (id, bound) in [
        (TheoremId::R1_4, 4),
        (TheoremId::R2_4, 4),
        (TheoremId::L1_6, 3),
        (TheoremId::L1_7, 3),
    ] {
        let quiet = SweepOptions {
            timings: false,
            ..*opts
        };
        sweep_rows(&mut rows, &verify_theorem(id, Some(bound), &quiet)?);
    }
    Ok(DiscrepancyReport {
        formalizations: FORMALIZATIONS.iter().map(|s| s.to_string()).collect(),
        rows,
        observations: operator_observations(3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_1_8_lists_agree() {
        let mut rows = Vec::new();
        example_1_8_rows(&mut rows);
        assert_eq!(rows.len(), 5);
        for r in &rows {
            assert_eq!(r.status, Status::Agree, "{r:?}");
        }
    }

    #[test]
    fn classical_operators_have_no_violations() {
        for o in operator_observations(3) {
            if ["cl", "int"].contains(&o.operator) {
                assert_eq!(o.violations, 0, "{o:?}");
            }
        }
    }
}
