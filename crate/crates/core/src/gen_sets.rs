//! SC*-closed sets, the SC*-closure, and the generalized closed classes
//! (g-, rg-, gSC*-, SC*g-closed), each evaluated as a literal quantified
//! test. Also monitors the SC*-closure lemmas on a given space.

use crate::operators::{is_cstar_open, is_regular_open, semi_closure};
use crate::profile::SpaceProfile;
use crate::space::{closure, Space};
use crate::subset::Subset;
use crate::tags::GenClassTag;
use serde::Serialize;

/// `s-cl(A) ⊆ U` for every c*-open `U ⊇ A`.
pub fn is_scstar_closed(space: &Space, a: Subset) -> bool {
    let scl = semi_closure(space, a);
    a.supersets()
        .filter(|u| is_cstar_open(space, *u))
        .all(|u| scl.is_subset_of(u))
}

pub fn is_scstar_open(space: &Space, a: Subset) -> bool {
    is_scstar_closed(space, a.complement())
}

/// Intersection of every SC*-closed superset of `a`.
pub fn scstar_closure(space: &Space, a: Subset) -> Subset {
    a.supersets()
        .filter(|s| is_scstar_closed(space, *s))
        .fold(space.full(), Subset::intersection)
}

/// Union of every SC*-open subset of `a`.
pub fn scstar_interior(space: &Space, a: Subset) -> Subset {
    a.subsets()
        .filter(|s| is_scstar_open(space, *s))
        .fold(space.empty(), Subset::union)
}

/// All SC*-open sets in canonical order.
pub fn scstar_open_family(space: &Space) -> Vec<Subset> {
    Subset::all(space.n())
        .filter(|s| is_scstar_open(space, *s))
        .collect()
}

pub fn generalized_class(space: &Space, a: Subset, tag: GenClassTag) -> bool {
    use GenClassTag::*;
    if !tag.is_closed_form() {
        return generalized_class(space, a.complement(), tag.dual());
    }
    let holds_for = |hull: Subset, guard: &dyn Fn(Subset) -> bool| {
        a.supersets().filter(|u| guard(*u)).all(|u| hull.is_subset_of(u))
    };
    match tag {
        ScstarClosed => is_scstar_closed(space, a),
        GClosed => holds_for(closure(space, a), &|u| space.is_open(u)),
        RgClosed => holds_for(closure(space, a), &|u| is_regular_open(space, u)),
        GscstarClosed => holds_for(scstar_closure(space, a), &|u| space.is_open(u)),
        ScstargClosed => holds_for(scstar_closure(space, a), &|u| is_scstar_open(space, u)),
        _ => unreachable!("open forms are mapped to their duals"),
    }
}

/// One failed instance of a monitored lemma clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: &'static str,
    pub set: Subset,
    pub witness: Subset,
}

/// Clauses (i) to (v) of the SC*-closure lemma over every subset `J`:
/// point characterization, fixpoint characterization, monotonicity,
/// idempotence, and SC*-closedness of the closure.
pub fn lemma_1_6_violations(p: &SpaceProfile) -> Vec<Violation> {
    let mut out = Vec::new();
    let scstar_opens: Vec<Subset> = p.scstar_open_family().to_vec();
    for j in p.subsets() {
        let cl = p.scstar_closure(j);
        for x in 0..p.n() {
            let every_nbhd_meets = scstar_opens.iter().filter(|u| u.contains(x)).all(|u| u.meets(j));
            if cl.contains(x) != every_nbhd_meets {
                out.push(Violation { clause: "i", set: j, witness: Subset::singleton(p.n(), x) });
            }
        }
        if p.is_scstar_closed(j) != (j == cl) {
            out.push(Violation { clause: "ii", set: j, witness: cl });
        }
        for i in j.supersets() {
            if !cl.is_subset_of(p.scstar_closure(i)) {
                out.push(Violation { clause: "iii", set: j, witness: i });
            }
        }
        if p.scstar_closure(cl) != cl {
            out.push(Violation { clause: "iv", set: j, witness: cl });
        }
        if !p.is_scstar_closed(cl) {
            out.push(Violation { clause: "v", set: j, witness: cl });
        }
    }
    out
}

/// `J` is gSC*-open iff every closed `F ⊆ J` lies in `SC*-int(J)`.
pub fn lemma_1_7_violations(p: &SpaceProfile) -> Vec<Violation> {
    let mut out = Vec::new();
    for j in p.subsets() {
        let sint = p.scstar_interior(j);
        let bad_f = j.subsets().find(|f| p.is_closed(*f) && !f.is_subset_of(sint));
        let left = p.is_gscstar_open(j);
        match (left, bad_f) {
            (true, Some(f)) => out.push(Violation { clause: "forward", set: j, witness: f }),
            (false, None) => out.push(Violation { clause: "backward", set: j, witness: sint }),
            _ => {}
        }
    }
    out
}

pub fn lemma_1_6_check(space: &Space) -> Vec<Violation> {
    lemma_1_6_violations(&SpaceProfile::new(space))
}

pub fn lemma_1_7_check(space: &Space) -> Vec<Violation> {
    lemma_1_7_violations(&SpaceProfile::new(space))
}
