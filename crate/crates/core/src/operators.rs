//! Classical derived set classes and the semi- and c*-closure operators.
//!
//! Every test here is evaluated literally from its defining inclusion, and
//! the closure operators are powerset scans. [`crate::profile`] computes the
//! same quantities from cached tables; the two are cross-checked in tests.

use crate::space::{closure, interior, Space};
use crate::subset::Subset;
use crate::tags::KernelClassTag;

pub fn is_regular_open(space: &Space, a: Subset) -> bool {
    interior(space, closure(space, a)) == a
}

pub fn is_semi_open(space: &Space, a: Subset) -> bool {
    a.is_subset_of(closure(space, interior(space, a)))
}

pub fn is_alpha_open(space: &Space, a: Subset) -> bool {
    a.is_subset_of(interior(space, closure(space, interior(space, a))))
}

pub fn is_cstar_open(space: &Space, a: Subset) -> bool {
    interior(space, closure(space, a)).is_subset_of(a) && a.is_subset_of(closure(space, interior(space, a)))
}

/// A union of regular-open sets; finite, so arbitrary and finite unions agree.
pub fn is_pi_open(space: &Space, a: Subset) -> bool {
    let covered = a
        .subsets()
        .filter(|s| is_regular_open(space, *s))
        .fold(space.empty(), Subset::union);
    covered == a
}

pub fn kernel_class(space: &Space, a: Subset, tag: KernelClassTag) -> bool {
    use KernelClassTag::*;
    let (open_form, target) = if tag.is_open_form() {
        (tag, a)
    } else {
        (tag.dual(), a.complement())
    };
    match open_form {
        RegularOpen => is_regular_open(space, target),
        SemiOpen => is_semi_open(space, target),
        AlphaOpen => is_alpha_open(space, target),
        CstarOpen => is_cstar_open(space, target),
        PiOpen => is_pi_open(space, target),
        _ => unreachable!("closed forms are mapped to their duals"),
    }
}

fn meet_of_supersets(space: &Space, a: Subset, mut member: impl FnMut(Subset) -> bool) -> Subset {
    a.supersets()
        .filter(|s| member(*s))
        .fold(space.full(), Subset::intersection)
}

fn join_of_subsets(space: &Space, a: Subset, mut member: impl FnMut(Subset) -> bool) -> Subset {
    a.subsets().filter(|s| member(*s)).fold(space.empty(), Subset::union)
}

/// Intersection of all semi-closed supersets of `a`.
pub fn semi_closure(space: &Space, a: Subset) -> Subset {
    meet_of_supersets(space, a, |s| kernel_class(space, s, KernelClassTag::SemiClosed))
}

/// Union of all semi-open subsets of `a`.
pub fn semi_interior(space: &Space, a: Subset) -> Subset {
    join_of_subsets(space, a, |s| is_semi_open(space, s))
}

/// Intersection of all c*-closed supersets of `a`. c*-closed sets need not
/// be closed under intersection, so the result may fail to be c*-closed.
pub fn cstar_closure(space: &Space, a: Subset) -> Subset {
    meet_of_supersets(space, a, |s| kernel_class(space, s, KernelClassTag::CstarClosed))
}

/// Union of all c*-open subsets of `a`.
pub fn cstar_interior(space: &Space, a: Subset) -> Subset {
    join_of_subsets(space, a, |s| is_cstar_open(space, s))
}
