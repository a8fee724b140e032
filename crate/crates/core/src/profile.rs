//! Cached per-space tables for every operator and set class.
//!
//! Sweeps evaluate thousands of predicates on the same space, so a profile
//! computes each closure operator and class membership once, for every
//! subset, using superset/subset sweeps over the powerset. The literal scans
//! in [`crate::operators`] and [`crate::gen_sets`] are the reference these
//! tables are tested against.

use crate::family::Family;
use crate::space::Space;
use crate::subset::Subset;
use crate::tags::{GenClassTag, KernelClassTag};

#[derive(Clone, Debug)]
pub struct SpaceProfile {
    space: Space,
    cl: Vec<u16>,
    int: Vec<u16>,
    min_open: Vec<u16>,
    closed: Family,
    regular_open: Family,
    semi_open: Family,
    alpha_open: Family,
    cstar_open: Family,
    pi_open: Family,
    semi_cl: Vec<u16>,
    semi_int: Vec<u16>,
    cstar_cl: Vec<u16>,
    cstar_int: Vec<u16>,
    scstar_closed: Family,
    scstar_open: Family,
    scstar_cl: Vec<u16>,
    scstar_int: Vec<u16>,
    g_closed: Family,
    rg_closed: Family,
    gscstar_closed: Family,
    scstarg_closed: Family,
    scstar_open_join: Vec<u16>,
    open_join: Vec<u16>,
}

impl SpaceProfile {
    pub fn new(space: &Space) -> SpaceProfile {
        let n = space.n();
        let size = 1usize << n;
        let open = space.open_family();
        let closed = open.dual();
        let cl = closed.meet_above();
        let int = open.join_below();
        let min_open = open.meet_above();
        let clo = |a: Subset| Subset::raw(n, cl[a.index()] as u32);
        let inr = |a: Subset| Subset::raw(n, int[a.index()] as u32);

        let regular_open = Family::from_predicate(n, |a| inr(clo(a)) == a);
        let semi_open = Family::from_predicate(n, |a| a.is_subset_of(clo(inr(a))));
        let alpha_open = Family::from_predicate(n, |a| a.is_subset_of(inr(clo(inr(a)))));
        let cstar_open =
            Family::from_predicate(n, |a| inr(clo(a)).is_subset_of(a) && a.is_subset_of(clo(inr(a))));
        let ro_join = regular_open.join_below();
        let pi_open = Family::from_predicate(n, |a| ro_join[a.index()] as u32 == a.bits());

        let semi_cl = semi_open.dual().meet_above();
        let semi_int = semi_open.join_below();
        let cstar_cl = cstar_open.dual().meet_above();
        let cstar_int = cstar_open.join_below();

        let cstar_open_meet = cstar_open.meet_above();
        let scstar_closed = Family::from_predicate(n, |a| {
            semi_cl[a.index()] & !cstar_open_meet[a.index()] == 0
        });
        let scstar_open = scstar_closed.dual();
        let scstar_cl = scstar_closed.meet_above();
        let scstar_int = scstar_open.join_below();

        let ro_meet = regular_open.meet_above();
        let scstar_open_meet = scstar_open.meet_above();
        let inside = |x: u16, y: u16| x & !y == 0;
        let g_closed = Family::from_predicate(n, |a| inside(cl[a.index()], min_open[a.index()]));
        let rg_closed = Family::from_predicate(n, |a| inside(cl[a.index()], ro_meet[a.index()]));
        let gscstar_closed =
            Family::from_predicate(n, |a| inside(scstar_cl[a.index()], min_open[a.index()]));
        let scstarg_closed =
            Family::from_predicate(n, |a| inside(scstar_cl[a.index()], scstar_open_meet[a.index()]));

        debug_assert_eq!(cl.len(), size);
        SpaceProfile {
            space: space.clone(),
            scstar_open_join: scstar_open.join_below(),
            open_join: int.clone(),
            cl,
            int,
            min_open,
            closed,
            regular_open,
            semi_open,
            alpha_open,
            cstar_open,
            pi_open,
            semi_cl,
            semi_int,
            cstar_cl,
            cstar_int,
            scstar_closed,
            scstar_open,
            scstar_cl,
            scstar_int,
            g_closed,
            rg_closed,
            gscstar_closed,
            scstarg_closed,
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn full(&self) -> Subset {
        self.space.full()
    }

    pub fn empty(&self) -> Subset {
        self.space.empty()
    }

    #[inline]
    fn at(&self, table: &[u16], a: Subset) -> Subset {
        Subset::raw(self.n(), table[a.index()] as u32)
    }

    pub fn closure(&self, a: Subset) -> Subset {
        self.at(&self.cl, a)
    }

    pub fn interior(&self, a: Subset) -> Subset {
        self.at(&self.int, a)
    }

    pub fn min_open(&self, a: Subset) -> Subset {
        self.at(&self.min_open, a)
    }

    pub fn semi_closure(&self, a: Subset) -> Subset {
        self.at(&self.semi_cl, a)
    }

    pub fn semi_interior(&self, a: Subset) -> Subset {
        self.at(&self.semi_int, a)
    }

    pub fn cstar_closure(&self, a: Subset) -> Subset {
        self.at(&self.cstar_cl, a)
    }

    pub fn cstar_interior(&self, a: Subset) -> Subset {
        self.at(&self.cstar_int, a)
    }

    pub fn scstar_closure(&self, a: Subset) -> Subset {
        self.at(&self.scstar_cl, a)
    }

    pub fn scstar_interior(&self, a: Subset) -> Subset {
        self.at(&self.scstar_int, a)
    }

    /// Union of the SC*-open sets inside `a`; a point lies in it iff `a`
    /// is an SC*-neighbourhood of that point.
    pub fn scstar_open_join(&self, a: Subset) -> Subset {
        self.at(&self.scstar_open_join, a)
    }

    pub fn open_join(&self, a: Subset) -> Subset {
        self.at(&self.open_join, a)
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.space.is_open(a)
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.closed.contains(a)
    }

    pub fn open_family(&self) -> &Family {
        self.space.open_family()
    }

    pub fn closed_family(&self) -> &Family {
        &self.closed
    }

    pub fn kernel_family(&self, tag: KernelClassTag) -> Family {
        use KernelClassTag::*;
        match tag {
            RegularOpen => self.regular_open.clone(),
            SemiOpen => self.semi_open.clone(),
            AlphaOpen => self.alpha_open.clone(),
            CstarOpen => self.cstar_open.clone(),
            PiOpen => self.pi_open.clone(),
            closed => self.kernel_family(closed.dual()).dual(),
        }
    }

    pub fn kernel_class(&self, a: Subset, tag: KernelClassTag) -> bool {
        use KernelClassTag::*;
        let (fam, target) = match tag {
            RegularOpen => (&self.regular_open, a),
            RegularClosed => (&self.regular_open, a.complement()),
            SemiOpen => (&self.semi_open, a),
            SemiClosed => (&self.semi_open, a.complement()),
            AlphaOpen => (&self.alpha_open, a),
            AlphaClosed => (&self.alpha_open, a.complement()),
            CstarOpen => (&self.cstar_open, a),
            CstarClosed => (&self.cstar_open, a.complement()),
            PiOpen => (&self.pi_open, a),
            PiClosed => (&self.pi_open, a.complement()),
        };
        fam.contains(target)
    }

    pub fn gen_class(&self, a: Subset, tag: GenClassTag) -> bool {
        use GenClassTag::*;
        let (fam, target) = match tag {
            ScstarClosed => (&self.scstar_closed, a),
            ScstarOpen => (&self.scstar_closed, a.complement()),
            GClosed => (&self.g_closed, a),
            GOpen => (&self.g_closed, a.complement()),
            RgClosed => (&self.rg_closed, a),
            RgOpen => (&self.rg_closed, a.complement()),
            GscstarClosed => (&self.gscstar_closed, a),
            GscstarOpen => (&self.gscstar_closed, a.complement()),
            ScstargClosed => (&self.scstarg_closed, a),
            ScstargOpen => (&self.scstarg_closed, a.complement()),
        };
        fam.contains(target)
    }

    pub fn gen_family(&self, tag: GenClassTag) -> Family {
        Family::from_predicate(self.n(), |a| self.gen_class(a, tag))
    }

    pub fn regular_open_family(&self) -> &Family {
        &self.regular_open
    }

    pub fn scstar_open_family(&self) -> &Family {
        &self.scstar_open
    }

    pub fn scstar_closed_family(&self) -> &Family {
        &self.scstar_closed
    }

    pub fn is_scstar_open(&self, a: Subset) -> bool {
        self.scstar_open.contains(a)
    }

    pub fn is_scstar_closed(&self, a: Subset) -> bool {
        self.scstar_closed.contains(a)
    }

    pub fn is_gscstar_closed(&self, a: Subset) -> bool {
        self.gscstar_closed.contains(a)
    }

    pub fn is_gscstar_open(&self, a: Subset) -> bool {
        self.gscstar_closed.contains(a.complement())
    }

    pub fn is_regular_open(&self, a: Subset) -> bool {
        self.regular_open.contains(a)
    }

    pub fn is_regular_closed(&self, a: Subset) -> bool {
        self.regular_open.contains(a.complement())
    }

    pub fn subsets(&self) -> impl Iterator<Item = Subset> + Clone {
        Subset::all(self.n())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::enumerate::spaces_up_to;
    use crate::{gen_sets, operators, space};

    #[test]
    fn tables_agree_with_literal_scans() {
        for s in spaces_up_to(3) {
            let p = SpaceProfile::new(&s);
            for a in Subset::all(s.n()) {
                assert_eq!(p.closure(a), space::closure(&s, a));
                assert_eq!(p.interior(a), space::interior(&s, a));
                assert_eq!(p.min_open(a), space::min_open(&s, a));
                assert_eq!(p.semi_closure(a), operators::semi_closure(&s, a));
                assert_eq!(p.semi_interior(a), operators::semi_interior(&s, a));
                assert_eq!(p.cstar_closure(a), operators::cstar_closure(&s, a));
                assert_eq!(p.cstar_interior(a), operators::cstar_interior(&s, a));
                assert_eq!(p.scstar_closure(a), gen_sets::scstar_closure(&s, a));
                assert_eq!(p.scstar_interior(a), gen_sets::scstar_interior(&s, a));
                for &t in KernelClassTag::ALL {
                    assert_eq!(p.kernel_class(a, t), operators::kernel_class(&s, a, t), "{t} {a}");
                }
                for &t in GenClassTag::ALL {
                    assert_eq!(p.gen_class(a, t), gen_sets::generalized_class(&s, a, t), "{t} {a}");
                }
            }
        }
    }

    #[test]
    fn tables_agree_on_sampled_four_point_spaces() {
        for s in spaces_up_to(4).into_iter().step_by(7) {
            let p = SpaceProfile::new(&s);
            for a in Subset::all(s.n()) {
                for &t in GenClassTag::ALL {
                    assert_eq!(p.gen_class(a, t), gen_sets::generalized_class(&s, a, t));
                }
            }
        }
    }
}
