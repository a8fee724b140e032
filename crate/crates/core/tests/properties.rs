use std::sync::OnceLock;

use proptest::prelude::*;
use topolab::lab::{canonical_form, check_implication, spaces_up_to, SearchQuery, SweepOptions};
use topolab::space::{closure, interior};
use topolab::{FiniteMap, GenClassTag, Space, SpaceProfile, Subset};

fn spaces() -> &'static [Space] {
    static S: OnceLock<Vec<Space>> = OnceLock::new();
    S.get_or_init(|| spaces_up_to(4))
}

fn space() -> impl Strategy<Value = Space> {
    (0..spaces().len()).prop_map(|i| spaces()[i].clone())
}

fn space_and_set() -> impl Strategy<Value = (Space, Subset)> {
    space().prop_flat_map(|s| {
        let n = s.n();
        (Just(s), 0u32..1 << n).prop_map(move |(s, b)| (s, Subset::from_bits(n, b).unwrap()))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

const SPACE_TAGS: &[&str] = &["regular", "scstar-regular", "almost-regular", "scstar-t1", "weakly-regular"];
const SET_TAGS: &[&str] = &["closed", "g-closed", "gscstar-closed", "rg-closed", "semi-open", "pi-open"];
const MAP_TAGS: &[&str] = &["continuous", "scstar-irresolute", "gscstar-closed-map", "surjective"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_relabeling(
        (s, perm) in space().prop_flat_map(|s| { let n = s.n(); (Just(s), permutation(n)) })
    ) {
        prop_assert_eq!(canonical_form(&s.permute(&perm)), canonical_form(&s));
    }

    #[test]
    fn cached_operators_match_direct((s, a) in space_and_set()) {
        let p = SpaceProfile::new(&s);
        prop_assert_eq!(p.closure(a), closure(&s, a));
        prop_assert_eq!(p.interior(a), interior(&s, a));
    }

    #[test]
    fn every_subset_is_scstar_closed((s, a) in space_and_set()) {
        let p = SpaceProfile::new(&s);
        prop_assert!(p.gen_class(a, GenClassTag::ScstarClosed));
        prop_assert_eq!(p.scstar_closure(a), a);
    }

    #[test]
    fn closure_and_interior_are_dual((s, a) in space_and_set()) {
        let p = SpaceProfile::new(&s);
        prop_assert_eq!(p.closure(a), p.interior(a.complement()).complement());
        prop_assert_eq!(p.semi_closure(a), p.semi_interior(a.complement()).complement());
    }

    #[test]
    fn relabeled_spaces_round_trip(
        (s, perm) in space().prop_flat_map(|s| { let n = s.n(); (Just(s), permutation(n)) })
    ) {
        let t = s.permute(&perm);
        prop_assert_eq!(Space::from_json(&t.to_json("x")).unwrap(), t);
    }

    #[test]
    fn composition_preimage(
        (x, y, fa, ga) in (space(), space()).prop_flat_map(|(x, y)| {
            let (n, m) = (x.n(), y.n());
            (Just(x), Just(y), prop::collection::vec(0..m, n), prop::collection::vec(0..m, m))
        }),
        b in 0u32..16,
    ) {
        let f = FiniteMap::from_assignment(x.clone(), y.clone(), fa).unwrap();
        let g = FiniteMap::from_assignment(y.clone(), y.clone(), ga).unwrap();
        let h = f.then(&g).unwrap();
        let b = Subset::from_bits(y.n(), b & ((1 << y.n()) - 1)).unwrap();
        prop_assert_eq!(h.preimage(b), f.preimage(g.preimage(b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn self_implication_is_verified(
        (tag, bound) in prop_oneof![
            prop::sample::select(SPACE_TAGS).prop_map(|t| (t, 3usize)),
            prop::sample::select(SET_TAGS).prop_map(|t| (t, 3usize)),
            prop::sample::select(MAP_TAGS).prop_map(|t| (t, 2usize)),
        ]
    ) {
        let q = SearchQuery::parse(tag, tag, bound).unwrap();
        let r = check_implication(&q, &SweepOptions::default()).unwrap();
        prop_assert!(r.is_verified(), "{}", tag);
    }
}
