use proptest::prelude::*;

use gerbe_core::algebra::enumerate_homs;
use gerbe_core::cohomology::{coboundary, cohomology_group};
use gerbe_core::descent::{isomorphic, transform, validate_datum, Target};
use gerbe_core::monodromy::{giraud_h2, h1_nonabelian};
use gerbe_core::verify::fixture_groups;
use gerbe_core::xmod::gr_cat_from_two_type;
use gerbe_core::{Caps, Cochain, GroupTable, PModule, Presentation, SourceGroup, TwoType};

fn small_groups() -> Vec<GroupTable> {
    fixture_groups().into_iter().map(|(_, g)| g).filter(|g| g.order() <= 6).collect()
}

/// Trivial `Z/m`, or `Z/m` with the sign action through an index-2 subgroup
/// when `P` has one among its cyclic-quotient homs.
fn module(p: &GroupTable, m: u64, signed: bool) -> PModule {
    if signed {
        let homs = enumerate_homs(&SourceGroup::Table(p.clone()), &GroupTable::cyclic(2), &Caps::default()).unwrap();
        if let Some(h) = homs.iter().find(|h| !h.is_trivial()) {
            let mats: Vec<Vec<Vec<i64>>> = h.images.iter().map(|&s| vec![vec![if s == 0 { 1 } else { -1 }]]).collect();
            return PModule::new(p, vec![m], &mats).unwrap();
        }
    }
    PModule::trivial(p.order(), vec![m]).unwrap()
}

fn random_cochain(p: &GroupTable, a: &PModule, n: usize, seed: &[u64]) -> Cochain {
    let mut c = Cochain::zero(p.order(), a, n);
    for i in 0..c.len() {
        let v = a.reduce(&[seed[i % seed.len()] as i64 + i as i64 * seed[0] as i64]);
        c.set_index(i, &v);
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coboundary_squares_to_zero(gi in 0usize..8, m in 2u64..7, signed: bool, n in 0usize..3, seed in prop::collection::vec(0u64..100, 1..8)) {
        let groups = small_groups();
        let p = &groups[gi % groups.len()];
        let a = module(p, m, signed);
        let c = random_cochain(p, &a, n, &seed);
        prop_assert!(coboundary(p, &a, &coboundary(p, &a, &c)).is_zero());
    }

    #[test]
    fn classify_ignores_coboundaries(gi in 0usize..8, m in 2u64..5, signed: bool, n in 1usize..3, coords in prop::collection::vec(0u64..12, 0..4), seed in prop::collection::vec(0u64..100, 1..8)) {
        let groups = small_groups();
        let p = &groups[gi % groups.len()];
        let a = module(p, m, signed);
        let h = cohomology_group(p, &a, n, &Caps::default()).unwrap();
        let want: Vec<u64> = h.invariant_factors().iter().zip(coords.iter().chain(std::iter::repeat(&0))).map(|(&d, &x)| x % d).collect();
        let b = random_cochain(p, &a, n - 1, &seed);
        let z = h.element(&want).add(&coboundary(p, &a, &b));
        prop_assert_eq!(h.classify(&z).unwrap(), want);
    }

    #[test]
    fn h1_of_cyclic_counts_classes_of_torsion(n in 1usize..9, gi in 0usize..16) {
        let groups: Vec<GroupTable> = fixture_groups().into_iter().map(|(_, g)| g).collect();
        let g = &groups[gi % groups.len()];
        let src = SourceGroup::Presentation(Presentation::cyclic(n));
        let h = h1_nonabelian(&src, g, &Caps::default()).unwrap();
        let want = g.conjugacy_classes().iter().filter(|c| n % g.element_order(c[0]) == 0).count();
        prop_assert_eq!(h.len(), want);
    }

    #[test]
    fn simplify_preserves_hom_counts(gens in 1usize..4, rels in prop::collection::vec(prop::collection::vec(prop_oneof![1i32..4, -3i32..0], 1..6), 0..4)) {
        let rels: Vec<Vec<i32>> = rels.into_iter().map(|w| w.into_iter().map(|l| {
            let k = (l.unsigned_abs() as usize - 1) % gens + 1;
            if l > 0 { k as i32 } else { -(k as i32) }
        }).collect()).collect();
        let p = Presentation::new(gens, rels).unwrap();
        let q = p.simplify();
        for g in [GroupTable::symmetric(3), GroupTable::cyclic(4), GroupTable::quaternion()] {
            let a = enumerate_homs(&SourceGroup::Presentation(p.clone()), &g, &Caps::default()).unwrap().len();
            let b = enumerate_homs(&SourceGroup::Presentation(q.clone()), &g, &Caps::default()).unwrap().len();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn transformations_preserve_validity(pick in 0usize..16, theta in prop::collection::vec(0usize..6, 2), k: bool) {
        let z2 = GroupTable::cyclic(2);
        let a = PModule::trivial(2, vec![2]).unwrap();
        let mut kc = Cochain::zero(2, &a, 3);
        if k {
            kc.set(&[1, 1, 1], &[1]);
        }
        let t = TwoType::new(z2, a, kc).unwrap();
        let s3 = GroupTable::symmetric(3);
        let caps = Caps::default();
        let r = giraud_h2(&t, &s3, &caps).unwrap();
        let h = gr_cat_from_two_type(&t);
        let target = Target::adjoint(&s3, &caps).unwrap();
        let d = &r.middle.elements[pick % r.middle.len()];
        let theta = vec![0, theta[1]];
        let e = transform(&h, &target, d, &theta);
        prop_assert!(validate_datum(&h, &target, &e).is_ok());
        let back = isomorphic(&h, &target, d, &e, &caps).unwrap();
        prop_assert!(back.is_some());
        prop_assert_eq!(r.class_of(&e), r.class_of(d));
    }
}
