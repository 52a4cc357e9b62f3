use std::cmp::Ordering;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rootmat_core::incidence::{build_incidence, restrict_to_ground};
use rootmat_core::roots::canonical;
use rootmat_core::{
    automorphism_group, ColoredGraph, LinearMatroid, Perm, PermGroup, QuadExt, Rational,
    RootSystem, Scalar,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn quad() -> impl Strategy<Value = QuadExt> {
    (rational(), rational()).prop_map(|(a, b)| QuadExt::new(a, b))
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quad_field_axioms(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, QuadExt::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), QuadExt::one());
        } else {
            prop_assert!(x.inv().is_err());
        }
    }

    #[test]
    fn galois_is_a_ring_homomorphism(x in quad(), y in quad()) {
        prop_assert_eq!((&x + &y).galois(), &x.galois() + &y.galois());
        prop_assert_eq!((&x * &y).galois(), &x.galois() * &y.galois());
        prop_assert_eq!(x.galois().galois(), x.clone());
        prop_assert_eq!(QuadExt::new(x.norm(), Rational::zero()), &x * &x.galois());
    }

    #[test]
    fn quad_order_is_a_field_order(x in quad(), y in quad(), z in quad()) {
        if x < y {
            prop_assert!(&x + &z < &y + &z);
            if z.signum() == Ordering::Greater {
                prop_assert!(&x * &z < &y * &z);
            }
        }
        prop_assert_eq!(x.cmp(&y), (&x - &y).signum());
    }

    #[test]
    fn scalar_text_round_trip(x in quad(), r in rational()) {
        prop_assert_eq!(x.to_string().parse::<QuadExt>().unwrap(), x);
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn canonical_is_idempotent(v in prop::collection::vec(rational(), 1..6)) {
        let once = canonical(v.clone());
        prop_assert_eq!(canonical(once.clone()), once.clone());
        let negated: Vec<Rational> = v.iter().map(|x| -x.clone()).collect();
        prop_assert_eq!(canonical(negated), once);
    }

    #[test]
    fn perm_group_laws(p in perm(9), q in perm(9), r in perm(9)) {
        prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert_eq!(Perm::parse_cycles(9, &p.to_string()).unwrap(), p.clone());
        for x in 0..9 {
            prop_assert_eq!(p.then(&q).apply(x), q.apply(p.apply(x)));
        }
    }

    #[test]
    fn random_words_are_members(word in prop::collection::vec(0usize..3, 0..40)) {
        let gens = [
            Perm::from_cycles(8, &[&[0, 1, 2, 3]]).unwrap(),
            Perm::from_cycles(8, &[&[0, 2]]).unwrap(),
            Perm::from_cycles(8, &[&[4, 5, 6]]).unwrap(),
        ];
        let g = PermGroup::from_generators(8, &gens).unwrap();
        let w = word.iter().fold(Perm::identity(8), |acc, &i| acc.then(&gens[i]));
        prop_assert!(g.contains(&w).unwrap());
        // D4 x C3 on disjoint supports
        prop_assert_eq!(g.order(), BigUint::from(24u32));
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).product()
}

#[test]
fn symmetric_group_orders() {
    for n in 2..=8usize {
        let cycle: Vec<usize> = (0..n).collect();
        let gens = [
            Perm::from_cycles(n, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(n, &[&cycle]).unwrap(),
        ];
        assert_eq!(
            PermGroup::from_generators(n, &gens).unwrap().order(),
            factorial(n as u64)
        );
    }
}

#[test]
fn orders_multiply_over_disjoint_supports() {
    let sym = |offset: usize, k: usize, degree: usize| -> Vec<Perm> {
        let cycle: Vec<usize> = (offset..offset + k).collect();
        vec![
            Perm::from_cycles(degree, &[&[offset, offset + 1]]).unwrap(),
            Perm::from_cycles(degree, &[&cycle]).unwrap(),
        ]
    };
    let mut gens = sym(0, 3, 8);
    gens.extend(sym(3, 5, 8));
    let g = PermGroup::from_generators(8, &gens).unwrap();
    assert_eq!(g.order(), factorial(3) * factorial(5));
}

fn c3_graph(id: &str) -> (ColoredGraph, usize, Vec<Vec<usize>>) {
    let m = LinearMatroid::from_system(&id.parse::<RootSystem>().unwrap());
    let sets: Vec<Vec<usize>> = m
        .circuits3()
        .iter()
        .map(|c| c.elements().to_vec())
        .collect();
    (
        build_incidence(m.ground_size(), &sets).unwrap(),
        m.ground_size(),
        sets,
    )
}

#[test]
fn automorphisms_are_equivariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for id in ["A4", "B3", "D4", "H3", "I2_5"] {
        let (g, _, _) = c3_graph(id);
        let base = automorphism_group(&g, u64::MAX).unwrap();
        for _ in 0..4 {
            let mut images: Vec<usize> = (0..g.num_vertices()).collect();
            images.shuffle(&mut rng);
            let sigma = Perm::from_images(images).unwrap();
            let h = g.relabeled(&sigma);
            let found = automorphism_group(&h, u64::MAX).unwrap();
            assert_eq!(found.order, base.order, "{id}");
            let inv = sigma.inverse();
            for p in &found.generators {
                assert!(h.is_automorphism(p));
                assert!(g.is_automorphism(&p.conjugate_by(&inv)));
            }
        }
    }
}

#[test]
fn restricted_automorphisms_preserve_the_set_family() {
    for id in ["A4", "B3", "F4", "H3"] {
        let (g, n, sets) = c3_graph(id);
        let mut sorted: Vec<Vec<usize>> = sets.clone();
        sorted.sort();
        for p in automorphism_group(&g, u64::MAX).unwrap().generators {
            let q = restrict_to_ground(&p, n).unwrap();
            let mut images: Vec<Vec<usize>> = sets
                .iter()
                .map(|s| {
                    let mut t: Vec<usize> = s.iter().map(|&x| q.apply(x)).collect();
                    t.sort_unstable();
                    t
                })
                .collect();
            images.sort();
            assert_eq!(images, sorted, "{id}");
        }
    }
}

#[test]
fn order3_circuits_are_closed_under_known_symmetries() {
    for id in ["A5", "B4", "D4", "D5", "F4", "H3", "H4", "E6"] {
        let s: RootSystem = id.parse().unwrap();
        let m = LinearMatroid::from_system(&s);
        let c3: std::collections::BTreeSet<Vec<usize>> = m
            .circuits3()
            .iter()
            .map(|c| c.elements().to_vec())
            .collect();
        for g in s.known_group_generators().unwrap() {
            for c in &c3 {
                let mut img: Vec<usize> = c.iter().map(|&x| g.apply(x)).collect();
                img.sort_unstable();
                assert!(c3.contains(&img), "{id}: {g} moves {c:?} off C3");
            }
        }
    }
}

#[test]
fn known_groups_have_the_tabulated_orders() {
    for (id, order) in [
        ("A3", 24u64),
        ("B3", 24),
        ("B5", 1920),
        ("D4", 576),
        ("D6", 23040),
        ("Dp4", 576),
        ("F4", 1152),
        ("H3", 120),
        ("H4", 14400),
        ("E6", 51840),
        ("E8", 348_364_800),
    ] {
        let s: RootSystem = id.parse().unwrap();
        let k = PermGroup::from_generators(s.num_lines(), &s.known_group_generators().unwrap())
            .unwrap();
        assert_eq!(k.order(), BigUint::from(order), "{id}");
    }
}
