use hopfq_core::loops::{
    free_group, integers, octonion_loop16, search_ip_loops, EnumerableQuasigroup, LoopFilter, LoopProperty, Variety,
};
use hopfq_core::mcq::{
    check_variety_dual, coassociativity_probe, export_mcq, function_algebra, parse_mcq, prop_bridges,
    verify_multiplier_axioms, FinSuppElement, GaloisMap, TensorSlice,
};
use hopfq_core::Field;
use proptest::prelude::*;

#[test]
fn t1_closed_form_on_integers() {
    // T1(δ_u ⊗ δ_w) = δ_{u-w} ⊗ δ_w
    let z = integers();
    let k = function_algebra(&z, Field::Rational, 4).unwrap();
    for u in -4..=4i64 {
        for w in -4..=4i64 {
            assert_eq!(k.t_basis(GaloisMap::T1, &u, &w), [u - w, w]);
            assert_eq!(k.t_basis(GaloisMap::T2, &u, &w), [u, w - u]);
            assert_eq!(k.t_basis(GaloisMap::T3, &u, &w), [w, u - w]);
            assert_eq!(k.t_basis(GaloisMap::T4, &u, &w), [w - u, u]);
        }
    }
}

#[test]
fn free_group_t_maps_are_non_commutative() {
    let g = free_group(2);
    let k = function_algebra(&g, Field::Rational, 4).unwrap();
    let a = g.decode("a").unwrap();
    let b = g.decode("b").unwrap();
    // T2(δ_a ⊗ δ_{ab}) = δ_a ⊗ δ_b, T4(δ_b ⊗ δ_{ab}) = δ_a ⊗ δ_b
    let ab = g.mul(&a, &b);
    assert_eq!(k.t_basis(GaloisMap::T2, &a, &ab), [a.clone(), b.clone()]);
    assert_eq!(k.t_basis(GaloisMap::T4, &b, &ab), [a, b]);
}

#[test]
fn order_seven_loop_lifts_its_counterexamples() {
    let q = search_ip_loops(7, &LoopFilter::any().forbid(LoopProperty::Moufang), 8)
        .unwrap()
        .remove(0);
    let k = function_algebra(&q, Field::Rational, 4).unwrap();
    for v in Variety::ALL {
        assert_eq!(check_variety_dual(&k, 4, v).holds, q.check_variety(v).holds, "{v}");
    }
    assert!(!check_variety_dual(&k, 4, Variety::Moufang).holds);
    let b = prop_bridges(&k, 4);
    assert!(b.passed(), "{}", b.render(true));
    assert!(!coassociativity_probe(&k, 4).holds);
    let r = verify_multiplier_axioms(&k, 4, 1);
    assert!(r.passed(), "{}", r.render(true));
}

#[test]
fn octonion_export_round_trips() {
    let o = octonion_loop16();
    let k = function_algebra(&o, Field::Prime(101), 8).unwrap();
    let text = export_mcq(&k, 8);
    let t = parse_mcq(&text).unwrap();
    assert_eq!(t.render(), text);
    assert_eq!(t.entries.len(), 4 * 256);
}

fn element(pairs: &[(i64, i64)]) -> FinSuppElement<i64> {
    let mut a = FinSuppElement::zero(Field::Rational);
    for &(u, c) in pairs {
        a.add_term(u, &Field::Rational.from_i64(c));
    }
    a
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, rng_seed: proptest::test_runner::RngSeed::Fixed(5), ..ProptestConfig::default() })]

    #[test]
    fn t_maps_on_random_integer_elements(
        a in prop::collection::vec((-20i64..=20, -4i64..=4), 0..6),
        b in prop::collection::vec((-20i64..=20, -4i64..=4), 0..6),
    ) {
        let z = integers();
        let k = function_algebra(&z, Field::Rational, 2).unwrap();
        let (a, b) = (element(&a), element(&b));
        for which in GaloisMap::ALL {
            let t = k.t_map(which, &a, &b);
            prop_assert!(t.len() <= a.support_len() * b.support_len());
            prop_assert_eq!(k.t_inverse_slice(which, &t), TensorSlice::pure(&a, &b));
        }
        // (ε̂⊗id)T1(a⊗b) = ab
        let counit = k.t_map(GaloisMap::T1, &a, &b).contract_leg(0, |u| k.counit(&k.delta(u))).into_element();
        prop_assert_eq!(counit, k.mul(&a, &b));
        prop_assert_eq!(k.antipode(&k.antipode(&a)), a.clone());
        prop_assert_eq!(k.antipode(&k.mul(&a, &b)), k.mul(&k.antipode(&a), &k.antipode(&b)));
    }
}

#[test]
fn free_group_counit_laws_on_words_up_to_length_three() {
    let g = free_group(2);
    let k = function_algebra(&g, Field::Rational, 4).unwrap();
    let words: Vec<_> = g.enumerate(53);
    assert!(words.iter().all(|w| w.len() <= 3) && words.last().unwrap().len() == 3);
    let eps = |u: &Vec<i8>| k.counit(&k.delta(u));
    for a in &words {
        for b in &words {
            let ab = k.mul(&k.delta(a), &k.delta(b));
            let left = k
                .t_map(GaloisMap::T1, &k.delta(a), &k.delta(b))
                .contract_leg(0, eps)
                .into_element();
            let right = k
                .t_map(GaloisMap::T2, &k.delta(a), &k.delta(b))
                .contract_leg(1, eps)
                .into_element();
            assert_eq!(left, ab);
            assert_eq!(right, ab);
        }
    }
}
