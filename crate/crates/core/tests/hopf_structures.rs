use hopfq_core::hopf::{
    check_coquasigroup_variety, check_variety, function_coquasigroup, galois_map, group_like_algebra, sweedler,
    verify_axioms, verify_coquasigroup, Direction, GaloisMap, HopfCoquasigroup, HopfQuasigroup, StructureConstants,
};
use hopfq_core::loops::{
    cyclic, octonion_loop16, quaternion8, search_ip_loops, symmetric, FiniteLoop, LoopFilter, LoopProperty, Variety,
};
use hopfq_core::{Element, Field, Scalar, Tensor2};
use proptest::prelude::*;

fn fields() -> [Field; 2] {
    [Field::Rational, Field::Prime(101)]
}

fn corpus() -> Vec<FiniteLoop> {
    vec![cyclic(6), symmetric(3), quaternion8(), octonion_loop16()]
}

#[test]
fn corpus_algebras_satisfy_every_axiom() {
    for f in fields() {
        for q in corpus() {
            let h = group_like_algebra(&q, f).unwrap();
            let r = verify_axioms(&h);
            assert!(r.passed(), "{}", r.render(true));
            let assoc = q.check_property(LoopProperty::Associative).holds;
            assert_eq!(r.holds("associativity probe: (ab)c = a(bc)"), assoc);
        }
    }
}

#[test]
fn octonion_associativity_probe_has_witness() {
    let h = group_like_algebra(&octonion_loop16(), Field::Rational).unwrap();
    let r = verify_axioms(&h);
    let e = r.entry("associativity probe: (ab)c = a(bc)").unwrap();
    assert!(!e.holds);
    let w = e.witness.as_ref().unwrap();
    assert!(w.starts_with("(e"), "{w}");
}

#[test]
fn identity_antipode_breaks_quaternions() {
    let h = group_like_algebra(&quaternion8(), Field::Rational).unwrap();
    let mut parts = h.into_structure().into_parts();
    let f = parts.field;
    parts.antipode = (0..8).map(|i| Element::basis(f, 8, i)).collect();
    let broken = HopfQuasigroup::new(StructureConstants::from_parts_unchecked(parts).unwrap());
    let r = verify_axioms(&broken);
    assert!(!r.passed());
    let e = r.entry("antipode: S(h1)(h2 g) = ε(h)g").unwrap();
    assert!(!e.holds);
    assert_eq!(e.witness.as_deref(), Some("(i, 1)"));
}

#[test]
fn sweedler_algebra_is_a_hopf_quasigroup() {
    let h = sweedler(Field::Rational).unwrap();
    let r = verify_axioms(&h);
    assert!(r.passed(), "{}", r.render(true));
    assert!(r.holds("associativity probe: (ab)c = a(bc)"));
}

#[test]
fn varieties_of_corpus_algebras_match_loops() {
    let mut loops = corpus();
    let ip7 = search_ip_loops(7, &LoopFilter::any().forbid(LoopProperty::Associative), 8).unwrap();
    loops.extend(ip7);
    for q in loops {
        let h = group_like_algebra(&q, Field::Prime(101)).unwrap();
        for v in Variety::ALL {
            let alg = check_variety(&h, v);
            let lp = q.check_variety(v);
            assert_eq!(alg.holds, lp.holds, "{q:?} {v}");
            if v != Variety::Alternative {
                assert_eq!(alg.witness, lp.witness, "{q:?} {v}");
            }
        }
    }
}

#[test]
fn antipode_squares_to_identity_on_group_algebras() {
    for q in corpus() {
        let h = group_like_algebra(&q, Field::Rational).unwrap();
        let s = h.antipode_matrix();
        assert!(s.mul(&s).unwrap().is_identity());
    }
}

#[test]
fn function_algebras_are_coquasigroups() {
    for q in corpus() {
        let a = function_coquasigroup(&q, Field::Rational).unwrap();
        let r = verify_coquasigroup(&a);
        assert!(r.passed(), "{}", r.render(true));
        let assoc = q.check_property(LoopProperty::Associative).holds;
        assert_eq!(r.holds("coassociativity probe: (Δ⊗id)Δ = (id⊗Δ)Δ"), assoc);
        for v in Variety::ALL {
            assert_eq!(check_coquasigroup_variety(&a, v).holds, q.check_variety(v).holds);
        }
    }
}

#[test]
fn transposed_dual_of_group_algebra_is_function_algebra() {
    for q in corpus() {
        let h = group_like_algebra(&q, Field::Prime(101)).unwrap();
        let dual = HopfCoquasigroup::new(h.transpose_dual());
        let func = function_coquasigroup(&q, Field::Prime(101)).unwrap();
        assert_eq!(dual, func);
        let r = verify_coquasigroup(&dual);
        assert!(r.passed(), "{}", r.render(true));
    }
}

#[test]
fn dual_of_sweedler_is_a_coquasigroup() {
    let h = sweedler(Field::Rational).unwrap();
    let r = verify_coquasigroup(&HopfCoquasigroup::new(h.transpose_dual()));
    assert!(r.passed(), "{}", r.render(true));
}

fn random_element(f: Field, dim: usize, coeffs: &[i64]) -> Element {
    let v: Vec<Scalar> = coeffs.iter().take(dim).map(|&c| f.from_i64(c)).collect();
    Element::from_dense(f, &v)
}

fn random_tensor(f: Field, dim: usize, coeffs: &[i64]) -> Tensor2 {
    let mut t = Tensor2::zero(f, dim);
    for (k, &c) in coeffs.iter().enumerate().take(dim * dim) {
        t.add_term([k / dim, k % dim], &f.from_i64(c));
    }
    t
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn galois_round_trips_on_random_tensors(coeffs in prop::collection::vec(-5i64..=5, 64)) {
        let h = group_like_algebra(&quaternion8(), Field::Rational).unwrap();
        let t = random_tensor(Field::Rational, 8, &coeffs);
        for w in GaloisMap::ALL {
            let f = galois_map(&h, w, Direction::Forward, &t);
            prop_assert_eq!(galois_map(&h, w, Direction::Inverse, &f), t.clone());
            let i = galois_map(&h, w, Direction::Inverse, &t);
            prop_assert_eq!(galois_map(&h, w, Direction::Forward, &i), t.clone());
        }
    }

    /// Non-basis probes of the antipode laws, guarding the basis reduction.
    #[test]
    fn antipode_laws_on_random_elements(
        hc in prop::collection::vec(-4i64..=4, 16),
        gc in prop::collection::vec(-4i64..=4, 16),
    ) {
        let f = Field::Prime(101);
        let h = group_like_algebra(&octonion_loop16(), f).unwrap();
        let x = random_element(f, 16, &hc);
        let g = random_element(f, 16, &gc);
        let target = g.scale(&h.counit(&x));
        let d = h.coproduct(&x);
        let mut a = h.zero();
        let mut b = h.zero();
        let mut c = h.zero();
        let mut e = h.zero();
        for ([p, q], k) in d.iter() {
            let (bp, bq) = (h.basis(p), h.basis(q));
            a.add_scaled(&h.mul(&h.antipode(&bp), &h.mul(&bq, &g)), k);
            b.add_scaled(&h.mul(&bp, &h.mul(&h.antipode(&bq), &g)), k);
            c.add_scaled(&h.mul(&h.mul(&g, &h.antipode(&bp)), &bq), k);
            e.add_scaled(&h.mul(&h.mul(&g, &bp), &h.antipode(&bq)), k);
        }
        prop_assert_eq!(&a, &target);
        prop_assert_eq!(&b, &target);
        prop_assert_eq!(&c, &target);
        prop_assert_eq!(&e, &target);
        // Δ and S on non-basis elements
        let xg = h.mul(&x, &g);
        prop_assert_eq!(h.coproduct(&xg), h.mul2(&h.coproduct(&x), &h.coproduct(&g)));
        prop_assert_eq!(h.antipode(&xg), h.mul(&h.antipode(&g), &h.antipode(&x)));
    }

    #[test]
    fn moufang_law_on_random_octonion_elements(
        hc in prop::collection::vec(-3i64..=3, 16),
        gc in prop::collection::vec(-3i64..=3, 16),
        fc in prop::collection::vec(-3i64..=3, 16),
    ) {
        let fld = Field::Rational;
        let h = group_like_algebra(&octonion_loop16(), fld).unwrap();
        let (x, g, f) = (random_element(fld, 16, &hc), random_element(fld, 16, &gc), random_element(fld, 16, &fc));
        let mut lhs = h.zero();
        let mut rhs = h.zero();
        for ([p, q], k) in h.coproduct(&x).iter() {
            let (bp, bq) = (h.basis(p), h.basis(q));
            lhs.add_scaled(&h.mul(&bp, &h.mul(&g, &h.mul(&bq, &f))), k);
            rhs.add_scaled(&h.mul(&h.mul(&h.mul(&bp, &g), &bq), &f), k);
        }
        prop_assert_eq!(lhs, rhs);
    }
}
