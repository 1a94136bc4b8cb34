//! Hopf coquasigroup axioms and the dual variety laws, checked on basis
//! elements (each law is linear in `a`).

use super::axioms::{first_pair, first_single, first_triple, names, record};
use super::{HopfCoquasigroup, StructureConstants};
use crate::loops::{PropertyOutcome, Variety};
use crate::report::Report;
use crate::tensor::{Element, Tensor2, Tensor3};

/// `(Δ⊗id)Δ(b_i)` with legs `[a11, a12, a2]`.
fn delta_left(h: &StructureConstants, i: usize) -> Tensor3 {
    h.coproduct_on_leg(h.coproduct_basis(i), 0)
}

/// `(id⊗Δ)Δ(b_i)` with legs `[a1, a21, a22]`.
fn delta_right(h: &StructureConstants, i: usize) -> Tensor3 {
    h.coproduct_on_leg(h.coproduct_basis(i), 1)
}

/// `Σ x z ⊗ y` over `x ⊗ y ⊗ z`.
fn multiply_outer(h: &StructureConstants, t: &Tensor3) -> Tensor2 {
    let mut out = h.zero2();
    for ([x, y, z], c) in t.iter() {
        for (p, v) in h.product_basis(x, z).iter() {
            out.add_term([p, y], &(c * v));
        }
    }
    out
}

pub fn verify_coquasigroup(a: &HopfCoquasigroup) -> Report {
    let h = a.structure();
    let n = h.dim();
    let mut r = Report::new("Hopf coquasigroup axioms");
    let b: Vec<Element> = (0..n).map(|i| h.basis(i)).collect();
    let s: Vec<Element> = (0..n).map(|i| h.antipode(&b[i])).collect();
    let one = h.unit();

    record(
        &mut r,
        h,
        "product associative: (ab)c = a(bc)",
        first_triple(n, |x, y, z| {
            h.mul(h.product_basis(x, y), &b[z]) == h.mul(&b[x], h.product_basis(y, z))
        }),
    );
    record(
        &mut r,
        h,
        "unit: 1a = a = a1",
        first_single(n, |i| h.mul(one, &b[i]) == b[i] && h.mul(&b[i], one) == b[i]),
    );
    record(
        &mut r,
        h,
        "counit: (ε⊗id)Δ(a) = a = (id⊗ε)Δ(a)",
        first_single(n, |i| {
            let d = h.coproduct_basis(i);
            d.contract_left(&h.counit) == b[i] && d.contract_right(&h.counit) == b[i]
        }),
    );
    record(
        &mut r,
        h,
        "Δ multiplicative: Δ(ab) = Δ(a)Δ(b)",
        first_pair(n, |x, y| {
            h.coproduct(h.product_basis(x, y)) == h.mul2(h.coproduct_basis(x), h.coproduct_basis(y))
        }),
    );
    record(
        &mut r,
        h,
        "Δ unital: Δ(1) = 1 ⊗ 1",
        first_single(1, |_| h.coproduct(one) == Tensor2::outer(one, one)),
    );
    record(
        &mut r,
        h,
        "ε multiplicative: ε(ab) = ε(a)ε(b)",
        first_pair(n, |x, y| {
            h.counit(h.product_basis(x, y)) == h.counit_basis(x) * h.counit_basis(y)
        }),
    );
    record(
        &mut r,
        h,
        "ε unital: ε(1) = 1",
        first_single(1, |_| h.counit(one).is_one()),
    );

    record(
        &mut r,
        h,
        "S(a1)a21 ⊗ a22 = 1 ⊗ a",
        first_single(n, |i| {
            h.multiply_adjacent(&h.antipode_on_leg(&delta_right(h, i), 0), 0) == Tensor2::outer(one, &b[i])
        }),
    );
    record(
        &mut r,
        h,
        "a1S(a21) ⊗ a22 = 1 ⊗ a",
        first_single(n, |i| {
            h.multiply_adjacent(&h.antipode_on_leg(&delta_right(h, i), 1), 0) == Tensor2::outer(one, &b[i])
        }),
    );
    record(
        &mut r,
        h,
        "a11 ⊗ S(a12)a2 = a ⊗ 1",
        first_single(n, |i| {
            h.multiply_adjacent(&h.antipode_on_leg(&delta_left(h, i), 1), 1) == Tensor2::outer(&b[i], one)
        }),
    );
    record(
        &mut r,
        h,
        "a11 ⊗ a12S(a2) = a ⊗ 1",
        first_single(n, |i| {
            h.multiply_adjacent(&h.antipode_on_leg(&delta_left(h, i), 2), 1) == Tensor2::outer(&b[i], one)
        }),
    );
    record(
        &mut r,
        h,
        "m(S⊗id)Δ = με = m(id⊗S)Δ",
        first_single(n, |i| {
            let d = h.coproduct_basis(i);
            let target = one.scale(h.counit_basis(i));
            h.multiply_legs(&h.antipode_on_leg(d, 0)) == target && h.multiply_legs(&h.antipode_on_leg(d, 1)) == target
        }),
    );
    record(
        &mut r,
        h,
        "S antimultiplicative: S(ab) = S(b)S(a)",
        first_pair(n, |x, y| h.antipode(h.product_basis(x, y)) == h.mul(&s[y], &s[x])),
    );
    record(
        &mut r,
        h,
        "S anticomultiplicative: ΔS(a) = S(a2) ⊗ S(a1)",
        first_single(n, |i| {
            let flipped = h.coproduct_basis(i).flip();
            h.coproduct(&s[i]) == h.antipode_on_leg(&h.antipode_on_leg(&flipped, 0), 1)
        }),
    );
    record(
        &mut r,
        h,
        "S S⁻¹ = id = S⁻¹ S",
        first_single(n, |i| {
            h.antipode(&h.antipode_inverse(&b[i])) == b[i] && h.antipode_inverse(&s[i]) == b[i]
        }),
    );

    let coassoc = h.coassociativity_witness();
    r.observe(
        "coassociativity probe: (Δ⊗id)Δ = (id⊗Δ)Δ",
        coassoc.is_none(),
        coassoc.map(|w| names(h, &[w])),
    );
    for v in Variety::ALL {
        let o = check_coquasigroup_variety(a, v);
        r.observe(format!("variety probe: {v}"), o.holds, o.witness.map(|w| names(h, &w)));
    }
    r
}

/// Flexible: `a1a22 ⊗ a21 = a11a2 ⊗ a12`. Alternative adds
/// `a1a21 ⊗ a22 = a11a12 ⊗ a2` and `a1 ⊗ a21a22 = a11 ⊗ a12a2`. Moufang:
/// `a1a221 ⊗ a21 ⊗ a222 = a111a12 ⊗ a112 ⊗ a2`.
pub fn check_coquasigroup_variety(a: &HopfCoquasigroup, v: Variety) -> PropertyOutcome<usize> {
    let h = a.structure();
    let n = h.dim();
    let fail = |w: Option<[usize; 1]>| match w {
        None => PropertyOutcome::holds(),
        Some([i]) => PropertyOutcome::fails(vec![i]),
    };
    let flexible = || {
        fail(first_single(n, |i| {
            multiply_outer(h, &delta_right(h, i)) == multiply_outer(h, &delta_left(h, i))
        }))
    };
    match v {
        Variety::Flexible => flexible(),
        Variety::Alternative => {
            let left = fail(first_single(n, |i| {
                h.multiply_adjacent(&delta_right(h, i), 0) == h.multiply_adjacent(&delta_left(h, i), 0)
            }));
            let right = fail(first_single(n, |i| {
                h.multiply_adjacent(&delta_right(h, i), 1) == h.multiply_adjacent(&delta_left(h, i), 1)
            }));
            crate::loops::combine([flexible(), left, right].into_iter())
        }
        Variety::Moufang => fail(first_single(n, |i| {
            let mut lhs = Tensor3::zero(h.field(), n);
            for ([x, y, z], c) in delta_right(h, i).iter() {
                for ([p, q], d) in h.coproduct_basis(z).iter() {
                    let cd = c * d;
                    for (k, v) in h.product_basis(x, p).iter() {
                        lhs.add_term([k, y, q], &(&cd * v));
                    }
                }
            }
            let mut rhs = Tensor3::zero(h.field(), n);
            for ([x, y, z], c) in delta_left(h, i).iter() {
                for ([p, q], d) in h.coproduct_basis(x).iter() {
                    let cd = c * d;
                    for (k, v) in h.product_basis(p, y).iter() {
                        rhs.add_term([k, q, z], &(&cd * v));
                    }
                }
            }
            lhs == rhs
        })),
    }
}
