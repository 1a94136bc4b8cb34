//! Hopf quasigroup axioms and the flexible/alternative/Moufang laws.
//!
//! Every law below is multilinear in its arguments (Δ, S, m and ε are
//! linear), so checking it on basis tuples proves it on all of H.

use super::{HopfQuasigroup, StructureConstants};
use crate::loops::{PropertyOutcome, Variety};
use crate::report::{witness, Report};
use crate::tensor::{Element, Tensor2};

pub(crate) fn names(h: &StructureConstants, idx: &[usize]) -> String {
    let parts: Vec<&str> = idx.iter().map(|&i| h.label(i)).collect();
    witness(&parts)
}

pub(crate) fn first_single(n: usize, ok: impl Fn(usize) -> bool) -> Option<[usize; 1]> {
    (0..n).find(|&a| !ok(a)).map(|a| [a])
}

pub(crate) fn first_pair(n: usize, ok: impl Fn(usize, usize) -> bool) -> Option<[usize; 2]> {
    for a in 0..n {
        for b in 0..n {
            if !ok(a, b) {
                return Some([a, b]);
            }
        }
    }
    None
}

pub(crate) fn first_triple(n: usize, ok: impl Fn(usize, usize, usize) -> bool) -> Option<[usize; 3]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !ok(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub(crate) fn record<const K: usize>(
    report: &mut Report,
    h: &StructureConstants,
    name: &str,
    outcome: Option<[usize; K]>,
) {
    report.require(name, outcome.is_none(), outcome.map(|w| names(h, &w)));
}

/// `Σ f(h₁, h₂)` over the coproduct of a basis element.
fn sweedler_sum(h: &StructureConstants, i: usize, f: impl Fn(usize, usize) -> Element) -> Element {
    let mut out = h.zero();
    for ([p, q], c) in h.coproduct_basis(i).iter() {
        out.add_scaled(&f(p, q), c);
    }
    out
}

/// Check every Hopf quasigroup axiom on basis tuples. The associativity
/// probe is recorded as an observation since it is not an axiom.
pub fn verify_axioms(hq: &HopfQuasigroup) -> Report {
    let h = hq.structure();
    let n = h.dim();
    let mut r = Report::new("Hopf quasigroup axioms");
    let b: Vec<Element> = (0..n).map(|i| h.basis(i)).collect();
    let s: Vec<Element> = (0..n).map(|i| h.antipode(&b[i])).collect();
    let mul = |x: &Element, y: &Element| h.mul(x, y);

    record(
        &mut r,
        h,
        "unit: 1h = h = h1",
        first_single(n, |i| mul(h.unit(), &b[i]) == b[i] && mul(&b[i], h.unit()) == b[i]),
    );

    let eps_g = |hh: usize, g: usize| b[g].scale(h.counit_basis(hh));
    record(
        &mut r,
        h,
        "antipode: S(h1)(h2 g) = ε(h)g",
        first_pair(n, |hh, g| {
            sweedler_sum(h, hh, |p, q| mul(&s[p], h.product_basis(q, g))) == eps_g(hh, g)
        }),
    );
    record(
        &mut r,
        h,
        "antipode: h1(S(h2)g) = ε(h)g",
        first_pair(n, |hh, g| {
            sweedler_sum(h, hh, |p, q| mul(&b[p], &mul(&s[q], &b[g]))) == eps_g(hh, g)
        }),
    );
    record(
        &mut r,
        h,
        "antipode: (gS(h1))h2 = ε(h)g",
        first_pair(n, |hh, g| {
            sweedler_sum(h, hh, |p, q| mul(&mul(&b[g], &s[p]), &b[q])) == eps_g(hh, g)
        }),
    );
    record(
        &mut r,
        h,
        "antipode: (gh1)S(h2) = ε(h)g",
        first_pair(n, |hh, g| {
            sweedler_sum(h, hh, |p, q| mul(h.product_basis(g, p), &s[q])) == eps_g(hh, g)
        }),
    );

    record(
        &mut r,
        h,
        "Δ multiplicative: Δ(gh) = Δ(g)Δ(h)",
        first_pair(n, |g, hh| {
            h.coproduct(h.product_basis(g, hh)) == h.mul2(h.coproduct_basis(g), h.coproduct_basis(hh))
        }),
    );
    record(
        &mut r,
        h,
        "Δ unital: Δ(1) = 1 ⊗ 1",
        first_single(1, |_| h.coproduct(h.unit()) == Tensor2::outer(h.unit(), h.unit())),
    );
    record(
        &mut r,
        h,
        "ε multiplicative: ε(gh) = ε(g)ε(h)",
        first_pair(n, |g, hh| {
            h.counit(h.product_basis(g, hh)) == h.counit_basis(g) * h.counit_basis(hh)
        }),
    );
    record(
        &mut r,
        h,
        "ε unital: ε(1) = 1",
        first_single(1, |_| h.counit(h.unit()).is_one()),
    );
    record(
        &mut r,
        h,
        "coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ",
        first_single(n, |i| {
            let d = h.coproduct_basis(i);
            h.coproduct_on_leg(d, 0) == h.coproduct_on_leg(d, 1)
        }),
    );
    record(
        &mut r,
        h,
        "counit: (ε⊗id)Δ(h) = h = (id⊗ε)Δ(h)",
        first_single(n, |i| {
            let d = h.coproduct_basis(i);
            d.contract_left(&h.counit) == b[i] && d.contract_right(&h.counit) == b[i]
        }),
    );
    record(
        &mut r,
        h,
        "S antimultiplicative: S(gh) = S(h)S(g)",
        first_pair(n, |g, hh| h.antipode(h.product_basis(g, hh)) == mul(&s[hh], &s[g])),
    );
    record(
        &mut r,
        h,
        "S anticomultiplicative: ΔS(h) = S(h2) ⊗ S(h1)",
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

    let assoc = h.associativity_witness();
    r.observe(
        "associativity probe: (ab)c = a(bc)",
        assoc.is_none(),
        assoc.map(|w| names(h, &w)),
    );

    if h.is_cocommutative() && check_variety(hq, Variety::Flexible).holds {
        record(
            &mut r,
            h,
            "cocommutative flexible: S² = id",
            first_single(n, |i| h.antipode(&s[i]) == b[i]),
        );
        record(
            &mut r,
            h,
            "cocommutative flexible: h1(gS(h2)) = (h1g)S(h2)",
            first_pair(n, |hh, g| {
                sweedler_sum(h, hh, |p, q| mul(&b[p], &mul(&b[g], &s[q])))
                    == sweedler_sum(h, hh, |p, q| mul(h.product_basis(p, g), &s[q]))
            }),
        );
    }
    r
}

fn outcome<const K: usize>(w: Option<[usize; K]>) -> PropertyOutcome<usize> {
    match w {
        None => PropertyOutcome::holds(),
        Some(w) => PropertyOutcome::fails(w.to_vec()),
    }
}

/// Flexible: `h1(gh2) = (h1g)h2`. Alternative adds `h1(h2g) = (h1h2)g` and
/// `h(g1g2) = (hg1)g2`. Moufang: `h1(g(h2f)) = ((h1g)h2)f`.
pub fn check_variety(hq: &HopfQuasigroup, v: Variety) -> PropertyOutcome<usize> {
    let h = hq.structure();
    let n = h.dim();
    let b: Vec<Element> = (0..n).map(|i| h.basis(i)).collect();
    let mul = |x: &Element, y: &Element| h.mul(x, y);
    let flexible = || {
        outcome(first_pair(n, |hh, g| {
            sweedler_sum(h, hh, |p, q| mul(&b[p], h.product_basis(g, q)))
                == sweedler_sum(h, hh, |p, q| mul(h.product_basis(p, g), &b[q]))
        }))
    };
    match v {
        Variety::Flexible => flexible(),
        Variety::Alternative => {
            let left = || {
                outcome(first_pair(n, |hh, g| {
                    sweedler_sum(h, hh, |p, q| mul(&b[p], h.product_basis(q, g)))
                        == sweedler_sum(h, hh, |p, q| mul(h.product_basis(p, q), &b[g]))
                }))
            };
            let right = || {
                outcome(first_pair(n, |hh, g| {
                    sweedler_sum(h, g, |p, q| mul(&b[hh], h.product_basis(p, q)))
                        == sweedler_sum(h, g, |p, q| mul(h.product_basis(hh, p), &b[q]))
                }))
            };
            crate::loops::combine([flexible(), left(), right()].into_iter())
        }
        Variety::Moufang => outcome(first_triple(n, |hh, g, f| {
            sweedler_sum(h, hh, |p, q| mul(&b[p], &mul(&b[g], h.product_basis(q, f))))
                == sweedler_sum(h, hh, |p, q| mul(&mul(h.product_basis(p, g), &b[q]), &b[f]))
        })),
    }
}
