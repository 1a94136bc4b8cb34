//! The full verification run over the built-in corpus: loop algebras of
//! `Z6, S3, Q8, O16`, and `k(G)` for the integers and the free group of
//! rank 2 on windows.

use crate::dual::{dual_axiom_suite, DualContext, Slice, DEFAULT_SEED};
use crate::hopf::{check_variety, group_like_algebra, verify_axioms, HopfQuasigroup, StructureConstants};
use crate::integrals::{
    compose_antipode, faithful_left_integral, integral_space, is_faithful, modular_data, uniqueness_dimension,
    verify_invariance_identities, Side,
};
use crate::loops::{
    cyclic, free_group, integers, octonion_loop16, quaternion8, symmetric, EnumerableQuasigroup, FiniteLoop, Variety,
};
use crate::mcq::{
    check_variety_dual, function_algebra, prop_bridges, verify_multiplier_axioms, GaloisMap, DEFAULT_WINDOW,
};
use crate::report::Report;
use crate::scalar::{Field, DEFAULT_PRIME};
use crate::tensor::{Element, Tensor2};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub fields: Vec<Field>,
    pub window: usize,
    pub seed: u64,
    pub verbose: bool,
    /// Replace every antipode of the finite corpus by the identity map.
    pub corrupt_antipode: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            fields: vec![Field::Rational, Field::Prime(DEFAULT_PRIME)],
            window: DEFAULT_WINDOW,
            seed: DEFAULT_SEED,
            verbose: false,
            corrupt_antipode: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("field {field} is too small for {name} of order {order}: need p > {order}")]
    FieldTooSmall { field: Field, name: String, order: usize },
}

/// The finite corpus with short names.
pub fn corpus() -> Vec<(&'static str, FiniteLoop)> {
    vec![
        ("Z6", cyclic(6)),
        ("S3", symmetric(3)),
        ("Q8", quaternion8()),
        ("O16", octonion_loop16()),
    ]
}

/// `S = S⁻¹ = id`, shapes unchanged.
pub fn with_identity_antipode(h: &StructureConstants) -> StructureConstants {
    let mut parts = h.clone().into_parts();
    let n = parts.labels.len();
    let identity: Vec<Element> = (0..n).map(|i| Element::basis(parts.field, n, i)).collect();
    parts.antipode = identity.clone();
    parts.antipode_inverse = identity;
    StructureConstants::from_parts_unchecked(parts).expect("shapes unchanged")
}

/// Integral existence, uniqueness, faithfulness, the four invariance
/// identities and the modular data of `h`, whose integral should be `δ_e`.
pub fn integral_report(h: &StructureConstants) -> Report {
    let mut r = Report::new("integrals");
    let n = h.dim();
    for side in [Side::Left, Side::Right] {
        let dim = integral_space(h, side).len();
        r.require(
            format!("{side} integral space has dimension 1"),
            dim == 1,
            Some(format!("dimension {dim}")),
        );
    }
    let phi = match faithful_left_integral(h) {
        Ok(phi) => phi,
        Err(e) => {
            r.require("faithful left integral exists", false, Some(e.to_string()));
            return r;
        }
    };
    r.require("integral is δ_e", phi.coeffs == h.unit().to_dense(), None);
    let faith = is_faithful(h, &phi.coeffs);
    r.require(
        "integral faithful with Gram rank = dim",
        faith.faithful && faith.gram_rank == n,
        Some(format!("rank {}", faith.gram_rank)),
    );
    let unique = uniqueness_dimension(h);
    r.require(
        "left integrals unique up to scalar",
        unique == Ok(1),
        unique.err().map(|e| e.to_string()),
    );
    match verify_invariance_identities(h, &phi.coeffs, &compose_antipode(h, &phi.coeffs)) {
        Ok(rep) => r.absorb("", rep),
        Err(e) => r.require("invariance identities", false, Some(e.to_string())),
    }
    match modular_data(h, &phi.coeffs) {
        Ok(m) => {
            r.require(
                "modular element δ = 1",
                &m.delta == h.unit(),
                Some(format!("{:?}", m.delta.to_dense())),
            );
            r.require("scaling constant τ = 1", m.tau.is_one(), Some(m.tau.to_string()));
        }
        Err(e) => r.require("modular data consistent", false, Some(e.to_string())),
    }
    r
}

/// The dual of `kG` against `δ_uδ_v = δ_{u,v}δ_v`, the `T`-map slices of
/// `Δ̂(δ_u) = Σ_v δ_v⊗δ_{v⁻¹u}`, `ε̂(δ_u) = [u = e]`, `Ŝ(δ_u) = δ_{u⁻¹}` and
/// `φ̂(δ_u) = 1`, coefficient for coefficient.
pub fn closed_form_report(q: &FiniteLoop, ctx: &DualContext) -> Report {
    let mut r = Report::new("dual of kG in closed form");
    let d = ctx.dual_structure();
    let n = q.order();
    let f = d.field();
    let Ok(k) = function_algebra(q, f, 0) else {
        r.require("function algebra available", false, None);
        return r;
    };
    let delta = |u: usize| Element::basis(f, n, u);
    let pairs = || (0..n).flat_map(move |u| (0..n).map(move |v| (u, v)));
    let bad = pairs().find(|&(u, v)| *d.product_basis(u, v) != if u == v { delta(v) } else { Element::zero(f, n) });
    r.require(
        "δ_uδ_v = δ_{u,v}δ_v",
        bad.is_none(),
        bad.map(|(u, v)| format!("({}, {})", q.label(u), q.label(v))),
    );
    let bad = pairs().find(|&(u, w)| {
        [(Slice::Right, GaloisMap::T1), (Slice::Left, GaloisMap::T2)]
            .iter()
            .any(|&(side, which)| {
                let [x, y] = k.t_basis(which, &u, &w);
                ctx.dual_coproduct_slice(side, &delta(u), &delta(w)).ok() != Some(Tensor2::basis(f, n, [x, y]))
            })
    });
    r.require(
        "Δ̂(δ_u)(1⊗δ_w) and (δ_u⊗1)Δ̂(δ_w) match the T-map closed forms",
        bad.is_none(),
        bad.map(|(u, v)| format!("({}, {})", q.label(u), q.label(v))),
    );
    let bad = (0..n).find(|&u| *d.counit_basis(u) != if u == q.identity() { f.one() } else { f.zero() });
    r.require("ε̂(δ_u) = [u = e]", bad.is_none(), bad.map(|u| q.label(u).to_string()));
    let bad = (0..n).find(|&u| *d.antipode_basis(u) != delta(q.inv(u)));
    r.require("Ŝ(δ_u) = δ_{u⁻¹}", bad.is_none(), bad.map(|u| q.label(u).to_string()));
    let phi_hat = ctx.dual_integral();
    r.require(
        "φ̂(δ_u) = 1",
        phi_hat.as_ref().is_ok_and(|v| v.iter().all(|c| c.is_one())),
        phi_hat.err().map(|e| e.to_string()),
    );
    r
}

/// `kG` and its dual, and `k(G)` through the covered forms, for one
/// finite corpus member.
pub fn finite_report(name: &str, q: &FiniteLoop, field: Field, cfg: &RunConfig) -> Report {
    let mut r = Report::new(format!("{name} over {field}"));
    let h = match group_like_algebra(q, field) {
        Ok(h) => h,
        Err(e) => {
            r.require("loop algebra constructed", false, Some(e.to_string()));
            return r;
        }
    };
    let h = if cfg.corrupt_antipode {
        HopfQuasigroup::new(with_identity_antipode(h.structure()))
    } else {
        h
    };
    let axioms = verify_axioms(&h);
    let assoc = q.check_property(crate::loops::LoopProperty::Associative).holds;
    r.require(
        "associativity probe agrees with the loop",
        axioms.entry("associativity probe: (ab)c = a(bc)").map(|e| e.holds) == Some(assoc),
        None,
    );
    r.absorb("kG: ", axioms);
    for v in Variety::ALL {
        let (alg, lp) = (check_variety(&h, v), q.check_variety(v));
        r.require(
            format!("kG: {v} algebra ⟺ {v} loop"),
            alg.holds == lp.holds,
            Some(format!("algebra {}, loop {}", alg.holds, lp.holds)),
        );
    }
    r.absorb("kG: ", integral_report(h.structure()));
    match DualContext::from_algebra(h.structure()) {
        Ok(ctx) => {
            r.absorb("dual: ", dual_axiom_suite(&ctx, cfg.seed));
            r.absorb("dual: ", closed_form_report(q, &ctx));
        }
        Err(e) => r.require("dual: constructed", false, Some(e.to_string())),
    }
    match function_algebra(q, field, cfg.window) {
        Ok(k) => {
            let n = q.order().div_ceil(2);
            r.absorb("k(G): ", verify_multiplier_axioms(&k, n, cfg.seed));
            r.absorb("k(G): ", variety_report(&k, n));
            r.absorb("k(G): ", prop_bridges(&k, n));
        }
        Err(e) => r.require("k(G): constructed", false, Some(e.to_string())),
    }
    r
}

/// Dual variety laws against the loop laws on the same window.
pub fn variety_report<Q: EnumerableQuasigroup>(k: &crate::mcq::FunctionAlgebra<'_, Q>, n: usize) -> Report {
    let q = k.quasigroup();
    let w = q.window(n);
    let mut r = Report::new("dual varieties");
    for v in Variety::ALL {
        let (dual, lp) = (check_variety_dual(k, n, v), q.check_variety_on(&w, v));
        r.require(
            format!("{v} dual law ⟺ {v} loop"),
            dual.holds == lp.holds,
            Some(format!("dual {}, loop {}", dual.holds, lp.holds)),
        );
    }
    r
}

fn infinite_report<Q: EnumerableQuasigroup>(q: &Q, field: Field, cfg: &RunConfig) -> Report {
    let mut r = Report::new(format!("{} over {field}, window {}", q.name(), cfg.window));
    match function_algebra(q, field, cfg.window) {
        Ok(k) => {
            r.absorb("", verify_multiplier_axioms(&k, cfg.window, cfg.seed));
            r.absorb("", variety_report(&k, cfg.window));
            r.absorb("", prop_bridges(&k, cfg.window));
        }
        Err(e) => r.require("k(G) constructed", false, Some(e.to_string())),
    }
    r
}

/// Every report of the run, in a fixed order.
pub fn run_suite(cfg: &RunConfig) -> Result<Vec<Report>, SuiteError> {
    let corpus = corpus();
    for &field in &cfg.fields {
        for (name, q) in &corpus {
            if !field.admits_order(q.order()) {
                return Err(SuiteError::FieldTooSmall {
                    field,
                    name: name.to_string(),
                    order: q.order(),
                });
            }
        }
    }
    let mut out = Vec::new();
    for &field in &cfg.fields {
        for (name, q) in &corpus {
            out.push(finite_report(name, q, field, cfg));
        }
        out.push(infinite_report(&integers(), field, cfg));
        out.push(infinite_report(&free_group(2), field, cfg));
    }
    Ok(out)
}
