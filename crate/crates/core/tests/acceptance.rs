//! Acceptance run: each check within its time budget, one PASS/FAIL line
//! per check. Exit status is nonzero if any check fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopfq_core::dual::{dual_axiom_suite, DualContext, DEFAULT_SEED};
use hopfq_core::hopf::{group_like_algebra, verify_axioms, GaloisMap};
use hopfq_core::integrals::{
    compose_antipode, faithful_left_integral, integral_space, is_faithful, modular_data, verify_invariance_identities,
    Side,
};
use hopfq_core::loops::{
    free_group, integers, search_ip_loops, EnumerableQuasigroup, FiniteLoop, LoopFilter, LoopProperty, Variety,
    DEFAULT_SEARCH_BOUND,
};
use hopfq_core::mcq::{
    check_variety_dual, function_algebra, unit_counterexample, verify_multiplier_axioms, TensorSlice,
};
use hopfq_core::mutation::run_mutations;
use hopfq_core::suite::{closed_form_report, corpus};
use hopfq_core::{Field, Report};

type Outcome = Result<String, String>;

fn fields() -> [Field; 2] {
    [Field::Rational, Field::Prime(101)]
}

fn require(report: &Report, context: &str) -> Result<(), String> {
    match report.failures().next() {
        None => Ok(()),
        Some(e) => Err(format!(
            "{context}: `{}` failed {}",
            e.name,
            e.witness.clone().unwrap_or_default()
        )),
    }
}

fn corpus_axioms() -> Outcome {
    let mut checked = 0;
    for f in fields() {
        for (name, q) in corpus() {
            let h = group_like_algebra(&q, f).map_err(|e| e.to_string())?;
            let r = verify_axioms(&h);
            require(&r, &format!("k{name} over {f}"))?;
            let probe = r
                .entry("associativity probe: (ab)c = a(bc)")
                .ok_or("no associativity probe")?;
            match (name, probe.holds, &probe.witness) {
                ("O16", false, Some(_)) => {}
                ("O16", _, _) => return Err("kO16 associativity probe has no witness".into()),
                (_, true, _) => {}
                (_, false, _) => return Err(format!("k{name} reported non-associative")),
            }
            checked += r.entries.len();
        }
    }
    Ok(format!("{checked} entries"))
}

fn integral_theory() -> Outcome {
    for f in fields() {
        for (name, q) in corpus() {
            let h = group_like_algebra(&q, f).map_err(|e| e.to_string())?;
            let h = h.structure();
            for side in [Side::Left, Side::Right] {
                let d = integral_space(h, side).len();
                if d != 1 {
                    return Err(format!("k{name}: {side} integral space has dimension {d}"));
                }
            }
            let phi = faithful_left_integral(h).map_err(|e| e.to_string())?;
            let delta_e: Vec<_> = (0..q.order())
                .map(|u| if u == q.identity() { f.one() } else { f.zero() })
                .collect();
            if phi.coeffs != delta_e {
                return Err(format!("k{name}: integral is not δ_e"));
            }
            let faith = is_faithful(h, &phi.coeffs);
            if !faith.faithful || faith.gram_rank != q.order() {
                return Err(format!("k{name}: Gram rank {}", faith.gram_rank));
            }
            let r = verify_invariance_identities(h, &phi.coeffs, &compose_antipode(h, &phi.coeffs))
                .map_err(|e| e.to_string())?;
            if r.entries.len() != 4 {
                return Err(format!("k{name}: expected four invariance identities"));
            }
            require(&r, &format!("k{name} over {f}"))?;
        }
    }
    Ok("dimension 1, δ_e, full rank, four identities".into())
}

fn modular() -> Outcome {
    for f in fields() {
        for (name, q) in corpus() {
            let h = group_like_algebra(&q, f).map_err(|e| e.to_string())?;
            let h = h.structure();
            let phi = faithful_left_integral(h).map_err(|e| e.to_string())?;
            let m = modular_data(h, &phi.coeffs).map_err(|e| format!("k{name}: {e}"))?;
            if &m.delta != h.unit() || !m.tau.is_one() || &m.delta_inverse != h.unit() {
                return Err(format!("k{name}: δ = {:?}, τ = {}", m.delta.to_dense(), m.tau));
            }
        }
    }
    Ok("δ = 1, τ = 1".into())
}

fn dual_construction() -> Outcome {
    let probe = "coassociativity probe: (Δ̂⊗id)Δ̂ = (id⊗Δ̂)Δ̂";
    for f in fields() {
        for (name, q) in corpus().into_iter().filter(|(n, _)| matches!(*n, "Q8" | "O16")) {
            let h = group_like_algebra(&q, f).map_err(|e| e.to_string())?;
            let ctx = DualContext::from_algebra(h.structure()).map_err(|e| e.to_string())?;
            let r = dual_axiom_suite(&ctx, DEFAULT_SEED);
            require(&r, &format!("dual of k{name} over {f}"))?;
            for item in ["(a)", "(b)", "(c)", "(d)", "(e)", "(f)", "(g)", "(h)"] {
                if !r.entries.iter().any(|e| e.name.starts_with(item)) {
                    return Err(format!("dual of k{name}: no entry {item}"));
                }
            }
            if !r.holds("product: pairing = all four closed forms") {
                return Err("product routes disagree".into());
            }
            let p = r.entry(probe).ok_or("no coassociativity probe")?;
            match (name, p.holds, p.witness.is_some()) {
                ("Q8", true, _) | ("O16", false, true) => {}
                _ => return Err(format!("dual of k{name}: coassociativity probe {}", p.holds)),
            }
        }
    }
    Ok("(a)-(h) pass; Q8 coassociative, O16 not".into())
}

fn closed_forms() -> Outcome {
    for f in fields() {
        for (name, q) in corpus() {
            let h = group_like_algebra(&q, f).map_err(|e| e.to_string())?;
            let ctx = DualContext::from_algebra(h.structure()).map_err(|e| e.to_string())?;
            let r = closed_form_report(&q, &ctx);
            require(&r, &format!("dual of k{name} over {f}"))?;
        }
    }
    Ok("product, slices, counit, antipode, integral".into())
}

fn nonunital<Q: EnumerableQuasigroup>(q: &Q, window: usize) -> Result<(), String> {
    for f in fields() {
        let k = function_algebra(q, f, window).map_err(|e| e.to_string())?;
        let r = verify_multiplier_axioms(&k, window, DEFAULT_SEED);
        require(&r, &format!("{} over {f}", q.name()))?;
        if !r.holds("no finite-support unit: every candidate has a witness") {
            return Err("unit not excluded".into());
        }
        for m in [0, 3, window] {
            if unit_counterexample(&k, &k.local_unit(&q.window(m))).is_none() {
                return Err(format!("window({m}) indicator acts as a unit"));
            }
        }
        let w = q.window(window);
        for which in [GaloisMap::T1, GaloisMap::T2] {
            for a in &w {
                for b in &w {
                    let start = TensorSlice::pure(&k.delta(a), &k.delta(b));
                    if k.t_inverse_slice(which, &k.t_map(which, &k.delta(a), &k.delta(b))) != start
                        || k.t_map_slice(which, &k.t_inverse(which, &k.delta(a), &k.delta(b))) != start
                    {
                        return Err(format!("{which} round-trip fails at {}", k.witness(&[a, b])));
                    }
                }
            }
        }
    }
    Ok(())
}

fn nonunital_regime() -> Outcome {
    nonunital(&integers(), 8)?;
    nonunital(&free_group(2), 8)?;
    for (name, q) in corpus() {
        let h = group_like_algebra(&q, Field::Rational).map_err(|e| e.to_string())?;
        let ctx = DualContext::from_algebra(h.structure()).map_err(|e| e.to_string())?;
        if !dual_axiom_suite(&ctx, DEFAULT_SEED).holds("(g) wφ = ε̂(w)φ") {
            return Err(format!("cointegral law fails on the dual of k{name}"));
        }
    }
    Ok("integers and free group on window 8".into())
}

fn varieties() -> Outcome {
    let mut loops: Vec<(String, FiniteLoop)> = corpus().into_iter().map(|(n, q)| (n.to_string(), q)).collect();
    let filter = LoopFilter::any().forbid(LoopProperty::Moufang);
    let mut found = None;
    for order in 5..=DEFAULT_SEARCH_BOUND {
        let hits = search_ip_loops(order, &filter, DEFAULT_SEARCH_BOUND).map_err(|e| e.to_string())?;
        if let Some(q) = hits.into_iter().next() {
            found = Some(order);
            loops.push((format!("IP non-Moufang loop of order {order}"), q));
            break;
        }
    }
    let order = found.ok_or("no IP non-Moufang loop up to the search bound")?;
    for (name, q) in &loops {
        let n = q.order().div_ceil(2);
        let k = function_algebra(q, Field::Rational, n).map_err(|e| e.to_string())?;
        for v in Variety::ALL {
            let (dual, lp) = (check_variety_dual(&k, n, v), q.check_variety(v));
            if dual.holds != lp.holds {
                return Err(format!("{name}: {v} dual {} vs loop {}", dual.holds, lp.holds));
            }
        }
        let moufang = check_variety_dual(&k, n, Variety::Moufang);
        match name.as_str() {
            "O16" if !moufang.holds => return Err("Moufang dual law fails for O16".into()),
            n if n.starts_with("IP non-Moufang") && moufang.holds => {
                return Err("Moufang dual law holds on a non-Moufang loop".into())
            }
            _ => {}
        }
    }
    Ok(format!("corpus and order-{order} IP non-Moufang loop"))
}

fn fault_injection() -> Outcome {
    let q8 = corpus().into_iter().find(|(n, _)| *n == "Q8").expect("Q8").1;
    let h = group_like_algebra(&q8, Field::Rational).map_err(|e| e.to_string())?;
    let out = run_mutations(h.structure(), 20, DEFAULT_SEED);
    if let Some(m) = out.iter().find(|m| m.killed_by.is_none()) {
        return Err(format!("mutation survived: {}", m.description));
    }
    Ok(format!("{}/{} mutants caught", out.len(), out.len()))
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Outcome, u64); 8] = [
        ("1 corpus axiom suite", corpus_axioms, 10),
        ("2 integral theory", integral_theory, 10),
        ("3 modular data", modular, 5),
        ("4 dual construction", dual_construction, 60),
        ("5 dual closed forms", closed_forms, 5),
        ("6 nonunital regime", nonunital_regime, 30),
        ("7 variety correspondence", varieties, 120),
        ("8 fault injection", fault_injection, 60),
    ];
    let mut failed = 0;
    for (name, check, budget) in checks {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > Duration::from_secs(budget) => Err(format!("over budget of {budget}s")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {name} ({:.2}s / {budget}s): {detail}", took.as_secs_f64()),
            Err(reason) => {
                failed += 1;
                println!("FAIL {name} ({:.2}s / {budget}s): {reason}", took.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
