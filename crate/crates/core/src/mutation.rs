//! Single-constant mutations of a structure, each of which the axiom suite
//! should reject.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hopf::{verify_axioms, HopfQuasigroup, StructureConstants};
use crate::report::Report;

pub const DEFAULT_MUTATIONS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationOutcome {
    pub description: String,
    /// The first failing entry, if the mutant was caught.
    pub killed_by: Option<String>,
}

/// Add `1` to one seeded structure constant: a product, unit, coproduct,
/// counit, antipode or inverse-antipode coefficient.
pub fn mutate(h: &StructureConstants, rng: &mut ChaCha8Rng) -> (String, StructureConstants) {
    let mut parts = h.clone().into_parts();
    let n = parts.labels.len();
    let one = parts.field.one();
    let l = |i: usize| parts.labels[i].clone();
    let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
    let description = match rng.gen_range(0..6) {
        0 => {
            parts.product[i * n + j].add_term(k, &one);
            format!("product {}·{} at {}", l(i), l(j), l(k))
        }
        1 => {
            parts.unit.add_term(i, &one);
            format!("unit at {}", l(i))
        }
        2 => {
            parts.coproduct[i].add_term([j, k], &one);
            format!("coproduct of {} at {}⊗{}", l(i), l(j), l(k))
        }
        3 => {
            parts.counit[i] = &parts.counit[i] + &one;
            format!("counit at {}", l(i))
        }
        4 => {
            parts.antipode[i].add_term(j, &one);
            format!("antipode of {} at {}", l(i), l(j))
        }
        _ => {
            parts.antipode_inverse[i].add_term(j, &one);
            format!("inverse antipode of {} at {}", l(i), l(j))
        }
    };
    (
        description,
        StructureConstants::from_parts_unchecked(parts).expect("shapes unchanged"),
    )
}

pub fn mutation_suite(h: &StructureConstants) -> Report {
    verify_axioms(&HopfQuasigroup::new(h.clone()))
}

pub fn run_mutations(h: &StructureConstants, count: usize, seed: u64) -> Vec<MutationOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (description, mutant) = mutate(h, &mut rng);
            let killed_by = mutation_suite(&mutant).failures().next().map(|e| e.name.clone());
            MutationOutcome { description, killed_by }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::group_like_algebra;
    use crate::loops::quaternion8;
    use crate::scalar::Field;

    #[test]
    fn unmutated_passes_and_mutants_die() {
        let h = group_like_algebra(&quaternion8(), Field::Rational).unwrap();
        assert!(mutation_suite(h.structure()).passed());
        let out = run_mutations(h.structure(), 12, 7);
        let survivors: Vec<_> = out.iter().filter(|m| m.killed_by.is_none()).collect();
        assert!(survivors.is_empty(), "{survivors:?}");
    }

    #[test]
    fn mutation_is_deterministic() {
        let h = group_like_algebra(&quaternion8(), Field::Rational).unwrap();
        assert_eq!(run_mutations(h.structure(), 5, 1), run_mutations(h.structure(), 5, 1));
    }
}
