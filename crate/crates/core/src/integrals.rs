//! Integrals on a finite-dimensional Hopf quasigroup: the solution space
//! of the invariance condition, faithfulness, the invariance identities,
//! uniqueness up to scalar, and the modular element with its scaling
//! constant.

use std::fmt;

use crate::hopf::names;
use crate::hopf::StructureConstants;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::{Element, Tensor2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntegralError {
    #[error("functional is not a {side} integral (fails at basis element {witness})")]
    NotAnIntegral { side: Side, witness: String },
    #[error("no faithful left integral exists")]
    NoFaithfulIntegral,
    #[error("inconsistent modular element: {0}")]
    InconsistentModularElement(String),
}

/// A functional given by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralFunctional {
    pub side: Side,
    pub coeffs: Vec<Scalar>,
}

impl IntegralFunctional {
    pub fn eval(&self, a: &Element) -> Scalar {
        a.pair(&self.coeffs)
    }
}

/// `(id⊗φ)Δ(h)` for left, `(φ⊗id)Δ(h)` for right.
fn slice(side: Side, phi: &[Scalar], d: &Tensor2) -> Element {
    match side {
        Side::Left => d.contract_right(phi),
        Side::Right => d.contract_left(phi),
    }
}

/// The linear system whose kernel is the space of `side` integrals:
/// one row per (basis element `b_k`, output coordinate `i`).
pub fn integral_system(h: &StructureConstants, side: Side) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(h.field(), n * n, n);
    for k in 0..n {
        for ([p, q], c) in h.coproduct_basis(k).iter() {
            let (out, var) = match side {
                Side::Left => (p, q),
                Side::Right => (q, p),
            };
            let row = k * n + out;
            let v = m.get(row, var) + c;
            m.set(row, var, v);
        }
        for (i, u) in h.unit().iter() {
            let row = k * n + i;
            let v = m.get(row, k) - u;
            m.set(row, k, v);
        }
    }
    m
}

/// Basis of the space of `side` integrals (together with zero).
pub fn integral_space(h: &StructureConstants, side: Side) -> Vec<Vec<Scalar>> {
    integral_system(h, side).null_space()
}

/// First basis element where the defining condition fails.
pub fn integral_defect(h: &StructureConstants, side: Side, phi: &[Scalar]) -> Option<usize> {
    if phi.iter().all(Scalar::is_zero) {
        return Some(0);
    }
    (0..h.dim()).find(|&k| slice(side, phi, h.coproduct_basis(k)) != h.unit().scale(&phi[k]))
}

pub fn require_integral(h: &StructureConstants, side: Side, phi: &[Scalar]) -> Result<(), IntegralError> {
    match integral_defect(h, side, phi) {
        None => Ok(()),
        Some(k) => Err(IntegralError::NotAnIntegral {
            side,
            witness: h.label(k).to_string(),
        }),
    }
}

/// `G[i][j] = φ(b_i b_j)`.
pub fn gram_matrix(h: &StructureConstants, phi: &[Scalar]) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(h.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, h.product_basis(i, j).pair(phi));
        }
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Faithfulness {
    pub faithful: bool,
    pub gram_rank: usize,
}

/// Faithful iff `φ(g·) = 0 ⇒ g = 0` and `φ(·h) = 0 ⇒ h = 0`, i.e. the Gram
/// matrix and its transpose both have full rank.
pub fn is_faithful(h: &StructureConstants, phi: &[Scalar]) -> Faithfulness {
    let g = gram_matrix(h, phi);
    let rows = g.rank();
    let cols = g.transpose().rank();
    Faithfulness {
        faithful: rows == h.dim() && cols == h.dim(),
        gram_rank: rows,
    }
}

fn normalize(mut v: Vec<Scalar>) -> Vec<Scalar> {
    if let Some(lead) = v.iter().find(|c| !c.is_zero()).cloned() {
        let inv = lead.inverse().expect("nonzero lead");
        for c in v.iter_mut() {
            *c = &*c * &inv;
        }
    }
    v
}

/// The left integral spanning a one-dimensional solution space,
/// normalized so its first nonzero value is 1, provided it is faithful.
pub fn faithful_left_integral(h: &StructureConstants) -> Result<IntegralFunctional, IntegralError> {
    let space = integral_space(h, Side::Left);
    for v in space {
        let v = normalize(v);
        if is_faithful(h, &v).faithful {
            return Ok(IntegralFunctional {
                side: Side::Left,
                coeffs: v,
            });
        }
    }
    Err(IntegralError::NoFaithfulIntegral)
}

/// `ψ = φ ∘ S`.
pub fn compose_antipode(h: &StructureConstants, phi: &[Scalar]) -> Vec<Scalar> {
    (0..h.dim()).map(|j| h.antipode_basis(j).pair(phi)).collect()
}

/// The four invariance identities, checked on all basis pairs `(g, h)`:
/// `h1 φ(h2 S(g)) = φ(h S(g1)) g2`, `h1 φ(g h2) = S(g1) φ(g2 h)`,
/// `ψ(S(g) h1) h2 = ψ(S(g2) h) g1`, `ψ(g1 h) g2 = ψ(g h1) S(h2)`.
pub fn verify_invariance_identities(
    h: &StructureConstants,
    phi: &[Scalar],
    psi: &[Scalar],
) -> Result<Report, IntegralError> {
    require_integral(h, Side::Left, phi)?;
    require_integral(h, Side::Right, psi)?;
    let n = h.dim();
    let b: Vec<Element> = (0..n).map(|i| h.basis(i)).collect();
    let s: Vec<Element> = (0..n).map(|i| h.antipode(&b[i])).collect();
    let ev = |f: &[Scalar], x: &Element| x.pair(f);
    // Σ over Δ(b_i) of coefficient-weighted elements
    let sum = |i: usize, term: &dyn Fn(usize, usize) -> Element| {
        let mut out = h.zero();
        for ([p, q], c) in h.coproduct_basis(i).iter() {
            out.add_scaled(&term(p, q), c);
        }
        out
    };
    type Law<'a> = (&'static str, Box<dyn Fn(usize, usize) -> (Element, Element) + 'a>);
    let laws: Vec<Law> = vec![
        (
            "h1 φ(h2 S(g)) = φ(h S(g1)) g2",
            Box::new(|g, x| {
                let lhs = sum(x, &|p, q| b[p].scale(&ev(phi, &h.mul(&b[q], &s[g]))));
                let rhs = sum(g, &|p, q| b[q].scale(&ev(phi, &h.mul(&b[x], &s[p]))));
                (lhs, rhs)
            }),
        ),
        (
            "h1 φ(g h2) = S(g1) φ(g2 h)",
            Box::new(|g, x| {
                let lhs = sum(x, &|p, q| b[p].scale(&ev(phi, h.product_basis(g, q))));
                let rhs = sum(g, &|p, q| s[p].scale(&ev(phi, h.product_basis(q, x))));
                (lhs, rhs)
            }),
        ),
        (
            "ψ(S(g) h1) h2 = ψ(S(g2) h) g1",
            Box::new(|g, x| {
                let lhs = sum(x, &|p, q| b[q].scale(&ev(psi, &h.mul(&s[g], &b[p]))));
                let rhs = sum(g, &|p, q| b[p].scale(&ev(psi, &h.mul(&s[q], &b[x]))));
                (lhs, rhs)
            }),
        ),
        (
            "ψ(g1 h) g2 = ψ(g h1) S(h2)",
            Box::new(|g, x| {
                let lhs = sum(g, &|p, q| b[q].scale(&ev(psi, h.product_basis(p, x))));
                let rhs = sum(x, &|p, q| s[q].scale(&ev(psi, h.product_basis(g, p))));
                (lhs, rhs)
            }),
        ),
    ];
    let mut r = Report::new("invariance identities");
    for (name, law) in &laws {
        let mut witness = None;
        'outer: for g in 0..n {
            for x in 0..n {
                let (lhs, rhs) = law(g, x);
                if lhs != rhs {
                    witness = Some(names(h, &[g, x]));
                    break 'outer;
                }
            }
        }
        r.require(*name, witness.is_none(), witness);
    }
    Ok(r)
}

/// `λ` with `φ' = λφ`, by two routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarMultiple {
    /// `ε(δ)` where `δ_h = (φ'⊗id)Δ(h) = φ(h)δ`.
    pub via_delta: Scalar,
    /// Ratio of the first nonzero coefficients.
    pub via_ratio: Scalar,
}

/// The dimension of the left integral space, after checking that a
/// faithful left integral exists.
pub fn uniqueness_dimension(h: &StructureConstants) -> Result<usize, IntegralError> {
    faithful_left_integral(h)?;
    Ok(integral_space(h, Side::Left).len())
}

/// Express a second left integral `φ'` as `λφ`, computing `λ` through the
/// element `δ_h = φ'(h1)h2` and, independently, as a coefficient ratio.
pub fn lambda_of(
    h: &StructureConstants,
    phi_prime: &[Scalar],
    phi: &[Scalar],
) -> Result<ScalarMultiple, IntegralError> {
    require_integral(h, Side::Left, phi)?;
    if !is_faithful(h, phi).faithful {
        return Err(IntegralError::NoFaithfulIntegral);
    }
    require_integral(h, Side::Left, phi_prime)?;
    let k = phi.iter().position(|c| !c.is_zero()).expect("integral is nonzero");
    let inv = phi[k].inverse().expect("nonzero");
    let delta_of = |i: usize| h.coproduct_basis(i).contract_left(phi_prime);
    let delta = delta_of(k).scale(&inv);
    for i in 0..h.dim() {
        if delta_of(i) != delta.scale(&phi[i]) {
            return Err(IntegralError::InconsistentModularElement(format!(
                "δ_h ≠ φ(h)δ at {}",
                h.label(i)
            )));
        }
    }
    let via_delta = h.counit(&delta);
    let via_ratio = &phi_prime[k] * &inv;
    if phi.iter().zip(phi_prime).any(|(a, b)| &(a * &via_ratio) != b) {
        return Err(IntegralError::InconsistentModularElement(
            "φ' is not a multiple of φ".into(),
        ));
    }
    Ok(ScalarMultiple { via_delta, via_ratio })
}

/// The modular element `δ`, its inverse `S(δ)`, and the scaling constant
/// `τ` with `φ∘S² = τφ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularData {
    pub delta: Element,
    pub delta_inverse: Element,
    pub tau: Scalar,
}

/// Solve `(φ⊗id)Δ(h) = φ(h)δ` and verify every property of `δ` and `τ` on
/// all basis elements.
pub fn modular_data(h: &StructureConstants, phi: &[Scalar]) -> Result<ModularData, IntegralError> {
    require_integral(h, Side::Left, phi)?;
    let bad = |what: String| Err(IntegralError::InconsistentModularElement(what));
    let n = h.dim();
    let b: Vec<Element> = (0..n).map(|i| h.basis(i)).collect();
    let k = phi.iter().position(|c| !c.is_zero()).expect("integral is nonzero");
    let inv = phi[k].inverse().expect("nonzero");
    let delta = h.coproduct_basis(k).contract_left(phi).scale(&inv);
    if let Some(i) = (0..n).find(|&i| h.coproduct_basis(i).contract_left(phi) != delta.scale(&phi[i])) {
        return bad(format!("(φ⊗id)Δ(h) ≠ φ(h)δ at {}", h.label(i)));
    }
    if h.coproduct(&delta) != Tensor2::outer(&delta, &delta) {
        return bad("δ is not group-like".into());
    }
    if !h.counit(&delta).is_one() {
        return bad("ε(δ) ≠ 1".into());
    }
    let delta_inverse = h.antipode(&delta);
    if h.mul(&delta_inverse, &delta) != *h.unit() || h.mul(&delta, &delta_inverse) != *h.unit() {
        return bad("S(δ)δ ≠ 1 or δS(δ) ≠ 1".into());
    }
    if let Some(a) = (0..n).find(|&a| h.antipode(&b[a]).pair(phi) != h.mul(&b[a], &delta).pair(phi)) {
        return bad(format!("φS(a) ≠ φ(aδ) at {}", h.label(a)));
    }
    let s2 = |x: &Element| h.antipode(&h.antipode(x));
    let tau = &s2(&b[k]).pair(phi) * &inv;
    if tau.is_zero() {
        return bad("τ = 0".into());
    }
    if let Some(a) = (0..n).find(|&a| s2(&b[a]).pair(phi) != &tau * &phi[a]) {
        return bad(format!("φS² ≠ τφ at {}", h.label(a)));
    }
    let psi = compose_antipode(h, phi);
    if let Some(i) = (0..n).find(|&i| h.coproduct_basis(i).contract_right(&psi) != delta_inverse.scale(&psi[i])) {
        return bad(format!("(id⊗ψ)Δ(h) ≠ ψ(h)δ⁻¹ at {}", h.label(i)));
    }
    if let Some(a) = (0..n).find(|&a| h.mul(&h.mul(&delta_inverse, &b[a]), &delta).pair(phi) != &tau * &phi[a]) {
        return bad(format!("φ((δ⁻¹a)δ) ≠ τφ(a) at {}", h.label(a)));
    }
    Ok(ModularData {
        delta,
        delta_inverse,
        tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_like_algebra, sweedler};
    use crate::loops::{cyclic, octonion_loop16, quaternion8};
    use crate::scalar::Field;

    fn delta_e(n: usize, f: Field) -> Vec<Scalar> {
        (0..n).map(|i| if i == 0 { f.one() } else { f.zero() }).collect()
    }

    #[test]
    fn z2_system_kernel_is_delta_e() {
        let h = group_like_algebra(&cyclic(2), Field::Rational).unwrap();
        let m = integral_system(&h, Side::Left);
        assert_eq!((m.rows(), m.cols()), (4, 2));
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        assert!(!ns[0][0].is_zero());
        assert!(ns[0][1].is_zero());
    }

    #[test]
    fn gram_ranks_on_z2() {
        let f = Field::Rational;
        let h = group_like_algebra(&cyclic(2), f).unwrap();
        assert_eq!(
            is_faithful(&h, &delta_e(2, f)),
            Faithfulness {
                faithful: true,
                gram_rank: 2
            }
        );
        let eps = vec![f.one(), f.one()];
        assert_eq!(
            is_faithful(&h, &eps),
            Faithfulness {
                faithful: false,
                gram_rank: 1
            }
        );
        assert_eq!(is_faithful(&h, &[f.zero(), f.zero()]).gram_rank, 0);
    }

    #[test]
    fn counit_is_not_an_integral() {
        let f = Field::Rational;
        let h = group_like_algebra(&cyclic(2), f).unwrap();
        let eps = vec![f.one(), f.one()];
        let err = verify_invariance_identities(&h, &eps, &eps).unwrap_err();
        assert!(matches!(err, IntegralError::NotAnIntegral { side: Side::Left, .. }));
    }

    #[test]
    fn group_algebras_have_delta_e() {
        for q in [quaternion8(), octonion_loop16()] {
            let f = Field::Prime(101);
            let h = group_like_algebra(&q, f).unwrap();
            for side in [Side::Left, Side::Right] {
                let space = integral_space(&h, side);
                assert_eq!(space.len(), 1);
                assert_eq!(normalize(space[0].clone()), delta_e(q.order(), f));
            }
            let phi = faithful_left_integral(&h).unwrap();
            let md = modular_data(&h, &phi.coeffs).unwrap();
            assert_eq!(md.delta, *h.unit());
            assert!(md.tau.is_one());
        }
    }

    #[test]
    fn lambda_for_scalar_multiple() {
        let f = Field::Rational;
        let h = group_like_algebra(&quaternion8(), f).unwrap();
        let phi = delta_e(8, f);
        let three: Vec<Scalar> = phi.iter().map(|c| c * &f.from_i64(3)).collect();
        let l = lambda_of(&h, &three, &phi).unwrap();
        assert_eq!(l.via_delta, f.from_i64(3));
        assert_eq!(l.via_ratio, f.from_i64(3));
    }

    #[test]
    fn sweedler_has_nontrivial_modular_element() {
        let f = Field::Rational;
        let h = sweedler(f).unwrap();
        assert_eq!(integral_space(&h, Side::Left).len(), 1);
        assert_eq!(integral_space(&h, Side::Right).len(), 1);
        let phi = faithful_left_integral(&h).unwrap();
        assert!(integral_defect(&h, Side::Right, &phi.coeffs).is_some());
        let md = modular_data(&h, &phi.coeffs).unwrap();
        assert_eq!(md.delta, h.basis(1));
        assert_eq!(md.tau, f.from_i64(-1));
        let psi = compose_antipode(&h, &phi.coeffs);
        let r = verify_invariance_identities(&h, &phi.coeffs, &psi).unwrap();
        assert!(r.passed(), "{}", r.render(true));
    }
}
