//! Finite-dimensional Hopf quasigroups and Hopf coquasigroups as
//! structure constants on a labeled basis `b_0, …, b_{n-1}`.

mod axioms;
mod coquasigroup;
mod export;
mod galois;

pub(crate) use axioms::names;
pub use axioms::{check_variety, verify_axioms};
pub use coquasigroup::{check_coquasigroup_variety, verify_coquasigroup};
pub use export::{export_structure, parse_structure, ExportError, ParsedStructure, StructureKind};
pub use galois::{galois_map, Direction, GaloisMap};

use std::ops::Deref;

use crate::linalg::Matrix;
use crate::loops::FiniteLoop;
use crate::scalar::{Field, Scalar};
use crate::tensor::{Element, Tensor, Tensor2, Tensor3};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("loop does not have the inverse property")]
    NotIPLoop,
    #[error("field {field} cannot host a structure of order {order}: need characteristic 0 or p > {order}")]
    FieldTooSmall { field: Field, order: usize },
    #[error("malformed structure constants: {0}")]
    Malformed(String),
    #[error("stored antipode inverse is not inverse to the antipode (column {0})")]
    AntipodeInverseMismatch(usize),
}

/// Structure constants: products and coproducts of basis elements, unit,
/// counit, antipode and its inverse. Every map is stored per basis element
/// as a sparse vector.
#[derive(Clone, PartialEq, Eq)]
pub struct StructureConstants {
    pub(crate) field: Field,
    pub(crate) labels: Vec<String>,
    /// `product[i * dim + j] = b_i b_j`
    pub(crate) product: Vec<Element>,
    pub(crate) unit: Element,
    pub(crate) coproduct: Vec<Tensor2>,
    pub(crate) counit: Vec<Scalar>,
    /// `antipode[j] = S(b_j)`
    pub(crate) antipode: Vec<Element>,
    pub(crate) antipode_inverse: Vec<Element>,
}

impl std::fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StructureConstants(dim {}, {})", self.dim(), self.field)
    }
}

/// The raw parts of a structure, in basis order.
#[derive(Debug, Clone)]
pub struct Parts {
    pub field: Field,
    pub labels: Vec<String>,
    pub product: Vec<Element>,
    pub unit: Element,
    pub coproduct: Vec<Tensor2>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Element>,
    pub antipode_inverse: Vec<Element>,
}

impl StructureConstants {
    /// Checks shapes and that the stored `S⁻¹` inverts `S`.
    pub fn new(parts: Parts) -> Result<StructureConstants, HopfError> {
        let sc = StructureConstants::from_parts_unchecked(parts)?;
        let n = sc.dim();
        for j in 0..n {
            let b = sc.basis(j);
            if sc.antipode(&sc.antipode_inverse(&b)) != b || sc.antipode_inverse(&sc.antipode(&b)) != b {
                return Err(HopfError::AntipodeInverseMismatch(j));
            }
        }
        Ok(sc)
    }

    /// Checks shapes only. Used to build deliberately broken structures.
    pub fn from_parts_unchecked(parts: Parts) -> Result<StructureConstants, HopfError> {
        let n = parts.labels.len();
        let bad = |what: &str| Err(HopfError::Malformed(what.to_string()));
        if n == 0 {
            return bad("dimension 0");
        }
        if parts.product.len() != n * n
            || parts.coproduct.len() != n
            || parts.counit.len() != n
            || parts.antipode.len() != n
            || parts.antipode_inverse.len() != n
        {
            return bad("table sizes do not match the dimension");
        }
        let f = parts.field;
        let elements_ok = parts
            .product
            .iter()
            .chain(std::iter::once(&parts.unit))
            .chain(parts.antipode.iter())
            .chain(parts.antipode_inverse.iter())
            .all(|e| e.dim() == n && e.field() == f);
        let tensors_ok = parts.coproduct.iter().all(|t| t.dim() == n && t.field() == f);
        let scalars_ok = parts.counit.iter().all(|c| c.field() == f);
        if !(elements_ok && tensors_ok && scalars_ok) {
            return bad("entry of the wrong dimension or field");
        }
        Ok(StructureConstants {
            field: f,
            labels: parts.labels,
            product: parts.product,
            unit: parts.unit,
            coproduct: parts.coproduct,
            counit: parts.counit,
            antipode: parts.antipode,
            antipode_inverse: parts.antipode_inverse,
        })
    }

    pub fn into_parts(self) -> Parts {
        Parts {
            field: self.field,
            labels: self.labels,
            product: self.product,
            unit: self.unit,
            coproduct: self.coproduct,
            counit: self.counit,
            antipode: self.antipode,
            antipode_inverse: self.antipode_inverse,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field, self.dim())
    }

    pub fn zero2(&self) -> Tensor2 {
        Tensor2::zero(self.field, self.dim())
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &Element {
        &self.product[i * self.dim() + j]
    }

    pub fn coproduct_basis(&self, i: usize) -> &Tensor2 {
        &self.coproduct[i]
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    /// `ε` as a coefficient vector.
    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_basis(&self, i: usize) -> &Element {
        &self.antipode[i]
    }

    pub fn antipode_inverse_basis(&self, i: usize) -> &Element {
        &self.antipode_inverse[i]
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = self.zero();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled(self.product_basis(i, j), &(x * y));
            }
        }
        out
    }

    pub fn coproduct(&self, a: &Element) -> Tensor2 {
        let mut out = self.zero2();
        for (i, x) in a.iter() {
            out.add_scaled(&self.coproduct[i], x);
        }
        out
    }

    pub fn counit(&self, a: &Element) -> Scalar {
        a.pair(&self.counit)
    }

    fn apply_columns(&self, cols: &[Element], a: &Element) -> Element {
        let mut out = self.zero();
        for (i, x) in a.iter() {
            out.add_scaled(&cols[i], x);
        }
        out
    }

    pub fn antipode(&self, a: &Element) -> Element {
        self.apply_columns(&self.antipode, a)
    }

    pub fn antipode_inverse(&self, a: &Element) -> Element {
        self.apply_columns(&self.antipode_inverse, a)
    }

    pub fn antipode_matrix(&self) -> Matrix {
        columns_matrix(self.field, &self.antipode)
    }

    pub fn antipode_inverse_matrix(&self) -> Matrix {
        columns_matrix(self.field, &self.antipode_inverse)
    }

    /// Legwise product in `H ⊗ H`.
    pub fn mul2(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = self.zero2();
        for ([i1, i2], c) in x.iter() {
            for ([j1, j2], d) in y.iter() {
                let t = Tensor2::outer(self.product_basis(i1, j1), self.product_basis(i2, j2));
                out.add_scaled(&t, &(c * d));
            }
        }
        out
    }

    /// Legwise product in `H ⊗ H ⊗ H`.
    pub fn mul3(&self, x: &Tensor3, y: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::zero(self.field, self.dim());
        for ([i1, i2, i3], c) in x.iter() {
            for ([j1, j2, j3], d) in y.iter() {
                let t = Tensor3::outer3(
                    self.product_basis(i1, j1),
                    self.product_basis(i2, j2),
                    self.product_basis(i3, j3),
                );
                out.add_scaled(&t, &(c * d));
            }
        }
        out
    }

    /// Apply `Δ` to leg 0 or leg 1 of a two-leg tensor.
    pub fn coproduct_on_leg(&self, t: &Tensor2, leg: usize) -> Tensor3 {
        t.flat_map(|[i, j]| {
            let mut out = Tensor3::zero(self.field, self.dim());
            let split = if leg == 0 { i } else { j };
            for ([p, q], c) in self.coproduct[split].iter() {
                let idx = if leg == 0 { [p, q, j] } else { [i, p, q] };
                out.add_term(idx, c);
            }
            out
        })
    }

    /// Multiply the two legs of a tensor.
    pub fn multiply_legs(&self, t: &Tensor2) -> Element {
        let mut out = self.zero();
        for ([i, j], c) in t.iter() {
            out.add_scaled(self.product_basis(i, j), c);
        }
        out
    }

    /// Multiply legs `(first, first + 1)` of a three-leg tensor.
    pub fn multiply_adjacent(&self, t: &Tensor3, first: usize) -> Tensor2 {
        let mut out = self.zero2();
        for ([i, j, k], c) in t.iter() {
            if first == 0 {
                for (p, v) in self.product_basis(i, j).iter() {
                    out.add_term([p, k], &(c * v));
                }
            } else {
                for (p, v) in self.product_basis(j, k).iter() {
                    out.add_term([i, p], &(c * v));
                }
            }
        }
        out
    }

    pub fn antipode_on_leg<const R: usize>(&self, t: &Tensor<R>, leg: usize) -> Tensor<R> {
        t.map_leg(leg, |i| self.antipode[i].clone())
    }

    pub fn antipode_inverse_on_leg<const R: usize>(&self, t: &Tensor<R>, leg: usize) -> Tensor<R> {
        t.map_leg(leg, |i| self.antipode_inverse[i].clone())
    }

    /// Whether `Δ(b_i)` is symmetric for every basis element.
    pub fn is_cocommutative(&self) -> bool {
        self.coproduct.iter().all(|t| *t == t.flip())
    }

    /// Associativity of the product on basis triples; least failing triple.
    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let ab = self.product_basis(a, b);
                for c in 0..n {
                    let left = self.mul(ab, &self.basis(c));
                    let right = self.mul(&self.basis(a), self.product_basis(b, c));
                    if left != right {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// Coassociativity on basis elements; least failing element.
    pub fn coassociativity_witness(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            let d = &self.coproduct[i];
            self.coproduct_on_leg(d, 0) != self.coproduct_on_leg(d, 1)
        })
    }

    /// The full linear dual on the dual basis `b^i`: products and
    /// coproducts are the transposed structure constants, `ε` becomes the
    /// unit, evaluation at `1` the counit and `S` transposes.
    pub fn transpose_dual(&self) -> StructureConstants {
        let n = self.dim();
        let f = self.field;
        let mut product = vec![Element::zero(f, n); n * n];
        for k in 0..n {
            for ([i, j], c) in self.coproduct[k].iter() {
                product[i * n + j].add_term(k, c);
            }
        }
        let mut coproduct = vec![Tensor2::zero(f, n); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product_basis(i, j).iter() {
                    coproduct[k].add_term([i, j], c);
                }
            }
        }
        let unit = Element::from_dense(f, &self.counit);
        let counit = self.unit.to_dense();
        let transpose = |cols: &[Element]| {
            let mut out = vec![Element::zero(f, n); n];
            for (j, col) in cols.iter().enumerate() {
                for (k, c) in col.iter() {
                    out[k].add_term(j, c);
                }
            }
            out
        };
        StructureConstants {
            field: f,
            labels: self.labels.iter().map(|l| format!("δ[{l}]")).collect(),
            product,
            unit,
            coproduct,
            counit,
            antipode: transpose(&self.antipode),
            antipode_inverse: transpose(&self.antipode_inverse),
        }
    }
}

fn columns_matrix(field: Field, cols: &[Element]) -> Matrix {
    let n = cols.len();
    let mut m = Matrix::zeros(field, n, n);
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col.iter() {
            m.set(i, j, c.clone());
        }
    }
    m
}

/// A Hopf quasigroup: unital, possibly non-associative, coassociative.
/// Construction checks shapes and `S⁻¹`; the axioms are checked by
/// [`verify_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfQuasigroup(StructureConstants);

impl HopfQuasigroup {
    pub fn new(sc: StructureConstants) -> HopfQuasigroup {
        HopfQuasigroup(sc)
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.0
    }

    pub fn into_structure(self) -> StructureConstants {
        self.0
    }
}

impl Deref for HopfQuasigroup {
    type Target = StructureConstants;
    fn deref(&self) -> &StructureConstants {
        &self.0
    }
}

/// A Hopf coquasigroup: unital associative, possibly non-coassociative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfCoquasigroup(StructureConstants);

impl HopfCoquasigroup {
    pub fn new(sc: StructureConstants) -> HopfCoquasigroup {
        HopfCoquasigroup(sc)
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.0
    }

    pub fn into_structure(self) -> StructureConstants {
        self.0
    }
}

impl Deref for HopfCoquasigroup {
    type Target = StructureConstants;
    fn deref(&self) -> &StructureConstants {
        &self.0
    }
}

fn check_field(field: Field, order: usize) -> Result<(), HopfError> {
    if field.admits_order(order) {
        Ok(())
    } else {
        Err(HopfError::FieldTooSmall { field, order })
    }
}

/// The loop algebra `kQ`: `Δ(u) = u ⊗ u`, `ε(u) = 1`, `S(u) = u⁻¹`.
pub fn group_like_algebra(q: &FiniteLoop, field: Field) -> Result<HopfQuasigroup, HopfError> {
    if !q.is_ip() {
        return Err(HopfError::NotIPLoop);
    }
    check_field(field, q.order())?;
    let n = q.order();
    let b = |i| Element::basis(field, n, i);
    let mut product = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            product.push(b(q.mul(u, v)));
        }
    }
    let inversion: Vec<Element> = (0..n).map(|u| b(q.inv(u))).collect();
    let sc = StructureConstants::new(Parts {
        field,
        labels: q.labels().to_vec(),
        product,
        unit: b(q.identity()),
        coproduct: (0..n).map(|u| Tensor2::basis(field, n, [u, u])).collect(),
        counit: vec![field.one(); n],
        antipode: inversion.clone(),
        antipode_inverse: inversion,
    })?;
    Ok(HopfQuasigroup::new(sc))
}

/// The function algebra `k(Q)` of a finite IP loop with basis `δ_u`:
/// `δ_u δ_v = [u = v] δ_u`, `Δ(δ_u) = Σ_v δ_v ⊗ δ_{v⁻¹u}`,
/// `ε(δ_u) = [u = e]`, `S(δ_u) = δ_{u⁻¹}`.
pub fn function_coquasigroup(q: &FiniteLoop, field: Field) -> Result<HopfCoquasigroup, HopfError> {
    if !q.is_ip() {
        return Err(HopfError::NotIPLoop);
    }
    check_field(field, q.order())?;
    let n = q.order();
    let b = |i| Element::basis(field, n, i);
    let mut product = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            product.push(if u == v { b(u) } else { Element::zero(field, n) });
        }
    }
    let coproduct = (0..n)
        .map(|u| {
            let mut t = Tensor2::zero(field, n);
            for v in 0..n {
                t.add_term([v, q.mul(q.inv(v), u)], &field.one());
            }
            t
        })
        .collect();
    let inversion: Vec<Element> = (0..n).map(|u| b(q.inv(u))).collect();
    let sc = StructureConstants::new(Parts {
        field,
        labels: q.labels().iter().map(|l| format!("δ[{l}]")).collect(),
        product,
        unit: Element::from_dense(field, &vec![field.one(); n]),
        coproduct,
        counit: (0..n)
            .map(|u| if u == q.identity() { field.one() } else { field.zero() })
            .collect(),
        antipode: inversion.clone(),
        antipode_inverse: inversion,
    })?;
    Ok(HopfCoquasigroup::new(sc))
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`,
/// `S(g) = g`, `S(x) = -gx`. Neither commutative nor cocommutative, and its
/// left integral is not a right integral.
pub fn sweedler(field: Field) -> Result<HopfQuasigroup, HopfError> {
    check_field(field, 2)?;
    let n = 4;
    // basis g^a x^c sits at index 2c + a
    let idx = |a: usize, c: usize| 2 * c + a;
    let mut product = vec![Element::zero(field, n); n * n];
    for a1 in 0..2 {
        for c1 in 0..2 {
            for a2 in 0..2 {
                for c2 in 0..2 {
                    // (g^a1 x^c1)(g^a2 x^c2) = (-1)^(c1 a2) g^(a1+a2) x^(c1+c2)
                    if c1 + c2 > 1 {
                        continue;
                    }
                    let sign = if c1 * a2 == 1 { -field.one() } else { field.one() };
                    let target = idx((a1 + a2) % 2, c1 + c2);
                    product[idx(a1, c1) * n + idx(a2, c2)].add_term(target, &sign);
                }
            }
        }
    }
    let one = field.one();
    let b = |i: usize| Element::basis(field, n, i);
    let t = |i: usize, j: usize| Tensor2::basis(field, n, [i, j]);
    let (e, g, x, gx) = (0, 1, 2, 3);
    let coproduct = vec![
        t(e, e),
        t(g, g),
        t(x, e).add(&t(g, x)),
        // Δ(gx) = (g⊗g)(x⊗1 + g⊗x) = gx ⊗ g + 1 ⊗ gx
        t(gx, g).add(&t(e, gx)),
    ];
    let counit = vec![one.clone(), one.clone(), field.zero(), field.zero()];
    // S(gx) = S(x)S(g) = -gxg = x
    let antipode = vec![b(e), b(g), b(gx).scale(&-one.clone()), b(x)];
    let antipode_inverse = vec![b(e), b(g), b(gx), b(x).scale(&-one.clone())];
    let sc = StructureConstants::new(Parts {
        field,
        labels: vec!["1".to_string(), "g".into(), "x".into(), "gx".into()],
        product,
        unit: b(e),
        coproduct,
        counit,
        antipode,
        antipode_inverse,
    })?;
    Ok(HopfQuasigroup::new(sc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::{cyclic, octonion_loop16, quaternion8};

    #[test]
    fn z2_algebra() {
        let h = group_like_algebra(&cyclic(2), Field::Rational).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.antipode_matrix().is_identity());
        assert_eq!(h.mul(&h.basis(1), &h.basis(1)), h.basis(0));
    }

    #[test]
    fn small_prime_rejected() {
        let err = group_like_algebra(&octonion_loop16(), Field::Prime(7)).unwrap_err();
        assert_eq!(
            err,
            HopfError::FieldTooSmall {
                field: Field::Prime(7),
                order: 16
            }
        );
        assert!(group_like_algebra(&octonion_loop16(), Field::Prime(17)).is_ok());
    }

    #[test]
    fn associativity_matches_loop() {
        let q8 = group_like_algebra(&quaternion8(), Field::Rational).unwrap();
        assert_eq!(q8.associativity_witness(), None);
        let o = group_like_algebra(&octonion_loop16(), Field::Rational).unwrap();
        assert!(o.associativity_witness().is_some());
        assert_eq!(o.coassociativity_witness(), None);
        assert!(o.is_cocommutative());
    }

    #[test]
    fn transpose_dual_twice_is_identity_up_to_labels() {
        let h = group_like_algebra(&quaternion8(), Field::Prime(101)).unwrap();
        let dd = h.transpose_dual().transpose_dual();
        assert_eq!(dd.product, h.product);
        assert_eq!(dd.coproduct, h.coproduct);
        assert_eq!(dd.antipode, h.antipode);
        assert_eq!(dd.unit, h.unit);
        assert_eq!(dd.counit, h.counit);
    }

    #[test]
    fn sweedler_relations() {
        let h = sweedler(Field::Rational).unwrap();
        let (g, x) = (h.basis(1), h.basis(2));
        assert_eq!(h.mul(&g, &g), h.basis(0));
        assert!(h.mul(&x, &x).is_zero());
        assert_eq!(h.mul(&x, &g), h.mul(&g, &x).scale(&Field::Rational.from_i64(-1)));
        assert!(!h.is_cocommutative());
    }
}
