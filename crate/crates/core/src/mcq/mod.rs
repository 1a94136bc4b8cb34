//! The function algebra `k(G)` of an IP loop `G`, finite or infinite, as a
//! multiplier Hopf coquasigroup.
//!
//! `k(G)` has basis `δ_u` with pointwise product `δ_uδ_v = δ_{u,v}δ_v`. It
//! has no unit when `G` is infinite, so the coproduct
//! `Δ(δ_u) = Σ_v δ_v ⊗ δ_{v⁻¹u}` is never formed; only the covered
//! products `T1..T4` are, each a finite sum.

mod export;
mod multiplier;
mod suite;

use std::collections::BTreeMap;

pub use export::{export_mcq, parse_mcq, McqExportError, McqTables};
pub use multiplier::{formal_unit, multiplier_embed, MultiplierPair};
pub use suite::{
    check_variety_dual, coassociativity_probe, prop_bridges, unit_counterexample, verify_multiplier_axioms,
    DEFAULT_WINDOW,
};

pub use crate::hopf::GaloisMap;
use crate::loops::{EnumerableQuasigroup, LoopProperty};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum McqError {
    #[error("not an IP loop on the sampled window: fails at ({0})")]
    NotIP(String),
    #[error("field {field} cannot be used: {reason}")]
    Field { field: Field, reason: String },
    #[error("multiplier actions are incompatible at ({0})")]
    IncompatibleActions(String),
}

/// A finitely supported function on `G`; no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSuppElement<E: Ord> {
    field: Field,
    terms: BTreeMap<E, Scalar>,
}

impl<E: Clone + Ord> FinSuppElement<E> {
    pub fn zero(field: Field) -> Self {
        FinSuppElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn delta(field: Field, u: E) -> Self {
        let mut a = Self::zero(field);
        a.add_term(u, &field.one());
        a
    }

    /// `Σ_{u ∈ set} δ_u`, a local unit for elements supported in `set`.
    pub fn indicator(field: Field, set: &[E]) -> Self {
        let mut a = Self::zero(field);
        for u in set {
            if a.coeff(u).is_zero() {
                a.add_term(u.clone(), &field.one());
            }
        }
        a
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn add_term(&mut self, u: E, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&u) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&u);
        } else {
            self.terms.insert(u, sum);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for (u, v) in &other.terms {
            self.add_term(u.clone(), &(v * c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &self.field.one());
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.field);
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, u: &E) -> Scalar {
        self.terms.get(u).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &E> + '_ {
        self.terms.keys()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.field);
        for (u, c) in &self.terms {
            if let Some(d) = other.terms.get(u) {
                out.add_term(u.clone(), &(c * d));
            }
        }
        out
    }

    /// Apply a map on basis elements, extended linearly.
    pub fn map_basis(&self, f: impl Fn(&E) -> E) -> Self {
        let mut out = Self::zero(self.field);
        for (u, c) in &self.terms {
            out.add_term(f(u), c);
        }
        out
    }
}

/// A finite sum of pure tensors `δ_{u₁} ⊗ … ⊗ δ_{u_r}`: an element of
/// `A^{⊗r}`, never of its multiplier algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSlice<E: Ord> {
    field: Field,
    rank: usize,
    terms: BTreeMap<Vec<E>, Scalar>,
}

impl<E: Clone + Ord> TensorSlice<E> {
    pub fn zero(field: Field, rank: usize) -> Self {
        TensorSlice {
            field,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn pure(a: &FinSuppElement<E>, b: &FinSuppElement<E>) -> Self {
        let mut t = Self::zero(a.field, 2);
        for (u, c) in a.iter() {
            for (v, d) in b.iter() {
                t.add_term(vec![u.clone(), v.clone()], &(c * d));
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<E>, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: Vec<E>, c: &Scalar) {
        debug_assert_eq!(key.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&key) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn flip(&self) -> Self {
        let mut out = Self::zero(self.field, self.rank);
        for (k, c) in &self.terms {
            out.add_term(k.iter().rev().cloned().collect(), c);
        }
        out
    }

    /// Replace leg `leg` by the legs of `f(δ_u)`.
    pub fn expand_leg(&self, leg: usize, f: impl Fn(&E) -> TensorSlice<E>) -> Self {
        let mut out: Option<Self> = None;
        for (k, c) in &self.terms {
            let inner = f(&k[leg]);
            let acc = out.get_or_insert_with(|| Self::zero(self.field, self.rank - 1 + inner.rank));
            for (ik, d) in &inner.terms {
                let mut key = k[..leg].to_vec();
                key.extend(ik.iter().cloned());
                key.extend(k[leg + 1..].iter().cloned());
                acc.add_term(key, &(c * d));
            }
        }
        out.unwrap_or_else(|| Self::zero(self.field, self.rank + 1))
    }

    /// Apply a linear map to one leg.
    pub fn map_leg(&self, leg: usize, f: impl Fn(&E) -> FinSuppElement<E>) -> Self {
        let mut out = Self::zero(self.field, self.rank);
        for (k, c) in &self.terms {
            for (u, d) in f(&k[leg]).iter() {
                let mut key = k.clone();
                key[leg] = u.clone();
                out.add_term(key, &(c * d));
            }
        }
        out
    }

    /// Multiply leg `j` into leg `i` (pointwise), removing leg `j`.
    pub fn multiply_legs(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.field, self.rank - 1);
        for (k, c) in &self.terms {
            if k[i] == k[j] {
                let key: Vec<E> = k
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != j)
                    .map(|(_, u)| u.clone())
                    .collect();
                out.add_term(key, c);
            }
        }
        out
    }

    /// Multiply each leg by the matching factor.
    pub fn cover(&self, factors: &[&FinSuppElement<E>]) -> Self {
        let mut out = Self::zero(self.field, self.rank);
        for (k, c) in &self.terms {
            let mut coeff = c.clone();
            for (u, f) in k.iter().zip(factors) {
                coeff = &coeff * &f.coeff(u);
                if coeff.is_zero() {
                    break;
                }
            }
            out.add_term(k.clone(), &coeff);
        }
        out
    }

    /// Apply a functional to one leg.
    pub fn contract_leg(&self, leg: usize, f: impl Fn(&E) -> Scalar) -> Self {
        let mut out = Self::zero(self.field, self.rank - 1);
        for (k, c) in &self.terms {
            let v = f(&k[leg]);
            let mut key = k.clone();
            key.remove(leg);
            out.add_term(key, &(c * &v));
        }
        out
    }

    /// A rank-one slice as an element.
    pub fn into_element(self) -> FinSuppElement<E> {
        assert_eq!(self.rank, 1);
        let mut out = FinSuppElement::zero(self.field);
        for (mut k, c) in self.terms {
            out.add_term(k.pop().expect("rank one"), &c);
        }
        out
    }
}

/// `k(G)` together with its coalgebra structure in covered form.
#[derive(Debug, Clone, Copy)]
pub struct FunctionAlgebra<'q, Q> {
    q: &'q Q,
    field: Field,
}

/// Build `k(G)` after checking the inverse property on `window(ip_window)`
/// and, for finite `G`, that the field admits its order.
pub fn function_algebra<Q: EnumerableQuasigroup>(
    q: &Q,
    field: Field,
    ip_window: usize,
) -> Result<FunctionAlgebra<'_, Q>, McqError> {
    if let Some(n) = q.order() {
        if !field.admits_order(n) {
            return Err(McqError::Field {
                field,
                reason: format!("characteristic must exceed the order {n}"),
            });
        }
    }
    let w = q.window(ip_window);
    let o = q.check_on(&w, LoopProperty::InverseProperty);
    if let Some(t) = o.witness {
        let parts: Vec<String> = t.iter().map(|e| q.encode(e)).collect();
        return Err(McqError::NotIP(parts.join(", ")));
    }
    Ok(FunctionAlgebra { q, field })
}

pub type Fin<Q> = FinSuppElement<<Q as EnumerableQuasigroup>::Elem>;
pub type Slice<Q> = TensorSlice<<Q as EnumerableQuasigroup>::Elem>;

impl<'q, Q: EnumerableQuasigroup> FunctionAlgebra<'q, Q> {
    pub fn quasigroup(&self) -> &'q Q {
        self.q
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn delta(&self, u: &Q::Elem) -> Fin<Q> {
        FinSuppElement::delta(self.field, u.clone())
    }

    pub fn zero(&self) -> Fin<Q> {
        FinSuppElement::zero(self.field)
    }

    pub fn local_unit(&self, window: &[Q::Elem]) -> Fin<Q> {
        FinSuppElement::indicator(self.field, window)
    }

    pub fn mul(&self, a: &Fin<Q>, b: &Fin<Q>) -> Fin<Q> {
        a.mul(b)
    }

    /// `ε̂(δ_u) = [u = e]`.
    pub fn counit(&self, a: &Fin<Q>) -> Scalar {
        a.coeff(&self.q.identity())
    }

    /// `Ŝ(δ_u) = δ_{u⁻¹}`.
    pub fn antipode(&self, a: &Fin<Q>) -> Fin<Q> {
        a.map_basis(|u| self.q.inv(u))
    }

    /// `Ŝ⁻¹(δ_u) = δ_{u⁻¹}` as well: inversion is an involution.
    pub fn antipode_inverse(&self, a: &Fin<Q>) -> Fin<Q> {
        a.map_basis(|u| self.q.inv(u))
    }

    /// A Galois map on basis elements: `T1(δ_u⊗δ_w) = δ_{uw⁻¹}⊗δ_w`,
    /// `T2(δ_a⊗δ_u) = δ_a⊗δ_{a⁻¹u}`, `T3(δ_u⊗δ_b) = δ_b⊗δ_{b⁻¹u}`,
    /// `T4(δ_a⊗δ_u) = δ_{ua⁻¹}⊗δ_a`.
    pub fn t_basis(&self, which: GaloisMap, x: &Q::Elem, y: &Q::Elem) -> [Q::Elem; 2] {
        let q = self.q;
        match which {
            GaloisMap::T1 => [q.mul(x, &q.inv(y)), y.clone()],
            GaloisMap::T2 => [x.clone(), q.mul(&q.inv(x), y)],
            GaloisMap::T3 => [y.clone(), q.mul(&q.inv(y), x)],
            GaloisMap::T4 => [q.mul(y, &q.inv(x)), x.clone()],
        }
    }

    /// `T(a ⊗ b)`, by bilinearity.
    pub fn t_map(&self, which: GaloisMap, a: &Fin<Q>, b: &Fin<Q>) -> Slice<Q> {
        let mut out = TensorSlice::zero(self.field, 2);
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_term(self.t_basis(which, x, y).to_vec(), &(c * d));
            }
        }
        out
    }

    /// `T` applied to each pure tensor of a slice.
    pub fn t_map_slice(&self, which: GaloisMap, t: &Slice<Q>) -> Slice<Q> {
        let mut out = TensorSlice::zero(self.field, 2);
        for (k, c) in t.iter() {
            out.add_term(self.t_basis(which, &k[0], &k[1]).to_vec(), c);
        }
        out
    }

    /// Inverses written through the maps themselves and the antipode:
    /// `T1⁻¹(a⊗b) = a₁⊗S(a₂)b = (id⊗S)T4(S⁻¹(b)⊗a)`,
    /// `T2⁻¹(a⊗b) = aS(b₁)⊗b₂ = (S⊗id)T3(b⊗S⁻¹(a))`,
    /// `T3⁻¹(a⊗b) = b₂⊗S⁻¹(b₁)a = flip (S⁻¹⊗id)T2(S(a)⊗b)`,
    /// `T4⁻¹(a⊗b) = bS⁻¹(a₂)⊗a₁ = flip (id⊗S⁻¹)T1(a⊗S(b))`.
    pub fn t_inverse(&self, which: GaloisMap, a: &Fin<Q>, b: &Fin<Q>) -> Slice<Q> {
        let s = |x: &Q::Elem| self.antipode(&self.delta(x));
        let si = |x: &Q::Elem| self.antipode_inverse(&self.delta(x));
        match which {
            GaloisMap::T1 => self.t_map(GaloisMap::T4, &self.antipode_inverse(b), a).map_leg(1, s),
            GaloisMap::T2 => self.t_map(GaloisMap::T3, b, &self.antipode_inverse(a)).map_leg(0, s),
            GaloisMap::T3 => self.t_map(GaloisMap::T2, &self.antipode(a), b).map_leg(0, si).flip(),
            GaloisMap::T4 => self.t_map(GaloisMap::T1, a, &self.antipode(b)).map_leg(1, si).flip(),
        }
    }

    pub fn t_inverse_slice(&self, which: GaloisMap, t: &Slice<Q>) -> Slice<Q> {
        let mut out = TensorSlice::zero(self.field, 2);
        for (k, c) in t.iter() {
            out.add_scaled(&self.t_inverse(which, &self.delta(&k[0]), &self.delta(&k[1])), c);
        }
        out
    }

    pub fn encode(&self, u: &Q::Elem) -> String {
        self.q.encode(u)
    }

    pub fn witness(&self, parts: &[&Q::Elem]) -> String {
        let names: Vec<String> = parts.iter().map(|u| self.encode(u)).collect();
        crate::report::witness(&names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::{integers, octonion_loop16};

    #[test]
    fn pointwise_product() {
        let z = integers();
        let k = function_algebra(&z, Field::Rational, 4).unwrap();
        assert_eq!(k.mul(&k.delta(&3), &k.delta(&3)), k.delta(&3));
        assert!(k.mul(&k.delta(&3), &k.delta(&4)).is_zero());
    }

    #[test]
    fn t2_on_integers() {
        let z = integers();
        let k = function_algebra(&z, Field::Rational, 4).unwrap();
        let t = k.t_map(GaloisMap::T2, &k.delta(&2), &k.delta(&5));
        assert_eq!(t, TensorSlice::pure(&k.delta(&2), &k.delta(&3)));
    }

    #[test]
    fn inverses_round_trip_on_octonions() {
        let o = octonion_loop16();
        let k = function_algebra(&o, Field::Prime(101), 8).unwrap();
        for which in GaloisMap::ALL {
            for u in 0..16 {
                for w in 0..16 {
                    let start = TensorSlice::pure(&k.delta(&u), &k.delta(&w));
                    let there = k.t_map_slice(which, &start);
                    assert_eq!(k.t_inverse_slice(which, &there), start, "{which}");
                    assert_eq!(
                        k.t_map_slice(which, &k.t_inverse(which, &k.delta(&u), &k.delta(&w))),
                        start
                    );
                }
            }
        }
    }

    #[test]
    fn small_field_rejected_for_finite_loops() {
        let o = octonion_loop16();
        assert!(matches!(
            function_algebra(&o, Field::Prime(7), 2),
            Err(McqError::Field { .. })
        ));
    }
}
