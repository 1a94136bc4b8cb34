//! Sparse coefficient containers over a fixed finite basis.
//!
//! [`Element`] is a vector, [`Tensor`] an element of the `R`-fold tensor
//! power. Both keep their terms in ordered maps and never store zeros, so
//! structural equality is mathematical equality and iteration order is
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    field: Field,
    dim: usize,
    coeffs: BTreeMap<usize, Scalar>,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.coeffs.iter().map(|(i, c)| format!("{c}*b{i}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Element {
    pub fn zero(field: Field, dim: usize) -> Element {
        Element {
            field,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(field: Field, dim: usize, i: usize) -> Element {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut e = Element::zero(field, dim);
        e.coeffs.insert(i, field.one());
        e
    }

    pub fn from_dense(field: Field, coeffs: &[Scalar]) -> Element {
        let mut e = Element::zero(field, coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            e.add_term(i, c);
        }
        e
    }

    pub fn from_terms<'a>(field: Field, dim: usize, terms: impl IntoIterator<Item = (usize, &'a Scalar)>) -> Element {
        let mut e = Element::zero(field, dim);
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.coeffs.get(&i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.get(i)).collect()
    }

    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        debug_assert!(i < self.dim);
        add_into(&mut self.coeffs, i, c);
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, v) in other.iter() {
            self.add_term(i, &(v * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero(self.field, self.dim);
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &self.field.one());
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &-self.field.one());
        out
    }

    /// Standard pairing with a coefficient vector: `sum_i self_i * dual_i`.
    pub fn pair(&self, dual: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (i, c) in self.iter() {
            if !dual[i].is_zero() {
                acc += &(c * &dual[i]);
            }
        }
        acc
    }
}

fn add_into<K: Ord + Clone>(map: &mut BTreeMap<K, Scalar>, key: K, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, c.clone());
        }
    }
}

/// An element of the `R`-fold tensor power of a `dim`-dimensional space,
/// keyed by basis multi-indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor<const R: usize> {
    field: Field,
    dim: usize,
    coeffs: BTreeMap<[usize; R], Scalar>,
}

pub type Tensor2 = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const R: usize> fmt::Debug for Tensor<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                let legs: Vec<String> = k.iter().map(|i| format!("b{i}")).collect();
                format!("{c}*{}", legs.join("⊗"))
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<const R: usize> Tensor<R> {
    pub fn zero(field: Field, dim: usize) -> Self {
        Tensor {
            field,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(field: Field, dim: usize, idx: [usize; R]) -> Self {
        let mut t = Self::zero(field, dim);
        t.add_term(idx, &field.one());
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, idx: [usize; R]) -> Scalar {
        self.coeffs.get(&idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = ([usize; R], &Scalar)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, idx: [usize; R], c: &Scalar) {
        debug_assert!(idx.iter().all(|&i| i < self.dim));
        add_into(&mut self.coeffs, idx, c);
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k, &(v * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.field, self.dim);
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &self.field.one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-self.field.one());
        out
    }

    /// Apply a linear map (given on basis vectors) to one leg.
    pub fn map_leg(&self, leg: usize, f: impl Fn(usize) -> Element) -> Self {
        let mut out = Self::zero(self.field, self.dim);
        for (k, c) in self.iter() {
            for (j, v) in f(k[leg]).iter() {
                let mut idx = k;
                idx[leg] = j;
                out.add_term(idx, &(c * v));
            }
        }
        out
    }

    /// Linear map on basis tensors, extended linearly.
    pub fn flat_map<const S: usize>(&self, f: impl Fn([usize; R]) -> Tensor<S>) -> Tensor<S> {
        let mut out = Tensor::<S>::zero(self.field, self.dim);
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }
}

impl Tensor<2> {
    pub fn outer(a: &Element, b: &Element) -> Tensor2 {
        let mut t = Tensor2::zero(a.field(), a.dim());
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                t.add_term([i, j], &(x * y));
            }
        }
        t
    }

    pub fn flip(&self) -> Tensor2 {
        let mut out = Tensor2::zero(self.field, self.dim);
        for ([i, j], c) in self.iter() {
            out.add_term([j, i], c);
        }
        out
    }

    /// Contract the second leg against a coefficient vector.
    pub fn contract_right(&self, dual: &[Scalar]) -> Element {
        let mut out = Element::zero(self.field, self.dim);
        for ([i, j], c) in self.iter() {
            if !dual[j].is_zero() {
                out.add_term(i, &(c * &dual[j]));
            }
        }
        out
    }

    /// Contract the first leg against a coefficient vector.
    pub fn contract_left(&self, dual: &[Scalar]) -> Element {
        self.flip().contract_right(dual)
    }
}

impl Tensor<3> {
    pub fn outer3(a: &Element, b: &Element, c: &Element) -> Tensor3 {
        let mut t = Tensor3::zero(a.field(), a.dim());
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                for (k, z) in c.iter() {
                    t.add_term([i, j, k], &(&xy * z));
                }
            }
        }
        t
    }
}
