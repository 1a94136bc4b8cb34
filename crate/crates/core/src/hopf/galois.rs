//! The four Galois maps of a Hopf quasigroup and their inverses.

use std::fmt;

use super::StructureConstants;
use crate::tensor::{Element, Tensor2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaloisMap {
    /// `a ⊗ b ↦ Δ(a)(1 ⊗ b)`
    T1,
    /// `a ⊗ b ↦ (a ⊗ 1)Δ(b)`
    T2,
    /// `a ⊗ b ↦ Δ(a)(b ⊗ 1)`
    T3,
    /// `a ⊗ b ↦ (1 ⊗ a)Δ(b)`
    T4,
}

impl GaloisMap {
    pub const ALL: [GaloisMap; 4] = [GaloisMap::T1, GaloisMap::T2, GaloisMap::T3, GaloisMap::T4];
}

impl fmt::Display for GaloisMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Apply a Galois map (or its inverse) to a tensor, extending linearly
/// from basis pairs. Inverses:
/// `T1⁻¹: a⊗b ↦ a1 ⊗ S(a2)b`, `T2⁻¹: a⊗b ↦ aS(b1) ⊗ b2`,
/// `T3⁻¹: a⊗b ↦ b2 ⊗ S⁻¹(b1)a`, `T4⁻¹: a⊗b ↦ bS⁻¹(a2) ⊗ a1`.
pub fn galois_map(h: &StructureConstants, which: GaloisMap, dir: Direction, t: &Tensor2) -> Tensor2 {
    t.flat_map(|[a, b]| basis_image(h, which, dir, a, b))
}

fn basis_image(h: &StructureConstants, which: GaloisMap, dir: Direction, a: usize, b: usize) -> Tensor2 {
    use Direction::*;
    use GaloisMap::*;
    let mut out = h.zero2();
    let mut put = |x: &Element, y: &Element, c: &crate::scalar::Scalar| {
        out.add_scaled(&Tensor2::outer(x, y), c);
    };
    match (which, dir) {
        (T1, Forward) => {
            for ([p, q], c) in h.coproduct_basis(a).iter() {
                put(&h.basis(p), h.product_basis(q, b), c);
            }
        }
        (T2, Forward) => {
            for ([p, q], c) in h.coproduct_basis(b).iter() {
                put(h.product_basis(a, p), &h.basis(q), c);
            }
        }
        (T3, Forward) => {
            for ([p, q], c) in h.coproduct_basis(a).iter() {
                put(h.product_basis(p, b), &h.basis(q), c);
            }
        }
        (T4, Forward) => {
            for ([p, q], c) in h.coproduct_basis(b).iter() {
                put(&h.basis(p), h.product_basis(a, q), c);
            }
        }
        (T1, Inverse) => {
            for ([p, q], c) in h.coproduct_basis(a).iter() {
                put(&h.basis(p), &h.mul(h.antipode_basis(q), &h.basis(b)), c);
            }
        }
        (T2, Inverse) => {
            for ([p, q], c) in h.coproduct_basis(b).iter() {
                put(&h.mul(&h.basis(a), h.antipode_basis(p)), &h.basis(q), c);
            }
        }
        (T3, Inverse) => {
            for ([p, q], c) in h.coproduct_basis(b).iter() {
                put(&h.basis(q), &h.mul(h.antipode_inverse_basis(p), &h.basis(a)), c);
            }
        }
        (T4, Inverse) => {
            for ([p, q], c) in h.coproduct_basis(a).iter() {
                put(&h.mul(&h.basis(b), h.antipode_inverse_basis(q)), &h.basis(p), c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_like_algebra, sweedler};
    use crate::loops::{octonion_loop16, quaternion8};
    use crate::scalar::Field;

    #[test]
    fn t1_on_group_algebra() {
        let q = quaternion8();
        let h = group_like_algebra(&q, Field::Rational).unwrap();
        let (u, v) = (2, 4);
        let t = Tensor2::basis(h.field(), 8, [u, v]);
        let fwd = galois_map(&h, GaloisMap::T1, Direction::Forward, &t);
        assert_eq!(fwd, Tensor2::basis(h.field(), 8, [u, q.mul(u, v)]));
        let inv = galois_map(&h, GaloisMap::T1, Direction::Inverse, &t);
        assert_eq!(inv, Tensor2::basis(h.field(), 8, [u, q.mul(q.inv(u), v)]));
    }

    #[test]
    fn round_trips_on_basis_pairs() {
        for h in [
            group_like_algebra(&octonion_loop16(), Field::Prime(101)).unwrap(),
            sweedler(Field::Rational).unwrap(),
        ] {
            let n = h.dim();
            for a in 0..n {
                for b in 0..n {
                    let t = Tensor2::basis(h.field(), n, [a, b]);
                    for w in GaloisMap::ALL {
                        let f = galois_map(&h, w, Direction::Forward, &t);
                        assert_eq!(galois_map(&h, w, Direction::Inverse, &f), t, "{w} inv∘fwd");
                        let i = galois_map(&h, w, Direction::Inverse, &t);
                        assert_eq!(galois_map(&h, w, Direction::Forward, &i), t, "{w} fwd∘inv");
                    }
                }
            }
        }
    }
}
