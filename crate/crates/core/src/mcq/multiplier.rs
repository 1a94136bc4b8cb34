//! Multipliers of `k(G)` as compatible pairs of actions.

use super::{Fin, FunctionAlgebra, McqError};
use crate::loops::EnumerableQuasigroup;

type Action<'a, Q> = Box<dyn Fn(&Fin<Q>) -> Fin<Q> + 'a>;

/// `m` acting by `b ↦ mb` and `a ↦ am`, with `(am)b = a(mb)`.
pub struct MultiplierPair<'a, Q: EnumerableQuasigroup> {
    pub left: Action<'a, Q>,
    pub right: Action<'a, Q>,
}

impl<'a, Q: EnumerableQuasigroup> MultiplierPair<'a, Q> {
    /// Check `R(a)b = aL(b)` on all basis pairs of the window.
    pub fn check_compatible(&self, k: &FunctionAlgebra<'_, Q>, window: &[Q::Elem]) -> Result<(), McqError> {
        for a in window {
            for b in window {
                let (da, db) = (k.delta(a), k.delta(b));
                if k.mul(&(self.right)(&da), &db) != k.mul(&da, &(self.left)(&db)) {
                    return Err(McqError::IncompatibleActions(k.witness(&[a, b])));
                }
            }
        }
        Ok(())
    }
}

/// The unit `Σ_u δ_u` of the multiplier algebra: both actions are the
/// identity, and no finite sum is formed.
pub fn formal_unit<'a, Q: EnumerableQuasigroup + 'a>(
    k: &FunctionAlgebra<'_, Q>,
    window: &[Q::Elem],
) -> Result<MultiplierPair<'a, Q>, McqError> {
    let m = MultiplierPair {
        left: Box::new(|b: &Fin<Q>| b.clone()),
        right: Box::new(|a: &Fin<Q>| a.clone()),
    };
    m.check_compatible(k, window)?;
    Ok(m)
}

/// An algebra element as a multiplier, acting by pointwise product.
pub fn multiplier_embed<'a, Q: EnumerableQuasigroup + 'a>(
    k: &FunctionAlgebra<'_, Q>,
    x: &Fin<Q>,
    window: &[Q::Elem],
) -> Result<MultiplierPair<'a, Q>, McqError> {
    let (l, r) = (x.clone(), x.clone());
    let m = MultiplierPair {
        left: Box::new(move |b: &Fin<Q>| l.mul(b)),
        right: Box::new(move |a: &Fin<Q>| a.mul(&r)),
    };
    m.check_compatible(k, window)?;
    Ok(m)
}
