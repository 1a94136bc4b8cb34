//! Exhaustive search for IP loops of small order, up to isomorphism.
//!
//! Every IP loop is isomorphic to one whose inversion map is
//! `(1 2)(3 4)…(2k-1 2k)` with the remaining elements self-inverse, so one
//! backtracking run per `k` covers all of them. Each assignment `uv = w`
//! propagates the IP consequences `u⁻¹w = v`, `wv⁻¹ = u` and
//! `v⁻¹u⁻¹ = w⁻¹`. Isomorphic copies are rejected by hashing the
//! lexicographically least relabeled table.

use std::collections::HashSet;

use super::builders::next_permutation;
use super::{FiniteLoop, LoopError, LoopProperty};

pub const DEFAULT_SEARCH_BOUND: usize = 8;

/// Properties a loop must have (`require`) or lack (`forbid`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoopFilter {
    pub require: Vec<LoopProperty>,
    pub forbid: Vec<LoopProperty>,
}

impl LoopFilter {
    pub fn any() -> LoopFilter {
        LoopFilter::default()
    }

    pub fn require(mut self, p: LoopProperty) -> LoopFilter {
        self.require.push(p);
        self
    }

    pub fn forbid(mut self, p: LoopProperty) -> LoopFilter {
        self.forbid.push(p);
        self
    }

    pub fn accepts(&self, q: &FiniteLoop) -> bool {
        self.require.iter().all(|&p| q.check_property(p).holds)
            && self.forbid.iter().all(|&p| !q.check_property(p).holds)
    }
}

const EMPTY: u8 = u8::MAX;

struct State {
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u16>,
    col_used: Vec<u16>,
    inv: Vec<u8>,
    trail: Vec<usize>,
}

impl State {
    fn new(n: usize, inv: Vec<u8>) -> State {
        State {
            n,
            cells: vec![EMPTY; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            inv,
            trail: Vec::new(),
        }
    }

    /// Assign `a·b = w` and everything it forces; false on contradiction.
    fn assign(&mut self, a: u8, b: u8, w: u8) -> bool {
        let mut queue = vec![(a, b, w)];
        while let Some((a, b, w)) = queue.pop() {
            let cell = a as usize * self.n + b as usize;
            let cur = self.cells[cell];
            if cur == w {
                continue;
            }
            if cur != EMPTY {
                return false;
            }
            let bit = 1u16 << w;
            if self.row_used[a as usize] & bit != 0 || self.col_used[b as usize] & bit != 0 {
                return false;
            }
            self.cells[cell] = w;
            self.row_used[a as usize] |= bit;
            self.col_used[b as usize] |= bit;
            self.trail.push(cell);
            let (ia, ib, iw) = (self.inv[a as usize], self.inv[b as usize], self.inv[w as usize]);
            queue.push((ia, w, b));
            queue.push((w, ib, a));
            queue.push((ib, ia, iw));
        }
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let cell = self.trail.pop().unwrap();
            let w = self.cells[cell];
            let bit = 1u16 << w;
            self.row_used[cell / self.n] &= !bit;
            self.col_used[cell % self.n] &= !bit;
            self.cells[cell] = EMPTY;
        }
    }

    /// Empty cell with the fewest candidates; `Err` if some cell has none.
    fn choose(&self) -> Result<Option<(usize, u16)>, ()> {
        let full = (1u16 << self.n) - 1;
        let mut best: Option<(usize, u16, u32)> = None;
        for cell in 0..self.n * self.n {
            if self.cells[cell] != EMPTY {
                continue;
            }
            let cand = full & !(self.row_used[cell / self.n] | self.col_used[cell % self.n]);
            let count = cand.count_ones();
            if count == 0 {
                return Err(());
            }
            if best.is_none_or(|(_, _, c)| count < c) {
                best = Some((cell, cand, count));
                if count == 1 {
                    break;
                }
            }
        }
        Ok(best.map(|(cell, cand, _)| (cell, cand)))
    }
}

fn complete(state: &mut State, found: &mut dyn FnMut(&[u8])) {
    match state.choose() {
        Err(()) => {}
        Ok(None) => found(&state.cells),
        Ok(Some((cell, cand))) => {
            let (a, b) = ((cell / state.n) as u8, (cell % state.n) as u8);
            for w in 0..state.n as u8 {
                if cand & (1 << w) == 0 {
                    continue;
                }
                let mark = state.trail.len();
                if state.assign(a, b, w) {
                    complete(state, found);
                }
                state.undo(mark);
            }
        }
    }
}

/// Lexicographically least table over relabelings fixing the identity.
fn canonical_form(n: usize, table: &[u8]) -> Vec<u8> {
    let mut best: Vec<u8> = table.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut pos = vec![0usize; n];
    let mut candidate = vec![0u8; n * n];
    while next_permutation(&mut perm[1..]) {
        // perm maps new index -> old index
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let mut ordering = std::cmp::Ordering::Equal;
        for i in 0..n * n {
            let v = pos[table[perm[i / n] * n + perm[i % n]] as usize] as u8;
            candidate[i] = v;
            if ordering == std::cmp::Ordering::Equal {
                ordering = v.cmp(&best[i]);
                if ordering == std::cmp::Ordering::Greater {
                    break;
                }
            }
        }
        if ordering == std::cmp::Ordering::Less {
            best.copy_from_slice(&candidate);
        }
    }
    best
}

/// All IP loops of the given order satisfying `filter`, one per
/// isomorphism class, in order of discovery.
pub fn search_ip_loops(order: usize, filter: &LoopFilter, bound: usize) -> Result<Vec<FiniteLoop>, LoopError> {
    if order > bound || order > 15 {
        return Err(LoopError::BoundExceeded { order, bound });
    }
    if order == 0 {
        return Ok(Vec::new());
    }
    let n = order;
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    for pairs in 0..=(n - 1) / 2 {
        let mut inv: Vec<u8> = (0..n as u8).collect();
        for p in 0..pairs {
            inv.swap(2 * p + 1, 2 * p + 2);
        }
        let mut state = State::new(n, inv.clone());
        let mut ok = true;
        for u in 0..n as u8 {
            ok &= state.assign(0, u, u) && state.assign(u, 0, u) && state.assign(u, inv[u as usize], 0);
        }
        if !ok {
            continue;
        }
        complete(&mut state, &mut |cells| {
            let canon = canonical_form(n, cells);
            if seen.contains(&canon) {
                return;
            }
            seen.insert(canon.clone());
            let table = canon.iter().map(|&x| x as usize).collect();
            let q = FiniteLoop::from_index_table(labels.clone(), table).expect("search produced a loop table");
            assert!(q.is_ip(), "search produced a non-IP loop");
            if filter.accepts(&q) {
                out.push(q);
            }
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_of_small_order() {
        let assoc = LoopFilter::any().require(LoopProperty::Associative);
        let counts: Vec<usize> = (1..=4)
            .map(|n| search_ip_loops(n, &assoc, DEFAULT_SEARCH_BOUND).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2]);
    }

    #[test]
    fn moufang_loops_of_order_two() {
        let found = search_ip_loops(2, &LoopFilter::any().require(LoopProperty::Moufang), 8).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].table(), &[0, 1, 1, 0]);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            search_ip_loops(9, &LoopFilter::any(), DEFAULT_SEARCH_BOUND).unwrap_err(),
            LoopError::BoundExceeded { order: 9, bound: 8 }
        );
    }

    #[test]
    fn order_five_ip_loops_are_groups() {
        let all = search_ip_loops(5, &LoopFilter::any(), 8).unwrap();
        for q in &all {
            assert!(q.check_property(LoopProperty::Associative).holds);
        }
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn canonical_form_identifies_relabelings() {
        let z4: Vec<u8> = (0..16).map(|k| ((k / 4 + k % 4) % 4) as u8).collect();
        // swap labels 1 and 3
        let sigma = [0u8, 3, 2, 1];
        let mut other = vec![0u8; 16];
        for a in 0..4 {
            for b in 0..4 {
                other[sigma[a] as usize * 4 + sigma[b] as usize] = sigma[z4[a * 4 + b] as usize];
            }
        }
        assert_eq!(canonical_form(4, &z4), canonical_form(4, &other));
    }
}
