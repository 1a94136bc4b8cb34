//! Finite loops given by Cayley tables, countable quasigroups given by
//! computable operations, and exhaustive checkers for the loop laws.

mod builders;
mod enumerable;
mod search;
mod table;

pub use builders::{cyclic, direct_product, octonion_loop16, quaternion8, symmetric, OCTONION_TRIPLES};
pub use enumerable::{free_group, integers, EnumerableQuasigroup, FreeGroup, Integers, Word};
pub use search::{search_ip_loops, LoopFilter, DEFAULT_SEARCH_BOUND};
pub use table::{export_table, parse_table, TableError};

use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => write!(f, "row"),
            Axis::Column => write!(f, "column"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoopError {
    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("not a Latin square: symbol `{symbol}` repeated in {axis} {index}")]
    NotLatinSquare { axis: Axis, index: usize, symbol: String },
    #[error("not a Latin square: unknown symbol `{symbol}` in {axis} {index}")]
    UnknownSymbol { axis: Axis, index: usize, symbol: String },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element `{0}` has no two-sided inverse")]
    NoTwoSidedInverse(String),
    #[error("empty table")]
    Empty,
    #[error("search order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("bad element encoding `{0}`")]
    BadEncoding(String),
}

/// A finite loop: a Latin square with a two-sided identity, stored with
/// the identity re-indexed to 0.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLoop {
    labels: Vec<String>,
    table: Vec<usize>,
    inverse: Vec<usize>,
    ip: bool,
}

impl fmt::Debug for FiniteLoop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteLoop(order {}, labels {:?})", self.order(), self.labels)
    }
}

impl FiniteLoop {
    /// Validate an index table (`table[i * n + j]` is the index of `i * j`).
    /// The identity is found by scanning and moved to index 0.
    pub fn from_index_table(labels: Vec<String>, table: Vec<usize>) -> Result<FiniteLoop, LoopError> {
        let n = labels.len();
        if n == 0 {
            return Err(LoopError::Empty);
        }
        assert_eq!(table.len(), n * n, "index table size");
        check_latin(&labels, &table)?;
        let e = (0..n)
            .find(|&e| (0..n).all(|j| table[e * n + j] == j && table[j * n + e] == j))
            .ok_or(LoopError::NoIdentity)?;
        let (labels, table) = if e == 0 {
            (labels, table)
        } else {
            reindex_identity_first(labels, &table, e)
        };
        let mut inverse = vec![0; n];
        for u in 0..n {
            let v = (0..n)
                .find(|&v| table[u * n + v] == 0)
                .expect("Latin row contains the identity");
            if table[v * n + u] != 0 {
                return Err(LoopError::NoTwoSidedInverse(labels[u].clone()));
            }
            inverse[u] = v;
        }
        let mut q = FiniteLoop {
            labels,
            table,
            inverse,
            ip: false,
        };
        q.ip = q.check_property(LoopProperty::InverseProperty).holds;
        Ok(q)
    }

    /// Build from a square array of symbols. Row `i` and column `i` are
    /// labeled by `labels[i]`; every entry must be one of the labels.
    pub fn from_symbol_table(labels: &[String], raw: &[Vec<String>]) -> Result<FiniteLoop, LoopError> {
        let n = labels.len();
        if raw.len() != n {
            return Err(LoopError::NotSquare {
                row: raw.len().min(n),
                len: raw.get(n).map_or(0, Vec::len),
                order: n,
            });
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(LoopError::NotLatinSquare {
                    axis: Axis::Row,
                    index: 0,
                    symbol: l.clone(),
                });
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(LoopError::NotSquare {
                    row: r,
                    len: row.len(),
                    order: n,
                });
            }
            let mut seen = vec![false; n];
            for sym in row {
                let Some(&k) = index.get(sym.as_str()) else {
                    return Err(LoopError::UnknownSymbol {
                        axis: Axis::Row,
                        index: r,
                        symbol: sym.clone(),
                    });
                };
                if seen[k] {
                    return Err(LoopError::NotLatinSquare {
                        axis: Axis::Row,
                        index: r,
                        symbol: sym.clone(),
                    });
                }
                seen[k] = true;
                table.push(k);
            }
        }
        FiniteLoop::from_index_table(labels.to_vec(), table)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Index of the identity (always 0 after construction).
    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Whether the inverse property holds (recorded at construction).
    pub fn is_ip(&self) -> bool {
        self.ip
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Exhaustive check of a law over all element tuples.
    pub fn check_property(&self, p: LoopProperty) -> PropertyOutcome<usize> {
        let all: Vec<usize> = self.elements().collect();
        check_law(p, &all, &|a, b| self.mul(*a, *b), &|a| self.inv(*a))
    }

    /// Check every law of a variety; the first failing law supplies the witness.
    pub fn check_variety(&self, v: Variety) -> PropertyOutcome<usize> {
        combine(v.loop_properties().iter().map(|&p| self.check_property(p)))
    }

    /// Same loop with new labels (used by exporters and tests).
    pub fn relabeled(&self, labels: Vec<String>) -> FiniteLoop {
        assert_eq!(labels.len(), self.order());
        FiniteLoop { labels, ..self.clone() }
    }
}

fn check_latin(labels: &[String], table: &[usize]) -> Result<(), LoopError> {
    let n = labels.len();
    for r in 0..n {
        let mut seen = vec![false; n];
        for c in 0..n {
            let k = table[r * n + c];
            if k >= n {
                return Err(LoopError::UnknownSymbol {
                    axis: Axis::Row,
                    index: r,
                    symbol: k.to_string(),
                });
            }
            if seen[k] {
                return Err(LoopError::NotLatinSquare {
                    axis: Axis::Row,
                    index: r,
                    symbol: labels[k].clone(),
                });
            }
            seen[k] = true;
        }
    }
    for c in 0..n {
        let mut seen = vec![false; n];
        for r in 0..n {
            let k = table[r * n + c];
            if seen[k] {
                return Err(LoopError::NotLatinSquare {
                    axis: Axis::Column,
                    index: c,
                    symbol: labels[k].clone(),
                });
            }
            seen[k] = true;
        }
    }
    Ok(())
}

/// Move index `e` to position 0, keeping the other elements in order.
fn reindex_identity_first(labels: Vec<String>, table: &[usize], e: usize) -> (Vec<String>, Vec<usize>) {
    let n = labels.len();
    let order: Vec<usize> = std::iter::once(e).chain((0..n).filter(|&i| i != e)).collect();
    let mut new_index = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let new_labels = order.iter().map(|&o| labels[o].clone()).collect();
    let mut new_table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            new_table[new_index[a] * n + new_index[b]] = new_index[table[a * n + b]];
        }
    }
    (new_labels, new_table)
}

/// The quantified laws a loop may satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LoopProperty {
    /// `u⁻¹(uv) = v = (vu)u⁻¹`
    InverseProperty,
    /// `u(vu) = (uv)u`
    Flexible,
    /// `u(uv) = (uu)v`
    LeftAlternative,
    /// `(uv)v = u(vv)`
    RightAlternative,
    /// `h(g(hf)) = ((hg)h)f`
    Moufang,
    /// `(ab)c = a(bc)`
    Associative,
    /// `ab = ba`
    Commutative,
}

impl LoopProperty {
    pub const ALL: [LoopProperty; 7] = [
        LoopProperty::InverseProperty,
        LoopProperty::Flexible,
        LoopProperty::LeftAlternative,
        LoopProperty::RightAlternative,
        LoopProperty::Moufang,
        LoopProperty::Associative,
        LoopProperty::Commutative,
    ];

    /// Number of quantified variables.
    pub fn arity(self) -> usize {
        match self {
            LoopProperty::Moufang | LoopProperty::Associative => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LoopProperty::InverseProperty => "IP",
            LoopProperty::Flexible => "flexible",
            LoopProperty::LeftAlternative => "left-alternative",
            LoopProperty::RightAlternative => "right-alternative",
            LoopProperty::Moufang => "Moufang",
            LoopProperty::Associative => "associative",
            LoopProperty::Commutative => "commutative",
        }
    }
}

impl fmt::Display for LoopProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LoopProperty {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        LoopProperty::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown loop property `{s}`"))
    }
}

/// The three varieties shared by loops, Hopf quasigroups and their duals.
/// `Alternative` includes flexibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variety {
    Flexible,
    Alternative,
    Moufang,
}

impl Variety {
    pub const ALL: [Variety; 3] = [Variety::Flexible, Variety::Alternative, Variety::Moufang];

    pub fn loop_properties(self) -> &'static [LoopProperty] {
        match self {
            Variety::Flexible => &[LoopProperty::Flexible],
            Variety::Alternative => &[
                LoopProperty::Flexible,
                LoopProperty::LeftAlternative,
                LoopProperty::RightAlternative,
            ],
            Variety::Moufang => &[LoopProperty::Moufang],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variety::Flexible => "flexible",
            Variety::Alternative => "alternative",
            Variety::Moufang => "Moufang",
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of an exhaustive law check. `witness` is the lexicographically
/// least counterexample tuple when the law fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome<E> {
    pub holds: bool,
    pub witness: Option<Vec<E>>,
}

impl<E> PropertyOutcome<E> {
    pub fn holds() -> Self {
        PropertyOutcome {
            holds: true,
            witness: None,
        }
    }

    pub fn fails(witness: Vec<E>) -> Self {
        PropertyOutcome {
            holds: false,
            witness: Some(witness),
        }
    }
}

pub(crate) fn combine<E>(outcomes: impl Iterator<Item = PropertyOutcome<E>>) -> PropertyOutcome<E> {
    for o in outcomes {
        if !o.holds {
            return o;
        }
    }
    PropertyOutcome::holds()
}

/// Evaluate one law on a single tuple.
pub fn law_holds_at<E: PartialEq>(p: LoopProperty, t: &[&E], mul: &dyn Fn(&E, &E) -> E, inv: &dyn Fn(&E) -> E) -> bool {
    match p {
        LoopProperty::InverseProperty => {
            let (u, v) = (t[0], t[1]);
            let ui = inv(u);
            mul(&ui, &mul(u, v)) == *v && mul(&mul(v, u), &ui) == *v
        }
        LoopProperty::Flexible => {
            let (u, v) = (t[0], t[1]);
            mul(u, &mul(v, u)) == mul(&mul(u, v), u)
        }
        LoopProperty::LeftAlternative => {
            let (u, v) = (t[0], t[1]);
            mul(u, &mul(u, v)) == mul(&mul(u, u), v)
        }
        LoopProperty::RightAlternative => {
            let (u, v) = (t[0], t[1]);
            mul(&mul(u, v), v) == mul(u, &mul(v, v))
        }
        LoopProperty::Moufang => {
            let (h, g, f) = (t[0], t[1], t[2]);
            mul(h, &mul(g, &mul(h, f))) == mul(&mul(&mul(h, g), h), f)
        }
        LoopProperty::Associative => {
            let (a, b, c) = (t[0], t[1], t[2]);
            mul(&mul(a, b), c) == mul(a, &mul(b, c))
        }
        LoopProperty::Commutative => mul(t[0], t[1]) == mul(t[1], t[0]),
    }
}

/// Check a law over all tuples drawn from `window`, in lexicographic order
/// of window positions; stops at the first (least) counterexample.
pub fn check_law<E: Clone + PartialEq>(
    p: LoopProperty,
    window: &[E],
    mul: &dyn Fn(&E, &E) -> E,
    inv: &dyn Fn(&E) -> E,
) -> PropertyOutcome<E> {
    let n = window.len();
    match p.arity() {
        2 => {
            for a in window {
                for b in window {
                    if !law_holds_at(p, &[a, b], mul, inv) {
                        return PropertyOutcome::fails(vec![a.clone(), b.clone()]);
                    }
                }
            }
        }
        _ => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let t = [&window[i], &window[j], &window[k]];
                        if !law_holds_at(p, &t, mul, inv) {
                            return PropertyOutcome::fails(t.iter().map(|e| (*e).clone()).collect());
                        }
                    }
                }
            }
        }
    }
    PropertyOutcome::holds()
}
