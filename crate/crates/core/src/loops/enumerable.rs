use std::fmt::Debug;
use std::hash::Hash;

use super::{check_law, FiniteLoop, LoopError, LoopProperty, PropertyOutcome, Variety};

/// A quasigroup with identity on a countable carrier, given by computable
/// operations and a canonical enumeration of its elements.
pub trait EnumerableQuasigroup {
    type Elem: Clone + Ord + Hash + Debug;

    fn name(&self) -> String;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Canonical string form; `decode(encode(x)) == x`.
    fn encode(&self, a: &Self::Elem) -> String;
    fn decode(&self, s: &str) -> Result<Self::Elem, LoopError>;
    /// The first `count` elements of the canonical enumeration (all of
    /// them if the carrier is smaller).
    fn enumerate(&self, count: usize) -> Vec<Self::Elem>;
    /// `None` for infinite carriers.
    fn order(&self) -> Option<usize>;

    /// The first `2n + 1` elements of the canonical enumeration.
    fn window(&self, n: usize) -> Vec<Self::Elem> {
        self.enumerate(2 * n + 1)
    }

    fn check_on(&self, window: &[Self::Elem], p: LoopProperty) -> PropertyOutcome<Self::Elem> {
        check_law(p, window, &|a, b| self.mul(a, b), &|a| self.inv(a))
    }

    fn check_variety_on(&self, window: &[Self::Elem], v: Variety) -> PropertyOutcome<Self::Elem> {
        super::combine(v.loop_properties().iter().map(|&p| self.check_on(window, p)))
    }
}

impl EnumerableQuasigroup for FiniteLoop {
    type Elem = usize;

    fn name(&self) -> String {
        format!("finite loop of order {}", FiniteLoop::order(self))
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        FiniteLoop::mul(self, *a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        FiniteLoop::inv(self, *a)
    }

    fn encode(&self, a: &usize) -> String {
        self.label(*a).to_string()
    }

    fn decode(&self, s: &str) -> Result<usize, LoopError> {
        self.index_of(s).ok_or_else(|| LoopError::BadEncoding(s.to_string()))
    }

    fn enumerate(&self, count: usize) -> Vec<usize> {
        (0..FiniteLoop::order(self).min(count)).collect()
    }

    fn order(&self) -> Option<usize> {
        Some(FiniteLoop::order(self))
    }
}

/// The additive group of integers, encoded in signed decimal and
/// enumerated `0, 1, -1, 2, -2, …`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

pub fn integers() -> Integers {
    Integers
}

impl EnumerableQuasigroup for Integers {
    type Elem = i64;

    fn name(&self) -> String {
        "integers".into()
    }

    fn identity(&self) -> i64 {
        0
    }

    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a.checked_add(*b).expect("integer overflow")
    }

    fn inv(&self, a: &i64) -> i64 {
        -a
    }

    fn encode(&self, a: &i64) -> String {
        a.to_string()
    }

    fn decode(&self, s: &str) -> Result<i64, LoopError> {
        let bad = || LoopError::BadEncoding(s.to_string());
        let v: i64 = s.parse().map_err(|_| bad())?;
        if v.to_string() != s {
            return Err(bad());
        }
        Ok(v)
    }

    fn enumerate(&self, count: usize) -> Vec<i64> {
        (0..count as i64)
            .map(|k| if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) })
            .collect()
    }

    fn order(&self) -> Option<usize> {
        None
    }
}

/// A freely reduced word; letter `+k` is generator `k` (1-based), `-k`
/// its inverse.
pub type Word = Vec<i8>;

/// The free group on up to four generators `a, b, c, d`. Inverse letters
/// are written `a⁻¹` (`a^-1` is accepted on input), the empty word `e`.
/// Enumeration is shortlex with letter order `a, b, …, a⁻¹, b⁻¹, …`.
#[derive(Debug, Clone, Copy)]
pub struct FreeGroup {
    rank: u8,
}

pub fn free_group(rank: usize) -> FreeGroup {
    assert!((1..=4).contains(&rank), "free group rank must be 1..=4");
    FreeGroup { rank: rank as u8 }
}

const LETTERS: [char; 4] = ['a', 'b', 'c', 'd'];

impl FreeGroup {
    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    fn letters(&self) -> Vec<i8> {
        let r = self.rank as i8;
        (1..=r).chain((1..=r).map(|x| -x)).collect()
    }

    fn push_reduced(w: &mut Word, x: i8) {
        if w.last() == Some(&-x) {
            w.pop();
        } else {
            w.push(x);
        }
    }
}

impl EnumerableQuasigroup for FreeGroup {
    type Elem = Word;

    fn name(&self) -> String {
        format!("free group of rank {}", self.rank)
    }

    fn identity(&self) -> Word {
        Vec::new()
    }

    fn mul(&self, a: &Word, b: &Word) -> Word {
        let mut w = a.clone();
        for &x in b {
            FreeGroup::push_reduced(&mut w, x);
        }
        w
    }

    fn inv(&self, a: &Word) -> Word {
        a.iter().rev().map(|x| -x).collect()
    }

    fn encode(&self, a: &Word) -> String {
        if a.is_empty() {
            return "e".into();
        }
        let mut s = String::new();
        for &x in a {
            s.push(LETTERS[(x.unsigned_abs() - 1) as usize]);
            if x < 0 {
                s.push_str("⁻¹");
            }
        }
        s
    }

    fn decode(&self, s: &str) -> Result<Word, LoopError> {
        let bad = || LoopError::BadEncoding(s.to_string());
        if s == "e" {
            return Ok(Vec::new());
        }
        if s.is_empty() {
            return Err(bad());
        }
        let mut w = Vec::new();
        let mut rest = s;
        while let Some(c) = rest.chars().next() {
            let k = LETTERS[..self.rank as usize]
                .iter()
                .position(|&l| l == c)
                .ok_or_else(bad)? as i8
                + 1;
            rest = &rest[c.len_utf8()..];
            let x = if let Some(r) = rest.strip_prefix("⁻¹") {
                rest = r;
                -k
            } else if let Some(r) = rest.strip_prefix("^-1") {
                rest = r;
                -k
            } else {
                k
            };
            FreeGroup::push_reduced(&mut w, x);
        }
        Ok(w)
    }

    fn enumerate(&self, count: usize) -> Vec<Word> {
        let mut out = Vec::with_capacity(count);
        let letters = self.letters();
        let mut layer: Vec<Word> = vec![Vec::new()];
        while out.len() < count {
            let mut next = Vec::new();
            for w in &layer {
                if out.len() == count {
                    break;
                }
                out.push(w.clone());
                for &x in &letters {
                    if w.last() != Some(&-x) {
                        let mut v = w.clone();
                        v.push(x);
                        next.push(v);
                    }
                }
            }
            layer = next;
        }
        out
    }

    fn order(&self) -> Option<usize> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_windows() {
        let z = integers();
        assert_eq!(z.window(2), vec![0, 1, -1, 2, -2]);
        let w = z.window(8);
        assert_eq!(w.len(), 17);
        assert_eq!(*w.iter().min().unwrap(), -8);
        assert_eq!(*w.iter().max().unwrap(), 8);
    }

    #[test]
    fn integer_encoding_is_canonical() {
        let z = integers();
        assert_eq!(z.decode("-5").unwrap(), -5);
        assert!(z.decode("+5").is_err());
        assert!(z.decode("05").is_err());
        assert!(z.decode("-0").is_err());
    }

    #[test]
    fn free_reduction() {
        let f = free_group(2);
        let ab = f.decode("ab").unwrap();
        let bia = f.decode("b⁻¹a").unwrap();
        assert_eq!(f.encode(&f.mul(&ab, &bia)), "aa");
        assert_eq!(f.encode(&f.inv(&ab)), "b⁻¹a⁻¹");
        assert_eq!(f.decode("ab^-1ba").unwrap(), f.decode("aa").unwrap());
        assert_eq!(f.encode(&f.decode("aa⁻¹").unwrap()), "e");
        assert!(f.decode("c").is_err());
    }

    #[test]
    fn free_group_window_is_ball_of_radius_two() {
        let f = free_group(2);
        let w = f.window(8);
        assert_eq!(w.len(), 17);
        assert!(w.iter().all(|x| x.len() <= 2));
        let names: Vec<String> = w[..5].iter().map(|x| f.encode(x)).collect();
        assert_eq!(names, vec!["e", "a", "b", "a⁻¹", "b⁻¹"]);
        assert_eq!(f.encode(&w[5]), "aa");
    }

    #[test]
    fn infinite_windows_satisfy_loop_laws() {
        let z = integers();
        let w = z.window(6);
        for p in LoopProperty::ALL {
            assert!(z.check_on(&w, p).holds, "{p}");
        }
        let f = free_group(2);
        let w = f.window(6);
        assert!(f.check_on(&w, LoopProperty::InverseProperty).holds);
        assert!(f.check_on(&w, LoopProperty::Associative).holds);
        let c = f.check_on(&w, LoopProperty::Commutative);
        assert_eq!(c.witness.unwrap(), vec![vec![1], vec![2]]);
    }
}
