//! Exact coefficient fields: the rationals and prime fields GF(p).
//!
//! Every value carries the field it lives in. Combining values from two
//! different fields is a programming error and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::LinalgError;

/// Default prime for modular verification runs.
pub const DEFAULT_PRIME: u64 = 101;

/// A coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// GF(p); fails if `p` is not prime.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar, LinalgError> {
        Ok(&self.from_i64(num) * &self.from_i64(den).inverse()?)
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Whether the field is usable for structures with `order` basis
    /// elements: prime fields must have `p > order`.
    pub fn admits_order(self, order: usize) -> bool {
        match self {
            Field::Rational => true,
            Field::Prime(p) => p as u128 > order as u128,
        }
    }

    /// Parse a scalar literal in this field: `p`, `-p` or `p/q`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, FieldError> {
        let bad = || FieldError::BadLiteral(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n, d),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let n = reduce_big(&num, p);
                let d = reduce_big(&den, p);
                let d = Scalar::Residue { value: d, modulus: p };
                let inv = d.inverse().map_err(|_| bad())?;
                Ok(&Scalar::Residue { value: n, modulus: p } * &inv)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    /// Accepts `rational` (or `q`) and `gf:p`.
    fn from_str(s: &str) -> Result<Field, FieldError> {
        match s {
            "rational" | "rationals" | "q" | "Q" => Ok(Field::Rational),
            _ => {
                let p = s
                    .strip_prefix("gf:")
                    .ok_or_else(|| FieldError::BadFieldName(s.to_string()))?;
                let p: u64 = p.parse().map_err(|_| FieldError::BadFieldName(s.to_string()))?;
                Field::prime(p)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unknown field `{0}` (expected `rational` or `gf:p`)")]
    BadFieldName(String),
    #[error("bad scalar literal `{0}`")]
    BadLiteral(String),
}

fn reduce_big(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    u64::try_from(r).expect("residue fits in u64")
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// normal form of `BigRational`); residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Scalar, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// `self / other`.
    pub fn div(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        Ok(self * &other.inverse()?)
    }

    /// Numerator and denominator as big integers (for residues the
    /// representative in `[0, p)` over 1).
    pub fn to_fraction(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(r) => (r.numer().clone(), r.denom().clone()),
            Scalar::Residue { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "arithmetic between scalars of different fields"
        );
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                *a = ((*a as u128 + *b as u128) % *modulus as u128) as u64;
            }
            _ => unreachable!(),
        }
    }
}

impl Scalar {
    /// True when a rational scalar is negative. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let two = Field::Rational.from_i64(2);
        assert_eq!(two.inverse().unwrap(), Field::Rational.ratio(1, 2).unwrap());
        let gf7 = Field::prime(7).unwrap();
        assert_eq!(gf7.from_i64(3).inverse().unwrap(), gf7.from_i64(5));
        assert_eq!(Field::Rational.zero().inverse(), Err(LinalgError::DivisionByZero));
        assert_eq!(gf7.zero().inverse(), Err(LinalgError::DivisionByZero));
    }

    #[test]
    fn residues_are_reduced() {
        let f = Field::Prime(7);
        assert_eq!(f.from_i64(-1), Scalar::Residue { value: 6, modulus: 7 });
        assert_eq!(f.from_i64(15), Scalar::Residue { value: 1, modulus: 7 });
        assert_eq!((-f.zero()), f.zero());
    }

    #[test]
    fn rationals_in_lowest_terms() {
        let q = Field::Rational.parse_scalar("6/-4").unwrap();
        let (n, d) = q.to_fraction();
        assert_eq!(n, BigInt::from(-3));
        assert_eq!(d, BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
    }

    #[test]
    fn parse_fields() {
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("gf:101".parse::<Field>().unwrap(), Field::Prime(101));
        assert_eq!("gf:100".parse::<Field>(), Err(FieldError::NotPrime(100)));
        assert!("gf7".parse::<Field>().is_err());
        assert_eq!(
            Field::Prime(7).parse_scalar("1/3").unwrap(),
            Field::Prime(7).from_i64(5)
        );
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixing_fields_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(5).one();
    }

    #[test]
    fn order_admission() {
        assert!(!Field::Prime(7).admits_order(16));
        assert!(Field::Prime(101).admits_order(16));
        assert!(Field::Rational.admits_order(1 << 20));
    }
}
