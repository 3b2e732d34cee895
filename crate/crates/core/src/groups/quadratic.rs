use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact value `a + b·√d` with rational `a`, `b` and a squarefree
/// integer radicand `d` (possibly negative). Rational values have `b = 0`
/// and `d = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticValue {
    a: BigRational,
    b: BigRational,
    d: i64,
}

/// Writes `d = s²·d'` with `d'` squarefree; returns `(s, d')`.
fn squarefree(d: i64) -> (i64, i64) {
    let sign = d.signum();
    let mut rest = d.abs();
    let mut s = 1;
    let mut f = 2;
    while f * f <= rest {
        while rest % (f * f) == 0 {
            rest /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s, sign * rest)
}

impl QuadraticValue {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Self {
        if b.is_zero() || d == 0 {
            return Self::rational(a);
        }
        let (s, d) = squarefree(d);
        let b = b * BigRational::from_integer(BigInt::from(s));
        if d == 1 {
            return Self::rational(a + b);
        }
        QuadraticValue { a, b, d }
    }

    pub fn rational(a: BigRational) -> Self {
        QuadraticValue { a, b: BigRational::zero(), d: 0 }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Galois conjugate `a - b·√d`; complex conjugation when `d < 0`.
    pub fn conj(&self) -> Self {
        QuadraticValue { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    fn common_radicand(&self, other: &Self) -> Result<i64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (x, y) if x == y => Ok(x),
            _ => Err(Error::MixedRadicands),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dd = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::new(a, b, d))
    }
}

impl From<i64> for QuadraticValue {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Add for &QuadraticValue {
    type Output = QuadraticValue;
    fn add(self, other: &QuadraticValue) -> QuadraticValue {
        self.checked_add(other).expect("adding values with different radicands")
    }
}

impl Sub for &QuadraticValue {
    type Output = QuadraticValue;
    fn sub(self, other: &QuadraticValue) -> QuadraticValue {
        self + &(-other)
    }
}

impl Mul for &QuadraticValue {
    type Output = QuadraticValue;
    fn mul(self, other: &QuadraticValue) -> QuadraticValue {
        self.checked_mul(other).expect("multiplying values with different radicands")
    }
}

impl Neg for &QuadraticValue {
    type Output = QuadraticValue;
    fn neg(self) -> QuadraticValue {
        QuadraticValue { a: -self.a.clone(), b: -self.b.clone(), d: self.d }
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        let babs = self.b.abs();
        let coeff = if babs.is_one() { String::new() } else { format!("{babs}*") };
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coeff}sqrt({})", self.d)
        } else {
            write!(f, "{} {sign} {coeff}sqrt({})", self.a, self.d)
        }
    }
}

impl fmt::Debug for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sum of values whose radicands may differ: a rational part plus one
/// coefficient per squarefree radicand.
#[derive(Clone, Debug, Default)]
pub struct QuadraticSum {
    terms: BTreeMap<i64, BigRational>,
}

impl QuadraticSum {
    pub fn add(&mut self, v: &QuadraticValue) {
        *self.terms.entry(0).or_insert_with(BigRational::zero) += &v.a;
        if !v.b.is_zero() {
            *self.terms.entry(v.d).or_insert_with(BigRational::zero) += &v.b;
        }
    }

    pub fn scale(&mut self, s: &BigRational) {
        for v in self.terms.values_mut() {
            *v *= s;
        }
    }

    /// The total, when it involves at most one radicand.
    pub fn value(&self) -> Result<QuadraticValue> {
        let a = self.terms.get(&0).cloned().unwrap_or_else(BigRational::zero);
        let mut irr = self.terms.iter().filter(|(&d, b)| d != 0 && !b.is_zero());
        match (irr.next(), irr.next()) {
            (None, _) => Ok(QuadraticValue::rational(a)),
            (Some((&d, b)), None) => Ok(QuadraticValue::new(a, b.clone(), d)),
            _ => Err(Error::MixedRadicands),
        }
    }
}

/// File form of a value: `{"a": "p/q", "b": "p/q", "d": int}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct QuadraticEntry {
    pub a: String,
    pub b: String,
    pub d: i64,
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("{t:?}: {e}")));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

impl TryFrom<&QuadraticEntry> for QuadraticValue {
    type Error = Error;
    fn try_from(e: &QuadraticEntry) -> Result<Self> {
        let (a, b) = (parse_rational(&e.a)?, parse_rational(&e.b)?);
        if !b.is_zero() && e.d == 0 {
            return Err(Error::Schema("irrational part with radicand 0".into()));
        }
        Ok(QuadraticValue::new(a, b, e.d))
    }
}

impl From<&QuadraticValue> for QuadraticEntry {
    fn from(v: &QuadraticValue) -> Self {
        QuadraticEntry { a: v.a.to_string(), b: v.b.to_string(), d: v.d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> QuadraticValue {
        QuadraticValue::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()), d)
    }

    #[test]
    fn normalization() {
        assert_eq!(q(1, 2, 8), q(1, 4, 2));
        assert_eq!(q(1, 3, 4), q(7, 0, 0));
        assert_eq!(q(0, 0, 5).radicand(), 0);
        assert_eq!(q(0, 1, -12), q(0, 2, -3));
    }

    #[test]
    fn arithmetic() {
        let i2 = q(0, 1, -2);
        assert_eq!(&i2 * &i2.conj(), q(2, 0, 0));
        assert_eq!(&i2 * &i2, q(-2, 0, 0));
        // b11 = (-1 + sqrt(-11))/2 satisfies b11^2 + b11 + 3 = 0
        let half = BigRational::new(1.into(), 2.into());
        let b11 = QuadraticValue::new(-half.clone(), half, -11);
        let lhs = &(&(&b11 * &b11) + &b11) + &QuadraticValue::integer(3);
        assert!(lhs.is_zero());
        assert!(q(0, 1, 2).checked_add(&q(0, 1, 3)).is_err());
        assert_eq!(q(3, 0, 0).as_integer(), Some(BigInt::from(3)));
    }

    #[test]
    fn mixed_sums() {
        let mut s = QuadraticSum::default();
        s.add(&q(1, 1, 2));
        s.add(&q(1, 1, 3));
        assert!(s.value().is_err());
        s.add(&q(0, -1, 3));
        assert_eq!(s.value().unwrap(), q(2, 1, 2));
    }

    #[test]
    fn entry_round_trip() {
        let e = QuadraticEntry { a: "-1/2".into(), b: "1/2".into(), d: -11 };
        let v = QuadraticValue::try_from(&e).unwrap();
        assert_eq!(QuadraticEntry::from(&v), e);
        assert_eq!(v.to_string(), "-1/2 + 1/2*sqrt(-11)");
        let bad = QuadraticEntry { a: "0".into(), b: "1".into(), d: 0 };
        assert!(QuadraticValue::try_from(&bad).is_err());
    }
}
