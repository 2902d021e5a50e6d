// SPDX-License-Identifier: Apache-2.0

//! Exact rationals and their classes modulo 1.
//!
//! Every conformal-weight class, quadratic-form value and character value in
//! this crate lives in `Q/Z`. [`QZ`] stores the canonical representative in
//! `[0, 1)`, so structural equality is equality in `Q/Z`.
//!
//! The integer backing is generic: anything implementing [`Scalar`] works,
//! which in practice means `i64`, `i128` or `num_bigint::BigInt`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer types usable as the backing of [`Rational`] and [`QZ`].
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Hash
    + fmt::Debug
    + fmt::Display
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + fmt::Debug
        + fmt::Display
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Reduced fraction with positive denominator.
pub type Rational<I> = Ratio<I>;

fn int<I: Scalar>(n: i64) -> I {
    I::from_i64(n).expect("integer backing cannot hold a small constant")
}

/// A rational number modulo 1, stored as its representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QZ<I: Scalar> {
    value: Rational<I>,
}

impl<I: Scalar> QZ<I> {
    pub fn zero() -> Self {
        QZ {
            value: Rational::zero(),
        }
    }

    /// The class of `p/q` modulo 1.
    pub fn new(p: I, q: I) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::Domain("denominator must be nonzero".into()));
        }
        Ok(Self::from_rational(Rational::new(p, q)))
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(p: i64, q: i64) -> Result<Self> {
        if q <= 0 {
            return Err(Error::Domain(format!(
                "denominator must be positive, got {q}"
            )));
        }
        Self::new(int(p), int(q))
    }

    pub fn from_rational(r: Rational<I>) -> Self {
        let floor = r.floor();
        QZ { value: r - floor }
    }

    /// Canonical representative in `[0, 1)`.
    pub fn value(&self) -> &Rational<I> {
        &self.value
    }

    pub fn numer(&self) -> &I {
        self.value.numer()
    }

    pub fn denom(&self) -> &I {
        self.value.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// `n · self` modulo 1; `n` may be negative.
    pub fn scale(&self, n: i64) -> Self {
        let n: I = int(n);
        Self::from_rational(Rational::from_integer(n) * self.value.clone())
    }

    /// Scale by an arbitrary backing integer.
    pub fn scale_by(&self, n: &I) -> Self {
        Self::from_rational(Rational::from_integer(n.clone()) * self.value.clone())
    }

    /// `true` when the class is `1/2` modulo 1.
    pub fn is_half(&self) -> bool {
        self.value == Rational::new(I::one(), int(2))
    }

    /// Re-express over another integer backing.
    pub fn convert<J: Scalar>(&self) -> QZ<J> {
        let p = J::from_str(&self.numer().to_string()).ok();
        let q = J::from_str(&self.denom().to_string()).ok();
        match (p, q) {
            (Some(p), Some(q)) => QZ {
                value: Rational::new(p, q),
            },
            _ => panic!("value {self} does not fit the target integer type"),
        }
    }
}

impl<I: Scalar> Default for QZ<I> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<I: Scalar> Add for QZ<I> {
    type Output = QZ<I>;
    fn add(self, rhs: QZ<I>) -> QZ<I> {
        QZ::from_rational(self.value + rhs.value)
    }
}

impl<'a, I: Scalar> Add<&'a QZ<I>> for &'a QZ<I> {
    type Output = QZ<I>;
    fn add(self, rhs: &QZ<I>) -> QZ<I> {
        QZ::from_rational(self.value.clone() + rhs.value.clone())
    }
}

impl<I: Scalar> Sub for QZ<I> {
    type Output = QZ<I>;
    fn sub(self, rhs: QZ<I>) -> QZ<I> {
        QZ::from_rational(self.value - rhs.value)
    }
}

impl<'a, I: Scalar> Sub<&'a QZ<I>> for &'a QZ<I> {
    type Output = QZ<I>;
    fn sub(self, rhs: &QZ<I>) -> QZ<I> {
        QZ::from_rational(self.value.clone() - rhs.value.clone())
    }
}

impl<I: Scalar> Neg for QZ<I> {
    type Output = QZ<I>;
    fn neg(self) -> QZ<I> {
        QZ::from_rational(-self.value)
    }
}

impl<I: Scalar> Neg for &QZ<I> {
    type Output = QZ<I>;
    fn neg(self) -> QZ<I> {
        QZ::from_rational(-self.value.clone())
    }
}

impl<I: Scalar> std::iter::Sum for QZ<I> {
    fn sum<It: Iterator<Item = QZ<I>>>(iter: It) -> Self {
        iter.fold(QZ::zero(), |a, b| a + b)
    }
}

// Ordered by representative; used only for deterministic output.
impl<I: Scalar> PartialOrd for QZ<I> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<I: Scalar> Ord for QZ<I> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl<I: Scalar> fmt::Display for QZ<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl<I: Scalar> fmt::Debug for QZ<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QZ({self})")
    }
}

/// Parses `"p/q"` or a bare integer; any rational is accepted and reduced mod 1.
impl<I: Scalar> FromStr for QZ<I> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational::<I>(s).map(QZ::from_rational)
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational<I: Scalar>(s: &str) -> Result<Rational<I>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = I::from_str(p.trim()).map_err(|_| bad())?;
            let q = I::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(I::from_str(s).map_err(|_| bad())?)),
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational<I: Scalar>(r: &Rational<I>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Free-function spelling of [`QZ::from_i64`].
pub fn qz_make<I: Scalar>(p: i64, q: i64) -> Result<QZ<I>> {
    QZ::from_i64(p, q)
}

pub fn qz_add<I: Scalar>(a: &QZ<I>, b: &QZ<I>) -> QZ<I> {
    a + b
}

pub fn qz_scale<I: Scalar>(n: i64, a: &QZ<I>) -> QZ<I> {
    a.scale(n)
}
