//! Exact conformal weights.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RationalWeight(Rational64);

impl RationalWeight {
    pub const ZERO: RationalWeight = RationalWeight(Rational64::new_raw(0, 1));

    /// Panics if `denominator` is zero.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        RationalWeight(Rational64::new(numerator, denominator))
    }

    pub fn from_integer(value: i64) -> Self {
        RationalWeight(Rational64::from_integer(value))
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Representative in `[0, 1)`.
    pub fn mod_one(&self) -> Self {
        let den = self.denominator();
        RationalWeight::new(self.numerator().mod_floor(&den), den)
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64
    }

    /// Parses the `p/q` form produced by `Display` (a bare integer is also accepted).
    pub fn parse(s: &str) -> Option<Self> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse().ok()?, q.trim().parse().ok()?),
            None => (s.trim().parse().ok()?, 1),
        };
        if q == 0 {
            return None;
        }
        Some(RationalWeight::new(p, q))
    }
}

/// Always `p/q`, including integers (`1/1`).
impl fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl Add for RationalWeight {
    type Output = RationalWeight;
    fn add(self, rhs: Self) -> Self {
        RationalWeight(self.0 + rhs.0)
    }
}

impl Sub for RationalWeight {
    type Output = RationalWeight;
    fn sub(self, rhs: Self) -> Self {
        RationalWeight(self.0 - rhs.0)
    }
}

impl Neg for RationalWeight {
    type Output = RationalWeight;
    fn neg(self) -> Self {
        RationalWeight(-self.0)
    }
}

impl std::iter::Sum for RationalWeight {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(RationalWeight::ZERO, |a, b| a + b)
    }
}
