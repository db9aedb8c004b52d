//! Exact rationals extended with `+inf`.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// A rational number in lowest terms, or `+inf`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rational {
    Finite(Ratio<i64>),
    Infinity,
}

impl Rational {
    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational::Finite(Ratio::new(num, den))
    }

    pub fn integer(v: i64) -> Self {
        Rational::Finite(Ratio::from_integer(v))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Rational::Infinity)
    }

    pub fn numer(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.numer()),
            Rational::Infinity => None,
        }
    }

    pub fn denom(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.denom()),
            Rational::Infinity => None,
        }
    }

    /// Smallest integer `>= self`; `None` for `+inf`.
    pub fn ceil(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(r.ceil().to_integer()),
            Rational::Infinity => None,
        }
    }

    /// `self * factor`, keeping `+inf` fixed.
    pub fn scale(&self, factor: i64) -> Rational {
        match self {
            Rational::Finite(r) => Rational::Finite(r * factor),
            Rational::Infinity => Rational::Infinity,
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational::integer(v as i64)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Finite(a), Rational::Finite(b)) => a.cmp(b),
            (Rational::Finite(_), Rational::Infinity) => Ordering::Less,
            (Rational::Infinity, Rational::Finite(_)) => Ordering::Greater,
            (Rational::Infinity, Rational::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Finite(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Rational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Rational::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{"num": n, "den": d}` for finite values, the string `"inf"` otherwise.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Rational::Finite(r) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("num", r.numer())?;
                map.serialize_entry("den", r.denom())?;
                map.end()
            }
            Rational::Infinity => serializer.serialize_str("inf"),
        }
    }
}
